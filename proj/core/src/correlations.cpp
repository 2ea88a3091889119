#include "tpss/correlations.hpp"

#include "tpss/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace tpss {

namespace {

constexpr double kPhysicalTolerance = 1e-10;

void require_pairing(const Analyzer& a, const Analyzer& b) {
  const bool linear_pair = a.kind == AnalyzerKind::linear_forward && b.kind == AnalyzerKind::linear_backward;
  const bool circular_pair = a.kind == AnalyzerKind::circular && b.kind == AnalyzerKind::circular;
  if (!linear_pair && !circular_pair) {
    throw DomainError(
        "analyzer pair must be (linear forward, linear backward) or (circular, circular)");
  }
}

void require_physical(const Matrix4& rho) {
  const PhysicalityReport r = check_physicality(rho);
  if (r.hermiticity_error > kPhysicalTolerance || r.trace_error > kPhysicalTolerance ||
      r.min_eigenvalue < -kPhysicalTolerance) {
    throw DomainError("density matrix is not physical (hermiticity error " + std::to_string(r.hermiticity_error) +
                      ", trace error " + std::to_string(r.trace_error) + ", min eigenvalue " +
                      std::to_string(r.min_eigenvalue) + ")");
  }
}

double trace_product(const Matrix4& rho, const Analyzer& a, const Analyzer& b) {
  return (rho * kron(a.efficiency(), b.efficiency())).trace().real();
}

}  // namespace

Matrix2 Analyzer::efficiency() const {
  return 0.5 * (pauli::identity() + eta[0] * pauli::sigma1() + eta[1] * pauli::sigma2() + eta[2] * pauli::sigma3());
}

Analyzer Analyzer::orthogonal() const {
  if (kind == AnalyzerKind::circular) return circular_analyzer(eta[2] > 0.0 ? -1 : +1);
  return linear_analyzer(psi + std::numbers::pi / 2.0,
                         kind == AnalyzerKind::linear_forward ? Propagation::forward : Propagation::backward);
}

Analyzer linear_analyzer(double psi, Propagation direction) {
  if (!std::isfinite(psi)) throw DomainError("analyzer angle must be finite");
  const double c = std::cos(2.0 * psi);
  const double s = std::sin(2.0 * psi);
  if (direction == Propagation::forward) {
    return Analyzer{AnalyzerKind::linear_forward, psi, {-c, -s, 0.0}};
  }
  return Analyzer{AnalyzerKind::linear_backward, psi, {-c, s, 0.0}};
}

Analyzer circular_analyzer(int helicity) {
  if (helicity != 1 && helicity != -1) throw DomainError("circular analyzer helicity must be +1 or -1");
  return Analyzer{AnalyzerKind::circular, 0.0, {0.0, 0.0, static_cast<double>(helicity)}};
}

double coincidence(const Matrix4& rho, const Analyzer& a, const Analyzer& b) {
  require_pairing(a, b);
  require_physical(rho);
  return std::clamp(trace_product(rho, a, b), 0.0, 1.0);
}

double coincidence(const PolarizationMatrix& rho, const Analyzer& a, const Analyzer& b) {
  return coincidence(rho.entries, a, b);
}

std::array<double, 4> outcome_probabilities(const Matrix4& rho, const Analyzer& a, const Analyzer& b) {
  require_pairing(a, b);
  require_physical(rho);
  const Analyzer a_perp = a.orthogonal();
  const Analyzer b_perp = b.orthogonal();
  std::array<double, 4> p{trace_product(rho, a, b), trace_product(rho, a, b_perp), trace_product(rho, a_perp, b),
                          trace_product(rho, a_perp, b_perp)};
  for (double& x : p) x = std::max(x, 0.0);
  return p;
}

CorrelationClass correlation_class(const StateLabel& s) {
  if (classify(s) == HelicityClass::zero) {
    return s.parity == Parity::plus ? CorrelationClass::parity_plus : CorrelationClass::parity_minus;
  }
  return s.j % 2 == 0 ? CorrelationClass::even_j : CorrelationClass::odd_j;
}

double closed_form_w(CorrelationClass cls, double psi, double psi_prime, double zeta) {
  switch (cls) {
    case CorrelationClass::parity_plus: {
      const double c = std::cos(psi - psi_prime);
      return 0.5 * c * c;
    }
    case CorrelationClass::parity_minus: {
      const double s = std::sin(psi - psi_prime);
      return 0.5 * s * s;
    }
    case CorrelationClass::even_j:
      return 0.25 * (1.0 + zeta * std::cos(2.0 * (psi + psi_prime)));
    case CorrelationClass::odd_j:
      return 0.25 * (1.0 - zeta * std::cos(2.0 * (psi + psi_prime)));
  }
  return 0.0;
}

double closed_form_w_reference(CorrelationClass cls, double psi, double zeta) {
  switch (cls) {
    case CorrelationClass::parity_plus: {
      const double c = std::cos(psi);
      return 0.5 * c * c;
    }
    case CorrelationClass::parity_minus: {
      const double s = std::sin(psi);
      return 0.5 * s * s;
    }
    case CorrelationClass::even_j:
      return 0.25 * (1.0 + zeta * std::cos(2.0 * psi));
    case CorrelationClass::odd_j:
      return 0.25 * (1.0 - zeta * std::cos(2.0 * psi));
  }
  return 0.0;
}

double closed_form_w_perpendicular(int m, double psi) {
  if (m % 2 == 0) {
    const double c = std::cos(psi);
    return 0.5 * c * c;
  }
  const double s = std::sin(psi);
  return 0.5 * s * s;
}

CircularBlindnessReport circular_parity_blindness(int j, int m, double theta) {
  if (j < 0 || j % 2 != 0) {
    throw DomainError("parity comparison needs J=0 or even J, got J=" + std::to_string(j));
  }
  const Variant plus_variant = j == 0 ? Variant::only : Variant::a;
  const StateLabel plus = make_state(j, m, Parity::plus, plus_variant);
  const StateLabel minus = make_state(j, m, Parity::minus, Variant::only);
  const Matrix4 rho_p = density_matrix(plus, theta).entries;
  const Matrix4 rho_m = density_matrix(minus, theta).entries;

  CircularBlindnessReport report{};
  const std::array<int, 2> helicities{+1, -1};
  std::size_t k = 0;
  for (int h1 : helicities) {
    for (int h2 : helicities) {
      const Analyzer a = circular_analyzer(h1);
      const Analyzer b = circular_analyzer(h2);
      report.w_plus[k] = coincidence(rho_p, a, b);
      report.w_minus[k] = coincidence(rho_m, a, b);
      report.max_difference = std::max(report.max_difference, std::abs(report.w_plus[k] - report.w_minus[k]));
      ++k;
    }
  }
  return report;
}

}  // namespace tpss
