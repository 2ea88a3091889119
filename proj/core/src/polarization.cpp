#include "tpss/polarization.hpp"

#include "tpss/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace tpss {

namespace {

constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;

double sign_power(int exponent) { return (exponent % 2 == 0) ? 1.0 : -1.0; }

int checked_params_j(int j, int m) {
  if (j < 2 || std::abs(m) > j) {
    throw DomainError("polarization parameters need J >= 2 and |M| <= J, got J=" + std::to_string(j) +
                      " M=" + std::to_string(m));
  }
  return j;
}

[[noreturn]] void throw_no_intensity(int j, int m, double theta, double w2) {
  throw NoIntensityError("no |Lambda|=2 emission for J=" + std::to_string(j) + " M=" + std::to_string(m) +
                         " at theta=" + std::to_string(theta) + " rad (w2=" + std::to_string(w2) +
                         "); the conditional polarization state is undefined");
}

}  // namespace

namespace pauli {
Matrix2 identity() { return Matrix2::Identity(); }
Matrix2 sigma1() {
  Matrix2 m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}
Matrix2 sigma2() {
  Matrix2 m;
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}
Matrix2 sigma3() {
  Matrix2 m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}
}  // namespace pauli

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

Matrix2 trace_out_second(const Matrix4& rho) {
  Matrix2 out = Matrix2::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int k = 0; k < 2; ++k) out(a, b) += rho(2 * a + k, 2 * b + k);
    }
  }
  return out;
}

Matrix2 trace_out_first(const Matrix4& rho) {
  Matrix2 out = Matrix2::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int k = 0; k < 2; ++k) out(a, b) += rho(2 * k + a, 2 * k + b);
    }
  }
  return out;
}

std::string_view to_string(ParamsMethod m) noexcept { return m == ParamsMethod::direct ? "direct" : "series"; }

PolarizationMatrix rho_parity(Parity p) {
  using namespace pauli;
  const double sign = sign_of(p);
  Matrix4 rho = 0.25 * (kron(identity(), identity()) + kron(sigma3(), sigma3()) +
                        sign * (kron(sigma1(), sigma1()) - kron(sigma2(), sigma2())));
  return PolarizationMatrix{rho, std::nullopt, std::nullopt};
}

ParamsEvaluator::ParamsEvaluator(int j, int m, ParamsMethod method)
    : j_(checked_params_j(j, m)), m_(m), method_(method) {
  if (method_ == ParamsMethod::direct) {
    d_plus_.emplace(j, 2, m);
    d_minus_.emplace(j, -2, m);
    return;
  }

  series_w2_.emplace(j, m, HelicityClass::two);
  const Extended a_jm = Extended(sign_power(m) * (2 * j + 1)) / (4 * boost::math::constants::pi<Extended>());

  xi_coefficients_.resize(static_cast<std::size_t>(j));
  for (int n = 1; n <= j; ++n) {
    const int l = 2 * n - 1;
    xi_coefficients_[static_cast<std::size_t>(n - 1)] = a_jm * (4 * n - 1) *
                                                        wigner_3j_exact(j, j, l, 2, -2, 0).extended_value() *
                                                        wigner_3j_exact(j, j, l, m, -m, 0).extended_value();
  }

  // d^l_{40}(theta) = sqrt((l-4)!/(l+4)!) P_l^4(cos theta) carries the theta dependence.
  zeta_coefficients_.assign(static_cast<std::size_t>(j + 1), Extended(0));
  for (int n = 2; n <= j; ++n) {
    const int l = 2 * n;
    const Extended norm = boost::multiprecision::sqrt(Extended(Rational(factorial(l - 4), factorial(l + 4))));
    zeta_coefficients_[static_cast<std::size_t>(n)] = a_jm * (4 * n + 1) * norm *
                                                      wigner_3j_exact(j, j, l, 2, 2, -4).extended_value() *
                                                      wigner_3j_exact(j, j, l, m, -m, 0).extended_value();
  }
}

double ParamsEvaluator::intensity(double theta) const {
  if (method_ == ParamsMethod::direct) {
    const double a = (*d_plus_)(theta);
    const double b = (*d_minus_)(theta);
    return (2.0 * j_ + 1.0) / (8.0 * kPi) * (a * a + b * b);
  }
  return (*series_w2_)(theta);
}

PolarizationParams ParamsEvaluator::operator()(double theta) const {
  require_polar_angle(theta);
  if (method_ == ParamsMethod::direct) {
    const double a = (*d_plus_)(theta);
    const double b = (*d_minus_)(theta);
    const double w2 = (2.0 * j_ + 1.0) / (8.0 * kPi) * (a * a + b * b);
    if (w2 <= kNoIntensityThreshold) throw_no_intensity(j_, m_, theta, w2);
    const double scale = (2.0 * j_ + 1.0) / (8.0 * kPi * w2);
    return {scale * (a * a - b * b), 2.0 * scale * a * b, method_};
  }

  const Extended w2 = series_w2_->extended(theta);
  if (w2 <= kNoIntensityThreshold) throw_no_intensity(j_, m_, theta, static_cast<double>(w2));
  const Extended x = boost::multiprecision::cos(Extended(theta));

  Extended xi_sum = 0;
  for (int n = 1; n <= j_; ++n) {
    xi_sum += xi_coefficients_[static_cast<std::size_t>(n - 1)] * legendre_p(2 * n - 1, x);
  }
  Extended zeta_sum = 0;
  for (int n = 2; n <= j_; ++n) {
    zeta_sum += zeta_coefficients_[static_cast<std::size_t>(n)] * assoc_legendre_p(2 * n, 4, x);
  }
  return {static_cast<double>(xi_sum / w2), static_cast<double>(zeta_sum / w2), method_};
}

PolarizationParams polarization_params(int j, int m, double theta, ParamsMethod method) {
  return ParamsEvaluator(j, m, method)(theta);
}

Matrix4 rho_eo_matrix(int j, const PolarizationParams& params) {
  using namespace pauli;
  const double coherence_sign = (j % 2 == 0) ? 1.0 : -1.0;
  return 0.25 * (kron(identity(), identity()) +
                 params.xi * (kron(sigma3(), identity()) - kron(identity(), sigma3())) -
                 kron(sigma3(), sigma3()) +
                 coherence_sign * params.zeta * (kron(sigma1(), sigma1()) + kron(sigma2(), sigma2())));
}

PolarizationMatrix rho_eo(const StateLabel& s, double theta, ParamsMethod method) {
  if (classify(s) != HelicityClass::two) {
    throw DomainError("state " + to_token(s) + " has |Lambda|=0; its density matrix is rho_parity");
  }
  const PolarizationParams params = polarization_params(s.j, s.m, theta, method);
  return PolarizationMatrix{rho_eo_matrix(s.j, params), s, theta};
}

PolarizationMatrix density_matrix(const StateLabel& s, double theta) {
  require_polar_angle(theta);
  if (classify(s) == HelicityClass::zero) {
    PolarizationMatrix rho = rho_parity(s.parity);
    rho.state = s;
    return rho;
  }
  return rho_eo(s, theta);
}

Matrix4 amplitude_outer_product(const StateLabel& s, const Direction& n) {
  const auto amps = amplitude_vector(s, n);
  Eigen::Vector4cd v;
  for (int i = 0; i < 4; ++i) v(i) = amps[static_cast<std::size_t>(i)];
  return v * v.adjoint();
}

PhysicalityReport check_physicality(const Matrix4& rho) {
  PhysicalityReport report{};
  report.hermiticity_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  report.trace_error = std::abs(rho.trace() - Complex(1.0, 0.0));
  const Matrix4 hermitian_part = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4> solver(hermitian_part, Eigen::EigenvaluesOnly);
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  report.purity_error = (rho * rho - rho).cwiseAbs().maxCoeff();
  return report;
}

bool is_physical(const Matrix4& rho) {
  const PhysicalityReport r = check_physicality(rho);
  return r.hermiticity_error <= 1e-12 && r.trace_error <= 1e-12 && r.min_eigenvalue >= -1e-12;
}

}  // namespace tpss
