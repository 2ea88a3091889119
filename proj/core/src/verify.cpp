#include "tpss/verify.hpp"

#include "tpss/angular_dist.hpp"
#include "tpss/correlations.hpp"
#include "tpss/errors.hpp"
#include "tpss/polarization.hpp"
#include "tpss/states.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace tpss {

namespace {

constexpr double kPi = std::numbers::pi;

struct Tracker {
  Tracker(std::string check_name, double tol) : name(std::move(check_name)), tolerance(tol) {}

  std::string name;
  double tolerance;
  double max_error = 0.0;
  std::string worst;
  int cases = 0;

  void record(double error, const std::string& where) {
    ++cases;
    if (std::isnan(error)) error = INFINITY;
    if (cases == 1 || error > max_error) {
      max_error = error;
      worst = where;
    }
  }

  [[nodiscard]] CheckResult finish(double scale) const {
    const double tol = tolerance * scale;
    return {name, max_error <= tol, max_error, tol,
            std::to_string(cases) + " cases" + (worst.empty() ? "" : ", worst at " + worst)};
  }
};

std::vector<double> endpoint_grid(int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = (i == n - 1) ? kPi : kPi * i / (n - 1);
  return g;
}

std::vector<double> interior_grid(int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = kPi * (i + 0.5) / n;
  return g;
}

std::vector<StateLabel> all_states(int j_max) {
  std::vector<StateLabel> out;
  for (int j = 0; j <= j_max; ++j) {
    for (int m = -j; m <= j; ++m) {
      for (const auto& s : enumerate_states(j, m)) out.push_back(s);
    }
  }
  return out;
}

std::vector<HelicityClass> classes_for(int j) {
  std::vector<HelicityClass> out;
  if (j % 2 == 0) out.push_back(HelicityClass::zero);
  if (j >= 2) out.push_back(HelicityClass::two);
  return out;
}

std::string where(int j, int m, double theta) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "J=%d M=%d theta=%.6g", j, m, theta);
  return buf;
}

CheckResult check_state_counts(double scale) {
  Tracker t{"state_counts", 0.0};
  for (int j = 0; j <= 12; ++j) {
    int want_plus = 1;
    int want_minus = 0;
    if (j == 0) {
      want_minus = 1;
    } else if (j == 1) {
      want_plus = 0;
    } else if (j % 2 == 0) {
      want_plus = 2;
      want_minus = 1;
    }
    const double err = std::abs(count_states(j, Parity::plus) - want_plus) +
                       std::abs(count_states(j, Parity::minus) - want_minus);
    t.record(err, "J=" + std::to_string(j));
  }
  return t.finish(scale);
}

CheckResult check_distribution_routes(double scale) {
  Tracker t{"distribution_direct_vs_series", 1e-10};
  const auto grid = endpoint_grid(50);
  for (int j = 0; j <= 8; ++j) {
    for (int m = -j; m <= j; ++m) {
      for (HelicityClass cls : classes_for(j)) {
        const DirectDistribution direct(j, m, cls);
        const SeriesDistribution series(j, m, cls);
        for (double theta : grid) t.record(std::abs(direct(theta) - series(theta)), where(j, m, theta));
      }
    }
  }
  return t.finish(scale);
}

std::vector<CheckResult> check_normalization(double scale) {
  Tracker total{"distribution_normalization", 1e-9};
  for (int j = 0; j <= 8; ++j) {
    for (int m = -j; m <= j; ++m) {
      for (HelicityClass cls : classes_for(j)) {
        for (DistributionMethod method : {DistributionMethod::direct, DistributionMethod::series}) {
          total.record(std::abs(total_probability(j, m, cls, method) - 1.0), where(j, m, 0.0));
        }
      }
    }
  }
  Tracker isotropic{"isotropic_j0", 1e-14};
  for (DistributionMethod method : {DistributionMethod::direct, DistributionMethod::series}) {
    for (Parity p : {Parity::plus, Parity::minus}) {
      const auto curve = tabulate(make_state(0, 0, p), method);
      for (const auto& s : curve.samples) {
        isotropic.record(std::abs(s.w - 1.0 / (4.0 * kPi)), where(0, 0, s.theta));
      }
    }
  }
  return {total.finish(scale), isotropic.finish(scale)};
}

std::vector<CheckResult> check_params(double scale) {
  Tracker routes{"params_direct_vs_series", 1e-9};
  Tracker unit{"params_unit_circle", 1e-10};
  const auto grid = interior_grid(50);
  for (int j = 2; j <= 8; ++j) {
    for (int m = -j; m <= j; ++m) {
      const ParamsEvaluator direct(j, m, ParamsMethod::direct);
      const ParamsEvaluator series(j, m, ParamsMethod::series);
      for (double theta : grid) {
        if (direct.intensity(theta) <= kNoIntensityThreshold || series.intensity(theta) <= kNoIntensityThreshold) {
          continue;
        }
        const auto a = direct(theta);
        const auto b = series(theta);
        routes.record(std::max(std::abs(a.xi - b.xi), std::abs(a.zeta - b.zeta)), where(j, m, theta));
        unit.record(std::abs(a.xi * a.xi + a.zeta * a.zeta - 1.0), where(j, m, theta));
        unit.record(std::abs(b.xi * b.xi + b.zeta * b.zeta - 1.0), where(j, m, theta));
      }
    }
  }

  Tracker special{"params_special_angles", 1e-12};
  for (int j = 2; j <= 8; ++j) {
    for (int m : {2, -2}) {
      for (ParamsMethod method : {ParamsMethod::direct, ParamsMethod::series}) {
        const auto p = polarization_params(j, m, 0.0, method);
        special.record(std::max(std::abs(p.xi - (m == 2 ? 1.0 : -1.0)), std::abs(p.zeta)), where(j, m, 0.0));
      }
    }
    for (int m = -j; m <= j; ++m) {
      const ParamsEvaluator direct(j, m, ParamsMethod::direct);
      if (direct.intensity(kPi / 2) <= kNoIntensityThreshold) continue;
      const double sign = ((j - m) % 2 == 0) ? 1.0 : -1.0;
      for (ParamsMethod method : {ParamsMethod::direct, ParamsMethod::series}) {
        const auto p = polarization_params(j, m, kPi / 2, method);
        special.record(std::max(std::abs(p.xi), std::abs(p.zeta - sign)), where(j, m, kPi / 2));
      }
    }
  }
  return {routes.finish(scale), unit.finish(scale), special.finish(scale)};
}

std::vector<CheckResult> check_density_matrices(double scale) {
  Tracker hermitian{"density_hermitian", 1e-14};
  Tracker trace{"density_unit_trace", 1e-14};
  Tracker psd{"density_positive_semidefinite", 1e-12};
  Tracker pure{"density_pure", 1e-10};
  Tracker rebuilt{"density_from_amplitudes", 1e-10};
  const auto grid = interior_grid(10);
  for (const auto& s : all_states(6)) {
    const DirectDistribution w(s.j, s.m, classify(s));
    for (double theta : grid) {
      PolarizationMatrix rho;
      try {
        rho = density_matrix(s, theta);
      } catch (const NoIntensityError&) {
        continue;
      }
      const auto r = check_physicality(rho.entries);
      const std::string at = to_token(s) + " theta=" + std::to_string(theta);
      hermitian.record(r.hermiticity_error, at);
      trace.record(r.trace_error, at);
      psd.record(std::max(0.0, -r.min_eigenvalue), at);
      pure.record(r.purity_error, at);

      const Matrix4 outer = amplitude_outer_product(s, Direction::make(theta, 0.9));
      rebuilt.record((outer - w(theta) * rho.entries).cwiseAbs().maxCoeff(), at);
    }
  }
  return {hermitian.finish(scale), trace.finish(scale), psd.finish(scale), pure.finish(scale),
          rebuilt.finish(scale)};
}

std::vector<CheckResult> check_correlations(double scale) {
  Tracker general{"correlation_closed_form", 1e-12};
  Tracker reference{"correlation_reference_analyzer", 1e-12};
  Tracker perpendicular{"correlation_perpendicular_emission", 1e-12};
  Tracker blind{"circular_parity_blindness", 1e-14};

  std::vector<double> psi_grid(20);
  for (int i = 0; i < 20; ++i) psi_grid[static_cast<std::size_t>(i)] = kPi * i / 20.0;
  const auto theta_grid = interior_grid(10);

  std::vector<StateLabel> states;
  for (int j : {0, 2, 3, 4}) {
    for (int m = -j; m <= j; ++m) {
      for (const auto& s : enumerate_states(j, m)) states.push_back(s);
    }
  }

  for (const auto& s : states) {
    const CorrelationClass cls = correlation_class(s);
    for (double theta : theta_grid) {
      PolarizationMatrix rho;
      double zeta = 0.0;
      try {
        rho = density_matrix(s, theta);
        if (classify(s) == HelicityClass::two) zeta = polarization_params(s.j, s.m, theta).zeta;
      } catch (const NoIntensityError&) {
        continue;
      }
      const std::string at = to_token(s) + " theta=" + std::to_string(theta);
      for (double psi : psi_grid) {
        const Analyzer a = linear_analyzer(psi, Propagation::forward);
        for (double psi_prime : psi_grid) {
          const Analyzer b = linear_analyzer(psi_prime, Propagation::backward);
          general.record(std::abs(coincidence(rho, a, b) - closed_form_w(cls, psi, psi_prime, zeta)), at);
        }
        const Analyzer x_axis = linear_analyzer(0.0, Propagation::backward);
        reference.record(std::abs(coincidence(rho, a, x_axis) - closed_form_w_reference(cls, psi, zeta)), at);
      }
    }

    if (classify(s) == HelicityClass::two) {
      const ParamsEvaluator params(s.j, s.m);
      if (params.intensity(kPi / 2) > kNoIntensityThreshold) {
        const PolarizationMatrix rho = density_matrix(s, kPi / 2);
        for (double psi : psi_grid) {
          const double w = coincidence(rho, linear_analyzer(psi, Propagation::forward),
                                       linear_analyzer(0.0, Propagation::backward));
          perpendicular.record(std::abs(w - closed_form_w_perpendicular(s.m, psi)), to_token(s));
        }
      }
    }
  }

  for (int j : {0, 2, 4}) {
    for (int m = -j; m <= j; ++m) {
      for (double theta : theta_grid) {
        blind.record(circular_parity_blindness(j, m, theta).max_difference, where(j, m, theta));
      }
    }
  }
  return {general.finish(scale), reference.finish(scale), perpendicular.finish(scale), blind.finish(scale)};
}

}  // namespace

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerificationReport run_verification(const VerifyOptions& options) {
  const double scale = options.tolerance_scale;
  VerificationReport report;
  auto append = [&report](std::vector<CheckResult> more) {
    for (auto& c : more) report.checks.push_back(std::move(c));
  };
  report.checks.push_back(check_state_counts(scale));
  report.checks.push_back(check_distribution_routes(scale));
  append(check_normalization(scale));
  append(check_params(scale));
  append(check_density_matrices(scale));
  append(check_correlations(scale));
  return report;
}

std::string report_text(const VerificationReport& report) {
  std::string out;
  char line[512];
  for (const auto& c : report.checks) {
    std::snprintf(line, sizeof(line), "[%s] %-36s max_err=%.3e tol=%.1e (%s)\n", c.passed ? "PASS" : "FAIL",
                  c.name.c_str(), c.max_error, c.tolerance, c.detail.c_str());
    out += line;
  }
  out += report.all_passed() ? "verification passed\n" : "verification FAILED\n";
  return out;
}

std::string report_json(const VerificationReport& report) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["max_error"] = std::isfinite(c.max_error) ? nlohmann::ordered_json(c.max_error) : nlohmann::ordered_json(nullptr);
    j["tolerance"] = c.tolerance;
    j["detail"] = c.detail;
    checks.push_back(j);
  }
  nlohmann::ordered_json doc;
  doc["passed"] = report.all_passed();
  doc["checks"] = checks;
  return doc.dump(2) + "\n";
}

}  // namespace tpss
