// Standalone acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "oracles.hpp"
#include "tpss/angular_dist.hpp"
#include "tpss/correlations.hpp"
#include "tpss/errors.hpp"
#include "tpss/polarization.hpp"
#include "tpss/sampler.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>

namespace {

using namespace tpss;

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct MaxError {
  double value = 0.0;
  void update(double err) { value = std::max(value, std::abs(err)); }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::vector<HelicityClass> classes_for(int j) {
  std::vector<HelicityClass> out;
  if (j % 2 == 0) out.push_back(HelicityClass::zero);
  if (j >= 2) out.push_back(HelicityClass::two);
  return out;
}

std::vector<StateLabel> all_states(int j_max) {
  std::vector<StateLabel> out;
  for (int j = 0; j <= j_max; ++j)
    for (int m = -j; m <= j; ++m)
      for (const auto& s : enumerate_states(j, m)) out.push_back(s);
  return out;
}

double endpoint_grid(int i) { return kPi * i / 49.0; }

Outcome state_counts() {
  Outcome out;
  for (int j = 0; j <= 12; ++j) {
    const int plus = j == 0 ? 1 : j == 1 ? 0 : j % 2 == 0 ? 2 : 1;
    const int minus = j == 0 ? 1 : j % 2 == 0 ? 1 : 0;
    for (int m = -j; m <= j; ++m) {
      const auto states = enumerate_states(j, m);
      int np = 0, nm = 0;
      for (const auto& s : states) (s.parity == Parity::plus ? np : nm) += 1;
      out.require(np == plus && nm == minus && count_states(j, Parity::plus) == plus &&
                      count_states(j, Parity::minus) == minus,
                  "J=" + std::to_string(j) + " M=" + std::to_string(m));
    }
  }
  out.detail = out.passed ? "N+/N- exact for J<=12" : out.detail;
  return out;
}

Outcome distribution_routes() {
  MaxError err;
  for (int j = 0; j <= 8; ++j)
    for (int m = -j; m <= j; ++m)
      for (auto cls : classes_for(j)) {
        const DirectDistribution direct(j, m, cls);
        const SeriesDistribution series(j, m, cls);
        for (int i = 0; i < 50; ++i) err.update(direct(endpoint_grid(i)) - series(endpoint_grid(i)));
      }
  Outcome out;
  out.require(err.value < 1e-10, "direct vs series");
  out.detail = "max |w_direct - w_series| = " + sci(err.value) + (out.passed ? "" : "; " + out.detail);
  return out;
}

Outcome normalization() {
  MaxError norm, iso;
  for (int j = 0; j <= 8; ++j)
    for (int m = -j; m <= j; ++m)
      for (auto cls : classes_for(j)) norm.update(total_probability(j, m, cls) - 1.0);
  for (Parity p : {Parity::plus, Parity::minus}) {
    for (const auto& sample : tabulate(make_state(0, 0, p), DistributionMethod::direct).samples)
      iso.update(sample.w - 1.0 / (4.0 * kPi));
    for (const auto& sample : tabulate(make_state(0, 0, p), DistributionMethod::series).samples)
      iso.update(sample.w - 1.0 / (4.0 * kPi));
  }
  Outcome out;
  out.require(norm.value < 1e-9, "normalization");
  out.require(iso.value < 1e-14, "J=0 isotropy");
  out.detail = "max |integral - 1| = " + sci(norm.value) + ", max |w_J0 - 1/4pi| = " + sci(iso.value) +
               (out.passed ? "" : "; " + out.detail);
  return out;
}

Outcome polarization_parameters() {
  MaxError routes, circle, special;
  for (int j = 2; j <= 8; ++j) {
    for (int m = -j; m <= j; ++m) {
      const ParamsEvaluator direct(j, m, ParamsMethod::direct);
      const ParamsEvaluator series(j, m, ParamsMethod::series);
      for (int i = 0; i < 50; ++i) {
        const double theta = endpoint_grid(i);
        if (direct.intensity(theta) <= kNoIntensityThreshold) continue;
        const auto a = direct(theta);
        const auto b = series(theta);
        routes.update(a.xi - b.xi);
        routes.update(a.zeta - b.zeta);
        circle.update(a.xi * a.xi + a.zeta * a.zeta - 1.0);
        circle.update(b.xi * b.xi + b.zeta * b.zeta - 1.0);
      }
      if (direct.intensity(kPi / 2) > kNoIntensityThreshold) {
        const double sign = (j - m) % 2 == 0 ? 1.0 : -1.0;
        for (const auto& p : {direct(kPi / 2), series(kPi / 2)}) {
          special.update(p.xi);
          special.update(p.zeta - sign);
        }
      }
    }
    for (int m : {2, -2}) {
      for (auto method : {ParamsMethod::direct, ParamsMethod::series}) {
        const auto p = polarization_params(j, m, 0.0, method);
        special.update(p.xi - (m > 0 ? 1.0 : -1.0));
        special.update(p.zeta);
      }
    }
  }
  Outcome out;
  out.require(routes.value < 1e-9, "routes");
  out.require(circle.value < 1e-10, "unit circle");
  out.require(special.value < 1e-12, "special angles");
  out.detail = "routes " + sci(routes.value) + ", |xi^2+zeta^2-1| " + sci(circle.value) + ", special angles " +
               sci(special.value) + (out.passed ? "" : "; " + out.detail);
  return out;
}

Outcome density_properties() {
  MaxError herm, trace, purity, recon;
  double min_eig = 0.0;
  for (const auto& s : all_states(8)) {
    const std::optional<DirectDistribution> w =
        s.j <= 6 ? std::optional<DirectDistribution>(std::in_place, s.j, s.m, classify(s)) : std::nullopt;
    for (int i = 0; i < 50; ++i) {
      const double theta = endpoint_grid(i);
      PolarizationMatrix rho;
      try {
        rho = density_matrix(s, theta);
      } catch (const NoIntensityError&) {
        continue;
      }
      const auto r = check_physicality(rho.entries);
      herm.update(r.hermiticity_error);
      trace.update(r.trace_error);
      purity.update(r.purity_error);
      min_eig = std::min(min_eig, r.min_eigenvalue);
      if (w) {
        for (double phi : {0.0, 0.9, 3.7}) {
          const Matrix4 outer = amplitude_outer_product(s, Direction::make(theta, phi));
          recon.update((outer - (*w)(theta)*rho.entries).cwiseAbs().maxCoeff());
        }
      }
    }
  }
  Outcome out;
  out.require(herm.value < 1e-14, "hermiticity");
  out.require(trace.value < 1e-14, "trace");
  out.require(min_eig >= -1e-12, "positivity");
  out.require(purity.value < 1e-10, "purity");
  out.require(recon.value < 1e-10, "amplitude reconstruction");
  out.detail = "hermiticity " + sci(herm.value) + ", trace " + sci(trace.value) + ", min eigenvalue " + sci(min_eig) +
               ", purity " + sci(purity.value) + ", reconstruction " + sci(recon.value) +
               (out.passed ? "" : "; " + out.detail);
  return out;
}

Outcome correlation_forms() {
  MaxError grid, reference, perpendicular, blind;
  auto pair_w = [](const PolarizationMatrix& rho, double psi, double psi2) {
    return coincidence(rho, linear_analyzer(psi, Propagation::forward), linear_analyzer(psi2, Propagation::backward));
  };
  for (const auto& s : all_states(8)) {
    const CorrelationClass cls = correlation_class(s);
    const bool lambda_two = cls == CorrelationClass::even_j || cls == CorrelationClass::odd_j;
    for (int t = 0; t < 10; ++t) {
      const double theta = kPi * (t + 0.5) / 10.0;
      if (lambda_two && ParamsEvaluator(s.j, s.m).intensity(theta) <= kNoIntensityThreshold) continue;
      const PolarizationMatrix rho = density_matrix(s, theta);
      const double zeta = lambda_two ? polarization_params(s.j, s.m, theta).zeta : 0.0;
      for (int i = 0; i < 20; ++i) {
        const double psi = kPi * i / 20.0;
        for (int k = 0; k < 20; ++k) {
          const double psi2 = kPi * k / 20.0;
          grid.update(pair_w(rho, psi, psi2) - closed_form_w(cls, psi, psi2, zeta));
        }
        reference.update(pair_w(rho, psi, 0.0) - closed_form_w_reference(cls, psi, zeta));
      }
    }
    if (lambda_two && ParamsEvaluator(s.j, s.m).intensity(kPi / 2) > kNoIntensityThreshold) {
      const PolarizationMatrix rho = density_matrix(s, kPi / 2);
      for (int i = 0; i < 20; ++i) {
        const double psi = kPi * i / 20.0;
        perpendicular.update(pair_w(rho, psi, 0.0) - closed_form_w_perpendicular(s.m, psi));
      }
    }
  }
  for (int j = 0; j <= 8; j += 2)
    for (int m = -j; m <= j; ++m)
      for (int t = 0; t < 10; ++t) blind.update(circular_parity_blindness(j, m, kPi * (t + 0.5) / 10.0).max_difference);
  Outcome out;
  out.require(grid.value < 1e-12, "analyzer grid");
  out.require(reference.value < 1e-12, "reference analyzer");
  out.require(perpendicular.value < 1e-12, "perpendicular emission");
  out.require(blind.value < 1e-14, "circular parity blindness");
  out.detail = "grid " + sci(grid.value) + ", psi'=0 " + sci(reference.value) + ", theta=pi/2 " +
               sci(perpendicular.value) + ", circular " + sci(blind.value) + (out.passed ? "" : "; " + out.detail);
  return out;
}

std::vector<double> thetas_of(const std::vector<Direction>& dirs) {
  std::vector<double> out;
  out.reserve(dirs.size());
  for (const auto& d : dirs) out.push_back(d.theta);
  return out;
}

Outcome monte_carlo() {
  constexpr std::uint64_t kEvents = 1'000'000;
  constexpr int kBins = 40;
  struct Case {
    StateLabel state;
    int lambda;
    double psi;
    double psi2;
  };
  const Case cases[] = {{make_state(0, 0, Parity::plus), 0, 0.0, kPi / 6},
                        {make_state(2, 1, Parity::plus, Variant::b), 2, 0.3, 0.9},
                        {make_state(3, 1, Parity::plus), 2, 0.0, 0.0}};
  Outcome out;
  std::string detail;
  for (const auto& c : cases) {
    RunConfig cfg;
    cfg.state = c.state;
    cfg.n_events = kEvents;
    cfg.seed = 20240611;
    cfg.first = linear_analyzer(c.psi, Propagation::forward);
    cfg.second = linear_analyzer(c.psi2, Propagation::backward);
    const auto tally = run_coincidence(cfg);
    const double analytic = expected_coincidence(cfg);
    const double pulls = std::abs(tally.estimated_w - analytic) / tally.standard_error;
    out.require(pulls <= 4.0, to_token(c.state) + " W off by " + sci(pulls) + " SE");
    out.require(run_coincidence(cfg) == tally, to_token(c.state) + " tally not reproducible");

    const auto dirs = sample_directions(c.state, kEvents, cfg.seed);
    const auto rerun = sample_directions(c.state, kEvents, cfg.seed);
    bool identical = true;
    for (std::size_t i = 0; i < dirs.size(); ++i)
      identical = identical && dirs[i].theta == rerun[i].theta && dirs[i].phi == rerun[i].phi;
    out.require(identical, to_token(c.state) + " directions not reproducible");
    const auto chi = oracle::chi_square(oracle::cos_theta_histogram(thetas_of(dirs), kBins),
                                        oracle::cos_theta_bin_probabilities(c.state.j, c.state.m, c.lambda, kBins));
    out.require(chi.p_value > 1e-3, to_token(c.state) + " chi2 p=" + sci(chi.p_value));
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s%s W %.5f vs %.5f (%.2f SE), chi2 p=%.3f", detail.empty() ? "" : "; ",
                  to_token(c.state).c_str(), tally.estimated_w, analytic, pulls, chi.p_value);
    detail += buf;
  }
  out.detail = detail + (out.passed ? "" : "; " + out.detail);
  return out;
}

Outcome verify_subcommand() {
  const int status = std::system(TPSS_CLI_PATH " verify > /dev/null");
  Outcome out;
  out.require(status == 0, "exit status " + std::to_string(status));
  out.detail = out.passed ? "tpss verify exited 0" : out.detail;
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    double time_limit_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "state enumeration", 1.0, state_counts},
      {2, "angular distribution routes agree", 10.0, distribution_routes},
      {3, "normalization and isotropy", 0.0, normalization},
      {4, "polarization parameters", 0.0, polarization_parameters},
      {5, "density matrix properties", 0.0, density_properties},
      {6, "correlation closed forms", 30.0, correlation_forms},
      {7, "Monte Carlo consistency", 60.0, monte_carlo},
      {8, "verify subcommand", 0.0, verify_subcommand},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.passed = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0.0 && seconds >= c.time_limit_s) {
      outcome.passed = false;
      outcome.detail += "; exceeded " + sci(c.time_limit_s) + " s";
    }
    std::printf("[%s] criterion %d: %s: %s (%.2f s)\n", outcome.passed ? "PASS" : "FAIL", c.number, c.title,
                outcome.detail.c_str(), seconds);
    std::fflush(stdout);
    if (!outcome.passed) ++failures;
  }
  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
