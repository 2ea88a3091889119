// tpss: command-line front end for the two-photon spherical state library.
//
// Angles are given in degrees on the command line and written in radians.
// Exit codes: 0 success, 1 domain or usage error, 2 verification failure.

#include "tpss/angular_dist.hpp"
#include "tpss/correlations.hpp"
#include "tpss/errors.hpp"
#include "tpss/io.hpp"
#include "tpss/polarization.hpp"
#include "tpss/sampler.hpp"
#include "tpss/states.hpp"
#include "tpss/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitVerify = 2;

double to_radians(double degrees) { return degrees * std::numbers::pi / 180.0; }

struct CommonOptions {
  std::string state_token;
  std::string variant;
  std::string out = "-";
  std::string format;
  double theta_deg = 90.0;
  int grid = tpss::kDefaultCurveGrid;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-" || path == "stdout") {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw tpss::DomainError("cannot open output file '" + path + "'");
  file << text;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw tpss::DomainError("--format " + format + " is not supported by this subcommand");
}

std::string emit_table(const tpss::io::CsvTable& table, const std::string& format) {
  require_format(format, {"csv", "json"});
  return format == "json" ? tpss::io::table_json(table) : tpss::io::write_csv(table);
}

/// Resolves --state and the optional --variant into a validated label.
tpss::StateLabel resolve_state(const CommonOptions& o) {
  if (o.state_token.empty()) throw tpss::DomainError("--state is required");
  std::string token = o.state_token;
  if (!o.variant.empty()) {
    if (o.variant != "a" && o.variant != "b") throw tpss::DomainError("--variant must be a or b");
    const std::size_t p = token.rfind('P');
    if (p != std::string::npos && token.size() - p > 2) {
      throw tpss::DomainError("--state " + token + " already names a variant; drop --variant");
    }
    token += o.variant;
  }
  return tpss::parse_state_token(token);
}

double checked_theta(const CommonOptions& o) {
  const double theta = to_radians(o.theta_deg);
  // 180 degrees maps to pi up to rounding; pin it so the domain check passes.
  if (std::abs(o.theta_deg - 180.0) < 1e-12) return std::numbers::pi;
  tpss::require_polar_angle(theta);
  return theta;
}

std::vector<double> theta_grid(int n) {
  if (n < 2) throw tpss::DomainError("--grid needs at least 2 points");
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = (i == n - 1) ? std::numbers::pi : std::numbers::pi * i / (n - 1);
  return g;
}

void add_state_options(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--state", o.state_token, "State token J<j>M<m>P<+|-><a|b|->, e.g. J2M1P+a")->required();
  cmd->add_option("--variant", o.variant, "a or b, for even-J positive-parity states");
}

void add_output_options(CLI::App* cmd, CommonOptions& o, const std::string& default_format) {
  o.format = default_format;
  cmd->add_option("--out", o.out, "Output path, or - for stdout");
  cmd->add_option("--format", o.format, "csv or json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau two-photon spherical states: distributions, polarization and correlations"};
  app.require_subcommand(1);

  // states
  int j_max = 4;
  CommonOptions states_opts;
  auto* states_cmd = app.add_subcommand("states", "Allowed states per J (counts at fixed M)");
  states_cmd->add_option("--jmax", j_max, "Largest J to list")->check(CLI::NonNegativeNumber);
  add_output_options(states_cmd, states_opts, "csv");

  // angdist
  CommonOptions ang_opts;
  std::string ang_method = "direct";
  auto* ang_cmd = app.add_subcommand("angdist", "Tabulate the angular distribution w(theta)");
  add_state_options(ang_cmd, ang_opts);
  add_output_options(ang_cmd, ang_opts, "csv");
  ang_cmd->add_option("--grid", ang_opts.grid, "Number of uniform theta points on [0, 180] deg");
  ang_cmd->add_option("--method", ang_method, "direct, series or both");

  // density
  CommonOptions den_opts;
  auto* den_cmd = app.add_subcommand("density", "Two-photon polarization density matrix (JSON)");
  add_state_options(den_cmd, den_opts);
  add_output_options(den_cmd, den_opts, "json");
  den_cmd->add_option("--theta", den_opts.theta_deg, "Polar angle of n, degrees");

  // params
  CommonOptions par_opts;
  std::string par_method = "direct";
  std::optional<double> par_theta;
  auto* par_cmd = app.add_subcommand("params", "Polarization parameters xi, zeta of a |Lambda|=2 state");
  add_state_options(par_cmd, par_opts);
  add_output_options(par_cmd, par_opts, "csv");
  par_cmd->add_option("--theta", par_theta, "Single polar angle, degrees (default: grid)");
  par_cmd->add_option("--grid", par_opts.grid, "Number of uniform theta points when --theta is absent");
  par_cmd->add_option("--method", par_method, "direct, series or both");

  // correlate
  CommonOptions cor_opts;
  double psi_deg = 0.0;
  double psi_prime_deg = 0.0;
  int psi_grid = 0;
  std::string cor_source = "trace";
  auto* cor_cmd = app.add_subcommand("correlate", "Linear-analyzer coincidence probability W");
  add_state_options(cor_cmd, cor_opts);
  add_output_options(cor_cmd, cor_opts, "csv");
  cor_cmd->add_option("--theta", cor_opts.theta_deg, "Polar angle of n, degrees");
  cor_cmd->add_option("--psi", psi_deg, "Photon-1 analyzer angle from x, degrees");
  cor_cmd->add_option("--psi-prime", psi_prime_deg, "Photon-2 analyzer angle from x, degrees");
  cor_cmd->add_option("--psi-grid", psi_grid, "Sweep both angles over n x n points in [0, 180) instead");
  cor_cmd->add_option("--source", cor_source, "trace, closed_form or both");

  // sample
  CommonOptions smp_opts;
  std::uint64_t events = 1000000;
  std::uint64_t seed = 0;
  std::optional<double> smp_theta;
  double smp_psi = 0.0;
  double smp_psi_prime = 0.0;
  unsigned workers = 0;
  std::uint64_t n_directions = 0;
  auto* smp_cmd = app.add_subcommand("sample", "Monte Carlo coincidence tally or emission directions");
  add_state_options(smp_cmd, smp_opts);
  add_output_options(smp_cmd, smp_opts, "");
  smp_cmd->add_option("--events", events, "Number of photon pairs");
  smp_cmd->add_option("--seed", seed, "64-bit seed");
  smp_cmd->add_option("--theta", smp_theta, "Fix the emission polar angle, degrees (default: sample it)");
  smp_cmd->add_option("--psi", smp_psi, "Photon-1 analyzer angle, degrees");
  smp_cmd->add_option("--psi-prime", smp_psi_prime, "Photon-2 analyzer angle, degrees");
  smp_cmd->add_option("--workers", workers, "Worker threads (0 = hardware concurrency)");
  smp_cmd->add_option("--directions", n_directions, "Emit this many sampled directions as CSV instead of a tally");

  // verify
  bool verify_json = false;
  double tolerance_scale = 1.0;
  std::string verify_out = "-";
  auto* ver_cmd = app.add_subcommand("verify", "Run the cross-route consistency checks");
  ver_cmd->add_flag("--json", verify_json, "Machine-readable report");
  ver_cmd->add_option("--tolerance-scale", tolerance_scale, "Multiply every tolerance (0 = negative control)");
  ver_cmd->add_option("--out", verify_out, "Output path, or - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitDomain;
  }

  try {
    if (*states_cmd) {
      if (states_opts.format == "json") {
        emit(tpss::io::states_json(j_max), states_opts.out);
      } else {
        require_format(states_opts.format, {"csv"});
        emit(tpss::io::write_csv(tpss::io::states_table(j_max)), states_opts.out);
      }
    } else if (*ang_cmd) {
      const auto s = resolve_state(ang_opts);
      std::vector<tpss::DistributionMethod> methods;
      if (ang_method == "direct" || ang_method == "both") methods.push_back(tpss::DistributionMethod::direct);
      if (ang_method == "series" || ang_method == "both") methods.push_back(tpss::DistributionMethod::series);
      if (methods.empty()) throw tpss::DomainError("--method must be direct, series or both");
      tpss::io::CsvTable table;
      for (auto m : methods) {
        auto part = tpss::io::curve_table(tpss::tabulate(s, m, ang_opts.grid));
        table.header = part.header;
        for (auto& row : part.rows) table.rows.push_back(std::move(row));
      }
      emit(emit_table(table, ang_opts.format), ang_opts.out);
    } else if (*den_cmd) {
      require_format(den_opts.format, {"json"});
      const auto s = resolve_state(den_opts);
      emit(tpss::io::matrix_json(tpss::density_matrix(s, checked_theta(den_opts))), den_opts.out);
    } else if (*par_cmd) {
      const auto s = resolve_state(par_opts);
      if (tpss::classify(s) != tpss::HelicityClass::two) {
        throw tpss::DomainError("state " + tpss::to_token(s) +
                                " has |Lambda|=0; xi and zeta are defined for even-J variant b and odd-J states");
      }
      std::vector<tpss::ParamsMethod> methods;
      if (par_method == "direct" || par_method == "both") methods.push_back(tpss::ParamsMethod::direct);
      if (par_method == "series" || par_method == "both") methods.push_back(tpss::ParamsMethod::series);
      if (methods.empty()) throw tpss::DomainError("--method must be direct, series or both");
      std::vector<double> thetas;
      if (par_theta) {
        par_opts.theta_deg = *par_theta;
        thetas.push_back(checked_theta(par_opts));
      } else {
        thetas = theta_grid(par_opts.grid);
      }
      std::vector<tpss::io::ParamsRow> rows;
      for (auto method : methods) {
        const tpss::ParamsEvaluator eval(s.j, s.m, method);
        for (double theta : thetas) {
          // On a grid, skip directions without emission; a single angle reports the error.
          if (!par_theta && eval.intensity(theta) <= tpss::kNoIntensityThreshold) continue;
          rows.push_back({theta, eval(theta), s});
        }
      }
      if (par_opts.format == "json") {
        emit(tpss::io::params_json(rows), par_opts.out);
      } else {
        require_format(par_opts.format, {"csv"});
        emit(tpss::io::write_csv(tpss::io::params_table(rows)), par_opts.out);
      }
    } else if (*cor_cmd) {
      const auto s = resolve_state(cor_opts);
      const double theta = checked_theta(cor_opts);
      const auto rho = tpss::density_matrix(s, theta);
      const auto cls = tpss::correlation_class(s);
      const double zeta =
          tpss::classify(s) == tpss::HelicityClass::two ? tpss::polarization_params(s.j, s.m, theta).zeta : 0.0;
      const bool want_trace = cor_source == "trace" || cor_source == "both";
      const bool want_closed = cor_source == "closed_form" || cor_source == "both";
      if (!want_trace && !want_closed) throw tpss::DomainError("--source must be trace, closed_form or both");

      std::vector<std::pair<double, double>> angles;
      if (psi_grid > 0) {
        for (int i = 0; i < psi_grid; ++i) {
          for (int k = 0; k < psi_grid; ++k) {
            angles.emplace_back(std::numbers::pi * i / psi_grid, std::numbers::pi * k / psi_grid);
          }
        }
      } else {
        angles.emplace_back(to_radians(psi_deg), to_radians(psi_prime_deg));
      }
      std::vector<tpss::io::CorrelationRow> rows;
      for (const auto& [psi, psi_prime] : angles) {
        if (want_trace) {
          const double w = tpss::coincidence(rho, tpss::linear_analyzer(psi, tpss::Propagation::forward),
                                             tpss::linear_analyzer(psi_prime, tpss::Propagation::backward));
          rows.push_back({psi, psi_prime, w, s, theta, tpss::io::CorrelationSource::trace});
        }
        if (want_closed) {
          rows.push_back({psi, psi_prime, tpss::closed_form_w(cls, psi, psi_prime, zeta), s, theta,
                          tpss::io::CorrelationSource::closed_form});
        }
      }
      emit(emit_table(tpss::io::correlation_table(rows), cor_opts.format), cor_opts.out);
    } else if (*smp_cmd) {
      const auto s = resolve_state(smp_opts);
      if (n_directions > 0) {
        tpss::io::CsvTable table{{"theta_rad", "phi_rad"}, {}};
        for (const auto& d : tpss::sample_directions(s, n_directions, seed)) {
          table.rows.push_back({tpss::io::format_number(d.theta), tpss::io::format_number(d.phi)});
        }
        // Directions default to CSV, the tally to JSON.
        emit(emit_table(table, smp_opts.format.empty() ? "csv" : smp_opts.format), smp_opts.out);
      } else {
        if (!smp_opts.format.empty()) require_format(smp_opts.format, {"json"});
        tpss::RunConfig config{s, events, seed, std::nullopt,
                               tpss::linear_analyzer(to_radians(smp_psi), tpss::Propagation::forward),
                               tpss::linear_analyzer(to_radians(smp_psi_prime), tpss::Propagation::backward)};
        if (smp_theta) {
          smp_opts.theta_deg = *smp_theta;
          config.theta_fixed = checked_theta(smp_opts);
        }
        const unsigned n_workers = workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : workers;
        const auto tally = tpss::run_coincidence(config, n_workers);
        emit(tpss::io::tally_json(config, tally, tpss::expected_coincidence(config)), smp_opts.out);
      }
    } else if (*ver_cmd) {
      const auto report = tpss::run_verification({tolerance_scale});
      emit(verify_json ? tpss::report_json(report) : tpss::report_text(report), verify_out);
      return report.all_passed() ? kExitOk : kExitVerify;
    }
  } catch (const tpss::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const tpss::NoIntensityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
