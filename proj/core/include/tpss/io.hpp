#pragma once

// File formats emitted by the library and the command-line tool. Numbers are
// written in shortest round-trip decimal; angles are always radians.

#include "tpss/angular_dist.hpp"
#include "tpss/polarization.hpp"
#include "tpss/sampler.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tpss::io {

/// Shortest decimal string that parses back to exactly `x`.
[[nodiscard]] std::string format_number(double x);

/// Parses a number written by format_number. Throws DomainError otherwise.
[[nodiscard]] double parse_number(std::string_view text);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Comma-separated, '\n' line endings, trailing newline. Fields must not
/// contain commas or newlines.
[[nodiscard]] std::string write_csv(const CsvTable& table);
[[nodiscard]] CsvTable parse_csv(std::string_view text);

/// JSON array with one object per row; fields that parse as numbers are
/// written as numbers, everything else as strings.
[[nodiscard]] std::string table_json(const CsvTable& table);

/// `theta_rad,w_sr_inv,method,state`
[[nodiscard]] CsvTable curve_table(const AngularDistributionCurve& curve);

/// `J,n_plus,n_minus` for J = 0..j_max; absent states are written as `-`.
[[nodiscard]] CsvTable states_table(int j_max);
[[nodiscard]] std::string states_json(int j_max);

struct ParamsRow {
  double theta;
  PolarizationParams params;
  StateLabel state;
};

/// `theta_rad,xi,zeta,method,state`
[[nodiscard]] CsvTable params_table(const std::vector<ParamsRow>& rows);
[[nodiscard]] std::string params_json(const std::vector<ParamsRow>& rows);

enum class CorrelationSource { trace, closed_form, monte_carlo };

[[nodiscard]] std::string_view to_string(CorrelationSource s) noexcept;

struct CorrelationRow {
  double psi;
  double psi_prime;
  double w;
  StateLabel state;
  double theta;
  CorrelationSource source;
};

/// `psi_rad,psi_prime_rad,W,state,theta_rad,source`
[[nodiscard]] CsvTable correlation_table(const std::vector<CorrelationRow>& rows);

/// 4x4 matrix as nested [re, im] pairs with `state`, `theta_rad` (omitted
/// when the matrix does not depend on theta) and `basis` fields.
[[nodiscard]] std::string matrix_json(const PolarizationMatrix& rho);
[[nodiscard]] PolarizationMatrix parse_matrix_json(std::string_view text);

/// Config echo, counts, estimated W and its standard error.
[[nodiscard]] std::string tally_json(const RunConfig& config, const CoincidenceTally& tally, double analytic_w);

/// Parse then re-serialize any JSON document in this library's layout.
[[nodiscard]] std::string reformat_json(std::string_view text);

}  // namespace tpss::io
