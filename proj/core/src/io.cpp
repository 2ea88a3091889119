#include "tpss/io.hpp"

#include "tpss/errors.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <system_error>

namespace tpss::io {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kBasis = "++,+-,-+,--";

std::string_view analyzer_kind_name(AnalyzerKind k) {
  switch (k) {
    case AnalyzerKind::linear_forward: return "linear_forward";
    case AnalyzerKind::linear_backward: return "linear_backward";
    case AnalyzerKind::circular: return "circular";
  }
  return "";
}

Json analyzer_json(const Analyzer& a) {
  Json j;
  j["kind"] = analyzer_kind_name(a.kind);
  if (a.kind != AnalyzerKind::circular) j["psi_rad"] = a.psi;
  j["eta"] = Json::array({a.eta[0], a.eta[1], a.eta[2]});
  return j;
}

constexpr int kJsonIndent = 2;

}  // namespace

std::string format_number(double x) {
  if (!std::isfinite(x)) throw DomainError("cannot serialize non-finite number");
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), x);
  return std::string(buffer, result.ptr);
}

double parse_number(std::string_view text) {
  double value = 0.0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc() || result.ptr != text.data() + text.size()) {
    throw DomainError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::string write_csv(const CsvTable& table) {
  std::string out;
  auto append_row = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out += ',';
      out += fields[i];
    }
    out += '\n';
  };
  append_row(table.header);
  for (const auto& row : table.rows) append_row(row);
  return out;
}

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  bool first = true;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      fields.emplace_back(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (first) {
      table.header = std::move(fields);
      first = false;
    } else {
      if (fields.size() != table.header.size()) {
        throw DomainError("CSV row has " + std::to_string(fields.size()) + " fields, header has " +
                          std::to_string(table.header.size()));
      }
      table.rows.push_back(std::move(fields));
    }
  }
  return table;
}

std::string table_json(const CsvTable& table) {
  Json out = Json::array();
  for (const auto& row : table.rows) {
    Json obj;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
      const std::string& field = row[i];
      double value = 0.0;
      const auto r = std::from_chars(field.data(), field.data() + field.size(), value);
      if (!field.empty() && r.ec == std::errc() && r.ptr == field.data() + field.size() && std::isfinite(value)) {
        obj[table.header[i]] = value;
      } else {
        obj[table.header[i]] = field;
      }
    }
    out.push_back(obj);
  }
  return out.dump(kJsonIndent) + "\n";
}

CsvTable curve_table(const AngularDistributionCurve& curve) {
  CsvTable table{{"theta_rad", "w_sr_inv", "method", "state"}, {}};
  const std::string token = to_token(curve.state);
  const std::string method(to_string(curve.method));
  table.rows.reserve(curve.samples.size());
  for (const auto& s : curve.samples) {
    table.rows.push_back({format_number(s.theta), format_number(s.w), method, token});
  }
  return table;
}

CsvTable states_table(int j_max) {
  if (j_max < 0) throw DomainError("J_max must be non-negative");
  CsvTable table{{"J", "n_plus", "n_minus"}, {}};
  for (int j = 0; j <= j_max; ++j) {
    const int plus = count_states(j, Parity::plus);
    const int minus = count_states(j, Parity::minus);
    table.rows.push_back({std::to_string(j), plus ? std::to_string(plus) : "-", minus ? std::to_string(minus) : "-"});
  }
  return table;
}

std::string states_json(int j_max) {
  if (j_max < 0) throw DomainError("J_max must be non-negative");
  Json rows = Json::array();
  for (int j = 0; j <= j_max; ++j) {
    Json row;
    row["J"] = j;
    row["n_plus"] = count_states(j, Parity::plus);
    row["n_minus"] = count_states(j, Parity::minus);
    Json tokens = Json::array();
    for (const auto& s : enumerate_states(j)) tokens.push_back(to_token(s));
    row["states_at_M0"] = tokens;
    rows.push_back(row);
  }
  Json doc;
  doc["states"] = rows;
  return doc.dump(kJsonIndent) + "\n";
}

CsvTable params_table(const std::vector<ParamsRow>& rows) {
  CsvTable table{{"theta_rad", "xi", "zeta", "method", "state"}, {}};
  for (const auto& r : rows) {
    table.rows.push_back({format_number(r.theta), format_number(r.params.xi), format_number(r.params.zeta),
                          std::string(to_string(r.params.method)), to_token(r.state)});
  }
  return table;
}

std::string params_json(const std::vector<ParamsRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["state"] = to_token(r.state);
    j["theta_rad"] = r.theta;
    j["xi"] = r.params.xi;
    j["zeta"] = r.params.zeta;
    j["method"] = to_string(r.params.method);
    out.push_back(j);
  }
  return out.dump(kJsonIndent) + "\n";
}

std::string_view to_string(CorrelationSource s) noexcept {
  switch (s) {
    case CorrelationSource::trace: return "trace";
    case CorrelationSource::closed_form: return "closed_form";
    case CorrelationSource::monte_carlo: return "monte_carlo";
  }
  return "";
}

CsvTable correlation_table(const std::vector<CorrelationRow>& rows) {
  CsvTable table{{"psi_rad", "psi_prime_rad", "W", "state", "theta_rad", "source"}, {}};
  for (const auto& r : rows) {
    table.rows.push_back({format_number(r.psi), format_number(r.psi_prime), format_number(r.w), to_token(r.state),
                          format_number(r.theta), std::string(to_string(r.source))});
  }
  return table;
}

std::string matrix_json(const PolarizationMatrix& rho) {
  Json doc;
  doc["state"] = rho.state ? Json(to_token(*rho.state)) : Json(nullptr);
  if (rho.theta) doc["theta_rad"] = *rho.theta;
  doc["basis"] = kBasis;
  Json matrix = Json::array();
  for (int r = 0; r < 4; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 4; ++c) {
      const auto z = rho.entries(r, c);
      // Collapse negative zeros so equal matrices serialize identically.
      row.push_back(Json::array({z.real() + 0.0, z.imag() + 0.0}));
    }
    matrix.push_back(row);
  }
  doc["matrix"] = matrix;
  return doc.dump(kJsonIndent) + "\n";
}

PolarizationMatrix parse_matrix_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw DomainError(std::string("invalid matrix JSON: ") + e.what());
  }
  if (!doc.contains("basis") || doc["basis"] != kBasis) throw DomainError("matrix JSON must use basis ++,+-,-+,--");
  PolarizationMatrix rho{Matrix4::Zero(), std::nullopt, std::nullopt};
  if (doc.contains("state") && !doc["state"].is_null()) {
    rho.state = parse_state_token(doc["state"].get<std::string>());
  }
  if (doc.contains("theta_rad")) rho.theta = doc["theta_rad"].get<double>();
  const Json& m = doc.at("matrix");
  if (!m.is_array() || m.size() != 4) throw DomainError("matrix JSON needs 4 rows");
  for (int r = 0; r < 4; ++r) {
    const Json& row = m[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != 4) throw DomainError("matrix JSON rows need 4 entries");
    for (int c = 0; c < 4; ++c) {
      const Json& z = row[static_cast<std::size_t>(c)];
      rho.entries(r, c) = {z.at(0).get<double>(), z.at(1).get<double>()};
    }
  }
  return rho;
}

std::string tally_json(const RunConfig& config, const CoincidenceTally& tally, double analytic_w) {
  Json cfg;
  cfg["state"] = to_token(config.state);
  cfg["n_events"] = config.n_events;
  cfg["seed"] = config.seed;
  cfg["theta_rad"] = config.theta_fixed ? Json(*config.theta_fixed) : Json(nullptr);
  cfg["analyzers"] = Json::array({analyzer_json(config.first), analyzer_json(config.second)});

  Json doc;
  doc["config"] = cfg;
  doc["counts"] = Json::array({Json::array({tally.counts[0][0], tally.counts[0][1]}),
                               Json::array({tally.counts[1][0], tally.counts[1][1]})});
  doc["n_events"] = tally.n_events;
  doc["estimated_W"] = tally.estimated_w;
  doc["standard_error"] = tally.standard_error;
  doc["analytic_W"] = analytic_w;
  return doc.dump(kJsonIndent) + "\n";
}

std::string reformat_json(std::string_view text) {
  try {
    return Json::parse(text).dump(kJsonIndent) + "\n";
  } catch (const Json::exception& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace tpss::io
