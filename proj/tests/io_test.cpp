#include "tpss/errors.hpp"
#include "tpss/io.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <numbers>
#include <random>

namespace tpss {
namespace {

TEST(Numbers, ShortestFormRoundTrips) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
  std::uniform_int_distribution<int> exponent(-300, 300);
  for (int i = 0; i < 20000; ++i) {
    const double x = std::ldexp(mantissa(rng), exponent(rng));
    EXPECT_EQ(io::parse_number(io::format_number(x)), x);
  }
  for (int i = 0; i < 2000; ++i) {
    const double x = std::bit_cast<double>(rng());
    if (!std::isfinite(x)) continue;
    EXPECT_EQ(std::bit_cast<std::uint64_t>(io::parse_number(io::format_number(x))), std::bit_cast<std::uint64_t>(x));
  }
  EXPECT_EQ(io::format_number(0.5), "0.5");
  EXPECT_EQ(io::format_number(std::numbers::pi), "3.141592653589793");
  EXPECT_THROW((void)io::format_number(NAN), DomainError);
  EXPECT_THROW((void)io::parse_number("1.5x"), DomainError);
  EXPECT_THROW((void)io::parse_number(""), DomainError);
}

TEST(Csv, EmitParseEmitIsByteIdentical) {
  const auto curve = tabulate(make_state(3, -1, Parity::plus), DistributionMethod::series, 37);
  const std::string text = io::write_csv(io::curve_table(curve));
  EXPECT_EQ(text.substr(0, text.find('\n')), "theta_rad,w_sr_inv,method,state");
  const io::CsvTable parsed = io::parse_csv(text);
  ASSERT_EQ(parsed.rows.size(), 37u);
  EXPECT_EQ(io::write_csv(parsed), text);
  for (std::size_t i = 0; i < parsed.rows.size(); ++i) {
    EXPECT_EQ(io::parse_number(parsed.rows[i][0]), curve.samples[i].theta);
    EXPECT_EQ(io::parse_number(parsed.rows[i][1]), curve.samples[i].w);
    EXPECT_EQ(parsed.rows[i][2], "series");
    EXPECT_EQ(parsed.rows[i][3], "J3M-1P+-");
  }
  EXPECT_THROW((void)io::parse_csv("a,b\n1\n"), DomainError);
}

TEST(Csv, StatesTable) {
  const std::string text = io::write_csv(io::states_table(4));
  EXPECT_EQ(text, "J,n_plus,n_minus\n0,1,1\n1,-,-\n2,2,1\n3,1,-\n4,2,1\n");
  EXPECT_THROW((void)io::states_table(-1), DomainError);
}

TEST(Csv, CorrelationAndParamsHeaders) {
  const StateLabel s = make_state(2, 1, Parity::plus, Variant::b);
  const auto corr = io::correlation_table({{0.1, 0.2, 0.3, s, 1.0, io::CorrelationSource::closed_form}});
  EXPECT_EQ(io::write_csv(corr), "psi_rad,psi_prime_rad,W,state,theta_rad,source\n0.1,0.2,0.3,J2M1P+b,1,closed_form\n");
  const auto params = io::params_table({{0.5, polarization_params(2, 1, 0.5), s}});
  EXPECT_EQ(params.header, (std::vector<std::string>{"theta_rad", "xi", "zeta", "method", "state"}));
  EXPECT_EQ(params.rows[0][3], "direct");
}

TEST(Json, TableJsonTypesNumericFields) {
  const std::string text = io::table_json(io::parse_csv("a,b\n1.5,J0M0P+-\n"));
  EXPECT_NE(text.find("\"a\": 1.5"), std::string::npos);
  EXPECT_NE(text.find("\"b\": \"J0M0P+-\""), std::string::npos);
  EXPECT_EQ(io::reformat_json(text), text);
}

TEST(Json, MatrixRoundTrip) {
  const PolarizationMatrix rho = density_matrix(make_state(3, 2, Parity::plus), 1.234);
  const std::string text = io::matrix_json(rho);
  const PolarizationMatrix back = io::parse_matrix_json(text);
  EXPECT_EQ(back.entries, rho.entries);
  EXPECT_EQ(back.theta, rho.theta);
  EXPECT_EQ(back.state, rho.state);
  EXPECT_EQ(io::matrix_json(back), text);
  EXPECT_EQ(io::reformat_json(text), text);
  EXPECT_NE(text.find("\"basis\": \"++,+-,-+,--\""), std::string::npos);

  const std::string parity = io::matrix_json(density_matrix(make_state(0, 0, Parity::minus), 0.3));
  EXPECT_EQ(parity.find("theta_rad"), std::string::npos);
  EXPECT_EQ(parity.find("-0.0"), std::string::npos);
  EXPECT_FALSE(io::parse_matrix_json(parity).theta.has_value());
}

TEST(Json, RejectsMalformedMatrices) {
  EXPECT_THROW((void)io::parse_matrix_json("{"), DomainError);
  EXPECT_THROW((void)io::parse_matrix_json(R"({"basis": "HV", "matrix": []})"), DomainError);
  EXPECT_THROW((void)io::parse_matrix_json(R"({"basis": "++,+-,-+,--", "matrix": [[1]]})"), DomainError);
}

TEST(Json, TallyCarriesConfigAndResult) {
  RunConfig cfg;
  cfg.state = make_state(0, 0, Parity::plus);
  cfg.n_events = 1000;
  cfg.seed = 3;
  cfg.first = linear_analyzer(0.0, Propagation::forward);
  cfg.second = linear_analyzer(0.5, Propagation::backward);
  const auto tally = run_coincidence(cfg);
  const std::string text = io::tally_json(cfg, tally, expected_coincidence(cfg));
  for (const char* key : {"\"config\"", "\"counts\"", "\"n_events\": 1000", "\"estimated_W\"", "\"standard_error\"",
                          "\"analytic_W\"", "\"seed\": 3"}) {
    EXPECT_NE(text.find(key), std::string::npos) << key;
  }
  EXPECT_EQ(io::reformat_json(text), text);
}

}  // namespace
}  // namespace tpss
