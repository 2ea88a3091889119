#include "tpss/states.hpp"

#include "tpss/angular_algebra.hpp"
#include "tpss/errors.hpp"

#include <cmath>
#include <numbers>
#include <regex>

namespace tpss {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::string describe(const StateLabel& s) {
  return "J=" + std::to_string(s.j) + " M=" + std::to_string(s.m) +
         " P=" + (s.parity == Parity::plus ? "+1" : "-1");
}

bool parse_int(const std::string& text, int& out) {
  if (text.empty()) return false;
  const bool negative = text.front() == '-';
  const std::string digits = negative ? text.substr(1) : text;
  if (digits.empty() || (digits.size() > 1 && digits.front() == '0')) return false;
  if (negative && digits == "0") return false;
  if (digits.size() > 6) return false;
  out = std::stoi(text);
  return true;
}

}  // namespace

Direction Direction::make(double theta, double phi) {
  require_polar_angle(theta);
  if (!std::isfinite(phi) || phi < 0.0 || phi >= 2.0 * std::numbers::pi) {
    throw DomainError("azimuth " + std::to_string(phi) + " rad is outside [0, 2 pi)");
  }
  return Direction{theta, phi};
}

std::string state_rule_violation(const StateLabel& s) {
  if (s.j < 0) return "J must be non-negative (" + describe(s) + ")";
  if (s.m < -s.j || s.m > s.j) return "|M| must not exceed J (" + describe(s) + ")";
  if (s.j == 1) return "no two-photon state with J=1 exists";
  if (s.j == 0) {
    if (s.variant != Variant::only) return "J=0 states are unique for each parity; no a/b variant";
    return {};
  }
  if (s.j % 2 == 0) {
    if (s.parity == Parity::plus && s.variant == Variant::only) {
      return "even J >= 2 with P=+1 has two states; choose variant a or b (" + describe(s) + ")";
    }
    if (s.parity == Parity::minus && s.variant != Variant::only) {
      return "even J >= 2 with P=-1 has a single state; no a/b variant (" + describe(s) + ")";
    }
    return {};
  }
  if (s.parity == Parity::minus) return "odd J >= 3 admits only P=+1 (" + describe(s) + ")";
  if (s.variant != Variant::only) return "odd J >= 3 has a single state; no a/b variant (" + describe(s) + ")";
  return {};
}

void validate(const StateLabel& s) {
  if (auto msg = state_rule_violation(s); !msg.empty()) throw DomainError(msg);
}

StateLabel make_state(int j, int m, Parity parity, Variant variant) {
  StateLabel s{j, m, parity, variant};
  validate(s);
  return s;
}

std::vector<StateLabel> enumerate_states(int j, int m) {
  if (j < 0) throw DomainError("J must be non-negative, got " + std::to_string(j));
  if (m < -j || m > j) throw DomainError("|M| must not exceed J");
  std::vector<StateLabel> out;
  if (j == 1) return out;
  if (j == 0) {
    out.push_back({0, 0, Parity::plus, Variant::only});
    out.push_back({0, 0, Parity::minus, Variant::only});
  } else if (j % 2 == 0) {
    out.push_back({j, m, Parity::plus, Variant::a});
    out.push_back({j, m, Parity::plus, Variant::b});
    out.push_back({j, m, Parity::minus, Variant::only});
  } else {
    out.push_back({j, m, Parity::plus, Variant::only});
  }
  return out;
}

int count_states(int j, Parity parity) {
  int n = 0;
  for (const auto& s : enumerate_states(j)) {
    if (s.parity == parity) ++n;
  }
  return n;
}

std::string to_token(const StateLabel& s) {
  std::string token = "J" + std::to_string(s.j) + "M" + std::to_string(s.m) + "P";
  token += s.parity == Parity::plus ? '+' : '-';
  switch (s.variant) {
    case Variant::a: token += 'a'; break;
    case Variant::b: token += 'b'; break;
    case Variant::only: token += '-'; break;
  }
  return token;
}

StateLabel parse_state_token(std::string_view token) {
  static const std::regex pattern(R"(^J(\d+)M(-?\d+)P([+-])([ab-]?)$)");
  const std::string text(token);
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) {
    throw DomainError("malformed state token '" + text + "'; expected J<j>M<m>P<+|-><a|b|->, e.g. J2M1P+a");
  }
  StateLabel s;
  if (!parse_int(match[1].str(), s.j) || !parse_int(match[2].str(), s.m)) {
    throw DomainError("non-canonical integer in state token '" + text + "'");
  }
  s.parity = match[3].str() == "+" ? Parity::plus : Parity::minus;
  const std::string v = match[4].str();
  if (v == "a") {
    s.variant = Variant::a;
  } else if (v == "b") {
    s.variant = Variant::b;
  } else {
    s.variant = Variant::only;
  }
  if (auto msg = state_rule_violation(s); !msg.empty()) {
    throw DomainError("state token '" + text + "' rejected: " + msg);
  }
  return s;
}

std::array<HelicityComponent, 2> helicity_decomposition(const StateLabel& s) {
  validate(s);
  const bool equal_helicities = s.j == 0 || (s.j % 2 == 0 && s.variant != Variant::b);
  if (equal_helicities) {
    const double second = s.parity == Parity::plus ? kInvSqrt2 : -kInvSqrt2;
    return {HelicityComponent{+1, +1, kInvSqrt2}, HelicityComponent{-1, -1, second}};
  }
  // Opposite helicities: symmetric for even J (variant b), antisymmetric for odd J.
  const double second = s.j % 2 == 0 ? kInvSqrt2 : -kInvSqrt2;
  return {HelicityComponent{+1, -1, kInvSqrt2}, HelicityComponent{-1, +1, second}};
}

int basis_index(int lambda1, int lambda2) {
  if ((lambda1 != 1 && lambda1 != -1) || (lambda2 != 1 && lambda2 != -1)) {
    throw DomainError("photon helicities must be +1 or -1");
  }
  return (lambda1 == 1 ? 0 : 2) + (lambda2 == 1 ? 0 : 1);
}

std::complex<double> amplitude(const StateLabel& s, const Direction& n, int lambda1, int lambda2) {
  const int index = basis_index(lambda1, lambda2);
  return amplitude_vector(s, n)[static_cast<std::size_t>(index)];
}

std::array<std::complex<double>, 4> amplitude_vector(const StateLabel& s, const Direction& n) {
  require_polar_angle(n.theta);
  std::array<std::complex<double>, 4> out{};
  const double norm = std::sqrt((2.0 * s.j + 1.0) / (4.0 * std::numbers::pi));
  const std::complex<double> phase = std::polar(1.0, s.m * n.phi);
  for (const auto& c : helicity_decomposition(s)) {
    const double d = wigner_small_d(s.j, c.total_helicity(), s.m, n.theta);
    out[static_cast<std::size_t>(basis_index(c.lambda1, c.lambda2))] += c.coefficient * norm * d * phase;
  }
  return out;
}

}  // namespace tpss
