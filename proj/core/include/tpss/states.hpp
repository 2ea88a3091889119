#pragma once

// Landau two-photon spherical states |J M P> and their helicity content.
//
// Photon 1 travels along n, photon 2 along -n. A helicity pair (l1, l2)
// with l1, l2 in {+1, -1} has total helicity Lambda = l1 - l2. The state
// |J M; l1 l2> has momentum-space amplitude
//
//   sqrt((2J+1)/(4 pi)) e^{i M phi} d^J_{Lambda M}(theta).

#include <array>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace tpss {

enum class Parity : int { plus = +1, minus = -1 };

/// Distinguishes the two even-J positive-parity states. `a` is built from
/// equal helicities (|Lambda| = 0), `b` from opposite ones (|Lambda| = 2).
enum class Variant { a, b, only };

[[nodiscard]] constexpr int sign_of(Parity p) noexcept { return static_cast<int>(p); }

/// Emission direction of photon 1 relative to the quantization axis Z.
struct Direction {
  double theta = 0.0;  ///< polar angle, radians, [0, pi]
  double phi = 0.0;    ///< azimuth, radians, [0, 2 pi)

  /// Validating constructor; throws DomainError on non-finite or out-of-range angles.
  [[nodiscard]] static Direction make(double theta, double phi = 0.0);
};

struct StateLabel {
  int j = 0;
  int m = 0;
  Parity parity = Parity::plus;
  Variant variant = Variant::only;

  friend bool operator==(const StateLabel&, const StateLabel&) = default;
};

/// Returns the empty string when `s` is an allowed state, otherwise a message
/// naming the violated selection rule.
[[nodiscard]] std::string state_rule_violation(const StateLabel& s);

/// Throws DomainError (with the rule message) unless `s` is allowed.
void validate(const StateLabel& s);

/// Builds and validates a label.
[[nodiscard]] StateLabel make_state(int j, int m, Parity parity, Variant variant = Variant::only);

/// Allowed (parity, variant) combinations for angular momentum J at fixed M.
/// Positive parity entries come first.
[[nodiscard]] std::vector<StateLabel> enumerate_states(int j, int m = 0);

/// Number of allowed states of the given parity for angular momentum J.
[[nodiscard]] int count_states(int j, Parity parity);

/// Canonical token `J<j>M<m>P<+|-><a|b|->`, e.g. `J2M1P+a`, `J3M-2P+-`.
[[nodiscard]] std::string to_token(const StateLabel& s);

/// Parses a state token. The trailing variant character may be omitted for
/// states that are unique (`J0M0P+` is read as `J0M0P+-`).
/// Throws DomainError on malformed tokens or forbidden states.
[[nodiscard]] StateLabel parse_state_token(std::string_view token);

struct HelicityComponent {
  int lambda1;
  int lambda2;
  double coefficient;

  [[nodiscard]] int total_helicity() const noexcept { return lambda1 - lambda2; }
};

/// The two spherical helicity states that make up `s`, with coefficients +-1/sqrt(2).
[[nodiscard]] std::array<HelicityComponent, 2> helicity_decomposition(const StateLabel& s);

/// Index of the helicity pair in the fixed two-photon basis (++, +-, -+, --).
[[nodiscard]] int basis_index(int lambda1, int lambda2);

/// Momentum-space amplitude <n; l1 l2 | J M P>.
[[nodiscard]] std::complex<double> amplitude(const StateLabel& s, const Direction& n, int lambda1, int lambda2);

/// All four amplitudes in basis order (++, +-, -+, --).
[[nodiscard]] std::array<std::complex<double>, 4> amplitude_vector(const StateLabel& s, const Direction& n);

}  // namespace tpss
