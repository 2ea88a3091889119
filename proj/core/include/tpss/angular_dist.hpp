#pragma once

// Angular distribution w(theta) of photon-pair emission for the Landau states.
//
// The density depends on J, M and the helicity class |Lambda| in {0, 2} only;
// parity and azimuth never enter. Two independent routes are provided:
//   direct: (2J+1)/(8 pi) [d^J_{m M}(theta)^2 + d^J_{-m M}(theta)^2]
//   series: A_JM sum_n (4n+1) (J J 2n; m -m 0)(J J 2n; M -M 0) P_2n(cos theta),
//           A_JM = (-1)^M (2J+1)/(4 pi)

#include "tpss/angular_algebra.hpp"
#include "tpss/states.hpp"

#include <string_view>
#include <vector>

namespace tpss {

/// Modulus of the total helicity carried by a state.
enum class HelicityClass : int { zero = 0, two = 2 };

[[nodiscard]] constexpr int value_of(HelicityClass c) noexcept { return static_cast<int>(c); }

enum class DistributionMethod { direct, series };

[[nodiscard]] std::string_view to_string(DistributionMethod m) noexcept;

/// |Lambda| class of a state: J=0, even-J variant a and even-J P=-1 give
/// zero; even-J variant b and odd J give two.
[[nodiscard]] HelicityClass classify(const StateLabel& s);

/// Throws DomainError unless (J, M, class) is a realizable combination.
void require_distribution_args(int j, int m, HelicityClass cls);

/// Density w(theta) in sr^-1 via Wigner d-functions.
[[nodiscard]] double w_direct(int j, int m, HelicityClass cls, double theta);

/// Density w(theta) in sr^-1 via the 3j / Legendre series.
[[nodiscard]] double w_series(int j, int m, HelicityClass cls, double theta);

/// Direct-route density with the d-functions prepared once.
class DirectDistribution {
 public:
  DirectDistribution(int j, int m, HelicityClass cls);
  [[nodiscard]] double operator()(double theta) const;

 private:
  double prefactor_;
  SmallD plus_;
  SmallD minus_;
};

/// Series-route density with the 3j coefficients prepared once.
class SeriesDistribution {
 public:
  SeriesDistribution(int j, int m, HelicityClass cls);
  [[nodiscard]] double operator()(double theta) const;
  /// The same sum without rounding to double.
  [[nodiscard]] Extended extended(double theta) const;

 private:
  std::vector<Extended> coefficients_;  // coefficient of P_{2n}, n = 0..J
};

struct CurveSample {
  double theta;
  double w;
};

struct AngularDistributionCurve {
  StateLabel state;
  HelicityClass cls;
  DistributionMethod method;
  std::vector<CurveSample> samples;
};

/// Default number of uniform theta points on [0, pi] for tabulated curves.
inline constexpr int kDefaultCurveGrid = 181;

/// Tabulate w(theta) for a state on `grid` uniform points spanning [0, pi].
[[nodiscard]] AngularDistributionCurve tabulate(const StateLabel& s, DistributionMethod method,
                                                int grid = kDefaultCurveGrid);

/// Integral of w over the full solid angle, by Gauss-Legendre quadrature.
[[nodiscard]] double total_probability(int j, int m, HelicityClass cls,
                                       DistributionMethod method = DistributionMethod::direct);

}  // namespace tpss
