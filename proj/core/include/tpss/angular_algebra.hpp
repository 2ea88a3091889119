#pragma once

// Angular-momentum kernels: Wigner small-d functions, 3j symbols and
// Legendre functions for integer quantum numbers.
//
// Phase convention (used everywhere in this library): Condon-Shortley.
//
//   d^J_{m1 m2}(theta) = sum_k (-1)^(k - m2 + m1)
//       sqrt((J+m2)! (J-m2)! (J+m1)! (J-m1)!)
//       / ((J+m2-k)! k! (J-k-m1)! (k-m2+m1)!)
//       cos(theta/2)^(2J-2k+m2-m1) sin(theta/2)^(2k-m2+m1)
//
// so that d^J_{m1 m2}(0) = delta_{m1 m2} and
// d^J_{m1 m2}(pi - theta) = (-1)^(J - m2) d^J_{-m1, m2}(theta).
// Associated Legendre functions carry the (-1)^m Condon-Shortley factor, so
// d^l_{m 0}(theta) = sqrt((l-m)!/(l+m)!) P_l^m(cos theta).

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace tpss {

using Rational = boost::multiprecision::cpp_rational;

/// 50-digit binary float used by the series routes, whose alternating sums
/// cancel to many orders of magnitude below their largest term.
using Extended = boost::multiprecision::cpp_bin_float_50;

/// Largest J whose d-function factorial sum is evaluated in double precision.
/// The sum alternates, so above this J it is evaluated in Extended instead.
inline constexpr int kDoubleSmallDMaxJ = 20;

/// Throws DomainError unless theta is finite and inside [0, pi].
void require_polar_angle(double theta);

/// Wigner small-d function d^J_{m1 m2}(theta) for one fixed (J, m1, m2).
///
/// The factorial-sum coefficients are computed once at construction, so
/// repeated evaluation over a theta grid costs O(J) flops per point.
class SmallD {
 public:
  SmallD(int j, int m1, int m2);

  [[nodiscard]] double operator()(double theta) const;

  [[nodiscard]] int j() const noexcept { return j_; }
  [[nodiscard]] int m1() const noexcept { return m1_; }
  [[nodiscard]] int m2() const noexcept { return m2_; }

 private:
  struct Term {
    double coefficient;
    Extended extended_coefficient;  // used only above kDoubleSmallDMaxJ
    int cos_power;
    int sin_power;
  };
  int j_;
  int m1_;
  int m2_;
  std::vector<Term> terms_;
};

/// d^J_{m1 m2}(theta). Throws DomainError for |m1| > J, |m2| > J, J < 0 or
/// theta outside [0, pi].
[[nodiscard]] double wigner_small_d(int j, int m1, int m2, double theta);

/// Exact representation of a 3j symbol: value = sum * sqrt(radicand).
/// `sum` carries the overall phase; `radicand` is non-negative.
struct ExactThreeJ {
  Rational sum;
  Rational radicand;

  [[nodiscard]] bool is_zero() const { return sum == 0; }
  /// value^2 with the sign of the value, exactly.
  [[nodiscard]] Rational signed_square() const;
  [[nodiscard]] double value() const;
  [[nodiscard]] Extended extended_value() const;
};

/// Racah-formula 3j symbol in exact rational arithmetic. Couplings that
/// violate the triangle or projection-sum rules give exactly zero.
[[nodiscard]] ExactThreeJ wigner_3j_exact(int j1, int j2, int j3, int m1, int m2, int m3);

/// Floating-point 3j symbol converted from the exact value.
[[nodiscard]] double wigner_3j(int j1, int j2, int j3, int m1, int m2, int m3);

/// Legendre polynomial P_n(x) via the three-term recurrence.
[[nodiscard]] double legendre_p(int n, double x);

/// P_n(x) in extended precision.
[[nodiscard]] Extended legendre_p(int n, const Extended& x);

/// Associated Legendre function P_l^m(x), 0 <= m <= l, Condon-Shortley phase.
[[nodiscard]] double assoc_legendre_p(int l, int m, double x);

/// P_l^m(x) in extended precision.
[[nodiscard]] Extended assoc_legendre_p(int l, int m, const Extended& x);

/// n! as an exact big integer.
[[nodiscard]] boost::multiprecision::cpp_int factorial(int n);

}  // namespace tpss
