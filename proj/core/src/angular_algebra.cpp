#include "tpss/angular_algebra.hpp"

#include "tpss/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace tpss {

namespace {

using boost::multiprecision::cpp_int;

double int_pow(double base, int exponent) {
  double result = 1.0;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

void require_projection(int j, int m, const char* name) {
  if (j < 0) throw DomainError("angular momentum J must be non-negative, got " + std::to_string(j));
  if (m < -j || m > j) {
    throw DomainError(std::string("projection ") + name + "=" + std::to_string(m) +
                      " outside [-J, J] for J=" + std::to_string(j));
  }
}

}  // namespace

cpp_int factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer " + std::to_string(n));
  cpp_int result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

void require_polar_angle(double theta) {
  if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi) {
    throw DomainError("polar angle " + std::to_string(theta) + " rad is outside [0, pi]");
  }
}

SmallD::SmallD(int j, int m1, int m2) : j_(j), m1_(m1), m2_(m2) {
  require_projection(j, m1, "m1");
  require_projection(j, m2, "m2");

  const int k_min = std::max(0, m2 - m1);
  const int k_max = std::min(j + m2, j - m1);
  terms_.reserve(static_cast<std::size_t>(std::max(0, k_max - k_min + 1)));

  for (int k = k_min; k <= k_max; ++k) {
    const int d1 = j + m2 - k;
    const int d2 = k;
    const int d3 = j - k - m1;
    const int d4 = k - m2 + m1;
    const double sign = ((k - m2 + m1) % 2 == 0) ? 1.0 : -1.0;

    const cpp_int numerator = factorial(j + m2) * factorial(j - m2) * factorial(j + m1) * factorial(j - m1);
    const cpp_int denominator = factorial(d1) * factorial(d2) * factorial(d3) * factorial(d4);
    Term term{0.0, Extended(0), 2 * j - 2 * k + m2 - m1, 2 * k - m2 + m1};
    if (j <= kDoubleSmallDMaxJ) {
      const Rational squared(numerator, denominator * denominator);
      term.coefficient = sign * static_cast<double>(std::sqrt(squared.convert_to<long double>()));
    } else {
      term.extended_coefficient = sign * boost::multiprecision::sqrt(Extended(numerator)) / Extended(denominator);
      term.coefficient = static_cast<double>(term.extended_coefficient);
    }
    terms_.push_back(term);
  }
}

double SmallD::operator()(double theta) const {
  require_polar_angle(theta);
  if (j_ > kDoubleSmallDMaxJ) {
    const Extended half = Extended(theta) / 2;
    const Extended c = boost::multiprecision::cos(half);
    const Extended s = boost::multiprecision::sin(half);
    Extended sum = 0;
    for (const Term& t : terms_) sum += t.extended_coefficient * pow(c, t.cos_power) * pow(s, t.sin_power);
    return static_cast<double>(sum);
  }
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  double sum = 0.0;
  for (const Term& t : terms_) {
    sum += t.coefficient * int_pow(c, t.cos_power) * int_pow(s, t.sin_power);
  }
  return sum;
}

double wigner_small_d(int j, int m1, int m2, double theta) { return SmallD(j, m1, m2)(theta); }

Rational ExactThreeJ::signed_square() const {
  Rational sq = sum * sum * radicand;
  return sum < 0 ? Rational(-sq) : sq;
}

double ExactThreeJ::value() const {
  if (sum == 0) return 0.0;
  const Rational sq = sum * sum * radicand;
  const long double magnitude = std::sqrt(sq.convert_to<long double>());
  return static_cast<double>(sum < 0 ? -magnitude : magnitude);
}

Extended ExactThreeJ::extended_value() const {
  if (sum == 0) return Extended(0);
  const Extended magnitude = boost::multiprecision::sqrt(Extended(sum * sum * radicand));
  return sum < 0 ? Extended(-magnitude) : magnitude;
}

ExactThreeJ wigner_3j_exact(int j1, int j2, int j3, int m1, int m2, int m3) {
  require_projection(j1, m1, "m1");
  require_projection(j2, m2, "m2");
  require_projection(j3, m3, "m3");

  ExactThreeJ result{Rational(0), Rational(0)};
  if (m1 + m2 + m3 != 0) return result;
  if (j3 < std::abs(j1 - j2) || j3 > j1 + j2) return result;

  const int k_min = std::max({0, j2 - j3 - m1, j1 - j3 + m2});
  const int k_max = std::min({j1 + j2 - j3, j1 - m1, j2 + m2});

  Rational racah_sum(0);
  for (int k = k_min; k <= k_max; ++k) {
    const cpp_int denominator = factorial(k) * factorial(j3 - j2 + k + m1) * factorial(j3 - j1 + k - m2) *
                                factorial(j1 + j2 - j3 - k) * factorial(j1 - k - m1) * factorial(j2 - k + m2);
    const Rational term(cpp_int(1), denominator);
    if (k % 2 == 0) {
      racah_sum += term;
    } else {
      racah_sum -= term;
    }
  }

  const int phase_exponent = j1 - j2 - m3;
  if (phase_exponent % 2 != 0) racah_sum = -racah_sum;

  const Rational triangle(factorial(j1 + j2 - j3) * factorial(j1 - j2 + j3) * factorial(-j1 + j2 + j3),
                          factorial(j1 + j2 + j3 + 1));
  const cpp_int projections = factorial(j1 + m1) * factorial(j1 - m1) * factorial(j2 + m2) * factorial(j2 - m2) *
                              factorial(j3 + m3) * factorial(j3 - m3);

  result.sum = racah_sum;
  result.radicand = triangle * Rational(projections);
  return result;
}

double wigner_3j(int j1, int j2, int j3, int m1, int m2, int m3) {
  return wigner_3j_exact(j1, j2, j3, m1, m2, m3).value();
}

namespace {

template <class Real>
void require_legendre_args(int n, const Real& x) {
  using std::abs;
  if (n < 0) throw DomainError("Legendre degree must be non-negative, got " + std::to_string(n));
  if (!(abs(x) <= 1)) throw DomainError("Legendre argument outside [-1, 1]");
}

template <class Real>
Real legendre_recurrence(int n, const Real& x) {
  using std::abs;
  require_legendre_args(n, x);
  if (n == 0) return Real(1);
  Real previous = 1;
  Real current = x;
  for (int k = 2; k <= n; ++k) {
    Real next = ((2 * k - 1) * x * current - (k - 1) * previous) / k;
    previous = current;
    current = next;
  }
  return current;
}

template <class Real>
Real assoc_legendre_recurrence(int l, int m, const Real& x) {
  using std::abs;
  using std::sqrt;
  if (m < 0 || l < m) {
    throw DomainError("associated Legendre requires 0 <= m <= l, got l=" + std::to_string(l) +
                      " m=" + std::to_string(m));
  }
  require_legendre_args(l, x);

  // P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}
  Real pmm = 1;
  const Real root = sqrt((1 - x) * (1 + x));
  for (int i = 1; i <= m; ++i) pmm *= -(2 * i - 1) * root;
  if (l == m) return pmm;

  Real previous = pmm;
  Real current = x * (2 * m + 1) * pmm;
  for (int k = m + 2; k <= l; ++k) {
    Real next = ((2 * k - 1) * x * current - (k + m - 1) * previous) / (k - m);
    previous = current;
    current = next;
  }
  return current;
}

}  // namespace

double legendre_p(int n, double x) { return legendre_recurrence(n, x); }

Extended legendre_p(int n, const Extended& x) { return legendre_recurrence(n, x); }

double assoc_legendre_p(int l, int m, double x) { return assoc_legendre_recurrence(l, m, x); }

Extended assoc_legendre_p(int l, int m, const Extended& x) { return assoc_legendre_recurrence(l, m, x); }

}  // namespace tpss
