#include "tpss/angular_dist.hpp"

#include "tpss/errors.hpp"
#include "tpss/quadrature.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace tpss {

namespace {

constexpr double kPi = std::numbers::pi;

double sign_power(int exponent) { return (exponent % 2 == 0) ? 1.0 : -1.0; }

int checked_j(int j, int m, HelicityClass cls) {
  require_distribution_args(j, m, cls);
  return j;
}

}  // namespace

std::string_view to_string(DistributionMethod m) noexcept {
  return m == DistributionMethod::direct ? "direct" : "series";
}

HelicityClass classify(const StateLabel& s) {
  validate(s);
  if (s.j == 0) return HelicityClass::zero;
  if (s.j % 2 == 0 && s.variant != Variant::b) return HelicityClass::zero;
  return HelicityClass::two;
}

void require_distribution_args(int j, int m, HelicityClass cls) {
  if (j < 0 || std::abs(m) > j) {
    throw DomainError("need J >= 0 and |M| <= J, got J=" + std::to_string(j) + " M=" + std::to_string(m));
  }
  if (cls == HelicityClass::zero && j % 2 != 0) {
    throw DomainError("|Lambda|=0 distributions exist only for even J, got J=" + std::to_string(j));
  }
  if (cls == HelicityClass::two && j < 2) {
    throw DomainError("|Lambda|=2 distributions need J >= 2, got J=" + std::to_string(j));
  }
}

DirectDistribution::DirectDistribution(int j, int m, HelicityClass cls)
    : prefactor_((2.0 * j + 1.0) / (8.0 * kPi)),
      plus_(checked_j(j, m, cls), value_of(cls), m),
      minus_(j, -value_of(cls), m) {}

double DirectDistribution::operator()(double theta) const {
  const double a = plus_(theta);
  const double b = minus_(theta);
  return prefactor_ * (a * a + b * b);
}

SeriesDistribution::SeriesDistribution(int j, int m, HelicityClass cls) {
  require_distribution_args(j, m, cls);
  const int lam = value_of(cls);
  const Extended a_jm = Extended(sign_power(m) * (2 * j + 1)) / (4 * boost::math::constants::pi<Extended>());
  coefficients_.resize(static_cast<std::size_t>(j) + 1);
  for (int n = 0; n <= j; ++n) {
    const Extended helicity_3j = wigner_3j_exact(j, j, 2 * n, lam, -lam, 0).extended_value();
    const Extended projection_3j = wigner_3j_exact(j, j, 2 * n, m, -m, 0).extended_value();
    coefficients_[static_cast<std::size_t>(n)] = a_jm * (4 * n + 1) * helicity_3j * projection_3j;
  }
}

Extended SeriesDistribution::extended(double theta) const {
  require_polar_angle(theta);
  const Extended x = boost::multiprecision::cos(Extended(theta));
  // Walk the Legendre recurrence once, picking up the even degrees.
  Extended sum = coefficients_[0];
  Extended previous = 1;
  Extended current = x;
  const int top = 2 * (static_cast<int>(coefficients_.size()) - 1);
  for (int k = 2; k <= top; ++k) {
    Extended next = ((2 * k - 1) * x * current - (k - 1) * previous) / k;
    previous = current;
    current = next;
    if (k % 2 == 0) sum += coefficients_[static_cast<std::size_t>(k / 2)] * current;
  }
  return sum;
}

double SeriesDistribution::operator()(double theta) const { return static_cast<double>(extended(theta)); }

double w_direct(int j, int m, HelicityClass cls, double theta) { return DirectDistribution(j, m, cls)(theta); }

double w_series(int j, int m, HelicityClass cls, double theta) { return SeriesDistribution(j, m, cls)(theta); }

AngularDistributionCurve tabulate(const StateLabel& s, DistributionMethod method, int grid) {
  if (grid < 2) throw DomainError("theta grid needs at least 2 points, got " + std::to_string(grid));
  const HelicityClass cls = classify(s);
  AngularDistributionCurve curve{s, cls, method, {}};
  curve.samples.reserve(static_cast<std::size_t>(grid));

  auto fill = [&](const auto& density) {
    for (int i = 0; i < grid; ++i) {
      const double theta = (i == grid - 1) ? kPi : kPi * i / (grid - 1);
      curve.samples.push_back({theta, density(theta)});
    }
  };
  if (method == DistributionMethod::direct) {
    fill(DirectDistribution(s.j, s.m, cls));
  } else {
    fill(SeriesDistribution(s.j, s.m, cls));
  }
  return curve;
}

double total_probability(int j, int m, HelicityClass cls, DistributionMethod method) {
  const auto& rule = default_quadrature();
  if (method == DistributionMethod::direct) {
    return 2.0 * kPi * integrate_polar(rule, DirectDistribution(j, m, cls));
  }
  return 2.0 * kPi * integrate_polar(rule, SeriesDistribution(j, m, cls));
}

}  // namespace tpss
