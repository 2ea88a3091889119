#pragma once

#include <cstddef>
#include <vector>

namespace tpss {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  [[nodiscard]] std::size_t size() const noexcept { return nodes.size(); }
};

/// Rule with n points, nodes ascending. Exact for polynomials of degree 2n-1.
[[nodiscard]] GaussLegendre gauss_legendre(int n);

/// Default rule size used for all normalization integrals.
inline constexpr int kDefaultQuadratureNodes = 200;

/// Shared immutable 200-node rule.
[[nodiscard]] const GaussLegendre& default_quadrature();

/// Integrate f(theta) sin(theta) d(theta) over [0, pi] with the given rule
/// (substitution x = cos theta).
template <class F>
double integrate_polar(const GaussLegendre& rule, F&& f);

}  // namespace tpss

#include <cmath>

template <class F>
double tpss::integrate_polar(const GaussLegendre& rule, F&& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    sum += rule.weights[i] * f(std::acos(rule.nodes[i]));
  }
  return sum;
}
