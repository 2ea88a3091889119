#pragma once

// Two-photon polarization density matrices.
//
// Basis order: (++, +-, -+, --), where the first sign is photon 1's helicity
// and sigma_3 |+-> = +-|+->  for each photon. Operators on the pair are
// Kronecker products A (x) B with A acting on photon 1.
//
// States with |Lambda| = 0 have the J, M and theta independent matrices
//   rho_parity(P) = 1/4 { I(x)I + s3(x)s3 + P (s1(x)s1 - s2(x)s2) }.
// States with |Lambda| = 2 have
//   rho = 1/4 { I(x)I + xi (s3(x)I - I(x)s3) - s3(x)s3 + c zeta (s1(x)s1 + s2(x)s2) },
// with c = +1 for even J (variant b) and c = -1 for odd J.

#include "tpss/angular_algebra.hpp"
#include "tpss/angular_dist.hpp"
#include "tpss/states.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string_view>
#include <vector>

namespace tpss {

using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

namespace pauli {
[[nodiscard]] Matrix2 identity();
[[nodiscard]] Matrix2 sigma1();
[[nodiscard]] Matrix2 sigma2();
[[nodiscard]] Matrix2 sigma3();
}  // namespace pauli

[[nodiscard]] Matrix4 kron(const Matrix2& a, const Matrix2& b);

/// Partial trace over photon 2 (result acts on photon 1).
[[nodiscard]] Matrix2 trace_out_second(const Matrix4& rho);
/// Partial trace over photon 1 (result acts on photon 2).
[[nodiscard]] Matrix2 trace_out_first(const Matrix4& rho);

/// Threshold on the |Lambda|=2 density below which xi, zeta are undefined.
inline constexpr double kNoIntensityThreshold = 1e-12;

struct PolarizationMatrix {
  Matrix4 entries;
  std::optional<StateLabel> state;
  std::optional<double> theta;  ///< absent for the theta-independent matrices
};

enum class ParamsMethod { direct, series };

[[nodiscard]] std::string_view to_string(ParamsMethod m) noexcept;

struct PolarizationParams {
  double xi;    ///< degree of circular polarization of each photon
  double zeta;  ///< weight of the linear-correlation term
  ParamsMethod method;
};

/// Theta-independent density matrix of the |Lambda| = 0 states.
[[nodiscard]] PolarizationMatrix rho_parity(Parity p);

/// xi and zeta for J >= 2, |M| <= J at polar angle theta. Throws
/// NoIntensityError when the |Lambda|=2 density is at or below the threshold.
[[nodiscard]] PolarizationParams polarization_params(int j, int m, double theta,
                                                     ParamsMethod method = ParamsMethod::direct);

/// Prepared evaluator of xi, zeta for fixed (J, M), reusable across theta.
class ParamsEvaluator {
 public:
  ParamsEvaluator(int j, int m, ParamsMethod method = ParamsMethod::direct);
  [[nodiscard]] PolarizationParams operator()(double theta) const;
  /// |Lambda|=2 density at theta by the same route as the parameters.
  [[nodiscard]] double intensity(double theta) const;

 private:
  int j_;
  int m_;
  ParamsMethod method_;
  std::optional<SmallD> d_plus_;
  std::optional<SmallD> d_minus_;
  std::optional<SeriesDistribution> series_w2_;
  std::vector<Extended> xi_coefficients_;    // of P_{2n-1}, n = 1..J
  std::vector<Extended> zeta_coefficients_;  // of P_{2n}^4, n = 2..J
};

/// Density matrix of a |Lambda|=2 state (even-J variant b or odd J).
[[nodiscard]] PolarizationMatrix rho_eo(const StateLabel& s, double theta,
                                        ParamsMethod method = ParamsMethod::direct);

/// Same matrix from already evaluated parameters.
[[nodiscard]] Matrix4 rho_eo_matrix(int j, const PolarizationParams& params);

/// Density matrix for any allowed state at polar angle theta.
[[nodiscard]] PolarizationMatrix density_matrix(const StateLabel& s, double theta);

/// |psi><psi| built from the state amplitudes at direction n, in the fixed basis.
/// Equals w(theta) times the normalized density matrix.
[[nodiscard]] Matrix4 amplitude_outer_product(const StateLabel& s, const Direction& n);

struct PhysicalityReport {
  double hermiticity_error;  ///< max |rho - rho^dagger|
  double trace_error;        ///< |Tr rho - 1|
  double min_eigenvalue;
  double purity_error;       ///< max |rho^2 - rho|
};

[[nodiscard]] PhysicalityReport check_physicality(const Matrix4& rho);

/// Hermitian, unit trace and positive semidefinite within the library tolerances.
[[nodiscard]] bool is_physical(const Matrix4& rho);

}  // namespace tpss
