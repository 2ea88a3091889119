#pragma once

// Polarization analyzers and coincidence probabilities.
//
// An ideal analyzer is the projector eps = 1/2 (I + eta . sigma) with a unit
// Stokes vector eta in the helicity basis. Linear analyzers are oriented at
// angle psi from the x axis, which is taken normal to the plane spanned by
// n and the quantization axis Z. Because photon 2 travels along -n, its
// linear analyzer has the sigma_2 component reversed:
//   forward:  eta = (-cos 2psi, -sin 2psi, 0)
//   backward: eta = (-cos 2psi, +sin 2psi, 0)
// Circular analyzers select helicity h = +-1: eta = (0, 0, h).

#include "tpss/polarization.hpp"

#include <array>

namespace tpss {

enum class AnalyzerKind { linear_forward, linear_backward, circular };

enum class Propagation { forward, backward };

struct Analyzer {
  AnalyzerKind kind;
  double psi;                 ///< orientation, radians (linear kinds only)
  std::array<double, 3> eta;  ///< Stokes vector, |eta| = 1

  [[nodiscard]] Matrix2 efficiency() const;
  /// The complementary outcome: psi + pi/2 for linear analyzers, opposite helicity for circular.
  [[nodiscard]] Analyzer orthogonal() const;
};

[[nodiscard]] Analyzer linear_analyzer(double psi, Propagation direction);

/// helicity must be +1 or -1.
[[nodiscard]] Analyzer circular_analyzer(int helicity);

/// Tr(rho (eps_a (x) eps_b)). `a` must analyze photon 1 and `b` photon 2:
/// a linear pair is forward/backward, or both are circular.
/// Throws DomainError for a non-physical rho or a mismatched analyzer pair.
[[nodiscard]] double coincidence(const Matrix4& rho, const Analyzer& a, const Analyzer& b);

[[nodiscard]] double coincidence(const PolarizationMatrix& rho, const Analyzer& a, const Analyzer& b);

/// Probabilities of the four outcome combinations
/// (a, b), (a, b_perp), (a_perp, b), (a_perp, b_perp).
[[nodiscard]] std::array<double, 4> outcome_probabilities(const Matrix4& rho, const Analyzer& a,
                                                          const Analyzer& b);

/// Which closed-form linear-correlation law a state obeys.
enum class CorrelationClass {
  parity_plus,   ///< |Lambda|=0, P=+1: 1/2 cos^2(psi - psi')
  parity_minus,  ///< |Lambda|=0, P=-1: 1/2 sin^2(psi - psi')
  even_j,        ///< even J variant b: 1/4 (1 + zeta cos 2(psi + psi'))
  odd_j,         ///< odd J:            1/4 (1 - zeta cos 2(psi + psi'))
};

[[nodiscard]] CorrelationClass correlation_class(const StateLabel& s);

/// Analytic W for linear analyzers at (psi, psi'). zeta is ignored for the parity classes.
[[nodiscard]] double closed_form_w(CorrelationClass cls, double psi, double psi_prime, double zeta = 0.0);

/// Analytic W with the backward analyzer fixed along x (psi' = 0).
[[nodiscard]] double closed_form_w_reference(CorrelationClass cls, double psi, double zeta = 0.0);

/// Analytic W at theta = pi/2 with psi' = 0: 1/2 cos^2 psi for even M, 1/2 sin^2 psi for odd M.
[[nodiscard]] double closed_form_w_perpendicular(int m, double psi);

struct CircularBlindnessReport {
  /// W for helicity pairings (+,+), (+,-), (-,+), (-,-).
  std::array<double, 4> w_plus;
  std::array<double, 4> w_minus;
  double max_difference;
};

/// Compares circular-analyzer coincidences of the P=+1 and P=-1 |Lambda|=0
/// states sharing (J, M). J must be 0 or even.
[[nodiscard]] CircularBlindnessReport circular_parity_blindness(int j, int m, double theta);

}  // namespace tpss
