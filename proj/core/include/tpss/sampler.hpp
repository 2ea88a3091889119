#pragma once

// Monte Carlo generation of photon-pair emission directions and analyzer
// outcomes.
//
// Events are processed in fixed-size chunks; chunk c draws from the Philox
// stream (seed, c). Tallies are merged by integer addition, so results are
// bit-identical for any worker count.

#include "tpss/angular_dist.hpp"
#include "tpss/correlations.hpp"
#include "tpss/philox.hpp"
#include "tpss/states.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace tpss {

inline constexpr int kEnvelopeScanPoints = 1024;
inline constexpr double kEnvelopeSafetyFactor = 1.05;
inline constexpr std::uint64_t kEventsPerChunk = 1u << 16;

/// Rejection sampler for the emission direction of a state: cos(theta) is
/// proposed uniformly on [-1, 1] and accepted with probability w(theta)/envelope.
class DirectionSampler {
 public:
  explicit DirectionSampler(const StateLabel& s);

  /// Throws std::logic_error if the density ever exceeds the envelope.
  [[nodiscard]] Direction operator()(Philox4x32& rng) const;

  [[nodiscard]] double envelope() const noexcept { return envelope_; }
  [[nodiscard]] double density(double theta) const { return density_(theta); }

 private:
  DirectDistribution density_;
  double envelope_;
};

[[nodiscard]] std::vector<Direction> sample_directions(const StateLabel& s, std::uint64_t n, std::uint64_t seed);

struct RunConfig {
  StateLabel state;
  std::uint64_t n_events = 0;
  std::uint64_t seed = 0;
  std::optional<double> theta_fixed;  ///< when absent, theta is drawn per event from w(theta)
  Analyzer first;                     ///< analyzer for photon 1 (along n)
  Analyzer second;                    ///< analyzer for photon 2 (along -n)
};

struct CoincidenceTally {
  /// counts[i][k]: i is photon 1's outcome, k photon 2's; index 0 = pass, 1 = block.
  std::array<std::array<std::uint64_t, 2>, 2> counts{};
  std::uint64_t n_events = 0;
  double estimated_w = 0.0;
  double standard_error = 0.0;

  friend bool operator==(const CoincidenceTally&, const CoincidenceTally&) = default;
};

/// Samples analyzer outcomes event by event. `workers` only affects speed.
[[nodiscard]] CoincidenceTally run_coincidence(const RunConfig& config, unsigned workers = 1);

/// Probability that both analyzers pass, averaged over the emission
/// directions the run would sample (a single value when theta is fixed).
[[nodiscard]] double expected_coincidence(const RunConfig& config);

}  // namespace tpss
