#include "tpss/sampler.hpp"

#include "tpss/errors.hpp"
#include "tpss/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

namespace tpss {

namespace {

constexpr double kPi = std::numbers::pi;

double scan_maximum(const DirectDistribution& density) {
  double peak = 0.0;
  for (int i = 0; i < kEnvelopeScanPoints; ++i) {
    const double theta = (i == kEnvelopeScanPoints - 1) ? kPi : kPi * i / (kEnvelopeScanPoints - 1);
    peak = std::max(peak, density(theta));
  }
  return peak;
}

// Outcome probabilities for one event, as a function of the emission angle.
class OutcomeModel {
 public:
  explicit OutcomeModel(const RunConfig& config) : config_(config) {
    validate(config.state);
    if (classify(config.state) == HelicityClass::zero) {
      fixed_ = outcome_probabilities(rho_parity(config.state.parity).entries, config.first, config.second);
    } else if (config.theta_fixed) {
      fixed_ = outcome_probabilities(rho_eo(config.state, *config.theta_fixed).entries, config.first, config.second);
    } else {
      params_.emplace(config.state.j, config.state.m);
    }
  }

  [[nodiscard]] bool needs_direction() const noexcept { return !fixed_.has_value(); }

  [[nodiscard]] std::array<double, 4> at(double theta) const {
    if (fixed_) return *fixed_;
    const Matrix4 rho = rho_eo_matrix(config_.state.j, (*params_)(theta));
    return outcome_probabilities(rho, config_.first, config_.second);
  }

 private:
  const RunConfig& config_;
  std::optional<std::array<double, 4>> fixed_;
  std::optional<ParamsEvaluator> params_;
};

void check_sum(const std::array<double, 4>& p) {
  const double total = p[0] + p[1] + p[2] + p[3];
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::logic_error("outcome probabilities sum to " + std::to_string(total) + ", not 1");
  }
}

using Counts = std::array<std::array<std::uint64_t, 2>, 2>;

Counts run_chunk(const RunConfig& config, const OutcomeModel& model, const DirectionSampler* directions,
                 std::uint64_t chunk, std::uint64_t n) {
  Philox4x32 rng(config.seed, chunk);
  Counts counts{};
  std::array<double, 4> p{};
  if (!model.needs_direction()) {
    p = model.at(0.0);
    check_sum(p);
  }
  for (std::uint64_t e = 0; e < n; ++e) {
    if (model.needs_direction()) {
      // Directions at which the |Lambda|=2 density underflows the threshold
      // carry no conditional state; draw again.
      for (;;) {
        const Direction d = (*directions)(rng);
        try {
          p = model.at(d.theta);
          break;
        } catch (const NoIntensityError&) {
        }
      }
      check_sum(p);
    }
    const double u = rng.uniform();
    int outcome = 3;
    double cumulative = 0.0;
    for (int k = 0; k < 3; ++k) {
      cumulative += p[static_cast<std::size_t>(k)];
      if (u < cumulative) {
        outcome = k;
        break;
      }
    }
    ++counts[static_cast<std::size_t>(outcome / 2)][static_cast<std::size_t>(outcome % 2)];
  }
  return counts;
}

}  // namespace

DirectionSampler::DirectionSampler(const StateLabel& s)
    : density_(s.j, s.m, classify(s)), envelope_(kEnvelopeSafetyFactor * scan_maximum(density_)) {}

Direction DirectionSampler::operator()(Philox4x32& rng) const {
  for (;;) {
    const double cos_theta = std::clamp(2.0 * rng.uniform() - 1.0, -1.0, 1.0);
    const double phi = 2.0 * kPi * rng.uniform();
    const double theta = std::acos(cos_theta);
    const double w = density_(theta);
    if (w > envelope_) {
      throw std::logic_error("rejection envelope violated: w=" + std::to_string(w) +
                             " > envelope=" + std::to_string(envelope_) + " at theta=" + std::to_string(theta));
    }
    if (rng.uniform() * envelope_ < w) return Direction{theta, phi};
  }
}

std::vector<Direction> sample_directions(const StateLabel& s, std::uint64_t n, std::uint64_t seed) {
  const DirectionSampler sampler(s);
  Philox4x32 rng(seed, 0);
  std::vector<Direction> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(sampler(rng));
  return out;
}

CoincidenceTally run_coincidence(const RunConfig& config, unsigned workers) {
  if (config.n_events == 0) throw DomainError("a run needs at least one event");
  if (config.theta_fixed) require_polar_angle(*config.theta_fixed);

  const OutcomeModel model(config);
  std::optional<DirectionSampler> directions;
  if (model.needs_direction()) directions.emplace(config.state);

  const std::uint64_t chunks = (config.n_events + kEventsPerChunk - 1) / kEventsPerChunk;
  std::vector<Counts> per_chunk(chunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  auto work = [&] {
    for (std::uint64_t c = next.fetch_add(1); c < chunks && !failed.load(); c = next.fetch_add(1)) {
      const std::uint64_t begin = c * kEventsPerChunk;
      const std::uint64_t n = std::min(kEventsPerChunk, config.n_events - begin);
      try {
        per_chunk[c] = run_chunk(config, model, directions ? &*directions : nullptr, c, n);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };

  const unsigned threads = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(std::max<std::uint64_t>(chunks, 1)));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  CoincidenceTally tally;
  tally.n_events = config.n_events;
  for (const Counts& c : per_chunk) {
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t k = 0; k < 2; ++k) tally.counts[i][k] += c[i][k];
    }
  }
  const double n = static_cast<double>(config.n_events);
  tally.estimated_w = static_cast<double>(tally.counts[0][0]) / n;
  tally.standard_error = std::sqrt(tally.estimated_w * (1.0 - tally.estimated_w) / n);
  return tally;
}

double expected_coincidence(const RunConfig& config) {
  const OutcomeModel model(config);
  if (!model.needs_direction()) return model.at(0.0)[0];

  const DirectDistribution density(config.state.j, config.state.m, classify(config.state));
  const auto& rule = default_quadrature();
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double theta = std::acos(rule.nodes[i]);
    const double weight = 2.0 * kPi * rule.weights[i] * density(theta);
    try {
      sum += weight * model.at(theta)[0];
    } catch (const NoIntensityError&) {
    }
  }
  return sum;
}

}  // namespace tpss
