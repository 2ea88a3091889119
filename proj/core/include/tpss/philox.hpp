#pragma once

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
//
// A (seed, stream) pair selects an independent sequence: the seed is the
// 64-bit key and the stream index occupies the upper half of the 128-bit
// counter, so streams never overlap for fewer than 2^64 blocks each.

#include <array>
#include <cstdint>
#include <limits>

namespace tpss {

class Philox4x32 {
 public:
  using result_type = std::uint64_t;
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  Philox4x32(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

  /// Raw bijection: ten rounds applied to `counter` under `key`.
  [[nodiscard]] static Block encrypt(Block counter, Key key) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept;

  /// Independent generator for the sub-stream `index` of the same seed.
  [[nodiscard]] Philox4x32 split(std::uint64_t index) const noexcept { return Philox4x32(seed_, index); }

 private:
  void refill() noexcept;

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  Block buffer_{};
  int used_ = 4;  // 32-bit words consumed from buffer_
};

}  // namespace tpss
