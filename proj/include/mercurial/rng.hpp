#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace mercurial {

/// splitmix64 finalizer; used to turn (seed, label) pairs into substream seeds.
std::uint64_t mix64(std::uint64_t x);

/// Substream seed for a named analysis (e.g. "word:iorestoacasa").
std::uint64_t derive_seed(std::uint64_t base, std::string_view label);

/// Substream seed for an indexed trial.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// mt19937_64 is fully specified by the standard, so streams are identical
// across platforms. Bounded draws below avoid std::uniform_int_distribution,
// whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform integer in [0, n), n >= 1. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n);

  /// Uniform double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 gen_;
};

/// m distinct indices drawn uniformly from [0, n), returned sorted.
std::vector<std::uint32_t> sample_without_replacement(std::uint32_t n,
                                                      std::uint32_t m,
                                                      Rng& rng);

}  // namespace mercurial
