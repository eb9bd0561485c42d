#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace onlinecolor {

/// Seedable 64-bit generator used everywhere randomness is needed.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Bounded draws use Lemire's multiply-and-reject method rather
/// than std::uniform_int_distribution, whose algorithm varies between
/// standard libraries, so every stream is reproducible across toolchains.
class Rng {
 public:
  static constexpr std::string_view algorithm_id = "mt19937_64+lemire-bounded+splitmix64-split/v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives an independent stream seed from (master, a, b), e.g. (seed, cell, trial).
constexpr std::uint64_t split_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
  return mix64(mix64(mix64(master) ^ a) ^ (b * 0xd1b54a32d192ed03ULL));
}

}  // namespace onlinecolor
