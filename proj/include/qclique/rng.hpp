#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace qclique {

/// Seeded random stream with named, reproducible substreams.
///
/// A substream is derived from the seed of its parent, never from the parent's
/// current engine state, so drawing from one stream does not perturb another.
/// All distributions come from Boost.Random so that reports are byte-identical
/// across standard library implementations.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  std::uint64_t seed() const { return seed_; }

  Rng substream(std::string_view label, std::initializer_list<std::uint64_t> indices = {}) const;

  /// Uniform real in [0, 1).
  double uniform01();
  /// Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform integer in [lo, hi] inclusive.
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  /// Bernoulli draw; p is clamped to [0, 1].
  bool bernoulli(double p);
  /// Binomial(trials, p) draw; p is clamped to [0, 1].
  std::uint64_t binomial(std::uint64_t trials, double p);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::string_view label,
                       std::initializer_list<std::uint64_t> indices);

}  // namespace qclique
