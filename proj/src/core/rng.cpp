#include "qclique/rng.hpp"

#include <algorithm>
#include <boost/random/binomial_distribution.hpp>
#include <boost/random/uniform_01.hpp>
#include <boost/random/uniform_int_distribution.hpp>

namespace qclique {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::string_view label,
                       std::initializer_list<std::uint64_t> indices) {
  std::uint64_t h = splitmix64(seed ^ fnv1a(label));
  for (std::uint64_t idx : indices) {
    h = splitmix64(h ^ splitmix64(idx + 0x632be59bd9b4e019ULL));
  }
  return h;
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

Rng Rng::substream(std::string_view label, std::initializer_list<std::uint64_t> indices) const {
  return Rng(mix_seed(seed_, label, indices));
}

double Rng::uniform01() {
  boost::random::uniform_01<double> dist;
  return dist(engine_);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  boost::random::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
  return dist(engine_);
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  boost::random::uniform_int_distribution<std::int64_t> dist(lo, hi);
  return dist(engine_);
}

bool Rng::bernoulli(double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return uniform01() < p;
}

std::uint64_t Rng::binomial(std::uint64_t trials, double p) {
  if (trials == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return trials;
  // Small expected counts: direct inversion is cheaper than BTRD setup.
  if (static_cast<double>(trials) * std::min(p, 1.0 - p) < 8.0 && trials < 64) {
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) hits += uniform01() < p ? 1 : 0;
    return hits;
  }
  boost::random::binomial_distribution<std::int64_t, double> dist(static_cast<std::int64_t>(trials), p);
  return static_cast<std::uint64_t>(dist(engine_));
}

}  // namespace qclique
