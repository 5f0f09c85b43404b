#pragma once
/* Deterministic randomness for experiments.  mt19937_64 has a standardized
 * output sequence, so seeded draws (and therefore reports) are byte-identical
 * across platforms.  Bounded draws use plain reduction; the bias is
 * irrelevant at desk scale and keeps the draw count fixed.
 */

#include <cstdint>
#include <random>

#include "iwa/padic.hpp"

namespace iwa {

using Rng = std::mt19937_64;

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline Rng seeded_rng(std::uint64_t seed) { return Rng(seed); }

// Independent per-trial stream derived from the master seed.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return Rng(mix64(seed ^ mix64(trial + 1)));
}

inline std::uint64_t draw_below(Rng& rng, std::uint64_t bound) {
  return rng() % bound;
}

inline PAdicScalar draw_scalar(Rng& rng, std::uint64_t p, int N) {
  return {p, N, draw_below(rng, prime_power(p, N))};
}

inline PAdicScalar draw_unit(Rng& rng, std::uint64_t p, int N) {
  std::uint64_t q = prime_power(p, N);
  std::uint64_t v = draw_below(rng, q);
  while (v % p == 0) v = draw_below(rng, q);
  return {p, N, v};
}

}  // namespace iwa
