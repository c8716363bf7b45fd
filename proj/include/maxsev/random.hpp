#pragma once

#include <cstdint>
#include <random>

namespace maxsev {

// Deterministic uniform stream over the open interval (0,1).
//
// Exactly one mt19937_64 output is consumed per draw; the top 53 bits are
// mapped to (k + 0.5) * 2^-53, so neither endpoint can occur and the stream
// layout is identical wherever the same seed is used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double open01() {
    const std::uint64_t bits = gen_() >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 gen_;
};

// Stateless sub-seed derivation (splitmix64 finalizer). Monte Carlo
// repetition loops use seed+index for their master seeds; within one check
// the independent streams (e.g. the two sides of a two-sample comparison)
// are derived with distinct salts so they cannot collide with neighbouring
// repetitions.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + salt * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace maxsev
