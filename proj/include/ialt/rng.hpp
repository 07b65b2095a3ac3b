#pragma once

#include <cstdint>

namespace ialt {

// SplitMix64: tiny, fast, and with a closed-form jump (the state is a plain
// counter), which makes per-trial streams reproducible regardless of how
// trials are distributed over threads.
struct Rng64 {
  std::uint64_t state = 0;

  explicit Rng64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, n) by rejection; unbiased for every n >= 1.
  std::uint64_t bounded(std::uint64_t n) {
    const std::uint64_t lim = n * ((~std::uint64_t{0}) / n);
    std::uint64_t v = next();
    while (v >= lim) v = next();
    return v % n;
  }
};

// Stateless mix used to derive independent sub-seeds (per trial, per sweep
// point) from one user seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  Rng64 r(seed ^ (salt * 0xd1342543de82ef95ULL + 0x632be59bd9b4e019ULL));
  return r.next();
}

}  // namespace ialt
