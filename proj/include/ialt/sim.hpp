#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ialt/codes.hpp"
#include "ialt/decoder.hpp"
#include "ialt/rng.hpp"

namespace ialt::sim {

enum class CodewordMode { zero, random };

struct TrialConfig {
  const AlternantCode* code = nullptr;
  std::size_t ell = 1;
  std::size_t t = 0;       // t <= n
  std::size_t trials = 1;  // >= 1
  std::uint64_t seed = 0;
  CodewordMode codeword_mode = CodewordMode::random;
  unsigned threads = 0;  // 0: one worker per hardware thread
};

struct TrialStats {
  std::size_t successes = 0;
  std::size_t miscorrections = 0;
  std::size_t failures = 0;
  // Declared-failure reasons, indexed by FailReason; sums to failures.
  std::array<std::size_t, 6> reasons{};

  TrialStats& operator+=(const TrialStats& other);
  bool operator==(const TrialStats&) const = default;
};

struct SampledError {
  std::vector<std::size_t> support;  // sorted, |support| = t
  Mat values;                        // ell x t, no all-zero column
};

// Uniform draw from the burst-error model: the support is uniform among the
// C(n,t) subsets and each column is independently uniform among the
// |alphabet|^ell - 1 nonzero tuples over the given alphabet.
SampledError sample_error(std::size_t ell, std::size_t t, std::size_t n,
                          const std::vector<Felt>& alphabet, Rng64& rng);

// Runs cfg.trials independent decoding trials.  Each trial draws its own rng
// from (seed, trial index), so the result is a deterministic function of the
// config no matter how many worker threads execute it.
TrialStats run_trials(const TrialConfig& cfg);

// Largest t, scanned upward from floor((d-1)/2), such that every scanned
// weight up to t keeps the empirical success rate above `target`.  The scan
// measures the interleaved code over the big field (errors uniform over all
// nonzero columns of GF(2^(s*m))), the regime whose threshold the radius
// formula floor(ell(d-1)/(ell+1)) predicts.
unsigned long find_threshold(const AlternantCode& code, std::size_t ell,
                             std::size_t trials = 100, double target = 0.9,
                             std::uint64_t seed = 0);

}  // namespace ialt::sim
