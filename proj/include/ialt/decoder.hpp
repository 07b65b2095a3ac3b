#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ialt/codes.hpp"
#include "ialt/linalg.hpp"

namespace ialt {

enum class FailReason {
  NoConsistentT,        // no trial weight up to max_radius yields a consistent key system
  NonUniqueSolution,    // key system consistent but rank-deficient at the minimal weight
  RootCountMismatch,    // locator polynomial lacks t* distinct roots in the field
  RootNotALocator,      // t* distinct roots, but some root is not a code locator
  NoErrorValues,        // value system inconsistent (defensive; see error_values)
  NonSubfieldSolution,  // strict mode only: decoded word leaves the subfield
};

std::string to_string(FailReason r);

struct DecodeOptions {
  // Reclassify a decoded word with entries outside the subfield as a failure.
  // Off by default: the collaborative decoder itself never checks membership.
  bool strict_subfield = false;
  // Evaluate error values with the locator-derivative formula instead of the
  // canonical linear solve.  Must agree bit-for-bit whenever decoding succeeds.
  bool fast_error_values = false;
};

// `ok` with codeword = R + error and t_star the located error weight (0 for a
// received word that is already a codeword); otherwise only `reason` is set.
struct DecodeOutcome {
  bool ok = false;
  FailReason reason = FailReason::NoConsistentT;
  std::size_t t_star = 0;
  Mat codeword;
  Mat error;
};

enum class Verdict { Success, Miscorrection, Failure };

// Syndrome sheet S = R * (H diag(v))^T, one row per interleaved row, d-1
// columns over the big field.  Throws on a shape mismatch or entries outside
// the subfield.  S is all-zero iff every row of R passes the parity checks.
Mat syndromes(const Mat& R, const AlternantCode& code);

// Collaborative syndrome decoding.  Scans the error weight t = 1..max_radius
// for the minimal t whose stacked key system (shared locator unknowns across
// all interleaved rows) is consistent, demands a unique solution there, finds
// the error positions as locator roots, and solves for the values row-wise.
DecodeOutcome decode(const Mat& R, const AlternantCode& code,
                     DecodeOptions options = {});

// Error values at `positions` (distinct column indices) from a syndrome
// sheet: per-row solve of the overdetermined system
//   sum_k e_{i,k} v_{j_k} alpha_{j_k}^r = S_{i,r},  r = 0..d-2.
// nullopt when some row's system is inconsistent.
std::optional<Mat> error_values(const std::vector<std::size_t>& positions,
                                const Mat& S, const AlternantCode& code);

// Same values via Omega_i(x) = S_i(x) Lambda(x) mod x^(d-1) and
//   e_{i,k} = alpha_{j_k} Omega_i(1/alpha_{j_k}) / (v_{j_k} Lambda'(1/alpha_{j_k})),
// with Lambda rebuilt from the positions.  Valid only when the positions are
// exactly the locator roots; nullopt on a vanishing derivative.
std::optional<Mat> error_values_forney(const std::vector<std::size_t>& positions,
                                       const Mat& S, const AlternantCode& code);

Verdict classify(const DecodeOutcome& outcome, const Mat& C);

// Unsuccessful-decoding criterion for an error of weight t: true iff the
// stacked key-system matrix built from E alone has rank < t.  E_restricted is
// l x t holding the error restricted to `support` (no all-zero columns).
bool rank_condition(const Mat& E_restricted,
                    const std::vector<std::size_t>& support,
                    const AlternantCode& code, std::size_t t);

// Equivalent criterion: some nonzero u in F^t satisfies
// H' diag(u) E_restricted^T = 0 with H' the parity matrix of the GRS code of
// designed distance d-t on the support locators with unit column multipliers.
// Linear in u, so decided by a rank computation.
bool crux_condition(const Mat& E_restricted,
                    const std::vector<std::size_t>& support,
                    const AlternantCode& code, std::size_t t);

}  // namespace ialt
