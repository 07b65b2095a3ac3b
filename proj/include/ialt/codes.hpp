#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ialt/gf.hpp"
#include "ialt/linalg.hpp"

namespace ialt {

// Generalized Reed-Solomon code data: length n, designed distance d,
// distinct nonzero locators alpha, nonzero column multipliers v.
struct GrsSpec {
  FieldPtr field;
  unsigned n = 0;
  unsigned d = 0;
  std::vector<Felt> alpha;
  std::vector<Felt> v;
};

// Default construction: alpha_i = g^i (so n = order gives all nonzero
// elements), v all-ones.
GrsSpec make_grs(FieldPtr F, unsigned n, unsigned d);
GrsSpec make_grs(FieldPtr F, unsigned n, unsigned d, std::vector<Felt> alpha,
                 std::vector<Felt> v);
// As make_grs but with v drawn uniformly from the nonzero elements.
GrsSpec make_grs_random_v(FieldPtr F, unsigned n, unsigned d, std::uint64_t seed);

// Row j (0-indexed, j < d-1) has entries v_i * alpha_i^j; this is
// H * diag(v) and has rank d-1.
Mat grs_parity_matrix(const GrsSpec& spec);

// An ell x n word with entries in the designated subfield.
using InterleavedMatrix = Mat;

bool subfield_entries(const Field& F, const Mat& M);

// Subfield subcode of the GRS code: parity_q is the (m(d-1)) x n expansion
// of H * diag(v) over a basis of GF(2^(s*m)) / GF(2^s), k the true
// dimension n - rank(parity_q), generator_q an RREF kernel basis.
struct AlternantCode {
  GrsSpec grs;
  Mat parity_grs;   // (d-1) x n over the big field
  Mat parity_q;     // m(d-1) x n, subfield entries
  Mat generator_q;  // k x n RREF, subfield entries
  unsigned k = 0;

  const Field& field() const { return *grs.field; }
  unsigned n() const { return grs.n; }
  unsigned d() const { return grs.d; }
};

AlternantCode make_alternant(const GrsSpec& spec);

// Each row of messages (ell x k) is encoded as message * generator_q.
InterleavedMatrix encode(const AlternantCode& code, const Mat& messages);

// (max{n - m(d-1), 0}, min{n-d+1, k_opt(q, n, d)}).
std::pair<unsigned long, unsigned long> dimension_bounds(unsigned long n,
                                                         unsigned long d,
                                                         unsigned q, unsigned m);

// floor(ell (d-1) / (ell+1)): largest radius at which the collaborative
// key system can still determine the error support uniquely.
inline unsigned long max_radius(unsigned long d, unsigned long ell) {
  return ell * (d - 1) / (ell + 1);
}

}  // namespace ialt
