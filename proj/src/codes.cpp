#include "ialt/codes.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "ialt/counting.hpp"
#include "ialt/rng.hpp"

namespace ialt {
namespace {

void validate(const GrsSpec& spec) {
  if (!spec.field) throw std::invalid_argument("grs: null field");
  const Field& F = *spec.field;
  if (spec.d < 2 || spec.d > spec.n || spec.n > F.order())
    throw std::invalid_argument("grs: need 2 <= d <= n <= q^m - 1");
  if (spec.alpha.size() != spec.n || spec.v.size() != spec.n)
    throw std::invalid_argument("grs: alpha/v length mismatch");
  std::vector<bool> seen(F.size(), false);
  for (Felt a : spec.alpha) {
    if (a == 0 || a >= F.size() || seen[a])
      throw std::invalid_argument("grs: locators must be distinct and nonzero");
    seen[a] = true;
  }
  for (Felt x : spec.v)
    if (x == 0 || x >= F.size())
      throw std::invalid_argument("grs: multipliers must be nonzero");
}

// Binary expansion matrix of the basis {w^b gamma^j}: column j*s+b holds the
// bit pattern of w^b * gamma^j.  Invertibility over GF(2) is exactly
// GF(2^s)-linear independence of {gamma^j}.
struct BitBasis {
  std::vector<std::uint32_t> tinv_rows;  // rows of T^-1
  std::vector<Felt> wpow;                // w^b for b < s
  unsigned s = 0, m = 0;
};

bool build_bit_basis(const Field& F, const std::vector<Felt>& gamma, BitBasis& out) {
  const unsigned s = F.s(), m = F.m(), sm = s * m;
  out.s = s;
  out.m = m;
  out.wpow.assign(s, 1);
  const Felt w = F.exp(F.subfield_step());  // generator of the subfield
  for (unsigned b = 1; b < s; ++b) out.wpow[b] = F.mul(out.wpow[b - 1], w);

  // Rows of [T | I]; row r low bits = bit r of each basis element.
  std::vector<std::uint64_t> rows(sm, 0);
  for (unsigned j = 0; j < m; ++j)
    for (unsigned b = 0; b < s; ++b) {
      const Felt e = F.mul(out.wpow[b], gamma[j]);
      const unsigned col = j * s + b;
      for (unsigned r = 0; r < sm; ++r)
        if (e >> r & 1) rows[r] |= std::uint64_t{1} << col;
    }
  for (unsigned r = 0; r < sm; ++r) rows[r] |= std::uint64_t{1} << (sm + r);

  for (unsigned c = 0; c < sm; ++c) {
    unsigned p = c;
    while (p < sm && !(rows[p] >> c & 1)) ++p;
    if (p == sm) return false;  // singular: basis dependent over the subfield
    std::swap(rows[p], rows[c]);
    for (unsigned r = 0; r < sm; ++r)
      if (r != c && (rows[r] >> c & 1)) rows[r] ^= rows[c];
  }
  out.tinv_rows.assign(sm, 0);
  for (unsigned r = 0; r < sm; ++r)
    out.tinv_rows[r] = static_cast<std::uint32_t>(rows[r] >> sm);
  return true;
}

// Subfield coordinates of h w.r.t. {gamma^j}: c_j = sum_b mu_{js+b} w^b.
void coordinates(const BitBasis& bb, Felt h, Felt* out_m) {
  for (unsigned j = 0; j < bb.m; ++j) {
    Felt c = 0;
    for (unsigned b = 0; b < bb.s; ++b) {
      const std::uint32_t dot = bb.tinv_rows[j * bb.s + b] & h;
      if (__builtin_parity(dot)) c = Field::add(c, bb.wpow[b]);
    }
    out_m[j] = c;
  }
}

}  // namespace

GrsSpec make_grs(FieldPtr F, unsigned n, unsigned d) {
  if (!F) throw std::invalid_argument("grs: null field");
  std::vector<Felt> alpha(n), v(n, 1);
  for (unsigned i = 0; i < n; ++i) alpha[i] = F->exp(i);
  return make_grs(std::move(F), n, d, std::move(alpha), std::move(v));
}

GrsSpec make_grs(FieldPtr F, unsigned n, unsigned d, std::vector<Felt> alpha,
                 std::vector<Felt> v) {
  GrsSpec spec{std::move(F), n, d, std::move(alpha), std::move(v)};
  validate(spec);
  return spec;
}

GrsSpec make_grs_random_v(FieldPtr F, unsigned n, unsigned d, std::uint64_t seed) {
  if (!F) throw std::invalid_argument("grs: null field");
  Rng64 rng(mix_seed(seed, 0x6e6f6e7a65726fULL));
  std::vector<Felt> alpha(n), v(n);
  for (unsigned i = 0; i < n; ++i) {
    alpha[i] = F->exp(i);
    v[i] = F->exp(rng.bounded(F->order()));
  }
  return make_grs(std::move(F), n, d, std::move(alpha), std::move(v));
}

Mat grs_parity_matrix(const GrsSpec& spec) {
  validate(spec);
  const Field& F = *spec.field;
  Mat H(spec.d - 1, spec.n);
  for (unsigned i = 0; i < spec.n; ++i) {
    Felt p = spec.v[i];
    for (unsigned j = 0; j + 1 < spec.d; ++j) {
      H.at(j, i) = p;
      p = F.mul(p, spec.alpha[i]);
    }
  }
  return H;
}

bool subfield_entries(const Field& F, const Mat& M) {
  for (Felt x : M.a)
    if (x >= F.size() || !F.in_subfield(x)) return false;
  return true;
}

AlternantCode make_alternant(const GrsSpec& spec) {
  validate(spec);
  const Field& F = *spec.field;
  const unsigned m = F.m();

  AlternantCode code;
  code.grs = spec;
  code.parity_grs = grs_parity_matrix(spec);

  // Basis {gamma^j}: powers of the primitive element are always independent
  // over the subfield; the randomized fallback below keeps construction
  // total even if a supplied basis choice ever fails.
  std::vector<Felt> gamma(m);
  for (unsigned j = 0; j < m; ++j) gamma[j] = F.pow(F.gen(), j);
  BitBasis bb;
  if (!build_bit_basis(F, gamma, bb)) {
    Rng64 rng(0xba5e5);
    bool ok = false;
    for (int tries = 0; tries < 1000 && !ok; ++tries) {
      for (unsigned j = 0; j < m; ++j) gamma[j] = 1 + static_cast<Felt>(rng.bounded(F.order()));
      ok = build_bit_basis(F, gamma, bb);
    }
    if (!ok) throw std::runtime_error("alternant: no independent basis found");
  }

  code.parity_q = Mat(std::size_t{m} * (spec.d - 1), spec.n);
  std::vector<Felt> coords(m);
  for (unsigned r = 0; r + 1 < spec.d; ++r)
    for (unsigned i = 0; i < spec.n; ++i) {
      coordinates(bb, code.parity_grs.at(r, i), coords.data());
      for (unsigned j = 0; j < m; ++j)
        code.parity_q.at(std::size_t{r} * m + j, i) = coords[j];
    }
  assert(subfield_entries(F, code.parity_q));

  code.generator_q = kernel_basis(F, code.parity_q);
  code.k = static_cast<unsigned>(code.generator_q.rows);
  assert(code.k == spec.n - rank(F, code.parity_q));

  return code;
}

InterleavedMatrix encode(const AlternantCode& code, const Mat& messages) {
  const Field& F = code.field();
  if (messages.cols != code.k) throw std::invalid_argument("encode: message length != k");
  if (!subfield_entries(F, messages))
    throw std::invalid_argument("encode: message entries outside the subfield");
  return mat_mul(F, messages, code.generator_q);
}

std::pair<unsigned long, unsigned long> dimension_bounds(unsigned long n,
                                                         unsigned long d,
                                                         unsigned q, unsigned m) {
  if (d < 1 || d > n) throw std::invalid_argument("dimension_bounds: need 1 <= d <= n");
  const unsigned long red = m * (d - 1);
  const unsigned long lower = n > red ? n - red : 0;
  const unsigned long upper = std::min(n - d + 1, counting::k_opt(q, n, d));
  return {lower, upper};
}

}  // namespace ialt
