#include "ialt/counting.hpp"

#include <cassert>
#include <stdexcept>

namespace ialt::counting {
namespace {

// Largest e >= 0 with base^e <= x; requires x >= 1.  Works on
// non-canonical rationals (only sign-safe num/den arithmetic).
unsigned long floor_log(unsigned base, const Rat& x) {
  Int num = x.get_num(), den = x.get_den();
  assert(num >= den);  // x >= 1
  unsigned long e = 0;
  Int p = base;
  while (p * den <= num) {
    ++e;
    p *= base;
  }
  return e;
}

// Volume of the radius-r Hamming ball in F_q^n.
Int hamming_volume(unsigned q, unsigned long n, unsigned long r) {
  Int v = 0;
  for (unsigned long i = 0; i <= r && i <= n; ++i)
    v += binom_ui(n, i) * int_pow(q - 1, i);
  return v;
}

}  // namespace

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int binom_ui(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int binom(const Int& x, unsigned long j) {
  Int r;
  mpz_bin_ui(r.get_mpz_t(), x.get_mpz_t(), j);
  return r;
}

Int mds_weight_enum(unsigned n, unsigned d, unsigned w, const Int& Q) {
  if (d < 1 || d > n + 1 || w > n || Q < 2)
    throw std::invalid_argument("mds_weight_enum: bad parameters");
  if (w == 0) return 1;
  if (w < d) return 0;
  Int s = 0;
  for (unsigned j = 0; j <= w - d; ++j) {
    const Int term = binom_ui(w, j) * (int_pow(Q, w - d + 1 - j) - 1);
    s += (j % 2 == 0) ? term : -term;
  }
  return binom_ui(n, w) * s;
}

Int b_sum(unsigned n, unsigned d, unsigned w, unsigned q, unsigned m) {
  const Int Qm = int_pow(q, m);
  return mds_weight_enum(n, d, w, Qm) * int_pow(Qm - 1, n - w) * int_pow(q - 1, w);
}

Int b_total(unsigned n, unsigned d, unsigned q, unsigned m) {
  Int s = 0;
  for (unsigned w = 0; w <= n; ++w) s += b_sum(n, d, w, q, m);
  return s;
}

unsigned long k_opt(unsigned q, unsigned long n, unsigned long d) {
  if (q < 2 || d < 1 || d > n) throw std::invalid_argument("k_opt: bad parameters");

  unsigned long best = n - d + 1;  // Singleton

  {  // Griesmer: largest k with sum_{i<k} ceil(d/q^i) <= n.
    unsigned long k = 0;
    Int sum = 0, qi = 1;
    while (true) {
      Int need = (d + qi - 1) / qi;
      if (sum + need > n) break;
      sum += need;
      qi *= q;
      ++k;
    }
    if (k < best) best = k;
  }

  {  // Hamming: q^k <= q^n / V(n, floor((d-1)/2)).
    const Rat ball(int_pow(q, n), hamming_volume(q, n, (d - 1) / 2));
    const unsigned long k = floor_log(q, ball);
    if (k < best) best = k;
  }

  if (Int(q) * d > Int(q - 1) * n) {  // Plotkin regime: theta*n < d.
    const Int M = (Int(q) * d) / (Int(q) * d - Int(q - 1) * n);
    const unsigned long k = floor_log(q, Rat(M));
    if (k < best) best = k;
  }

  {  // Elias-Bassalygo: for integer w <= theta*n with w^2 - 2*theta*n*w +
     // theta*d*n > 0, #codewords <= theta*d*n/(...) * q^n / V(n,w).
     // Multiplying through by q leaves the integer numerator below.
    Int vol = 0;
    for (unsigned long w = 0; Int(q) * w <= Int(q - 1) * n; ++w) {
      vol += binom_ui(n, w) * int_pow(q - 1, w);
      const Int denom = Int(q) * w * w - 2 * Int(q - 1) * n * w + Int(q - 1) * d * n;
      if (denom <= 0) continue;
      Rat M(Int(q - 1) * d * n * int_pow(q, n), denom * vol);
      M.canonicalize();
      if (M < 1) continue;  // vacuous against M >= 1; tighter bounds cover this
      const unsigned long k = floor_log(q, M);
      if (k < best) best = k;
    }
  }

  return best;
}

Int maximize_convex_sum(const Int& a, const Int& b, const Int& c, const Int& B,
                        unsigned ell) {
  if (a < 1 || b < a || B < c * a || B > c * b)
    throw std::invalid_argument("maximize_convex_sum: infeasible parameters");
  const Int fa = int_pow(a, ell);
  if (a == b) return c * fa;
  Int steps;
  mpz_cdiv_q(steps.get_mpz_t(), Int(B - c * a).get_mpz_t(), Int(b - a).get_mpz_t());
  return steps * (int_pow(b, ell) - fa) + c * fa;
}

Rat maximize_convex_sum_loose(const Int& a, const Int& b, const Int& c,
                              const Int& B, unsigned ell) {
  if (a < 1 || b < a || B < c * a || B > c * b)
    throw std::invalid_argument("maximize_convex_sum: infeasible parameters");
  const Int fa = int_pow(a, ell);
  if (a == b) return Rat(c * fa);
  Rat steps(B - c * a, b - a);
  steps.canonicalize();
  return (steps + 1) * Rat(int_pow(b, ell) - fa) + Rat(c * fa);
}

Int rank_count(unsigned ell, unsigned t, unsigned s, unsigned q) {
  if (s > ell || s > t) throw std::invalid_argument("rank_count: s > min(ell,t)");
  Int num = 1;
  const Int ql = int_pow(q, ell), qt = int_pow(q, t), qs = int_pow(q, s);
  for (unsigned i = 0; i < s; ++i) {
    const Int qi = int_pow(q, i);
    num *= (ql - qi) * (qt - qi);
  }
  for (unsigned i = 0; i < s; ++i) {
    const Int di = qs - int_pow(q, i);
    Int quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), di.get_mpz_t());
    assert(rem == 0);
    num = quot;
  }
  return num;
}

Int rank_count_no_zero_cols(unsigned ell, unsigned t, unsigned s, unsigned q) {
  if (s > ell || s > t) return 0;
  Int total = 0;
  for (unsigned j = 0; j + s <= t; ++j) {
    const Int term = binom_ui(t, j) * rank_count(ell, t - j, s, q);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

Int bad_matrix_count(unsigned q, unsigned ell, unsigned t, unsigned xi) {
  if (xi < 1 || xi > t) throw std::invalid_argument("bad_matrix_count: xi out of range");
  const Int ql = int_pow(q, ell);
  const Int classes = (ql - 1) / (q - 1);
  Int z = 0;
  for (unsigned j = 1; j <= t / xi; ++j) {
    // D^xi_j: choose xi columns for each of j classes, fill them with the
    // q-1 scalings of the class representative, and keep every remaining
    // column outside all j chosen classes.  The last factor counts nonzero
    // vectors avoiding j whole classes: q^ell - 1 - j(q-1).
    Int positions = 1;
    for (unsigned z2 = 0; z2 < j; ++z2) positions *= binom_ui(t - z2 * xi, xi);
    const Int d_j = positions * int_pow(q - 1, (unsigned long)j * xi) *
                    int_pow(ql - 1 - Int(j) * (q - 1), t - (unsigned long)j * xi);
    const Int term = binom(classes, j) * d_j;
    z += (j % 2 == 1) ? term : -term;
  }
  return z;
}

Rat row_membership_bound(unsigned q, unsigned ell, unsigned n, unsigned long k,
                         const Int& A_n) {
  const Int qk = int_pow(q, k);
  const Int ql = int_pow(q, ell);
  const Int num = int_pow(qk, ell) * (q - 1) - (ql - 1) * (qk - 1 - A_n) - (q - 1);
  Rat r(num, Int(q - 1) * int_pow(ql - 1, n));
  r.canonicalize();
  return r;
}

Rat row_membership_bound_simple(unsigned q, unsigned ell, unsigned n,
                                unsigned long k) {
  const Int ql = int_pow(q, ell);
  Rat r(int_pow(Int(q), k * ell) - 1, int_pow(ql - 1, n));
  r.canonicalize();
  return r;
}

}  // namespace ialt::counting
