#include <ialt/bounds.hpp>

#include <ialt/codes.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace ialt::bounds {

namespace {

using counting::b_sum;
using counting::b_total;
using counting::bad_matrix_count;
using counting::binom_ui;
using counting::int_pow;
using counting::k_opt;
using counting::maximize_convex_sum;
using counting::maximize_convex_sum_loose;
using counting::rank_count_no_zero_cols;

BoundValue make_value(BoundKind kind, Rat v) {
  BoundValue b;
  b.kind = kind;
  b.log10 = log10_of(v);
  if (v < 0) v = 0;
  if (v > 1) v = 1;
  b.p_exact = std::move(v);
  return b;
}

BoundValue not_applicable(BoundKind kind) {
  BoundValue b;
  b.kind = kind;
  b.applicable = false;
  b.log10 = std::numeric_limits<double>::quiet_NaN();
  return b;
}

// Shared skeleton of the alternant unsuccess bounds: per-weight terms
//   C(t,w) / ((q^m-1)(q^ell-1)^w) * bracket(w)
// summed over w = d-t .. t, where bracket is the majorized count of error
// matrices defeated by some weight-w combining vector.
template <typename Bracket>
BoundValue alternant_sum(BoundKind kind, const CodeParams& p,
                         Bracket bracket) {
  if (p.t > max_radius(p.d, p.ell)) return make_value(kind, Rat(1));
  if (p.d > 2 * p.t) return make_value(kind, Rat(0));
  const Int qm1 = int_pow(p.q, p.m) - 1;
  const Int qell1 = int_pow(p.q, p.ell) - 1;
  Rat sum(0);
  for (unsigned w = p.d - p.t; w <= p.t; ++w) {
    Rat coeff(binom_ui(p.t, w));
    coeff /= Rat(qm1 * int_pow(qell1, w));
    sum += coeff * bracket(w);
  }
  return make_value(kind, sum);
}

struct WeightTerms {
  Int a, b, c, B, Bww;
};

// a_off is the exponent offset in a_w = max{1, q^(w - a_off)}: (d-t-1)m for
// the full bound, (d-t)m for the simplified variant.
WeightTerms weight_terms(const CodeParams& p, unsigned w, KoptMode mode,
                         unsigned a_off) {
  const unsigned dt = p.d - p.t;
  WeightTerms T;
  T.a = w > a_off ? int_pow(p.q, w - a_off) : Int(1);
  const unsigned long k = mode == KoptMode::singleton
                              ? w - dt + 1
                              : k_opt(p.q, w, dt);
  T.b = int_pow(p.q, k);
  T.c = int_pow(int_pow(p.q, p.m) - 1, w);
  T.B = b_total(w, dt, p.q, p.m);
  T.Bww = b_sum(w, dt, w, p.q, p.m);
  return T;
}

Rat majorant(const WeightTerms& T, unsigned ell, bool loose) {
  return loose ? maximize_convex_sum_loose(T.a, T.b, T.c, T.B, ell)
               : Rat(maximize_convex_sum(T.a, T.b, T.c, T.B, ell));
}

}  // namespace

double log10_of(const Rat& x) {
  if (sgn(x) <= 0) return -std::numeric_limits<double>::infinity();
  signed long ne = 0, de = 0;
  const double nd = mpz_get_d_2exp(&ne, x.get_num().get_mpz_t());
  const double dd = mpz_get_d_2exp(&de, x.get_den().get_mpz_t());
  const double lg2 = 0.30102999566398119521;
  return (std::log10(nd) + static_cast<double>(ne) * lg2) -
         (std::log10(dd) + static_cast<double>(de) * lg2);
}

BoundValue lb_rs(const CodeParams& p) {
  // Radius comparison kept rational: t <= ell*(d-1)/(ell+1).
  if (static_cast<unsigned long>(p.t) * (p.ell + 1) >
      static_cast<unsigned long>(p.ell) * (p.d - 1))
    return make_value(BoundKind::LRs, Rat(1));
  const Int qm = int_pow(p.q, p.m);
  const Int qml = int_pow(qm, p.ell);
  // (q^{m ell} - q^{-m}) / (q^{m ell} - 1), numerator cleared by q^m.
  Rat ratio(qml * qm - 1);
  ratio /= Rat(qm * (qml - 1));
  Rat v(1);
  for (unsigned i = 0; i < p.t; ++i) v *= ratio;
  const unsigned long e =
      static_cast<unsigned long>(p.ell) * (p.d - 1) -
      static_cast<unsigned long>(p.t) * (p.ell + 1);
  v /= Rat((qm - 1) * int_pow(qm, e));
  return make_value(BoundKind::LRs, v);
}

BoundValue lb_alternant(const CodeParams& p, KoptMode mode, bool loose) {
  const BoundKind kind =
      mode == KoptMode::singleton ? BoundKind::LA1 : BoundKind::LA;
  const Int proj = (int_pow(p.q, p.ell) - 1) / (p.q - 1);
  return alternant_sum(kind, p, [&](unsigned w) -> Rat {
    const WeightTerms T = weight_terms(p, w, mode, (p.d - p.t - 1) * p.m);
    // proj * (c + B_{w,d-t,w} - B_{w,d-t}) deducts, per restriction code,
    // the nonzero words of weight below w; it is never positive.
    return Rat(proj * (T.c + T.Bww - T.B) - T.c) + majorant(T, p.ell, loose);
  });
}

BoundValue lb_alternant_simple(const CodeParams& p, bool loose) {
  return alternant_sum(BoundKind::LA2, p, [&](unsigned w) -> Rat {
    const WeightTerms T = weight_terms(p, w, KoptMode::full, (p.d - p.t) * p.m);
    return Rat(-T.c) + majorant(T, p.ell, loose);
  });
}

BoundValue lb_high_order(const CodeParams& p) {
  if (p.ell < p.t) return not_applicable(BoundKind::LT);
  if (p.t > max_radius(p.d, p.ell)) return make_value(BoundKind::LT, Rat(1));
  if (2 * p.t + 2 <= p.d) return make_value(BoundKind::LT, Rat(0));
  Int good(0);
  for (unsigned s = 2 * p.t + 2 - p.d; s <= p.t; ++s)
    good += rank_count_no_zero_cols(p.ell, p.t, s, p.q);
  Rat v(good);
  v /= Rat(int_pow(int_pow(p.q, p.ell) - 1, p.t));
  return make_value(BoundKind::LT, Rat(1) - v);
}

BoundValue ub_success(const CodeParams& p) {
  if (p.d > 2 * p.t) return make_value(BoundKind::U, Rat(0));
  Int best(0);
  for (unsigned xi = std::max(1u, p.d - p.t); xi <= p.t; ++xi)
    best = std::max(best, bad_matrix_count(p.q, p.ell, p.t, xi));
  Rat v(best);
  v /= Rat(int_pow(int_pow(p.q, p.ell) - 1, p.t));
  return make_value(BoundKind::U, v);
}

BoundValue misc_bound(const CodeParams& p) {
  const Int Q = int_pow(p.q, p.ell);
  const unsigned tmax = max_radius(p.d, p.ell);
  const unsigned rho_hi = std::min(p.t, tmax);
  const unsigned w_hi = std::min(p.t + tmax, p.n);
  Int num(0);
  for (unsigned w = p.d; w <= w_hi; ++w) {
    Int inner(0);
    for (unsigned rho = 0; rho <= rho_hi; ++rho)
      inner += config_count(Q, p.n, p.t, w, rho);
    num += weight_enum_bound(p.n, p.d, w, Q) * inner;
  }
  Rat v(num);
  v /= Rat(binom_ui(p.n, p.t) * int_pow(Q - 1, p.t));
  return make_value(BoundKind::M, v);
}

BoundValue asymptotic_high_order(const CodeParams& p) {
  if (p.ell < p.t) return not_applicable(BoundKind::Asymptotic);
  const long e = (static_cast<long>(p.ell) + p.d - 1 - 2L * p.t) *
                 (static_cast<long>(p.d) - 1 - p.t);
  if (e <= 0) return make_value(BoundKind::Asymptotic, Rat(1));
  Rat v(1);
  v /= Rat(int_pow(p.q, static_cast<unsigned long>(e)));
  return make_value(BoundKind::Asymptotic, v);
}

Int weight_enum_bound(unsigned n, unsigned d, unsigned w, const Int& Q) {
  if (w == 0) return 1;
  if (w > n) return 0;
  if (2 * w < d) return 1;
  // Johnson: theta*d*n / (w^2 - theta*n*(2w-d)) with theta = (Q-1)/Q,
  // cleared by Q.
  const Int denom = Q * w * w - (Q - 1) * n * (2 * w - d);
  if (denom > 0) return (Q - 1) * d * n / denom;
  return Int(n) * (Q - 1) * weight_enum_bound(n - 1, d, w - 1, Q) / w;
}

Int config_count(const Int& Q, unsigned n, unsigned t, unsigned w,
                 unsigned rho) {
  if (w > n || rho > t + w) return 0;
  const unsigned tw = t + w - rho;
  Int total(0);
  // i = size of the support overlap; 2i - tw positions of the overlap
  // disagree with the fixed word, tw - i of them agree.
  for (unsigned i = (tw + 1) / 2; i <= tw; ++i) {
    if (i > w || i > t || t - i > n - w) continue;
    total += binom_ui(w, i) * binom_ui(i, 2 * i - tw) *
             binom_ui(n - w, t - i) * int_pow(Q - 2, 2 * i - tw) *
             int_pow(Q - 1, t - i);
  }
  return total;
}

}  // namespace ialt::bounds
