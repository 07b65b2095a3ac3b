#pragma once

#include <ialt/counting.hpp>

namespace ialt::bounds {

using counting::Int;
using counting::Rat;

// One evaluation point: an ell-interleaved alternant code built from a
// GRS code of distance d over GF(q^m), hit by t column errors.
struct CodeParams {
  unsigned q = 2;    // base field size
  unsigned m = 1;    // extension degree
  unsigned n = 0;    // code length
  unsigned d = 0;    // designed distance of the constituent code
  unsigned ell = 1;  // interleaving order
  unsigned t = 0;    // number of error columns
};

enum class BoundKind { LRs, LA, LA1, LA2, LT, U, M, Asymptotic };

// Exact probability bound.  For the L.* and U kinds the stored value bounds
// the probability of unsuccessful decoding (1 - P_suc); for M it bounds the
// miscorrection probability.  log10 is taken before clamping, so magnitudes
// far below double range stay representable.
struct BoundValue {
  BoundKind kind = BoundKind::LRs;
  bool applicable = true;  // false when the hypothesis fails (e.g. ell < t)
  Rat p_exact;             // clamped to [0, 1]
  double log10 = 0;        // of the pre-clamp value; -inf at 0, NaN if inapplicable
};

// Which upper bound on the dimension of the restriction codes feeds the
// convex-sum majorant: the full k_opt minimum, or Singleton alone.
enum class KoptMode { full, singleton };

// log10 of an exact rational, computed from the numerator and denominator
// separately so values like 1e-3000 do not underflow; -inf for x <= 0.
double log10_of(const Rat& x);

// Unsuccess bound for the interleaved GRS code over GF(q^m) with errors
// drawn from the big field; trivial 1 beyond the rational radius
// ell*(d-1)/(ell+1).
BoundValue lb_rs(const CodeParams& p);

// Unsuccess bound for the interleaved alternant code (subfield error
// model).  loose switches the convex-sum majorant to its weaker closed
// form.  Trivial 1 beyond the decoding radius; exact 0 when 2t < d.
BoundValue lb_alternant(const CodeParams& p, KoptMode mode = KoptMode::full,
                        bool loose = false);

// Simplified variant: the per-w deduction terms are dropped, so the value
// is never below lb_alternant's.
BoundValue lb_alternant_simple(const CodeParams& p, bool loose = false);

// Unsuccess bound from the rank distribution of the error matrix; requires
// ell >= t, otherwise inapplicable.  Exact 0 when 2t - d + 2 <= 0.
BoundValue lb_high_order(const CodeParams& p);

// Lower bound on the unsuccess probability: the fraction of error matrices
// with d-t projectively equal columns, which provably defeat the decoder.
BoundValue ub_success(const CodeParams& p);

// Upper bound on the miscorrection probability of any decoder with the
// maximum-likelihood certificate property at radius floor(ell*(d-1)/(ell+1)).
BoundValue misc_bound(const CodeParams& p);

// Leading term q^{-(ell+d-1-2t)(d-1-t)} of the unsuccess probability for
// ell >= t as q grows; asymptotic only, never emitted in data tables.
BoundValue asymptotic_high_order(const CodeParams& p);

// Upper bound on the number of weight-w words in any length-n code over an
// alphabet of size Q whose nonzero words have pairwise distance >= d.
// Johnson bound where its denominator is positive, otherwise the descent
// A(n,d,w) <= floor(n*(Q-1)/w * A(n-1,d,w-1)), grounded at A = 1 once
// 2w < d (two distinct weight-w words differ in at most 2w places).
Int weight_enum_bound(unsigned n, unsigned d, unsigned w, const Int& Q);

// Number of weight-t length-n words over an alphabet of size Q at Hamming
// distance exactly rho from a fixed weight-w word.
Int config_count(const Int& Q, unsigned n, unsigned t, unsigned w,
                 unsigned rho);

}  // namespace ialt::bounds
