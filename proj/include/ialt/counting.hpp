#pragma once

#include <gmpxx.h>

namespace ialt::counting {

// Exact arbitrary-precision arithmetic end to end: the probabilities these
// feed reach 1e-320 and beyond, outside double range.
using Int = mpz_class;
using Rat = mpq_class;

Int int_pow(const Int& base, unsigned long e);
Int binom_ui(unsigned long n, unsigned long k);
// Generalized binomial C(x, j) by falling factorial; x any integer.
Int binom(const Int& x, unsigned long j);

// Weight enumerator A_w of an MDS code of length n and distance d over a
// field of size Q: A_0 = 1, A_w = 0 for 0 < w < d, else
// C(n,w) * sum_{j=0}^{w-d} (-1)^j C(w,j) (Q^{w-d+1-j} - 1).
Int mds_weight_enum(unsigned n, unsigned d, unsigned w, const Int& Q);

// b_sum = A_w^MDS(n,d,q^m) * (q^m-1)^{n-w} * (q-1)^w; b_total sums over w.
Int b_sum(unsigned n, unsigned d, unsigned w, unsigned q, unsigned m);
Int b_total(unsigned n, unsigned d, unsigned q, unsigned m);

// Upper bound on the dimension of a q-ary linear code of length n and
// minimum distance d: min of Singleton, Griesmer, Hamming, Plotkin (where
// applicable) and Elias-Bassalygo, each floored to a dimension via log_q.
unsigned long k_opt(unsigned q, unsigned long n, unsigned long d);

// Majorant of max { sum_u f(M_u) : c values in [a,b], sum <= B } for
// f(x) = x^ell: ceil((B-ca)/(b-a)) * (f(b)-f(a)) + c*f(a), and c*f(a) when
// a = b.  The loose variant replaces the ceiling with (B-ca)/(b-a) + 1
// (the weaker closed form; for a = b it degenerates to the same c*f(a)).
Int maximize_convex_sum(const Int& a, const Int& b, const Int& c, const Int& B,
                        unsigned ell);
Rat maximize_convex_sum_loose(const Int& a, const Int& b, const Int& c,
                              const Int& B, unsigned ell);

// M(ell,t,s): number of ell x t matrices over F_q of rank s.
Int rank_count(unsigned ell, unsigned t, unsigned s, unsigned q);

// N(ell,t,s): as rank_count but restricted to matrices without zero columns.
Int rank_count_no_zero_cols(unsigned ell, unsigned t, unsigned s, unsigned q);

// Z^xi: number of full-support ell x t matrices over F_q in which some
// projective class of column values has multiplicity exactly xi.
Int bad_matrix_count(unsigned q, unsigned ell, unsigned t, unsigned xi);

// Upper bound on Pr{ all ell rows of a uniform no-zero-column matrix lie in
// a fixed [n,k] q-ary code with A_n full-weight codewords }, and the
// simplified (q^{k*ell}-1)/(q^ell-1)^n form.
Rat row_membership_bound(unsigned q, unsigned ell, unsigned n, unsigned long k,
                         const Int& A_n);
Rat row_membership_bound_simple(unsigned q, unsigned ell, unsigned n,
                                unsigned long k);

}  // namespace ialt::counting
