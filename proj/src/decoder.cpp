#include "ialt/decoder.hpp"

#include <algorithm>
#include <cassert>

namespace ialt {
namespace {

// Stacked key system for trial weight t.  Block i, row r (0-indexed) reads
//   sum_c S[i][r+c] x[c] = S[i][t+r],   x = (L_t, ..., L_1),
// i.e. the Hankel window of each syndrome row, all rows sharing the unknowns.
void build_key_system(const Mat& S, std::size_t t, Mat& A, std::vector<Felt>& b) {
  const std::size_t ell = S.rows, red = S.cols;
  const std::size_t rows_per = red > t ? red - t : 0;
  A = Mat(ell * rows_per, t);
  b.assign(ell * rows_per, 0);
  for (std::size_t i = 0; i < ell; ++i)
    for (std::size_t r = 0; r < rows_per; ++r) {
      for (std::size_t c = 0; c < t; ++c) A.at(i * rows_per + r, c) = S.at(i, r + c);
      b[i * rows_per + r] = S.at(i, t + r);
    }
}

// Canonical value computation: one shared coefficient matrix, one augmented
// column per interleaved row, reduced together.  The coefficient columns are
// independent (distinct nonzero locators, nonzero multipliers), so pivots
// confined to them mean every row's system is consistent and the solution is
// read straight off the pivot rows.
std::optional<Mat> solve_values(const std::vector<std::size_t>& positions,
                                const Mat& S, const AlternantCode& code) {
  const Field& F = code.field();
  const std::size_t t = positions.size(), red = code.d() - 1, ell = S.rows;
  Mat aug(red, t + ell);
  for (std::size_t k = 0; k < t; ++k) {
    Felt p = code.grs.v[positions[k]];
    for (std::size_t r = 0; r < red; ++r) {
      aug.at(r, k) = p;
      p = F.mul(p, code.grs.alpha[positions[k]]);
    }
  }
  for (std::size_t i = 0; i < ell; ++i)
    for (std::size_t r = 0; r < red; ++r) aug.at(r, t + i) = S.at(i, r);
  std::vector<std::size_t> pivots = rref(F, aug);
  if (pivots.size() != t || (t > 0 && pivots.back() >= t)) return std::nullopt;
  Mat V(ell, t);
  for (std::size_t i = 0; i < ell; ++i)
    for (std::size_t k = 0; k < t; ++k) V.at(i, k) = aug.at(k, t + i);
  return V;
}

std::optional<Mat> forney_values(const std::vector<Felt>& lambda,
                                 const std::vector<std::size_t>& positions,
                                 const Mat& S, const AlternantCode& code) {
  const Field& F = code.field();
  const std::size_t t = positions.size(), red = code.d() - 1, ell = S.rows;

  // Characteristic 2: the formal derivative keeps odd-degree terms only.
  std::vector<Felt> dlambda(t, 0);
  for (std::size_t u = 1; u < lambda.size(); u += 2) dlambda[u - 1] = lambda[u];

  // Per-position constants: x_k = 1/alpha_{j_k}, scale_k = alpha_{j_k} /
  // (v_{j_k} Lambda'(x_k)).
  std::vector<Felt> xs(t), scale(t);
  for (std::size_t k = 0; k < t; ++k) {
    const Felt aj = code.grs.alpha[positions[k]];
    xs[k] = F.inv(aj);
    const Felt dl = F.eval_poly(dlambda, xs[k]);
    if (dl == 0) return std::nullopt;  // repeated root; unreachable after the distinct-roots check
    scale[k] = F.div(aj, F.mul(code.grs.v[positions[k]], dl));
  }

  Mat V(ell, t);
  std::vector<Felt> omega(red);
  for (std::size_t i = 0; i < ell; ++i) {
    std::fill(omega.begin(), omega.end(), 0);
    for (std::size_t r = 0; r < red; ++r) {
      const Felt s = S.at(i, r);
      if (s == 0) continue;
      for (std::size_t u = 0; u < lambda.size() && r + u < red; ++u)
        if (lambda[u]) omega[r + u] = Field::add(omega[r + u], F.mul(s, lambda[u]));
    }
    for (std::size_t k = 0; k < t; ++k)
      V.at(i, k) = F.mul(scale[k], F.eval_poly(omega, xs[k]));
  }
  return V;
}

}  // namespace

std::string to_string(FailReason r) {
  switch (r) {
    case FailReason::NoConsistentT: return "NoConsistentT";
    case FailReason::NonUniqueSolution: return "NonUniqueSolution";
    case FailReason::RootCountMismatch: return "RootCountMismatch";
    case FailReason::RootNotALocator: return "RootNotALocator";
    case FailReason::NoErrorValues: return "NoErrorValues";
    case FailReason::NonSubfieldSolution: return "NonSubfieldSolution";
  }
  return "unknown";
}

Mat syndromes(const Mat& R, const AlternantCode& code) {
  const Field& F = code.field();
  const std::size_t n = code.n(), red = code.d() - 1;
  if (R.rows == 0 || R.cols != n) throw std::invalid_argument("received matrix shape");
  if (!subfield_entries(F, R)) throw std::invalid_argument("received entry outside the subfield");
  Mat S(R.rows, red);
  for (std::size_t i = 0; i < R.rows; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Felt rij = R.at(i, j);
      if (rij == 0) continue;
      Felt p = F.mul(rij, code.grs.v[j]);
      for (std::size_t r = 0; r < red; ++r) {
        S.at(i, r) = Field::add(S.at(i, r), p);
        p = F.mul(p, code.grs.alpha[j]);
      }
    }
  return S;
}

DecodeOutcome decode(const Mat& R, const AlternantCode& code, DecodeOptions options) {
  const Field& F = code.field();
  const Mat S = syndromes(R, code);

  if (std::all_of(S.a.begin(), S.a.end(), [](Felt x) { return x == 0; })) {
    DecodeOutcome out;
    out.ok = true;
    out.codeword = R;
    out.error = Mat(R.rows, R.cols);
    return out;
  }

  const std::size_t ell = R.rows, d = code.d(), n = code.n();
  const std::size_t tmax = max_radius(d, ell);
  const auto fail = [](FailReason r) {
    DecodeOutcome out;
    out.reason = r;
    return out;
  };

  for (std::size_t t = 1; t <= tmax; ++t) {
    // Fewer equations than unknowns can never pin t locators; vacuous below
    // the radius cap, kept as a guard.
    if (ell * (d - 1 - t) < t) continue;

    Mat A;
    std::vector<Felt> b;
    build_key_system(S, t, A, b);
    const LinearSolution sol = solve(F, A, b);
    if (!sol.consistent) continue;
    if (sol.rank < t) return fail(FailReason::NonUniqueSolution);

    // Locator polynomial 1 + L_1 x + ... + L_t x^t; its roots are the
    // inverses of the error locators.
    std::vector<Felt> lambda(t + 1);
    lambda[0] = 1;
    for (std::size_t u = 1; u <= t; ++u) lambda[u] = sol.x[t - u];

    std::vector<std::size_t> positions;
    for (std::size_t j = 0; j < n; ++j)
      if (F.eval_poly(lambda, F.inv(code.grs.alpha[j])) == 0) positions.push_back(j);

    if (positions.size() != t) {
      // Full-length codes use every nonzero element as a locator and 0 is
      // never a root (Lambda(0) = 1), so the field holds no further roots.
      if (n == F.order()) return fail(FailReason::RootCountMismatch);
      std::size_t roots = 0;
      for (std::size_t e = 0; e < F.order(); ++e)
        if (F.eval_poly(lambda, F.exp(e)) == 0) ++roots;
      return fail(roots == t ? FailReason::RootNotALocator
                             : FailReason::RootCountMismatch);
    }

    const std::optional<Mat> values =
        options.fast_error_values ? forney_values(lambda, positions, S, code)
                                  : solve_values(positions, S, code);
    if (!values) return fail(FailReason::NoErrorValues);

    DecodeOutcome out;
    out.ok = true;
    out.t_star = t;
    out.error = Mat(ell, n);
    for (std::size_t k = 0; k < t; ++k)
      for (std::size_t i = 0; i < ell; ++i)
        out.error.at(i, positions[k]) = values->at(i, k);
    out.codeword = R;
    for (std::size_t idx = 0; idx < out.codeword.a.size(); ++idx)
      out.codeword.a[idx] = Field::add(out.codeword.a[idx], out.error.a[idx]);
    if (options.strict_subfield && !subfield_entries(F, out.codeword))
      return fail(FailReason::NonSubfieldSolution);
    return out;
  }
  return fail(FailReason::NoConsistentT);
}

std::optional<Mat> error_values(const std::vector<std::size_t>& positions,
                                const Mat& S, const AlternantCode& code) {
  return solve_values(positions, S, code);
}

std::optional<Mat> error_values_forney(const std::vector<std::size_t>& positions,
                                       const Mat& S, const AlternantCode& code) {
  const Field& F = code.field();
  std::vector<Felt> lambda{1};
  for (std::size_t j : positions) {
    // Multiply by (1 + alpha_j x); minus is plus in characteristic 2.
    lambda.push_back(0);
    for (std::size_t u = lambda.size() - 1; u >= 1; --u)
      lambda[u] = Field::add(lambda[u], F.mul(code.grs.alpha[j], lambda[u - 1]));
  }
  return forney_values(lambda, positions, S, code);
}

Verdict classify(const DecodeOutcome& outcome, const Mat& C) {
  if (!outcome.ok) return Verdict::Failure;
  return outcome.codeword == C ? Verdict::Success : Verdict::Miscorrection;
}

bool rank_condition(const Mat& E_restricted,
                    const std::vector<std::size_t>& support,
                    const AlternantCode& code, std::size_t t) {
  assert(E_restricted.cols == t && support.size() == t);
  const Field& F = code.field();
  const std::size_t red = code.d() - 1, ell = E_restricted.rows;
  // Syndrome sheet of the bare error: S[i][r] = sum_k E[i][k] v_{j_k} a_{j_k}^r.
  Mat S(ell, red);
  for (std::size_t k = 0; k < t; ++k) {
    const Felt a = code.grs.alpha[support[k]];
    Felt p = code.grs.v[support[k]];
    for (std::size_t r = 0; r < red; ++r) {
      for (std::size_t i = 0; i < ell; ++i) {
        const Felt e = E_restricted.at(i, k);
        if (e) S.at(i, r) = Field::add(S.at(i, r), F.mul(e, p));
      }
      p = F.mul(p, a);
    }
  }
  Mat A;
  std::vector<Felt> b;
  build_key_system(S, t, A, b);
  return rank(F, A) < t;
}

bool crux_condition(const Mat& E_restricted,
                    const std::vector<std::size_t>& support,
                    const AlternantCode& code, std::size_t t) {
  assert(E_restricted.cols == t && support.size() == t);
  const Field& F = code.field();
  const std::size_t d = code.d(), ell = E_restricted.rows;
  // diag(u) pulls one unknown per support column; row (i, r) of the system is
  // sum_k a_{j_k}^r E[i][k] u_k = 0, r up to the redundancy of a
  // designed-distance-(d-t) code.  Nontrivial kernel <=> rank < t.
  const std::size_t rows_per = d > t + 1 ? d - t - 1 : 0;
  Mat M(ell * rows_per, t);
  for (std::size_t k = 0; k < t; ++k) {
    Felt p = 1;
    for (std::size_t r = 0; r < rows_per; ++r) {
      for (std::size_t i = 0; i < ell; ++i)
        M.at(i * rows_per + r, k) = F.mul(p, E_restricted.at(i, k));
      p = F.mul(p, code.grs.alpha[support[k]]);
    }
  }
  return rank(F, M) < t;
}

}  // namespace ialt
