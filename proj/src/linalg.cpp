#include "ialt/linalg.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace ialt {

Mat identity(std::size_t n) {
  Mat I(n, n);
  for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

Mat transpose(const Mat& A) {
  Mat T(A.cols, A.rows);
  for (std::size_t r = 0; r < A.rows; ++r)
    for (std::size_t c = 0; c < A.cols; ++c) T.at(c, r) = A.at(r, c);
  return T;
}

Mat mat_mul(const Field& F, const Mat& A, const Mat& B) {
  if (A.cols != B.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  Mat C(A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t k = 0; k < A.cols; ++k) {
      const Felt aik = A.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < B.cols; ++j)
        C.at(i, j) = Field::add(C.at(i, j), F.mul(aik, B.at(k, j)));
    }
  return C;
}

std::vector<Felt> mat_vec(const Field& F, const Mat& A, std::span<const Felt> x) {
  if (A.cols != x.size()) throw std::invalid_argument("mat_vec: shape mismatch");
  std::vector<Felt> y(A.rows, 0);
  for (std::size_t r = 0; r < A.rows; ++r) {
    Felt acc = 0;
    for (std::size_t c = 0; c < A.cols; ++c) acc = Field::add(acc, F.mul(A.at(r, c), x[c]));
    y[r] = acc;
  }
  return y;
}

std::vector<std::size_t> rref(const Field& F, Mat& A) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < A.cols && r < A.rows; ++c) {
    std::size_t p = r;
    while (p < A.rows && A.at(p, c) == 0) ++p;
    if (p == A.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < A.cols; ++j) std::swap(A.at(p, j), A.at(r, j));
    const Felt s = F.inv(A.at(r, c));
    if (s != 1)
      for (std::size_t j = c; j < A.cols; ++j) A.at(r, j) = F.mul(A.at(r, j), s);
    for (std::size_t i = 0; i < A.rows; ++i) {
      if (i == r) continue;
      const Felt f = A.at(i, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < A.cols; ++j)
        A.at(i, j) = Field::add(A.at(i, j), F.mul(f, A.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Field& F, Mat A) { return rref(F, A).size(); }

LinearSolution solve(const Field& F, const Mat& A, std::span<const Felt> b) {
  if (A.rows != b.size()) throw std::invalid_argument("solve: shape mismatch");
  Mat aug(A.rows, A.cols + 1);
  for (std::size_t r = 0; r < A.rows; ++r) {
    for (std::size_t c = 0; c < A.cols; ++c) aug.at(r, c) = A.at(r, c);
    aug.at(r, A.cols) = b[r];
  }
  const auto pivots = rref(F, aug);
  LinearSolution sol;
  if (!pivots.empty() && pivots.back() == A.cols) return sol;  // 0 = nonzero row
  sol.consistent = true;
  sol.rank = pivots.size();
  sol.unique = sol.rank == A.cols;
  sol.x.assign(A.cols, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) sol.x[pivots[i]] = aug.at(i, A.cols);
  return sol;
}

Mat kernel_basis(const Field& F, const Mat& A) {
  Mat R = A;
  const auto pivots = rref(F, R);
  std::vector<bool> is_pivot(A.cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  Mat K(A.cols - pivots.size(), A.cols);
  std::size_t k = 0;
  for (std::size_t f = 0; f < A.cols; ++f) {
    if (is_pivot[f]) continue;
    K.at(k, f) = 1;
    // Characteristic 2: negation is the identity.
    for (std::size_t i = 0; i < pivots.size(); ++i) K.at(k, pivots[i]) = R.at(i, f);
    ++k;
  }
  rref(F, K);  // canonical form; rows stay a basis of the same space
  return K;
}

}  // namespace ialt
