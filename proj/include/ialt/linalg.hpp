#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ialt/gf.hpp"

namespace ialt {

// Dense row-major matrix over a Field (or any subfield of it, since subfields
// are closed under the operations row reduction performs).
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Felt> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  Felt& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  Felt at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  bool operator==(const Mat&) const = default;
};

Mat identity(std::size_t n);
Mat transpose(const Mat& A);
Mat mat_mul(const Field& F, const Mat& A, const Mat& B);
std::vector<Felt> mat_vec(const Field& F, const Mat& A, std::span<const Felt> x);

// In-place reduced row echelon form; returns the pivot column indices in
// increasing order (their count is the rank).
std::vector<std::size_t> rref(const Field& F, Mat& A);
std::size_t rank(const Field& F, Mat A);

struct LinearSolution {
  bool consistent = false;
  bool unique = false;
  std::size_t rank = 0;
  std::vector<Felt> x;  // particular solution with free variables set to 0
};

// Solves A x = b by row reduction of the augmented matrix.
LinearSolution solve(const Field& F, const Mat& A, std::span<const Felt> b);

// Rows form an RREF basis of {x : A x = 0}; 0 rows when the kernel is trivial.
Mat kernel_basis(const Field& F, const Mat& A);

}  // namespace ialt
