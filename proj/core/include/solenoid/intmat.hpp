#pragma once

#include <vector>

#include "solenoid/numeric.hpp"

namespace solenoid::intmat {

/// Dense integer matrix with arbitrary-precision entries.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}
  static Mat identity(int n);
  static Mat from_rows(const std::vector<std::vector<Int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

  Mat operator*(const Mat& other) const;
  std::vector<Int> operator*(const std::vector<Int>& v) const;
  bool operator==(const Mat& other) const { return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_; }

  Mat transposed() const;

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

/// Determinant by fraction-free (Bareiss) elimination.
Int det(const Mat& m);

/// Row-style Hermite normal form of a full-rank square matrix whose rows
/// span the lattice: upper triangular, positive diagonal, entries above
/// each pivot reduced modulo it.
Mat hnf_rows(const Mat& m);

/// Smith normal form invariant factors d_1 | d_2 | ... | d_n (positive).
std::vector<Int> smith_invariant_factors(Mat m);

/// Canonical coset representative of v modulo the row span of the HNF h.
std::vector<Int> reduce_mod_hnf(const Mat& h, std::vector<Int> v);

/// Whether every column of b lies in the lattice spanned by the columns
/// of a (both square, a nonsingular): checks a^{-1} b integral exactly.
bool columns_contained(const Mat& a, const Mat& b);

}  // namespace solenoid::intmat
