#include "solenoid/intmat.hpp"

#include <algorithm>

#include "solenoid/errors.hpp"

namespace solenoid::intmat {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) throw PreconditionError("Mat: empty row list");
  Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols())
      throw PreconditionError("Mat: ragged row list");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::operator*(const Mat& other) const {
  if (cols_ != other.rows_) throw PreconditionError("Mat: dimension mismatch in product");
  Mat r(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < other.cols_; ++j) r.at(i, j) += aik * other.at(k, j);
    }
  return r;
}

std::vector<Int> Mat::operator*(const std::vector<Int>& v) const {
  if (cols_ != static_cast<int>(v.size()))
    throw PreconditionError("Mat: dimension mismatch in matrix-vector product");
  std::vector<Int> r(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

Mat Mat::transposed() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Int det(const Mat& m) {
  if (m.rows() != m.cols()) throw PreconditionError("det: matrix not square");
  int n = m.rows();
  Mat a = m;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

Int floordiv(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Mat hnf_rows(const Mat& m) {
  if (m.rows() != m.cols()) throw PreconditionError("hnf_rows: matrix not square");
  int n = m.rows();
  Mat h = m;
  for (int col = 0; col < n; ++col) {
    // Clear below the pivot with Euclidean row steps.
    for (int i = col + 1; i < n; ++i) {
      while (h.at(i, col) != 0) {
        if (h.at(col, col) == 0) {
          for (int j = 0; j < n; ++j) std::swap(h.at(col, j), h.at(i, j));
          continue;
        }
        Int q = floordiv(h.at(i, col), h.at(col, col));
        for (int j = 0; j < n; ++j) h.at(i, j) -= q * h.at(col, j);
        if (h.at(i, col) != 0)
          for (int j = 0; j < n; ++j) std::swap(h.at(col, j), h.at(i, j));
      }
    }
    if (h.at(col, col) == 0)
      throw PreconditionError("hnf_rows: matrix is singular");
    if (h.at(col, col) < 0)
      for (int j = 0; j < n; ++j) h.at(col, j) = -h.at(col, j);
    // Reduce the entries above the pivot.
    for (int i = 0; i < col; ++i) {
      Int q = floordiv(h.at(i, col), h.at(col, col));
      if (q != 0)
        for (int j = 0; j < n; ++j) h.at(i, j) -= q * h.at(col, j);
    }
  }
  return h;
}

std::vector<Int> smith_invariant_factors(Mat a) {
  if (a.rows() != a.cols()) throw PreconditionError("smith: matrix not square");
  int n = a.rows();
  std::vector<Int> factors;
  for (int s = 0; s < n; ++s) {
    bool lone = false;
    while (!lone) {
      // Move the smallest nonzero entry of the trailing block to (s,s).
      int bi = -1, bj = -1;
      for (int i = s; i < n; ++i)
        for (int j = s; j < n; ++j) {
          if (a.at(i, j) == 0) continue;
          if (bi < 0 || abs(a.at(i, j)) < abs(a.at(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi < 0) {
        // Entire trailing block vanished: matrix was singular.
        a.at(s, s) = 0;
        break;
      }
      if (bi != s)
        for (int j = 0; j < n; ++j) std::swap(a.at(s, j), a.at(bi, j));
      if (bj != s)
        for (int i = 0; i < n; ++i) std::swap(a.at(i, s), a.at(i, bj));

      bool changed = false;
      for (int i = s + 1; i < n; ++i) {
        if (a.at(i, s) == 0) continue;
        Int q = a.at(i, s) / a.at(s, s);
        for (int j = 0; j < n; ++j) a.at(i, j) -= q * a.at(s, j);
        if (a.at(i, s) != 0) changed = true;
      }
      for (int j = s + 1; j < n; ++j) {
        if (a.at(s, j) == 0) continue;
        Int q = a.at(s, j) / a.at(s, s);
        for (int i = 0; i < n; ++i) a.at(i, j) -= q * a.at(i, s);
        if (a.at(s, j) != 0) changed = true;
      }
      if (changed) continue;

      lone = true;
      // Divisibility fix-up: fold in any entry the pivot does not divide.
      for (int i = s + 1; i < n && lone; ++i)
        for (int j = s + 1; j < n && lone; ++j) {
          if (a.at(i, j) % a.at(s, s) != 0) {
            for (int jj = 0; jj < n; ++jj) a.at(s, jj) += a.at(i, jj);
            lone = false;
          }
        }
    }
    if (a.at(s, s) < 0)
      for (int j = 0; j < n; ++j) a.at(s, j) = -a.at(s, j);
    factors.push_back(a.at(s, s));
  }
  return factors;
}

std::vector<Int> reduce_mod_hnf(const Mat& h, std::vector<Int> v) {
  int n = h.rows();
  if (static_cast<int>(v.size()) != n)
    throw PreconditionError("reduce_mod_hnf: dimension mismatch");
  // Upper-triangular rows: clearing coordinates front to back visits each
  // row combination exactly once, so the box of residues is a fundamental
  // domain and the result is canonical.
  for (int i = 0; i < n; ++i) {
    Int q = floordiv(v[i], h.at(i, i));
    if (q != 0)
      for (int j = i; j < n; ++j) v[j] -= q * h.at(i, j);
  }
  return v;
}

bool columns_contained(const Mat& a, const Mat& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw PreconditionError("columns_contained: dimension mismatch");
  int n = a.rows();
  // Solve a * X = b over the rationals; containment iff X is integral.
  std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      aug[i][j] = Rat(a.at(i, j));
      aug[i][n + j] = Rat(b.at(i, j));
    }
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (aug[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw PreconditionError("columns_contained: singular matrix");
    std::swap(aug[col], aug[pivot]);
    Rat p = aug[col][col];
    for (int j = col; j < 2 * n; ++j) aug[col][j] /= p;
    for (int i = 0; i < n; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      Rat f = aug[i][col];
      for (int j = col; j < 2 * n; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (denominator(aug[i][n + j]) != 1) return false;
  return true;
}

}  // namespace solenoid::intmat
