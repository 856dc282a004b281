#pragma once

#include <string>

#include "solenoid/numeric.hpp"

namespace solenoid::solv3 {

/// Unconstrained 2x2 integer matrix, row-major [[a,b],[c,d]].
struct Mat2 {
  Int a, b, c, d;
  Int trace() const { return a + d; }
  Int det() const { return a * d - b * c; }
  Mat2 operator*(const Mat2& o) const {
    return Mat2{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

/// Hyperbolic element of SL(2,Z): det 1 and |trace| > 2. The monodromy of
/// a torus bundle with Solv geometry.
class HypMatrix {
 public:
  HypMatrix(Int a, Int b, Int c, Int d);
  explicit HypMatrix(const Mat2& m) : HypMatrix(m.a, m.b, m.c, m.d) {}

  const Mat2& mat() const { return m_; }
  Int trace() const { return m_.trace(); }
  HypMatrix inverse() const;
  HypMatrix power(unsigned k) const;

  bool operator==(const HypMatrix& o) const { return m_ == o.m_; }

  /// Parses "a,b;c,d".
  static HypMatrix parse(const std::string& text);
  std::string to_string() const;

 private:
  Mat2 m_;
};

/// Real quadratic field Q(sqrt(d)), d squarefree >= 2.
struct QuadField {
  explicit QuadField(Int d_);
  Int d;
  bool operator==(const QuadField& o) const { return d == o.d; }
};

/// Algebraic integer (x + y sqrt(d))/2 of Q(sqrt(d)), stored as the twice-
/// coordinates (x, y). Half-integers occur only when d = 1 mod 4.
class QuadInt {
 public:
  QuadInt(Int d, Int twice_x, Int twice_y);
  static QuadInt one(const Int& d) { return QuadInt(d, 2, 0); }

  const Int& d() const { return d_; }
  const Int& twice_x() const { return x2_; }
  const Int& twice_y() const { return y2_; }

  Int norm() const;       // x^2 - d y^2, an integer for ring elements
  Int field_trace() const;  // 2x
  QuadInt conjugate() const { return QuadInt(d_, x2_, -y2_); }
  QuadInt operator*(const QuadInt& o) const;
  bool operator==(const QuadInt& o) const {
    return d_ == o.d_ && x2_ == o.x2_ && y2_ == o.y2_;
  }
  bool greater_than_one() const;
  double to_double() const;

  /// "(3+sqrt5)/2", "3+2sqrt2", "2+sqrt3".
  std::string to_string() const;

 private:
  Int d_, x2_, y2_;
};

/// Exact element u + v sqrt(d) with rational u, v (eigen-slopes).
struct QuadSurd {
  Rat u, v;
  Int d;
  std::string to_string() const;
};

struct EigenData {
  QuadInt lambda;          // dilatation, the eigenvalue > 1
  QuadInt lambda_inverse;  // its conjugate; lambda * lambda_inverse == 1
  QuadSurd expanding_slope;
  QuadSurd contracting_slope;
};

/// |trace| > 2; rejects matrices of determinant != 1.
bool is_hyperbolic(const Mat2& m);

/// Squarefree part of trace^2 - 4: the commensurability invariant.
QuadField field_invariant(const HypMatrix& A);

EigenData eigen_data(const HypMatrix& A);

/// Whether P A P^{-1} = B for some P in GL(2,Z). Decided through the cycle
/// equivalence of the fixed-point forms (c, d-a, -b): conjugation by SL(2,Z)
/// is proper equivalence of the form, and the det = -1 coset is covered by
/// comparing against diag(1,-1) A diag(1,-1). Trace mismatch short-circuits.
bool gl2z_conjugate(const HypMatrix& A, const HypMatrix& B);

/// Torus bundles are isometric iff A ~ B or A ~ B^{-1} in GL(2,Z).
bool isometric_bundles(const HypMatrix& A, const HypMatrix& B);

/// Commensurability is detected by the field invariant alone: both
/// dilatations are units > 1 of the same rank-1 unit group, hence some
/// powers coincide.
bool commensurable_bundles(const HypMatrix& A, const HypMatrix& B);

/// Smallest unit > 1 of the ring of integers, from the continued fraction
/// of sqrt(d) (or (1+sqrt(d))/2 when d = 1 mod 4). Norm is +-1.
QuadInt fundamental_unit(const QuadField& F);

/// Multiplication by the smallest totally positive power of the fundamental
/// unit (epsilon, or epsilon^2 when its norm is -1) on the basis {1, omega}:
/// a hyperbolic SL(2,Z) matrix whose field invariant is d again.
HypMatrix matrix_from_field(const QuadField& F);

}  // namespace solenoid::solv3
