#include "solenoid/solv3.hpp"

#include <cmath>
#include <sstream>

#include "solenoid/errors.hpp"
#include "solenoid/quadform.hpp"

namespace solenoid::solv3 {

HypMatrix::HypMatrix(Int a, Int b, Int c, Int d)
    : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  if (m_.det() != 1) throw PreconditionError("HypMatrix: determinant must be 1");
  if (abs(m_.trace()) <= 2) throw PreconditionError("HypMatrix: |trace| must exceed 2");
}

HypMatrix HypMatrix::inverse() const { return HypMatrix(m_.d, -m_.b, -m_.c, m_.a); }

HypMatrix HypMatrix::power(unsigned k) const {
  if (k == 0) throw PreconditionError("HypMatrix: zeroth power is not hyperbolic");
  Mat2 r = m_;
  for (unsigned i = 1; i < k; ++i) r = r * m_;
  return HypMatrix(r);
}

HypMatrix HypMatrix::parse(const std::string& text) {
  // "a,b;c,d"
  auto semi = text.find(';');
  if (semi == std::string::npos)
    throw PreconditionError("matrix literal must be 'a,b;c,d'");
  auto parse_row = [](const std::string& row) {
    auto comma = row.find(',');
    if (comma == std::string::npos)
      throw PreconditionError("matrix literal must be 'a,b;c,d'");
    try {
      return std::pair<Int, Int>(Int(row.substr(0, comma)), Int(row.substr(comma + 1)));
    } catch (const std::exception&) {
      throw PreconditionError("matrix literal has a non-integer entry");
    }
  };
  auto [a, b] = parse_row(text.substr(0, semi));
  auto [c, d] = parse_row(text.substr(semi + 1));
  return HypMatrix(a, b, c, d);
}

std::string HypMatrix::to_string() const {
  std::ostringstream os;
  os << m_.a << "," << m_.b << ";" << m_.c << "," << m_.d;
  return os.str();
}

QuadField::QuadField(Int d_) : d(std::move(d_)) {
  if (d < 2) throw PreconditionError("QuadField: d must be >= 2");
  if (!is_squarefree(d)) throw PreconditionError("QuadField: d must be squarefree");
}

QuadInt::QuadInt(Int d, Int twice_x, Int twice_y)
    : d_(std::move(d)), x2_(std::move(twice_x)), y2_(std::move(twice_y)) {
  bool same_parity = (x2_ - y2_) % 2 == 0;
  if (d_ % 4 == 1) {
    if (!same_parity)
      throw PreconditionError("QuadInt: half-coordinates must share parity");
  } else {
    if (x2_ % 2 != 0 || y2_ % 2 != 0)
      throw PreconditionError("QuadInt: half-integers only exist when d = 1 mod 4");
  }
}

Int QuadInt::norm() const {
  Int n4 = x2_ * x2_ - d_ * y2_ * y2_;
  if (n4 % 4 != 0) throw NumericError("QuadInt: norm is not an integer");
  return n4 / 4;
}

Int QuadInt::field_trace() const {
  if (x2_ % 2 != 0) throw NumericError("QuadInt: trace is not an integer");
  return x2_;
}

QuadInt QuadInt::operator*(const QuadInt& o) const {
  if (d_ != o.d_) throw PreconditionError("QuadInt: field mismatch");
  Int nx = x2_ * o.x2_ + d_ * y2_ * o.y2_;
  Int ny = x2_ * o.y2_ + y2_ * o.x2_;
  if (nx % 2 != 0 || ny % 2 != 0) throw NumericError("QuadInt: product left the ring");
  return QuadInt(d_, nx / 2, ny / 2);
}

namespace {

// Sign of u + v*sqrt(d), exactly.
int surd_sign(const Int& u, const Int& v, const Int& d) {
  if (u >= 0 && v >= 0) return (u == 0 && v == 0) ? 0 : 1;
  if (u <= 0 && v <= 0) return (u == 0 && v == 0) ? 0 : -1;
  Int uu = u * u, vvd = v * v * d;
  if (u > 0) return uu > vvd ? 1 : (uu < vvd ? -1 : 0);  // v < 0
  return vvd > uu ? 1 : (vvd < uu ? -1 : 0);             // u < 0, v > 0
}

}  // namespace

bool QuadInt::greater_than_one() const { return surd_sign(x2_ - 2, y2_, d_) > 0; }

double QuadInt::to_double() const {
  return (static_cast<double>(x2_) + static_cast<double>(y2_) * std::sqrt(static_cast<double>(d_))) / 2.0;
}

std::string QuadInt::to_string() const {
  std::ostringstream os;
  auto sqrt_term = [&](const Int& coeff) {
    std::ostringstream t;
    if (coeff == 1) {
      t << "sqrt" << d_;
    } else if (coeff == -1) {
      t << "-sqrt" << d_;
    } else {
      t << coeff << "sqrt" << d_;
    }
    return t.str();
  };
  if (x2_ % 2 == 0 && y2_ % 2 == 0) {
    Int x = x2_ / 2, y = y2_ / 2;
    if (y == 0) {
      os << x;
    } else if (x == 0) {
      os << sqrt_term(y);
    } else {
      os << x << (y > 0 ? "+" : "") << sqrt_term(y);
    }
  } else {
    os << "(" << x2_ << (y2_ > 0 ? "+" : "") << sqrt_term(y2_) << ")/2";
  }
  return os.str();
}

std::string QuadSurd::to_string() const {
  std::ostringstream os;
  os << rat_to_string(u);
  if (v != 0) os << (v > 0 ? "+" : "") << rat_to_string(v) << "*sqrt" << d;
  return os.str();
}

bool is_hyperbolic(const Mat2& m) {
  if (m.det() != 1) throw PreconditionError("is_hyperbolic: determinant must be 1");
  return abs(m.trace()) > 2;
}

QuadField field_invariant(const HypMatrix& A) {
  Int t = A.trace();
  return QuadField(squarefree_part(t * t - 4));
}

EigenData eigen_data(const HypMatrix& A) {
  Int t = A.trace();
  Int disc = t * t - 4;
  QuadField F(squarefree_part(disc));
  Int m = isqrt_floor(disc / F.d);  // disc = m^2 d
  if (m * m * F.d != disc) throw NumericError("eigen_data: discriminant split failed");

  // lambda = (t + m sqrt(d))/2, the root larger than 1 in absolute value.
  QuadInt lambda(F.d, t, m);
  QuadInt lambda_inv = lambda.conjugate();
  if (!(lambda * lambda_inv == QuadInt::one(F.d)))
    throw NumericError("eigen_data: lambda * lambda^{-1} != 1");

  // Eigenvector (b, lambda - a): slope (lambda - a)/b. Hyperbolicity forces
  // b != 0 (a triangular SL(2,Z) matrix has trace +-2).
  const Mat2& M = A.mat();
  if (M.b == 0) throw NumericError("eigen_data: unexpected triangular hyperbolic matrix");
  Rat den(2 * M.b);
  QuadSurd expanding{Rat(t - 2 * M.a) / den, Rat(m) / den, F.d};
  QuadSurd contracting{Rat(t - 2 * M.a) / den, Rat(-m) / den, F.d};
  return EigenData{lambda, lambda_inv, expanding, contracting};
}

namespace {

quadform::Form fixed_point_form(const Mat2& m) {
  // The form whose roots are the fixed points of the Moebius action:
  // c x^2 + (d-a) x y - b y^2, discriminant trace^2 - 4.
  return quadform::Form{m.c, m.d - m.a, -m.b};
}

}  // namespace

bool gl2z_conjugate(const HypMatrix& A, const HypMatrix& B) {
  if (A.trace() != B.trace()) return false;
  quadform::Form fb = fixed_point_form(B.mat());
  if (quadform::properly_equivalent(fixed_point_form(A.mat()), fb)) return true;
  // det = -1 coset: conjugating A by diag(1,-1) flips the off-diagonal signs.
  Mat2 aj{A.mat().a, -A.mat().b, -A.mat().c, A.mat().d};
  return quadform::properly_equivalent(fixed_point_form(aj), fb);
}

bool isometric_bundles(const HypMatrix& A, const HypMatrix& B) {
  return gl2z_conjugate(A, B) || gl2z_conjugate(A, B.inverse());
}

bool commensurable_bundles(const HypMatrix& A, const HypMatrix& B) {
  return field_invariant(A) == field_invariant(B);
}

QuadInt fundamental_unit(const QuadField& F) {
  const Int& d = F.d;
  // Continued fraction of omega with the exact (P,Q) recurrence; candidate
  // units p_k - q_k * conj(omega) are tested until the first norm +-1 hit,
  // which is the fundamental unit.
  Int P, Q;
  if (d % 4 == 1) {
    P = 1;
    Q = 2;
  } else {
    P = 0;
    Q = 1;
  }
  const Int sq = isqrt_floor(d);
  Int p_prev = 1, p_prev2 = 0;
  Int q_prev = 0, q_prev2 = 1;
  for (int iter = 0; iter < 100000; ++iter) {
    if (Q <= 0) throw NumericError("fundamental_unit: continued fraction degenerated");
    Int a = (P + sq) / Q;
    Int p = a * p_prev + p_prev2;
    Int q = a * q_prev + q_prev2;
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;

    Int x2, y2;
    if (d % 4 == 1) {
      // eps = (p - q) + q * (1+sqrt(d))/2
      x2 = 2 * p - q;
      y2 = q;
    } else {
      x2 = 2 * p;
      y2 = 2 * q;
    }
    Int n4 = x2 * x2 - d * y2 * y2;
    if (n4 == 4 || n4 == -4) {
      QuadInt eps(d, x2, y2);
      if (!eps.greater_than_one()) throw NumericError("fundamental_unit: unit not > 1");
      return eps;
    }
    P = a * Q - P;
    Q = (d - P * P) / Q;
  }
  throw NumericError("fundamental_unit: period not found");
}

HypMatrix matrix_from_field(const QuadField& F) {
  QuadInt eps = fundamental_unit(F);
  QuadInt u = eps.norm() == 1 ? eps : eps * eps;

  // Coordinates of u in the basis {1, omega}.
  Int alpha, beta;
  Mat2 m;
  if (F.d % 4 == 1) {
    // u = x + y sqrt(d) = (x - y) + (2y) omega, omega = (1+sqrt(d))/2,
    // omega^2 = (d-1)/4 + omega.
    alpha = (u.twice_x() - u.twice_y()) / 2;
    beta = u.twice_y();
    Int w = (F.d - 1) / 4;
    m = Mat2{alpha, beta * w, beta, alpha + beta};
  } else {
    alpha = u.twice_x() / 2;
    beta = u.twice_y() / 2;
    m = Mat2{alpha, beta * F.d, beta, alpha};
  }
  HypMatrix result(m);
  if (!(field_invariant(result) == F))
    throw NumericError("matrix_from_field: field invariant round trip failed");
  return result;
}

}  // namespace solenoid::solv3
