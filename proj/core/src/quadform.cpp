#include "solenoid/quadform.hpp"

#include "solenoid/errors.hpp"

namespace solenoid::quadform {

Int discriminant(const Form& f) { return f.b * f.b - 4 * f.a * f.c; }

namespace {

Int positive_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

void check_disc(const Int& D) {
  if (D <= 0 || is_perfect_square(D))
    throw PreconditionError("quadform: discriminant must be positive and nonsquare");
}

}  // namespace

bool is_reduced(const Form& f, const Int& D) {
  // 0 < b < sqrt(D)
  if (f.b <= 0 || f.b * f.b >= D) return false;
  // sqrt(D) < b + 2|a|
  Int t = f.b + 2 * abs(f.a);
  if (!(t > 0 && D < t * t)) return false;
  // 2|a| - b < sqrt(D)
  Int u = 2 * abs(f.a) - f.b;
  if (u >= 0 && u * u >= D) return false;
  return true;
}

Form rho(const Form& f, const Int& D) {
  check_disc(D);
  if (f.c == 0) throw PreconditionError("quadform: rho on degenerate form (c = 0)");
  const Int c2 = 2 * abs(f.c);
  Int r = positive_mod(-f.b, c2);
  const Int sq = isqrt_floor(D);
  if (abs(f.c) * abs(f.c) >= D) {
    // |c| >= sqrt(D): pick r in (-|c|, |c|]
    if (r > abs(f.c)) r -= c2;
  } else {
    // pick the unique residue in the window (sqrt(D) - 2|c|, sqrt(D))
    Int lo = sq - c2 + 1;
    r = lo + positive_mod(r - lo, c2);
  }
  Int num = r * r - D;
  if (num % (4 * f.c) != 0) throw NumericError("quadform: rho divisibility failed");
  return Form{f.c, r, num / (4 * f.c)};
}

Form reduce(const Form& f, const Int& D) {
  check_disc(D);
  Form g = f;
  for (int i = 0; i < 100000; ++i) {
    if (is_reduced(g, D)) return g;
    g = rho(g, D);
  }
  throw NumericError("quadform: reduction did not terminate");
}

std::vector<Form> cycle(const Form& f, const Int& D) {
  Form f0 = reduce(f, D);
  std::vector<Form> cyc{f0};
  Form g = rho(f0, D);
  while (!(g == f0)) {
    cyc.push_back(g);
    g = rho(g, D);
    if (cyc.size() > 1000000) throw NumericError("quadform: cycle did not close");
  }
  return cyc;
}

bool properly_equivalent(const Form& f, const Form& g) {
  Int D = discriminant(f);
  if (discriminant(g) != D) return false;
  check_disc(D);
  Form gr = reduce(g, D);
  for (const Form& h : cycle(f, D))
    if (h == gr) return true;
  return false;
}

}  // namespace solenoid::quadform
