#include "solenoid/numeric.hpp"

#include "solenoid/errors.hpp"

namespace solenoid {

Int isqrt_floor(const Int& n) {
  if (n < 0) throw PreconditionError("isqrt_floor: negative argument");
  if (n == 0) return 0;
  return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int r = isqrt_floor(n);
  return r * r == n;
}

Int squarefree_part(Int n) {
  if (n <= 0) throw PreconditionError("squarefree_part: argument must be positive");
  Int s = 1;
  for (Int d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e % 2 == 1) s *= d;
  }
  return s * n;
}

bool is_squarefree(const Int& n) {
  if (n <= 0) return false;
  return squarefree_part(n) == n;
}

namespace {

Int mulmod(const Int& a, const Int& b, const Int& m) { return a * b % m; }

Int powmod(Int base, Int exp, const Int& m) {
  Int r = 1;
  base %= m;
  while (exp > 0) {
    if ((exp & 1) != 0) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

bool miller_rabin(const Int& n, const Int& a) {
  if (n % a == 0) return n == a;
  Int d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  Int x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // Witness set exact for n < 3.3e24.
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

Int pow_int(Int base, unsigned exp) {
  Int r = 1;
  while (exp > 0) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

unsigned valuation(Int n, const Int& p) {
  if (n == 0) throw PreconditionError("valuation: zero argument");
  if (p < 2) throw PreconditionError("valuation: p must be >= 2");
  if (n < 0) n = -n;
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_from_string(const std::string& s) {
  auto bad = [&] { throw PreconditionError("rat_from_string: malformed rational '" + s + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) bad();
    return Rat(num, den);
  } catch (const std::exception&) {
    bad();
  }
  return Rat();  // unreachable
}

}  // namespace solenoid
