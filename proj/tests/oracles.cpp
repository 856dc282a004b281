#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oracles {

namespace {

using u128 = unsigned __int128;

bool is_square_u128(u128 n, unsigned long long& root) {
  // Cheap residue filters first; exact integer sqrt on survivors.
  static const auto sq64 = [] {
    std::array<bool, 64> t{};
    for (int i = 0; i < 64; ++i) t[(i * i) & 63] = true;
    return t;
  }();
  static const auto sq63 = [] {
    std::array<bool, 63> t{};
    for (int i = 0; i < 63; ++i) t[(i * i) % 63] = true;
    return t;
  }();
  static const auto sq65 = [] {
    std::array<bool, 65> t{};
    for (int i = 0; i < 65; ++i) t[(i * i) % 65] = true;
    return t;
  }();
  if (!sq64[static_cast<unsigned long long>(n) & 63]) return false;
  if (!sq63[static_cast<unsigned long long>(n % 63)]) return false;
  if (!sq65[static_cast<unsigned long long>(n % 65)]) return false;
  long double approx = sqrtl(static_cast<long double>(n));
  auto r = static_cast<unsigned long long>(approx);
  for (unsigned long long c = (r > 2 ? r - 2 : 0); c <= r + 2; ++c) {
    if (static_cast<u128>(c) * c == n) {
      root = c;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<PellSolution> pell_minimal_unit(long d, unsigned long long y_limit) {
  const bool half = (d % 4 == 1);
  const u128 target = half ? 4 : 1;
  // n = d y^2 maintained incrementally; x^2 = n +- target.
  u128 n = 0, add = d;  // add = d (2y+1) at y, starting from y=0
  std::optional<PellSolution> best;
  unsigned long long found_y = 0;
  for (unsigned long long y = 1; y <= y_limit; ++y) {
    n += add;
    add += 2 * static_cast<u128>(d);
    if (best && y > found_y) break;  // one extra row scanned past the first hit
    for (int s = 0; s < 2; ++s) {
      u128 m = s == 0 ? n + target : n - target;
      if (n < target && s == 1) continue;
      unsigned long long x;
      if (!is_square_u128(m, x)) continue;
      if (!half && (x == 0)) continue;
      solenoid::Int x2 = half ? solenoid::Int(x) : 2 * solenoid::Int(x);
      solenoid::Int y2 = half ? solenoid::Int(y) : 2 * solenoid::Int(y);
      if (half && (x + y) % 2 != 0) continue;  // parity of half-coordinates
      PellSolution cand{x2, y2};
      if (!best) {
        best = cand;
        found_y = y;
      } else {
        // smaller x at the same or next y wins: compare x2 + y2 sqrt(d)
        // via both coordinates (x determines the value at fixed sign side)
        if (cand.twice_y < best->twice_y ||
            (cand.twice_y == best->twice_y && cand.twice_x < best->twice_x))
          best = cand;
      }
    }
  }
  return best;
}

namespace {

Mat4 mul(const Mat4& p, const Mat4& q) {
  return Mat4{p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3], p[2] * q[0] + p[3] * q[2],
              p[2] * q[1] + p[3] * q[3]};
}

Mat4 inv_unimodular(const Mat4& p, long det) {
  // det is +-1
  return Mat4{det * p[3], -det * p[1], -det * p[2], det * p[0]};
}

std::vector<std::pair<Mat4, long>> unimodular_list(int bound) {
  std::vector<std::pair<Mat4, long>> out;
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b)
      for (long c = -bound; c <= bound; ++c)
        for (long d = -bound; d <= bound; ++d) {
          long det = a * d - b * c;
          if (det == 1 || det == -1) out.push_back({Mat4{a, b, c, d}, det});
        }
  return out;
}

}  // namespace

std::set<Mat4> conjugacy_orbit(const Mat4& a, int conj_bound, int entry_bound) {
  std::set<Mat4> out;
  for (const auto& [p, det] : unimodular_list(conj_bound)) {
    Mat4 r = mul(mul(p, a), inv_unimodular(p, det));
    if (std::max({std::abs(r[0]), std::abs(r[1]), std::abs(r[2]), std::abs(r[3])}) <= entry_bound)
      out.insert(r);
  }
  return out;
}

bool brute_force_conjugate(const Mat4& a, const Mat4& b, int conj_bound) {
  for (const auto& [p, det] : unimodular_list(conj_bound)) {
    if (mul(p, a) == mul(b, p)) return true;
  }
  return false;
}

std::vector<Mat4> hyperbolic_matrices(int bound) {
  std::vector<Mat4> out;
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b)
      for (long c = -bound; c <= bound; ++c)
        for (long d = -bound; d <= bound; ++d)
          if (a * d - b * c == 1 && std::abs(a + d) > 2) out.push_back(Mat4{a, b, c, d});
  return out;
}

namespace {

using solenoid::Int;
using solenoid::Rat;
using solenoid::rank_one::BaerType;
using solenoid::rank_one::Exponent;
using solenoid::rank_one::RationalSubgroup;

std::vector<Rat> group_generators(const BaerType& t, long height) {
  // 1 together with p^{-K}: K is the exponent when finite, otherwise a cap
  // exceeding every finite exponent plus the largest valuation a scaling of
  // the allowed height can carry (2^13 < 10^4 < 2^14).
  const unsigned cap = 17;
  (void)height;
  std::vector<Rat> gens{Rat(1)};
  for (long p : {2L, 3L, 5L}) {
    Exponent e = t.exponent(p);
    unsigned k = e.is_inf() ? cap : e.value();
    if (k > 0) gens.push_back(Rat(Int(1), solenoid::pow_int(Int(p), k)));
  }
  return gens;
}

bool scaled_subgroup_of(const Rat& q, const std::vector<Rat>& gens1, const RationalSubgroup& g2) {
  for (const Rat& g : gens1)
    if (!g2.contains(q * g)) return false;
  return true;
}

std::vector<long> smooth_upto(long height) {
  std::vector<long> out;
  for (long a = 1; a <= height; ++a) {
    long m = a;
    for (long p : {2L, 3L, 5L})
      while (m % p == 0) m /= p;
    if (m == 1) out.push_back(a);
  }
  return out;
}

}  // namespace

bool baer_scaling_oracle(const BaerType& t1, const BaerType& t2, long height) {
  RationalSubgroup g1(t1), g2(t2);
  auto gens1 = group_generators(t1, height);
  auto gens2 = group_generators(t2, height);
  static std::vector<long> smooth;  // shared across calls, fixed height
  static long cached_height = -1;
  if (cached_height != height) {
    smooth = smooth_upto(height);
    cached_height = height;
  }
  for (long a : smooth) {
    for (long b : smooth) {
      if (std::gcd(a, b) != 1) continue;
      Rat q(a, b);
      // generator 1 both ways first: cheap and prunes almost everything
      if (!g2.contains(q) || !g1.contains(Rat(b, a))) continue;
      if (scaled_subgroup_of(q, gens1, g2) && scaled_subgroup_of(Rat(b, a), gens2, g1))
        return true;
    }
  }
  return false;
}

std::vector<BaerType> baer_corpus(unsigned emax) {
  std::vector<Exponent> choices;
  for (unsigned e = 0; e <= emax; ++e) choices.push_back(Exponent::finite(e));
  choices.push_back(Exponent::inf());
  std::vector<BaerType> out;
  for (const auto& e2 : choices)
    for (const auto& e3 : choices)
      for (const auto& e5 : choices) {
        out.push_back(BaerType({{Int(2), e2}, {Int(3), e3}, {Int(5), e5}}, Exponent::finite(0)));
      }
  return out;
}

}  // namespace oracles
