#pragma once

// Independent brute-force oracles for cross-checking the library. These
// deliberately avoid the code paths they verify: the Pell scan never touches
// continued fractions, the conjugacy search never reduces forms, and the
// scaling search decides Baer isomorphism purely through membership tests.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "solenoid/rank_one.hpp"
#include "solenoid/solv3.hpp"

namespace oracles {

struct PellSolution {
  solenoid::Int twice_x;
  solenoid::Int twice_y;
};

/// Minimal unit > 1 of the ring of integers of Q(sqrt(d)) by exhaustive
/// ascending-y scan of x^2 - d y^2 = +-1 (or +-4 in half-coordinates when
/// d = 1 mod 4). `y_limit` bounds the scan; nullopt when nothing was found
/// below it.
std::optional<PellSolution> pell_minimal_unit(long d, unsigned long long y_limit);

using Mat4 = std::array<long, 4>;  // row-major [[a,b],[c,d]]

/// All P A P^{-1} over conjugators P in GL(2,Z) with |entries| <= conj_bound,
/// restricted to results with |entries| <= entry_bound.
std::set<Mat4> conjugacy_orbit(const Mat4& a, int conj_bound, int entry_bound);

/// Exhaustive conjugator search, small cases only.
bool brute_force_conjugate(const Mat4& a, const Mat4& b, int conj_bound);

/// The hyperbolic SL(2,Z) matrices with |entries| <= bound.
std::vector<Mat4> hyperbolic_matrices(int bound);

/// Scaling-search oracle for Baer-type isomorphism: hunts for q = a/b with
/// |a|, |b| <= height and q G1 = G2, testing the generators of both groups
/// through RationalSubgroup::contains. Since q itself and 1/q must be
/// members (generator 1), only 30-smooth numerators/denominators can
/// succeed for types supported on {2,3,5}; the enumeration uses that to
/// stay exhaustive at full height.
bool baer_scaling_oracle(const solenoid::rank_one::BaerType& t1,
                         const solenoid::rank_one::BaerType& t2, long height = 10000);

/// Every finitely-described type over primes {2,3,5} with finite exponents
/// <= emax or infinity.
std::vector<solenoid::rank_one::BaerType> baer_corpus(unsigned emax = 3);

}  // namespace oracles
