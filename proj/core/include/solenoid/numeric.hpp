#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace solenoid {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Floor of the square root of a nonnegative integer.
Int isqrt_floor(const Int& n);

bool is_perfect_square(const Int& n);

/// Largest squarefree s with n = s * m^2 (n > 0, trial division).
Int squarefree_part(Int n);

bool is_squarefree(const Int& n);

/// Deterministic Miller-Rabin, exact for inputs below 3.3e24.
bool is_prime(const Int& n);

Int pow_int(Int base, unsigned exp);

/// p-adic valuation of n (n != 0, p >= 2).
unsigned valuation(Int n, const Int& p);

/// Exact rational formatting, "p/q" (or "p" when q == 1).
std::string rat_to_string(const Rat& r);

/// Parses "p/q" or "p" exactly; throws PreconditionError on malformed input.
Rat rat_from_string(const std::string& s);

}  // namespace solenoid
