#pragma once

#include "solenoid/profinite.hpp"
#include "solenoid/rank_one.hpp"

namespace solenoid::suspension {

/// The +1 translation on the inverse limit of Z/m_k: the model minimal
/// Cantor homeomorphism. Suspending it recovers the 1-D solenoid whose
/// Pontryagin dual the chain encodes.
struct Odometer {
  explicit Odometer(profinite::ModulusChain c) : chain(std::move(c)) {}
  profinite::ModulusChain chain;
};

/// First-return map of the suspension flow: x + 1 with levelwise carries.
profinite::ProfiniteInt first_return(const Odometer& o, const profinite::ProfiniteInt& x);

/// Checked minimality certificate at one level: the orbit of 0 visits
/// every residue class mod m_k within m_k steps.
bool orbit_covers_level(const Odometer& o, int k);

/// Baer type of the dual subgroup of Q, from the degree sequence
/// n_k = m_{k+1}/m_k. With `idealized` the degrees repeat as a cycle
/// (exponents become ∞ at the primes the chain reaches).
rank_one::BaerType matches_dual_type(const Odometer& o, bool idealized = false);

}  // namespace solenoid::suspension
