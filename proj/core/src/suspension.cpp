#include "solenoid/suspension.hpp"

#include <set>

#include "solenoid/errors.hpp"

namespace solenoid::suspension {

profinite::ProfiniteInt first_return(const Odometer& o, const profinite::ProfiniteInt& x) {
  if (x.chain() != o.chain) throw PreconditionError("first_return: chain mismatch");
  return x + profinite::ProfiniteInt::embed(1, o.chain);
}

bool orbit_covers_level(const Odometer& o, int k) {
  const Int& m = o.chain.modulus(k);
  std::set<Int> seen;
  Int r = 0;
  for (Int step = 0; step < m; ++step) {
    seen.insert(r);
    r += 1;
    if (r == m) r = 0;
  }
  return static_cast<Int>(seen.size()) == m;
}

rank_one::BaerType matches_dual_type(const Odometer& o, bool idealized) {
  std::vector<Int> degrees;
  for (int k = 1; k < o.chain.depth(); ++k) {
    Int d = o.chain.modulus(k + 1) / o.chain.modulus(k);
    if (d >= 2) degrees.push_back(d);
  }
  if (o.chain.depth() >= 1 && o.chain.modulus(1) >= 2)
    degrees.insert(degrees.begin(), o.chain.modulus(1));
  if (degrees.empty())
    return rank_one::BaerType::all_zero();
  rank_one::SolenoidTower1D t = idealized ? rank_one::SolenoidTower1D({}, degrees)
                                          : rank_one::SolenoidTower1D(degrees, {});
  return rank_one::type_from_tower(t);
}

}  // namespace solenoid::suspension
