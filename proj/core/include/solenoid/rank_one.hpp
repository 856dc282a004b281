#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solenoid/numeric.hpp"

namespace solenoid::rank_one {

/// Value in N ∪ {∞}.
class Exponent {
 public:
  static Exponent inf() { return Exponent(true, 0); }
  static Exponent finite(unsigned v) { return Exponent(false, v); }

  bool is_inf() const { return inf_; }
  unsigned value() const;

  bool operator==(const Exponent& o) const { return inf_ == o.inf_ && (inf_ || v_ == o.v_); }
  bool operator!=(const Exponent& o) const { return !(*this == o); }

 private:
  Exponent(bool inf, unsigned v) : inf_(inf), v_(v) {}
  bool inf_;
  unsigned v_;
};

/// Finitely described exponent function on primes: an exception list over a
/// default of 0 or ∞. Classifies the subgroups of Q this toolkit can name
/// (every concrete family here: dyadic, p-adic, universal).
class BaerType {
 public:
  BaerType(std::vector<std::pair<Int, Exponent>> entries, Exponent default_exponent);

  static BaerType all_zero() { return BaerType({}, Exponent::finite(0)); }
  /// Exponent ∞ at every prime; the type of the full rationals.
  static BaerType universal() { return BaerType({}, Exponent::inf()); }

  Exponent exponent(const Int& p) const;
  const std::vector<std::pair<Int, Exponent>>& entries() const { return entries_; }
  const Exponent& default_exponent() const { return default_; }

  /// Structural equality of canonical forms (finer than isomorphism).
  bool operator==(const BaerType& o) const;

  std::string to_json_string() const;
  static BaerType from_json_string(const std::string& text);

 private:
  std::vector<std::pair<Int, Exponent>> entries_;  // sorted by prime, e != default
  Exponent default_;
};

/// G = { q in Q : v_p(q) >= -type(p) for all p }, always containing Z.
class RationalSubgroup {
 public:
  explicit RationalSubgroup(BaerType type) : type_(std::move(type)) {}
  const BaerType& type() const { return type_; }
  bool contains(const Rat& q) const;

 private:
  BaerType type_;
};

/// Tower of circle covers z -> z^n. `lead` runs once; `cycle`, when
/// nonempty, repeats forever (the idealized periodic continuation).
struct SolenoidTower1D {
  SolenoidTower1D(std::vector<Int> lead_degrees, std::vector<Int> cycle_degrees);

  std::vector<Int> lead;
  std::vector<Int> cycle;

  bool repeats() const { return !cycle.empty(); }
  /// Drops the first cover; rotates the cycle when the lead is exhausted.
  SolenoidTower1D shift() const;
};

BaerType type_from_tower(const SolenoidTower1D& t);

/// Canonical section of type_from_tower: finite exponents become a single
/// lead degree, ∞-primes the ascending cycle. Rejects the all-zero type
/// (the dual is the circle, not a solenoid) and default-∞ types (no finite
/// periodic tower covers every prime).
SolenoidTower1D tower_from_type(const BaerType& t);

/// Baer's criterion restricted to finitely described types: isomorphism
/// holds exactly when the ∞-supports coincide (finite-exponent
/// discrepancies are absorbed by a rational scaling).
bool isomorphic(const BaerType& t1, const BaerType& t2);

bool is_dense_in_Q(const BaerType& t);

}  // namespace solenoid::rank_one
