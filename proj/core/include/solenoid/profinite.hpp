#pragma once

#include <string>
#include <vector>

#include "solenoid/numeric.hpp"

namespace solenoid::profinite {

/// A divisibility chain m_1 | m_2 | ... | m_depth of positive moduli.
/// Truncation-precision model of the inverse system of finite quotients
/// of the integers: statements at depth d are exact modulo m_d.
class ModulusChain {
 public:
  explicit ModulusChain(std::vector<Int> moduli);

  /// The factorial chain 1!, 2!, ..., depth!. Cofinal in divisibility,
  /// so every prime power is captured once depth is large enough.
  static ModulusChain factorial(int depth = 12);

  int depth() const { return static_cast<int>(moduli_.size()); }

  /// 1-based level access.
  const Int& modulus(int k) const;

  const std::vector<Int>& moduli() const { return moduli_; }

  bool operator==(const ModulusChain& other) const { return moduli_ == other.moduli_; }
  bool operator!=(const ModulusChain& other) const { return !(*this == other); }

 private:
  std::vector<Int> moduli_;
};

/// Element of the inverse limit of Z/m_k, stored as compatible residues.
/// Immutable after construction; all operations are levelwise and exact.
class ProfiniteInt {
 public:
  ProfiniteInt(ModulusChain chain, std::vector<Int> residues);

  static ProfiniteInt embed(const Int& a, const ModulusChain& chain);

  const ModulusChain& chain() const { return chain_; }
  const Int& residue(int k) const;
  const std::vector<Int>& residues() const { return residues_; }

  ProfiniteInt operator+(const ProfiniteInt& other) const;
  ProfiniteInt operator*(const ProfiniteInt& other) const;

  /// Residue modulo p^e, read off any level whose modulus p^e divides.
  /// Compatibility makes the answer independent of the level chosen.
  Int component(const Int& p, unsigned e) const;

  bool operator==(const ProfiniteInt& other) const {
    return chain_ == other.chain_ && residues_ == other.residues_;
  }

  std::string to_json_string() const;
  static ProfiniteInt from_json_string(const std::string& text);

 private:
  ModulusChain chain_;
  std::vector<Int> residues_;
};

/// Clopen set {x : x = residue mod modulus} in the fiber group.
struct ClopenCylinder {
  ClopenCylinder(Int modulus, Int residue);
  Int modulus;
  Int residue;
};

/// Normalized Haar measure of a cylinder: exactly 1/modulus.
Rat haar_measure(const ClopenCylinder& c);

/// Whether translation by t has dense orbit in the truncated limit,
/// i.e. gcd(t, m_k) = 1 at every level.
bool translation_orbit_is_dense(const ModulusChain& chain, const Int& t = 1);

}  // namespace solenoid::profinite
