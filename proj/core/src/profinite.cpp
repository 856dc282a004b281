#include "solenoid/profinite.hpp"

#include <json.hpp>

#include "solenoid/errors.hpp"

namespace solenoid::profinite {

namespace {

Int mod_reduce(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

nlohmann::json int_to_json(const Int& v) {
  // Exact as a JSON number while it fits; decimal string beyond that.
  static const Int kMax = Int(1) << 53;
  if (v >= -kMax && v <= kMax) return static_cast<std::int64_t>(v);
  return v.str();
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw PreconditionError("expected integer or decimal string in JSON");
}

}  // namespace

ModulusChain::ModulusChain(std::vector<Int> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw PreconditionError("ModulusChain: empty chain");
  if (moduli_.front() < 1) throw PreconditionError("ModulusChain: moduli must be >= 1");
  int first_repeat = -1;
  for (std::size_t k = 0; k + 1 < moduli_.size(); ++k) {
    if (moduli_[k + 1] % moduli_[k] != 0)
      throw PreconditionError("ModulusChain: modulus(" + std::to_string(k + 1) +
                              ") does not divide modulus(" + std::to_string(k + 2) + ")");
    if (moduli_[k + 1] == moduli_[k]) {
      if (first_repeat >= 0)
        throw PreconditionError("ModulusChain: chain must be strictly increasing beyond the first repeated entry");
      first_repeat = static_cast<int>(k);
    }
  }
}

ModulusChain ModulusChain::factorial(int depth) {
  if (depth < 1) throw PreconditionError("factorial chain: depth must be >= 1");
  std::vector<Int> m(depth);
  Int f = 1;
  for (int k = 1; k <= depth; ++k) {
    f *= k;
    m[k - 1] = f;
  }
  return ModulusChain(std::move(m));
}

const Int& ModulusChain::modulus(int k) const {
  if (k < 1 || k > depth()) throw PreconditionError("ModulusChain: level out of range");
  return moduli_[k - 1];
}

ProfiniteInt::ProfiniteInt(ModulusChain chain, std::vector<Int> residues)
    : chain_(std::move(chain)), residues_(std::move(residues)) {
  if (static_cast<int>(residues_.size()) != chain_.depth())
    throw PreconditionError("ProfiniteInt: residue count does not match chain depth");
  for (int k = 1; k <= chain_.depth(); ++k) {
    const Int& r = residues_[k - 1];
    if (r < 0 || r >= chain_.modulus(k))
      throw PreconditionError("ProfiniteInt: residue out of range at level " + std::to_string(k));
    if (k < chain_.depth() && mod_reduce(residues_[k], chain_.modulus(k)) != r)
      throw PreconditionError("ProfiniteInt: incompatible residues at level " + std::to_string(k));
  }
}

ProfiniteInt ProfiniteInt::embed(const Int& a, const ModulusChain& chain) {
  std::vector<Int> res(chain.depth());
  for (int k = 1; k <= chain.depth(); ++k) res[k - 1] = mod_reduce(a, chain.modulus(k));
  return ProfiniteInt(chain, std::move(res));
}

const Int& ProfiniteInt::residue(int k) const {
  if (k < 1 || k > chain_.depth()) throw PreconditionError("ProfiniteInt: level out of range");
  return residues_[k - 1];
}

ProfiniteInt ProfiniteInt::operator+(const ProfiniteInt& other) const {
  if (chain_ != other.chain_)
    throw PreconditionError("ProfiniteInt: chain mismatch in addition");
  std::vector<Int> res(residues_.size());
  for (int k = 1; k <= chain_.depth(); ++k)
    res[k - 1] = mod_reduce(residues_[k - 1] + other.residues_[k - 1], chain_.modulus(k));
  return ProfiniteInt(chain_, std::move(res));
}

ProfiniteInt ProfiniteInt::operator*(const ProfiniteInt& other) const {
  if (chain_ != other.chain_)
    throw PreconditionError("ProfiniteInt: chain mismatch in multiplication");
  std::vector<Int> res(residues_.size());
  for (int k = 1; k <= chain_.depth(); ++k)
    res[k - 1] = mod_reduce(residues_[k - 1] * other.residues_[k - 1], chain_.modulus(k));
  return ProfiniteInt(chain_, std::move(res));
}

Int ProfiniteInt::component(const Int& p, unsigned e) const {
  if (!is_prime(p)) throw PreconditionError("component: p must be prime");
  if (e == 0) throw PreconditionError("component: exponent must be positive");
  const Int pe = pow_int(p, e);
  for (int k = 1; k <= chain_.depth(); ++k) {
    if (chain_.modulus(k) % pe == 0) return mod_reduce(residues_[k - 1], pe);
  }
  throw PreconditionError("component: insufficient depth, " + pe.str() +
                          " divides no modulus in the chain");
}

std::string ProfiniteInt::to_json_string() const {
  nlohmann::json j;
  j["moduli"] = nlohmann::json::array();
  j["residues"] = nlohmann::json::array();
  for (const Int& m : chain_.moduli()) j["moduli"].push_back(int_to_json(m));
  for (const Int& r : residues_) j["residues"].push_back(int_to_json(r));
  return j.dump();
}

ProfiniteInt ProfiniteInt::from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError(std::string("ProfiniteInt: invalid JSON: ") + e.what());
  }
  if (!j.contains("moduli") || !j.contains("residues"))
    throw PreconditionError("ProfiniteInt: JSON must contain 'moduli' and 'residues'");
  std::vector<Int> moduli, residues;
  for (const auto& v : j["moduli"]) moduli.push_back(int_from_json(v));
  for (const auto& v : j["residues"]) residues.push_back(int_from_json(v));
  return ProfiniteInt(ModulusChain(std::move(moduli)), std::move(residues));
}

ClopenCylinder::ClopenCylinder(Int m, Int r) : modulus(std::move(m)), residue(std::move(r)) {
  if (modulus < 1) throw PreconditionError("ClopenCylinder: modulus must be positive");
  if (residue < 0 || residue >= modulus)
    throw PreconditionError("ClopenCylinder: residue out of range");
}

Rat haar_measure(const ClopenCylinder& c) { return Rat(1, c.modulus); }

bool translation_orbit_is_dense(const ModulusChain& chain, const Int& t) {
  for (int k = 1; k <= chain.depth(); ++k) {
    if (gcd(t, chain.modulus(k)) != 1) return false;
  }
  return true;
}

}  // namespace solenoid::profinite
