#include "solenoid/rank_one.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "solenoid/errors.hpp"

namespace solenoid::rank_one {

unsigned Exponent::value() const {
  if (inf_) throw PreconditionError("Exponent: value() called on infinite exponent");
  return v_;
}

BaerType::BaerType(std::vector<std::pair<Int, Exponent>> entries, Exponent default_exponent)
    : default_(default_exponent) {
  if (!default_.is_inf() && default_.value() != 0)
    throw PreconditionError("BaerType: default exponent must be 0 or infinity");
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& [p, e] = entries[i];
    if (!is_prime(p)) throw PreconditionError("BaerType: entry prime " + p.str() + " is not prime");
    if (i > 0 && entries[i - 1].first == p)
      throw PreconditionError("BaerType: duplicate prime " + p.str());
    if (e == default_) continue;  // dropped below, canonical form
    entries_.push_back(entries[i]);
  }
}

Exponent BaerType::exponent(const Int& p) const {
  for (const auto& [q, e] : entries_) {
    if (q == p) return e;
    if (q > p) break;
  }
  return default_;
}

bool BaerType::operator==(const BaerType& o) const {
  return default_ == o.default_ && entries_ == o.entries_;
}

namespace {

nlohmann::json exp_to_json(const Exponent& e) {
  if (e.is_inf()) return "inf";
  return e.value();
}

Exponent exp_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return Exponent::inf();
    throw PreconditionError("BaerType: exponent string must be \"inf\"");
  }
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0))
    return Exponent::finite(static_cast<unsigned>(j.get<std::int64_t>()));
  throw PreconditionError("BaerType: exponent must be a nonnegative integer or \"inf\"");
}

}  // namespace

std::string BaerType::to_json_string() const {
  nlohmann::json j;
  j["entries"] = nlohmann::json::array();
  for (const auto& [p, e] : entries_)
    j["entries"].push_back({static_cast<std::int64_t>(p), exp_to_json(e)});
  j["default"] = exp_to_json(default_);
  return j.dump();
}

BaerType BaerType::from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError(std::string("BaerType: invalid JSON: ") + e.what());
  }
  if (!j.contains("entries") || !j.contains("default"))
    throw PreconditionError("BaerType: JSON must contain 'entries' and 'default'");
  std::vector<std::pair<Int, Exponent>> entries;
  for (const auto& item : j["entries"]) {
    if (!item.is_array() || item.size() != 2)
      throw PreconditionError("BaerType: each entry must be a [prime, exponent] pair");
    entries.emplace_back(Int(item[0].get<std::int64_t>()), exp_from_json(item[1]));
  }
  return BaerType(std::move(entries), exp_from_json(j["default"]));
}

bool RationalSubgroup::contains(const Rat& q) const {
  Int den = denominator(q);  // boost keeps rationals in lowest terms, den > 0
  // Divide out the listed primes up to their allowance, then the default
  // decides whatever is left. No factorization of the remainder needed.
  for (const auto& [p, e] : type_.entries()) {
    unsigned allowed = e.is_inf() ? 0 : e.value();
    if (e.is_inf()) {
      while (den % p == 0) den /= p;
      continue;
    }
    unsigned v = 0;
    while (den % p == 0 && v < allowed) {
      den /= p;
      ++v;
    }
    if (den % p == 0) return false;  // exponent exceeds the type
  }
  if (den == 1) return true;
  return type_.default_exponent().is_inf();
}

SolenoidTower1D::SolenoidTower1D(std::vector<Int> lead_degrees, std::vector<Int> cycle_degrees)
    : lead(std::move(lead_degrees)), cycle(std::move(cycle_degrees)) {
  if (lead.empty() && cycle.empty())
    throw PreconditionError("SolenoidTower1D: empty degree sequence");
  for (const Int& n : lead)
    if (n < 2) throw PreconditionError("SolenoidTower1D: degrees must be >= 2");
  for (const Int& n : cycle)
    if (n < 2) throw PreconditionError("SolenoidTower1D: degrees must be >= 2");
}

SolenoidTower1D SolenoidTower1D::shift() const {
  if (!lead.empty()) {
    return SolenoidTower1D(std::vector<Int>(lead.begin() + 1, lead.end()), cycle);
  }
  if (cycle.size() == 1) return *this;  // rotating a single repeated cover is the identity
  std::vector<Int> rotated(cycle.begin() + 1, cycle.end());
  rotated.push_back(cycle.front());
  return SolenoidTower1D({}, std::move(rotated));
}

namespace {

void accumulate_prime_factors(const Int& n, std::map<Int, unsigned>& out) {
  Int m = n;
  for (Int d = 2; d * d <= m; ++d) {
    while (m % d == 0) {
      ++out[d];
      m /= d;
    }
  }
  if (m > 1) ++out[m];
}

}  // namespace

BaerType type_from_tower(const SolenoidTower1D& t) {
  std::map<Int, unsigned> finite;
  for (const Int& n : t.lead) accumulate_prime_factors(n, finite);
  std::map<Int, unsigned> cyc;
  for (const Int& n : t.cycle) accumulate_prime_factors(n, cyc);

  std::vector<std::pair<Int, Exponent>> entries;
  for (const auto& [p, e] : cyc) {
    entries.emplace_back(p, Exponent::inf());  // repeats forever
    finite.erase(p);
  }
  for (const auto& [p, e] : finite) entries.emplace_back(p, Exponent::finite(e));
  return BaerType(std::move(entries), Exponent::finite(0));
}

SolenoidTower1D tower_from_type(const BaerType& t) {
  if (t.default_exponent().is_inf())
    throw PreconditionError(
        "tower_from_type: default-infinity types have no finite periodic tower");
  Int lead_degree = 1;
  std::vector<Int> cycle;
  for (const auto& [p, e] : t.entries()) {
    if (e.is_inf())
      cycle.push_back(p);  // ascending primes, one cover each per period
    else
      lead_degree *= pow_int(p, e.value());
  }
  if (lead_degree == 1 && cycle.empty())
    throw PreconditionError("tower_from_type: the all-zero type is the circle, not a solenoid");
  std::vector<Int> lead;
  if (lead_degree > 1) lead.push_back(lead_degree);
  return SolenoidTower1D(std::move(lead), std::move(cycle));
}

bool isomorphic(const BaerType& t1, const BaerType& t2) {
  // Same ∞-support decides it: finite-exponent differences occur at finitely
  // many primes only and are removable by scaling.
  if (t1.default_exponent() != t2.default_exponent()) return false;
  std::set<Int> s1, s2;
  if (t1.default_exponent().is_inf()) {
    // ∞-support is cofinite; compare the finite complements instead.
    for (const auto& [p, e] : t1.entries())
      if (!e.is_inf()) s1.insert(p);
    for (const auto& [p, e] : t2.entries())
      if (!e.is_inf()) s2.insert(p);
  } else {
    for (const auto& [p, e] : t1.entries())
      if (e.is_inf()) s1.insert(p);
    for (const auto& [p, e] : t2.entries())
      if (e.is_inf()) s2.insert(p);
  }
  return s1 == s2;
}

bool is_dense_in_Q(const BaerType& t) {
  if (t.default_exponent().is_inf()) return true;
  for (const auto& [p, e] : t.entries())
    if (e.is_inf()) return true;
  return false;
}

}  // namespace solenoid::rank_one
