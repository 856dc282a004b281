#include "solenoid/tower.hpp"

#include <climits>
#include <map>

#include <json.hpp>

#include "solenoid/errors.hpp"

namespace solenoid::tower {

TorusTower::TorusTower(int n, std::vector<Mat> mats, bool repeat)
    : n_(n), mats_(std::move(mats)), repeat_(repeat) {
  if (n_ < 1) throw PreconditionError("TorusTower: dimension must be positive");
  if (mats_.empty()) throw PreconditionError("TorusTower: empty matrix list");
  bool proper = false;
  for (const Mat& m : mats_) {
    if (m.rows() != n_ || m.cols() != n_)
      throw PreconditionError("TorusTower: matrix dimension mismatch");
    Int d = intmat::det(m);
    if (d == 0) throw PreconditionError("TorusTower: bonding matrix is singular");
    if (abs(d) >= 2) proper = true;
  }
  if (!proper)
    throw PreconditionError("TorusTower: at least one cover per period must be proper (|det| >= 2)");
}

const Mat& TorusTower::mat_at(int k) const {
  if (k < 1) throw PreconditionError("TorusTower: level must be >= 1");
  if (repeat_) return mats_[(k - 1) % mats_.size()];
  if (k > block_size()) throw PreconditionError("TorusTower: level beyond finite tower depth");
  return mats_[k - 1];
}

int TorusTower::max_level() const { return repeat_ ? INT_MAX : block_size(); }

namespace {

nlohmann::json mat_to_json(const Mat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(static_cast<std::int64_t>(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Mat mat_from_json(const nlohmann::json& j, int n) {
  Mat m(n, n);
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw PreconditionError("tower JSON: matrix must be an n x n array");
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != n)
      throw PreconditionError("tower JSON: matrix must be an n x n array");
    for (int jj = 0; jj < n; ++jj) m.at(i, jj) = Int(j[i][jj].get<std::int64_t>());
  }
  return m;
}

}  // namespace

std::string TorusTower::to_json_string() const {
  nlohmann::json j;
  j["n"] = n_;
  j["mats"] = nlohmann::json::array();
  for (const Mat& m : mats_) j["mats"].push_back(mat_to_json(m));
  j["repeat"] = repeat_;
  return j.dump();
}

TorusTower TorusTower::from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError(std::string("tower JSON: parse error: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("mats"))
    throw PreconditionError("tower JSON: must contain 'n' and 'mats'");
  int n = j["n"].get<int>();
  std::vector<Mat> mats;
  for (const auto& m : j["mats"]) mats.push_back(mat_from_json(m, n));
  bool repeat = j.value("repeat", false);
  return TorusTower(n, std::move(mats), repeat);
}

LatticeChain::LatticeChain(const TorusTower& t, int depth) {
  if (depth < 0) throw PreconditionError("LatticeChain: negative depth");
  if (depth > t.max_level()) throw PreconditionError("LatticeChain: depth beyond tower");
  products_.reserve(depth + 1);
  products_.push_back(Mat::identity(t.dim()));
  for (int k = 1; k <= depth; ++k) products_.push_back(products_.back() * t.mat_at(k));
}

const Mat& LatticeChain::product(int k) const {
  if (k < 0 || k > depth()) throw PreconditionError("LatticeChain: level out of range");
  return products_[k];
}

Int LatticeChain::index(int k) const { return abs(intmat::det(product(k))); }

DualMembership dual_membership(const TorusTower& t, const std::vector<Rat>& q, int max_depth) {
  if (static_cast<int>(q.size()) != t.dim())
    throw PreconditionError("dual_membership: vector dimension mismatch");
  if (max_depth < 0) throw PreconditionError("dual_membership: negative depth");
  int horizon = std::min(max_depth, t.max_level());
  Mat b = Mat::identity(t.dim());
  for (int k = 0; k <= horizon; ++k) {
    if (k > 0) b = b * t.mat_at(k);
    Mat bt = b.transposed();
    bool integral = true;
    for (int i = 0; i < t.dim() && integral; ++i) {
      Rat s = 0;
      for (int j = 0; j < t.dim(); ++j) s += Rat(bt.at(i, j)) * q[j];
      if (denominator(s) != 1) integral = false;
    }
    if (integral) return DualMembership{k, max_depth};
  }
  return DualMembership{std::nullopt, max_depth};
}

std::vector<Int> fiber_group(const TorusTower& t, int k) {
  if (k < 0) throw PreconditionError("fiber_group: negative level");
  if (k == 0) return {};
  LatticeChain chain(t, k);
  std::vector<Int> inv = intmat::smith_invariant_factors(chain.product(k));
  std::vector<Int> out;
  for (const Int& d : inv)
    if (d != 1) out.push_back(d);
  if (out.empty()) out.push_back(1);  // trivial quotient, e.g. det = ±1 levels
  return out;
}

namespace {

constexpr long kMaxEnumeratedCosets = 200000;

Mat level_hnf(const TorusTower& t, int k) {
  LatticeChain chain(t, k);
  // The lattice is the column span of B_k, i.e. the row span of B_k^T.
  return intmat::hnf_rows(chain.product(k).transposed());
}

}  // namespace

std::vector<Int> fiber_label(const TorusTower& t, int k, const std::vector<Int>& v) {
  if (k == 0) return std::vector<Int>(t.dim(), 0);
  return intmat::reduce_mod_hnf(level_hnf(t, k), v);
}

std::vector<std::vector<Int>> fiber_cosets(const TorusTower& t, int k) {
  if (k == 0) return {std::vector<Int>(t.dim(), 0)};
  Mat h = level_hnf(t, k);
  int n = t.dim();
  Int count = 1;
  for (int i = 0; i < n; ++i) count *= h.at(i, i);
  if (count > kMaxEnumeratedCosets)
    throw PreconditionError("fiber_cosets: fiber too large to enumerate (" + count.str() + ")");
  std::vector<std::vector<Int>> out;
  std::vector<Int> v(n, 0);
  // Lexicographic walk over the residue box of the HNF diagonal.
  while (true) {
    out.push_back(intmat::reduce_mod_hnf(h, v));
    int i = n - 1;
    while (i >= 0) {
      v[i] += 1;
      if (v[i] < h.at(i, i)) break;
      v[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

std::vector<int> holonomy(const TorusTower& t, const std::vector<Int>& loop, int k) {
  if (static_cast<int>(loop.size()) != t.dim())
    throw PreconditionError("holonomy: loop dimension mismatch");
  std::vector<std::vector<Int>> cosets = fiber_cosets(t, k);
  std::map<std::vector<Int>, int> position;
  for (int i = 0; i < static_cast<int>(cosets.size()); ++i) position[cosets[i]] = i;
  Mat h = k == 0 ? Mat::identity(t.dim()) : level_hnf(t, k);
  std::vector<int> perm(cosets.size());
  for (int i = 0; i < static_cast<int>(cosets.size()); ++i) {
    std::vector<Int> w = cosets[i];
    for (int j = 0; j < t.dim(); ++j) w[j] += loop[j];
    perm[i] = position.at(k == 0 ? std::vector<Int>(t.dim(), 0) : intmat::reduce_mod_hnf(h, w));
  }
  return perm;
}

TorusTower shift(const TorusTower& t) {
  if (t.repeat()) {
    std::vector<Mat> rotated(t.block().begin() + 1, t.block().end());
    rotated.push_back(t.block().front());
    return TorusTower(t.dim(), std::move(rotated), true);
  }
  if (t.block_size() < 2)
    throw PreconditionError("shift: depth-1 tower without repeat cannot be shifted");
  return TorusTower(t.dim(), std::vector<Mat>(t.block().begin() + 1, t.block().end()), false);
}

bool dominates(const TorusTower& t1, const TorusTower& t2, int depth) {
  if (t1.dim() != t2.dim()) throw PreconditionError("dominates: dimension mismatch");
  if (depth < 0) throw PreconditionError("dominates: negative depth");
  int k_max = std::min(depth, t1.max_level());
  // The witness level j may legitimately run past `depth` (a finer tower
  // needs more steps); keep the search bounded so this stays a semi-decision.
  int j_max = t2.repeat() ? 8 * depth + 8 : t2.block_size();

  LatticeChain c1(t1, k_max);
  LatticeChain c2(t2, std::min(j_max, t2.max_level()));
  for (int k = 0; k <= k_max; ++k) {
    bool found = false;
    for (int j = 0; j <= c2.depth() && !found; ++j) {
      if (c2.index(j) % c1.index(k) != 0) continue;  // index obstruction
      if (intmat::columns_contained(c1.product(k), c2.product(j))) found = true;
    }
    if (!found) return false;
  }
  return true;
}

std::optional<std::vector<rank_one::BaerType>> as_product_of_1d(const TorusTower& t) {
  for (const Mat& m : t.block())
    for (int i = 0; i < t.dim(); ++i)
      for (int j = 0; j < t.dim(); ++j)
        if (i != j && m.at(i, j) != 0) return std::nullopt;

  std::vector<rank_one::BaerType> types;
  for (int i = 0; i < t.dim(); ++i) {
    std::vector<Int> degrees;
    for (const Mat& m : t.block()) {
      Int d = abs(m.at(i, i));
      if (d >= 2) degrees.push_back(d);  // unit entries are trivial covers
    }
    if (degrees.empty()) {
      types.push_back(rank_one::BaerType::all_zero());
      continue;
    }
    rank_one::SolenoidTower1D coord =
        t.repeat() ? rank_one::SolenoidTower1D({}, degrees) : rank_one::SolenoidTower1D(degrees, {});
    types.push_back(rank_one::type_from_tower(coord));
  }
  return types;
}

}  // namespace solenoid::tower
