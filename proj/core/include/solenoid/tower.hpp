#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solenoid/intmat.hpp"
#include "solenoid/numeric.hpp"
#include "solenoid/rank_one.hpp"

namespace solenoid::tower {

using intmat::Mat;

/// Tower of finite covers of the n-torus: bonding maps are the toral
/// endomorphisms of the matrices A_1, A_2, ... With `repeat` set, the
/// listed block continues periodically.
class TorusTower {
 public:
  TorusTower(int n, std::vector<Mat> mats, bool repeat);

  int dim() const { return n_; }
  bool repeat() const { return repeat_; }
  int block_size() const { return static_cast<int>(mats_.size()); }

  /// Level k bonding matrix A_k (1-based; periodic when repeat is set).
  const Mat& mat_at(int k) const;

  /// Largest level that can be materialized: the block size for finite
  /// towers, unbounded (INT_MAX) with repeat.
  int max_level() const;

  const std::vector<Mat>& block() const { return mats_; }

  std::string to_json_string() const;
  static TorusTower from_json_string(const std::string& text);

 private:
  int n_;
  std::vector<Mat> mats_;
  bool repeat_;
};

/// Nested lattices L_k = (A_1 ... A_k) Z^n with L_0 = Z^n.
/// [L_k : L_{k+1}] = |det A_{k+1}|, so indices multiply down the chain.
class LatticeChain {
 public:
  LatticeChain(const TorusTower& t, int depth);

  int depth() const { return static_cast<int>(products_.size()) - 1; }
  /// B_k = A_1 ... A_k (B_0 = identity).
  const Mat& product(int k) const;
  /// [Z^n : L_k] = |det B_k|.
  Int index(int k) const;

 private:
  std::vector<Mat> products_;
};

struct DualMembership {
  std::optional<int> level;  // least witness level when membership holds
  int searched_depth;        // semi-decision horizon for a negative answer
  bool yes() const { return level.has_value(); }
};

/// Tests integrality of (A_1...A_k)^T q for k = 0..max_depth and reports
/// the least witness. A miss is only "no up to max_depth".
DualMembership dual_membership(const TorusTower& t, const std::vector<Rat>& q, int max_depth);

/// Invariant factors of Z^n / L_k (Smith normal form of A_1...A_k),
/// with the trivial 1-factors dropped. k = 0 gives the trivial group.
std::vector<Int> fiber_group(const TorusTower& t, int k);

/// Coset representative of v modulo L_k in canonical (Hermite-reduced) form.
std::vector<Int> fiber_label(const TorusTower& t, int k, const std::vector<Int>& v);

/// All canonical coset labels of Z^n / L_k in lexicographic order.
std::vector<std::vector<Int>> fiber_cosets(const TorusTower& t, int k);

/// The translation v -> v + loop on Z^n / L_k as a permutation of the
/// canonical coset order. Composing holonomies adds the loops.
std::vector<int> holonomy(const TorusTower& t, const std::vector<Int>& loop, int k);

/// Drops A_1; with repeat the block rotates. Errors on depth-1 finite towers.
TorusTower shift(const TorusTower& t);

/// Semi-decision of chain domination: every L^1_k (k <= depth) contains
/// some L^2_j with j inside the examined horizon. A `true` is only valid
/// up to that depth; this is deliberate, no completeness is claimed.
bool dominates(const TorusTower& t1, const TorusTower& t2, int depth);

/// Coordinatewise classification for diagonal towers; nullopt otherwise.
std::optional<std::vector<rank_one::BaerType>> as_product_of_1d(const TorusTower& t);

}  // namespace solenoid::tower
