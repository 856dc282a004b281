#pragma once

#include <string>
#include <vector>

#include "solenoid/disk.hpp"

namespace solenoid::harmonic {

using disk::Point;

struct Edge {
  int u, v;
  double weight;
};

struct Pin {
  int vertex;
  Point target;
};

/// Weighted graph mapped into the hyperbolic plane, with a pinned boundary.
/// Connectivity is required so every free vertex feels the pins; with the
/// negatively curved target that makes the energy minimizer unique.
class LeafGraph {
 public:
  LeafGraph(int vertex_count, std::vector<Edge> edges, std::vector<Pin> pins);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Pin>& pins() const { return pins_; }
  bool is_pinned(int v) const { return pinned_[v]; }
  const std::vector<std::vector<std::pair<int, double>>>& adjacency() const { return adj_; }

  static LeafGraph from_json_string(const std::string& text);
  std::string to_json_string() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<Pin> pins_;
  std::vector<bool> pinned_;
  std::vector<std::vector<std::pair<int, double>>> adj_;
};

/// Vertex -> point assignment; pins are enforced on construction.
using DiscreteMap = std::vector<Point>;

DiscreteMap make_map(const LeafGraph& g, std::vector<Point> positions);

/// (1/2) sum_e w_e d_H(f(u), f(v))^2.
double dirichlet_energy(const LeafGraph& g, const DiscreteMap& f);

/// One Jacobi sweep: every free vertex moves fraction dt along the geodesic
/// toward the weighted hyperbolic centroid of its neighbors. With the
/// energy guard the step is retried at halved dt until it does not increase
/// the energy.
DiscreteMap heat_step(const LeafGraph& g, const DiscreteMap& f, double dt,
                      bool energy_guard = true);

/// Euclidean-chart gradient of the energy with respect to vertex v
/// (for cross-checking the tension against finite differences):
/// grad = -lambda(x) * sum_j w_j d_j unit_j.
Point energy_gradient_euclidean(const LeafGraph& g, const DiscreteMap& f, int v);

struct FlowResult {
  DiscreteMap map;
  std::vector<double> energies;  // after each accepted step
  int steps = 0;
};

/// Heat flow until the largest per-vertex hyperbolic displacement in one
/// step is below tol. Energy is nonincreasing along accepted steps.
FlowResult flow_to_harmonic(const LeafGraph& g, const DiscreteMap& f0, double tol,
                            int max_steps);

}  // namespace solenoid::harmonic
