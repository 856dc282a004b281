#pragma once

#include <string>
#include <vector>

#include "solenoid/errors.hpp"
#include "solenoid/mesh.hpp"

namespace solenoid::ricci {

/// Discrete conformal data: one log-radius per vertex. Edge lengths and
/// corner angles derive from it.
struct CirclePackingMetric {
  std::vector<double> u;

  static CirclePackingMetric uniform(const TriMesh& m, double u0 = 0.0) {
    return CirclePackingMetric{std::vector<double>(m.vertex_count(), u0)};
  }
};

double edge_length(const TriMesh& m, const CirclePackingMetric& metric, int a, int b);

/// Corner angles of triangle t (angle[i] at vertex tris[t][i]).
/// Throws NumericError naming the triangle if it degenerates.
std::array<double, 3> corner_angles(const TriMesh& m, const CirclePackingMetric& metric, int t);

/// Angle defect K_i = 2 pi - sum of incident corner angles. The total is
/// 2 pi chi exactly (Euclidean triangles), up to roundoff.
std::vector<double> discrete_curvature(const TriMesh& m, const CirclePackingMetric& metric);

struct FlowRecord {
  long step;
  double t;
  double max_dev;     // max_i |K_i - c|
  double total_curv;  // sum_i K_i
  double energy;      // (1/2) sum_i (K_i - c)^2
};

struct FlowTrace {
  std::vector<FlowRecord> records;
  double dt = 0.0;  // base step of the schedule

  /// CSV with header "step,t,max_dev,total_curv".
  std::string to_csv() const;
};

/// Flow failure carrying the recorded trace.
struct FlowError : NumericError {
  FlowError(const std::string& what, FlowTrace trace_)
      : NumericError(what), trace(std::move(trace_)) {}
  FlowTrace trace;
};

/// One explicit step u += dt (c - K), renormalized to keep sum(u) fixed.
/// dt is halved (up to 30 times) while the step breaks a triangle
/// inequality; exhaustion reports a stiff configuration.
CirclePackingMetric ricci_step(const TriMesh& m, const CirclePackingMetric& metric, double c,
                               double dt);

/// Compatible target curvature 2 pi chi / V.
double compatible_constant(const TriMesh& m);

struct FlowResult {
  CirclePackingMetric metric;
  FlowTrace trace;
};

/// Runs ricci_step until max_i |K_i - c| < tol. Rejects incompatible c and
/// positive Euler characteristic; throws FlowError on non-convergence.
FlowResult flow_to_convergence(const TriMesh& m, const CirclePackingMetric& start, double c,
                               double tol, long max_steps, double dt = 0.0);

/// Experimental alternative stepping rule on the flat background:
/// du = dt (e^{-u} ((L0 u)_i - R0_i) + c) with L0 the uniform graph
/// Laplacian and R0 the curvature of the u = 0 metric. Torus meshes only.
CirclePackingMetric background_metric_step(const TriMesh& m, const CirclePackingMetric& metric,
                                           const std::vector<double>& r0, double c, double dt);

/// Finite stand-in for the Cantor transversal: metrics indexed by labels
/// in Z/m, all over one mesh.
struct FiberFamily {
  int labels_modulus;
  std::vector<int> labels;
  std::vector<CirclePackingMetric> fibers;

  std::string to_json_string() const;
  static FiberFamily from_json_string(const std::string& text);
};

/// Sup-distance between adjacent fibers (labels differing by 1 mod m).
double transverse_modulus(const FiberFamily& fam);

struct LaminatedReport {
  FiberFamily output;
  std::vector<FlowTrace> traces;  // in label order
  double input_modulus;
  double output_modulus;
};

/// Per-fiber flow with one shared schedule; fibers run independently
/// (optionally in parallel, capped by SOLENOID_LAB_THREADS) and identical
/// inputs give bitwise-identical outputs. A fiber failure aborts with its
/// label in the message.
LaminatedReport laminated_flow(const TriMesh& m, const FiberFamily& fam, double c, double tol,
                               long max_steps = 200000);

}  // namespace solenoid::ricci
