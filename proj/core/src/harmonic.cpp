#include "solenoid/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include <json.hpp>

#include "solenoid/errors.hpp"

namespace solenoid::harmonic {

LeafGraph::LeafGraph(int vertex_count, std::vector<Edge> edges, std::vector<Pin> pins)
    : n_(vertex_count), edges_(std::move(edges)), pins_(std::move(pins)) {
  if (n_ < 1) throw PreconditionError("LeafGraph: empty vertex set");
  pinned_.assign(n_, false);
  adj_.assign(n_, {});
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw PreconditionError("LeafGraph: edge endpoint out of range");
    if (e.u == e.v) throw PreconditionError("LeafGraph: self-loop");
    if (!(e.weight > 0.0)) throw PreconditionError("LeafGraph: edge weights must be positive");
    adj_[e.u].emplace_back(e.v, e.weight);
    adj_[e.v].emplace_back(e.u, e.weight);
  }
  for (const Pin& p : pins_) {
    if (p.vertex < 0 || p.vertex >= n_) throw PreconditionError("LeafGraph: pin out of range");
    if (std::norm(p.target) >= 1.0)
      throw PreconditionError("LeafGraph: pin target outside the open disk");
    pinned_[p.vertex] = true;
  }
  // Connectivity check (BFS); disconnected graphs leave free vertices with
  // no route to a pin and the minimizer degenerates.
  std::vector<bool> seen(n_, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int cnt = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (auto [v, w] : adj_[u])
      if (!seen[v]) {
        seen[v] = true;
        ++cnt;
        q.push(v);
      }
  }
  if (cnt != n_) throw PreconditionError("LeafGraph: graph must be connected");
}

LeafGraph LeafGraph::from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError(std::string("LeafGraph: invalid JSON: ") + e.what());
  }
  int n = j.at("vertices").get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3)
      throw PreconditionError("LeafGraph: edges must be [u, v, weight] triples");
    edges.push_back(Edge{e[0].get<int>(), e[1].get<int>(), e[2].get<double>()});
  }
  std::vector<Pin> pins;
  for (const auto& p : j.at("pins")) {
    auto z = p.at("z");
    pins.push_back(Pin{p.at("v").get<int>(), Point(z[0].get<double>(), z[1].get<double>())});
  }
  return LeafGraph(n, std::move(edges), std::move(pins));
}

std::string LeafGraph::to_json_string() const {
  nlohmann::json j;
  j["vertices"] = n_;
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : edges_) j["edges"].push_back({e.u, e.v, e.weight});
  j["pins"] = nlohmann::json::array();
  for (const Pin& p : pins_)
    j["pins"].push_back({{"v", p.vertex}, {"z", {p.target.real(), p.target.imag()}}});
  return j.dump();
}

DiscreteMap make_map(const LeafGraph& g, std::vector<Point> positions) {
  if (static_cast<int>(positions.size()) != g.vertex_count())
    throw PreconditionError("make_map: position count mismatch");
  for (const Point& z : positions)
    if (std::norm(z) >= 1.0) throw PreconditionError("make_map: point outside the open disk");
  for (const Pin& p : g.pins()) positions[p.vertex] = p.target;
  return positions;
}

double dirichlet_energy(const LeafGraph& g, const DiscreteMap& f) {
  if (static_cast<int>(f.size()) != g.vertex_count())
    throw PreconditionError("dirichlet_energy: map size mismatch");
  double e = 0.0;
  for (const Edge& edge : g.edges()) {
    double d = disk::dist(f[edge.u], f[edge.v]);
    e += 0.5 * edge.weight * d * d;
  }
  return e;
}

namespace {

DiscreteMap raw_step(const LeafGraph& g, const DiscreteMap& f, double dt) {
  DiscreteMap out = f;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.is_pinned(v) || g.adjacency()[v].empty()) continue;
    std::vector<Point> nbr;
    std::vector<double> w;
    for (auto [u, weight] : g.adjacency()[v]) {
      nbr.push_back(f[u]);
      w.push_back(weight);
    }
    Point centroid = disk::karcher_mean(nbr, w);
    out[v] = disk::geodesic_point(f[v], centroid, dt);
  }
  return out;
}

}  // namespace

DiscreteMap heat_step(const LeafGraph& g, const DiscreteMap& f, double dt, bool energy_guard) {
  if (!(dt > 0.0 && dt <= 1.0)) throw PreconditionError("heat_step: dt must be in (0, 1]");
  if (!energy_guard) return raw_step(g, f, dt);
  double e0 = dirichlet_energy(g, f);
  double step = dt;
  for (int halving = 0; halving < 40; ++halving) {
    DiscreteMap candidate = raw_step(g, f, step);
    if (dirichlet_energy(g, candidate) <= e0 * (1.0 + 1e-15) + 1e-300) return candidate;
    step *= 0.5;
  }
  throw NumericError("heat_step: no energy-decreasing step found");
}

Point energy_gradient_euclidean(const LeafGraph& g, const DiscreteMap& f, int v) {
  Point s(0.0, 0.0);
  for (auto [u, weight] : g.adjacency()[v]) {
    Point w = disk::to_origin(f[v], f[u]);
    double r = std::abs(w);
    if (r == 0.0) continue;
    double d = disk::dist(f[v], f[u]);
    s += weight * d * (w / r);
  }
  return -disk::conformal_factor(f[v]) * s;
}

FlowResult flow_to_harmonic(const LeafGraph& g, const DiscreteMap& f0, double tol, int max_steps) {
  if (g.pins().empty())
    throw PreconditionError("flow_to_harmonic: at least one pinned vertex required");
  FlowResult res;
  res.map = f0;
  res.energies.push_back(dirichlet_energy(g, f0));
  for (int step = 0; step < max_steps; ++step) {
    DiscreteMap next = heat_step(g, res.map, 1.0);
    double move = 0.0;
    for (int v = 0; v < g.vertex_count(); ++v)
      move = std::max(move, disk::dist(res.map[v], next[v]));
    res.map = std::move(next);
    res.energies.push_back(dirichlet_energy(g, res.map));
    res.steps = step + 1;
    if (move < tol) return res;
  }
  throw NumericError("flow_to_harmonic: max_steps exceeded before displacement fell below tol");
}

}  // namespace solenoid::harmonic
