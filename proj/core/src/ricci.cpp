#include "solenoid/ricci.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace solenoid::ricci {

double edge_length(const TriMesh& m, const CirclePackingMetric& metric, int a, int b) {
  double ra = std::exp(metric.u[a]), rb = std::exp(metric.u[b]);
  double inv = m.inversive_of(a, b);
  if (inv == 1.0) return ra + rb;  // tangential
  return std::sqrt(ra * ra + rb * rb + 2.0 * ra * rb * inv);
}

std::array<double, 3> corner_angles(const TriMesh& m, const CirclePackingMetric& metric, int t) {
  const auto& tri = m.triangles()[t];
  double l01 = edge_length(m, metric, tri[0], tri[1]);
  double l12 = edge_length(m, metric, tri[1], tri[2]);
  double l20 = edge_length(m, metric, tri[2], tri[0]);
  auto angle = [&](double opposite, double s1, double s2) {
    double cosv = (s1 * s1 + s2 * s2 - opposite * opposite) / (2.0 * s1 * s2);
    if (cosv <= -1.0 || cosv >= 1.0)
      throw NumericError("degenerate triangle #" + std::to_string(t) + " (" +
                         std::to_string(tri[0]) + "," + std::to_string(tri[1]) + "," +
                         std::to_string(tri[2]) + "): triangle inequality violated");
    return std::acos(cosv);
  };
  return {angle(l12, l01, l20), angle(l20, l01, l12), angle(l01, l12, l20)};
}

std::vector<double> discrete_curvature(const TriMesh& m, const CirclePackingMetric& metric) {
  if (static_cast<int>(metric.u.size()) != m.vertex_count())
    throw PreconditionError("discrete_curvature: metric size mismatch");
  std::vector<double> k(m.vertex_count(), 2.0 * M_PI);
  for (int t = 0; t < m.triangle_count(); ++t) {
    auto ang = corner_angles(m, metric, t);
    for (int i = 0; i < 3; ++i) k[m.triangles()[t][i]] -= ang[i];
  }
  return k;
}

std::string FlowTrace::to_csv() const {
  std::ostringstream os;
  os << "step,t,max_dev,total_curv\n";
  os.precision(17);
  for (const FlowRecord& r : records)
    os << r.step << "," << r.t << "," << r.max_dev << "," << r.total_curv << "\n";
  return os.str();
}

namespace {

CirclePackingMetric apply_update(const TriMesh& m, const CirclePackingMetric& metric,
                                 const std::vector<double>& k, double c, double dt,
                                 double target_sum) {
  CirclePackingMetric next = metric;
  for (int i = 0; i < m.vertex_count(); ++i) next.u[i] += dt * (c - k[i]);
  double s = std::accumulate(next.u.begin(), next.u.end(), 0.0);
  double shift = (target_sum - s) / m.vertex_count();
  for (double& ui : next.u) ui += shift;
  return next;
}

}  // namespace

CirclePackingMetric ricci_step(const TriMesh& m, const CirclePackingMetric& metric, double c,
                               double dt) {
  if (!(dt > 0.0)) throw PreconditionError("ricci_step: dt must be positive");
  std::vector<double> k = discrete_curvature(m, metric);
  double target_sum = std::accumulate(metric.u.begin(), metric.u.end(), 0.0);
  double step = dt;
  for (int halving = 0; halving <= 30; ++halving) {
    CirclePackingMetric next = apply_update(m, metric, k, c, step, target_sum);
    try {
      discrete_curvature(m, next);  // validates every triangle
      return next;
    } catch (const NumericError&) {
      step *= 0.5;
    }
  }
  throw NumericError("ricci_step: stiff configuration, dt underflow after 30 halvings");
}

double compatible_constant(const TriMesh& m) {
  return 2.0 * M_PI * m.euler_characteristic() / m.vertex_count();
}

FlowResult flow_to_convergence(const TriMesh& m, const CirclePackingMetric& start, double c,
                               double tol, long max_steps, double dt) {
  if (m.euler_characteristic() > 0)
    throw PreconditionError("flow_to_convergence: positive Euler characteristic not supported");
  double c_star = compatible_constant(m);
  if (std::abs(c - c_star) > 1e-12)
    throw PreconditionError("flow_to_convergence: c must be the compatible constant 2*pi*chi/V");
  if (dt <= 0.0) dt = 0.1;  // default schedule

  FlowResult res{start, FlowTrace{}};
  res.trace.dt = dt;
  double t = 0.0;
  for (long step = 0;; ++step) {
    std::vector<double> k = discrete_curvature(m, res.metric);
    double dev = 0.0, total = 0.0, energy = 0.0;
    for (double ki : k) {
      dev = std::max(dev, std::abs(ki - c));
      total += ki;
      energy += 0.5 * (ki - c) * (ki - c);
    }
    res.trace.records.push_back(FlowRecord{step, t, dev, total, energy});
    if (dev < tol) return res;
    if (step >= max_steps)
      throw FlowError("flow_to_convergence: max_steps exceeded", res.trace);
    res.metric = ricci_step(m, res.metric, c, dt);
    t += dt;
  }
}

CirclePackingMetric background_metric_step(const TriMesh& m, const CirclePackingMetric& metric,
                                           const std::vector<double>& r0, double c, double dt) {
  if (m.euler_characteristic() != 0)
    throw PreconditionError("background_metric_step: torus meshes only");
  if (static_cast<int>(r0.size()) != m.vertex_count())
    throw PreconditionError("background_metric_step: r0 size mismatch");
  // Uniform graph Laplacian over edge classes (each unordered pair once).
  std::vector<double> lap(m.vertex_count(), 0.0);
  std::map<std::pair<int, int>, int> seen;
  for (const auto& tri : m.triangles())
    for (int i = 0; i < 3; ++i) {
      int a = tri[i], b = tri[(i + 1) % 3];
      auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
      if (seen[key]++ != 0) continue;  // count each edge class once
      lap[a] += metric.u[b] - metric.u[a];
      lap[b] += metric.u[a] - metric.u[b];
    }
  CirclePackingMetric next = metric;
  for (int i = 0; i < m.vertex_count(); ++i)
    next.u[i] += dt * (std::exp(-metric.u[i]) * (lap[i] - r0[i]) + c);
  return next;
}

double transverse_modulus(const FiberFamily& fam) {
  double mod = 0.0;
  for (std::size_t i = 0; i < fam.fibers.size(); ++i)
    for (std::size_t j = 0; j < fam.fibers.size(); ++j) {
      int diff = (fam.labels[i] - fam.labels[j]) % fam.labels_modulus;
      if (diff < 0) diff += fam.labels_modulus;
      if (diff != 1) continue;  // adjacency = translation by one
      double d = 0.0;
      for (std::size_t v = 0; v < fam.fibers[i].u.size(); ++v)
        d = std::max(d, std::abs(fam.fibers[i].u[v] - fam.fibers[j].u[v]));
      mod = std::max(mod, d);
    }
  return mod;
}

std::string FiberFamily::to_json_string() const {
  nlohmann::json j;
  j["labels_mod"] = labels_modulus;
  j["fibers"] = nlohmann::json::array();
  for (std::size_t i = 0; i < fibers.size(); ++i)
    j["fibers"].push_back({{"label", labels[i]}, {"u", fibers[i].u}});
  return j.dump();
}

FiberFamily FiberFamily::from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError(std::string("FiberFamily: invalid JSON: ") + e.what());
  }
  FiberFamily fam;
  fam.labels_modulus = j.at("labels_mod").get<int>();
  if (fam.labels_modulus < 1) throw PreconditionError("FiberFamily: labels_mod must be positive");
  for (const auto& f : j.at("fibers")) {
    fam.labels.push_back(f.at("label").get<int>());
    fam.fibers.push_back(CirclePackingMetric{f.at("u").get<std::vector<double>>()});
  }
  if (fam.fibers.empty()) throw PreconditionError("FiberFamily: no fibers");
  return fam;
}

namespace {

int thread_cap() {
  if (const char* env = std::getenv("SOLENOID_LAB_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

LaminatedReport laminated_flow(const TriMesh& m, const FiberFamily& fam, double c, double tol,
                               long max_steps) {
  for (const CirclePackingMetric& f : fam.fibers)
    if (static_cast<int>(f.u.size()) != m.vertex_count())
      throw PreconditionError("laminated_flow: fiber size does not match the mesh");

  LaminatedReport rep;
  rep.input_modulus = transverse_modulus(fam);
  rep.output = fam;
  rep.traces.resize(fam.fibers.size());

  std::vector<std::string> failures(fam.fibers.size());
  int threads = std::min<int>(thread_cap(), static_cast<int>(fam.fibers.size()));
  std::vector<std::thread> pool;
  std::size_t chunk = (fam.fibers.size() + threads - 1) / threads;
  for (int w = 0; w < threads; ++w) {
    std::size_t lo = w * chunk, hi = std::min(fam.fibers.size(), lo + chunk);
    pool.emplace_back([&, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) {
        try {
          FlowResult r = flow_to_convergence(m, fam.fibers[i], c, tol, max_steps);
          rep.output.fibers[i] = std::move(r.metric);
          rep.traces[i] = std::move(r.trace);
        } catch (const std::exception& e) {
          failures[i] = e.what();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (std::size_t i = 0; i < failures.size(); ++i)
    if (!failures[i].empty())
      throw NumericError("laminated_flow: fiber " + std::to_string(fam.labels[i]) +
                         " failed: " + failures[i]);

  rep.output_modulus = transverse_modulus(rep.output);
  return rep;
}

}  // namespace solenoid::ricci
