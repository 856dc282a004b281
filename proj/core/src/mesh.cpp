#include "solenoid/mesh.hpp"

#include <algorithm>

#include <json.hpp>

#include "solenoid/errors.hpp"

namespace solenoid::ricci {

namespace {

std::pair<int, int> ordered(int a, int b) { return a <= b ? std::make_pair(a, b) : std::make_pair(b, a); }

}  // namespace

TriMesh::TriMesh(int vertex_count, std::vector<std::array<int, 3>> triangles,
                 std::map<std::pair<int, int>, double> inversive)
    : v_(vertex_count), tris_(std::move(triangles)), inversive_(std::move(inversive)) {
  if (v_ < 1) throw PreconditionError("TriMesh: no vertices");
  if (tris_.empty()) throw PreconditionError("TriMesh: no triangles");
  std::map<std::pair<int, int>, int> side_count;
  for (const auto& t : tris_) {
    for (int i = 0; i < 3; ++i) {
      if (t[i] < 0 || t[i] >= v_) throw PreconditionError("TriMesh: vertex index out of range");
      side_count[ordered(t[i], t[(i + 1) % 3])] += 1;
    }
  }
  int sides = 0;
  for (const auto& [pair, count] : side_count) {
    if (count % 2 != 0)
      throw PreconditionError("TriMesh: surface not closed, odd side count on edge (" +
                              std::to_string(pair.first) + "," + std::to_string(pair.second) + ")");
    sides += count;
  }
  edges_ = sides / 2;
  for (const auto& [pair, w] : inversive_) {
    if (w < 0.0) throw PreconditionError("TriMesh: inversive distances must be >= 0");
    if (side_count.find(ordered(pair.first, pair.second)) == side_count.end())
      throw PreconditionError("TriMesh: weight on a nonexistent edge");
  }
}

double TriMesh::inversive_of(int a, int b) const {
  auto it = inversive_.find(ordered(a, b));
  return it == inversive_.end() ? 1.0 : it->second;
}

std::string TriMesh::to_json_string() const {
  nlohmann::json j;
  j["vertices"] = v_;
  j["triangles"] = nlohmann::json::array();
  for (const auto& t : tris_) j["triangles"].push_back({t[0], t[1], t[2]});
  if (!inversive_.empty()) {
    j["inversive"] = nlohmann::json::array();
    for (const auto& [pair, w] : inversive_)
      j["inversive"].push_back({{"edge", {pair.first, pair.second}}, {"value", w}});
  }
  return j.dump();
}

TriMesh TriMesh::from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError(std::string("TriMesh: invalid JSON: ") + e.what());
  }
  int v = j.at("vertices").get<int>();
  std::vector<std::array<int, 3>> tris;
  for (const auto& t : j.at("triangles")) {
    if (!t.is_array() || t.size() != 3)
      throw PreconditionError("TriMesh: triangles must be index triples");
    tris.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
  }
  std::map<std::pair<int, int>, double> inv;
  if (j.contains("inversive")) {
    for (const auto& e : j["inversive"]) {
      auto edge = e.at("edge");
      inv[ordered(edge[0].get<int>(), edge[1].get<int>())] = e.at("value").get<double>();
    }
  }
  return TriMesh(v, std::move(tris), std::move(inv));
}

TriMesh subdivide(const TriMesh& m) {
  // Simplicial check: at most two sides per vertex pair and no loops,
  // otherwise midpoints keyed by vertex pair would pinch the surface.
  std::map<std::pair<int, int>, int> side_count;
  for (const auto& t : m.triangles())
    for (int i = 0; i < 3; ++i) {
      int a = t[i], b = t[(i + 1) % 3];
      if (a == b) throw PreconditionError("subdivide: mesh has a loop edge");
      side_count[ordered(a, b)] += 1;
    }
  for (const auto& [pair, count] : side_count)
    if (count != 2) throw PreconditionError("subdivide: mesh has parallel edges");

  std::map<std::pair<int, int>, int> midpoint;
  int next = m.vertex_count();
  for (const auto& [pair, count] : side_count) midpoint[pair] = next++;

  std::vector<std::array<int, 3>> tris;
  tris.reserve(4 * m.triangles().size());
  for (const auto& t : m.triangles()) {
    int a = t[0], b = t[1], c = t[2];
    int ab = midpoint[ordered(a, b)], bc = midpoint[ordered(b, c)], ca = midpoint[ordered(c, a)];
    tris.push_back({a, ab, ca});
    tris.push_back({ab, b, bc});
    tris.push_back({ca, bc, c});
    tris.push_back({ab, bc, ca});
  }
  return TriMesh(next, std::move(tris));
}

TriMesh octagon_genus2() {
  // Fan of the octagon with boundary word aba'b'cdc'd'; all eight rim
  // vertices collapse to one point.
  std::vector<std::array<int, 3>> tris;
  for (int i = 1; i + 1 < 8; ++i) tris.push_back({0, 0, 0});
  return TriMesh(1, std::move(tris));
}

namespace {

std::vector<std::array<int, 3>> torus_triangles(int nx, int ny, int base) {
  std::vector<std::array<int, 3>> tris;
  auto idx = [&](int i, int j) { return base + (i % nx) * ny + (j % ny); };
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      tris.push_back({idx(i, j), idx(i + 1, j), idx(i + 1, j + 1)});
      tris.push_back({idx(i, j), idx(i + 1, j + 1), idx(i, j + 1)});
    }
  return tris;
}

}  // namespace

TriMesh flat_torus(int nx, int ny) {
  if (nx < 3 || ny < 3) throw PreconditionError("flat_torus: grid must be at least 3x3");
  return TriMesh(nx * ny, torus_triangles(nx, ny, 0));
}

TriMesh glued_tori_genus2(int grid) {
  if (grid < 3) throw PreconditionError("glued_tori_genus2: grid must be at least 3");
  int n = grid * grid;
  auto tris_a = torus_triangles(grid, grid, 0);
  auto tris_b = torus_triangles(grid, grid, n);

  // Remove the first triangle of each torus and identify the boundary
  // cycles with reversed orientation.
  std::array<int, 3> removed_a = tris_a.front();
  std::array<int, 3> removed_b = tris_b.front();
  tris_a.erase(tris_a.begin());
  tris_b.erase(tris_b.begin());

  std::vector<int> remap(2 * n);
  for (int i = 0; i < 2 * n; ++i) remap[i] = i;
  remap[removed_b[0]] = removed_a[0];
  remap[removed_b[1]] = removed_a[2];
  remap[removed_b[2]] = removed_a[1];

  std::vector<std::array<int, 3>> tris = tris_a;
  for (auto t : tris_b) tris.push_back({remap[t[0]], remap[t[1]], remap[t[2]]});

  // Compact the vertex numbering (three B vertices disappeared).
  std::vector<int> compact(2 * n, -1);
  int next = 0;
  for (auto& t : tris)
    for (int& v : t) {
      if (compact[v] < 0) compact[v] = next++;
      v = compact[v];
    }
  return TriMesh(next, std::move(tris));
}

TriMesh genus2_mesh(int grid, int subdivisions) {
  TriMesh m = glued_tori_genus2(grid);
  for (int i = 0; i < subdivisions; ++i) m = subdivide(m);
  return m;
}

}  // namespace solenoid::ricci
