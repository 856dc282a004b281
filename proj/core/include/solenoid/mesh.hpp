#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace solenoid::ricci {

/// Closed triangulated surface. Delta-complexes are allowed (loops and
/// parallel edges), so the octagon-identification meshes work; edge data
/// is derived from triangle sides, two sides per edge.
class TriMesh {
 public:
  TriMesh(int vertex_count, std::vector<std::array<int, 3>> triangles,
          std::map<std::pair<int, int>, double> inversive = {});

  int vertex_count() const { return v_; }
  int triangle_count() const { return static_cast<int>(tris_.size()); }
  int edge_count() const { return edges_; }
  int euler_characteristic() const { return v_ - edges_ + triangle_count(); }
  const std::vector<std::array<int, 3>>& triangles() const { return tris_; }

  /// Inversive distance attached to the (unordered) vertex pair; 1 when
  /// unset (tangential packing).
  double inversive_of(int a, int b) const;
  bool has_weights() const { return !inversive_.empty(); }

  std::string to_json_string() const;
  static TriMesh from_json_string(const std::string& text);

 private:
  int v_;
  int edges_;
  std::vector<std::array<int, 3>> tris_;
  std::map<std::pair<int, int>, double> inversive_;
};

/// Midpoint 1-to-4 subdivision. Requires a simplicial mesh (no loops or
/// parallel edges), which every mesh below becomes after one round.
TriMesh subdivide(const TriMesh& m);

/// Genus-2 surface as the coned-off octagon with all rim vertices
/// identified: a single vertex, 6 triangles, every metric has curvature
/// -4 pi at the vertex.
TriMesh octagon_genus2();

/// Genus-2 surface from two grid tori glued along a removed triangle.
/// Simplicial for grid >= 3.
TriMesh glued_tori_genus2(int grid = 3);

/// glued_tori_genus2(grid) refined by `subdivisions` rounds.
TriMesh genus2_mesh(int grid = 4, int subdivisions = 1);

/// Flat torus grid (6-regular, equilateral at equal radii). nx, ny >= 3.
TriMesh flat_torus(int nx, int ny);

}  // namespace solenoid::ricci
