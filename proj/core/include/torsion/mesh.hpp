#pragma once

#include <array>
#include <string>
#include <vector>

namespace torsion {

using Point = std::array<double, 2>;
using Tri = std::array<int, 3>;    // vertex indices, counter-clockwise
using Edge = std::array<int, 2>;   // vertex indices

enum class DomainTag { disk, rectangle, lshape, custom };

std::string to_string(DomainTag tag);
DomainTag domain_tag_from_string(const std::string& name);

/// Conforming triangulation. Immutable after construction; refinement
/// returns a new mesh.
struct Mesh {
  std::vector<Point> vertices;
  std::vector<Tri> triangles;
  std::vector<char> boundary_vertex;  // one flag per vertex
  std::vector<Edge> boundary_edges;
  DomainTag domain_tag = DomainTag::custom;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_triangles() const { return static_cast<int>(triangles.size()); }

  double signed_area(int t) const;
  Point centroid(int t) const;
  double total_area() const;
  int num_boundary_vertices() const;
};

struct ValidationReport {
  std::vector<std::string> violations;
  double min_area = 0.0;
  double max_area = 0.0;
  double min_angle_deg = 0.0;

  bool ok() const { return violations.empty(); }
};

// Generators. Each one builds the coarse mesh and applies `refinements`
// uniform red refinements, so k refinements give 4^k times the coarse
// triangle count.
Mesh generate_rectangle(double width, double height, int refinements);
Mesh generate_disk(int refinements);
Mesh generate_lshape(int refinements);

// Uniform red refinement (each triangle split into 4 via edge midpoints).
// For the disk, new boundary vertices are projected radially onto the
// unit circle.
Mesh refine(const Mesh& mesh);

ValidationReport validate(const Mesh& mesh);

// Plain-text format: header "V T B", then V lines "x y flag",
// T lines "i j k", B lines "i j" (0-based).
void write_mesh(const Mesh& mesh, const std::string& path);
Mesh read_mesh(const std::string& path);

}  // namespace torsion
