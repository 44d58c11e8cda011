#include "torsion/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace torsion {

namespace {

std::pair<int, int> sorted_edge(int a, int b) {
  return {std::min(a, b), std::max(a, b)};
}

double cross(const Point& a, const Point& b, const Point& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

}  // namespace

std::string to_string(DomainTag tag) {
  switch (tag) {
    case DomainTag::disk: return "disk";
    case DomainTag::rectangle: return "rectangle";
    case DomainTag::lshape: return "lshape";
    case DomainTag::custom: return "custom";
  }
  return "custom";
}

DomainTag domain_tag_from_string(const std::string& name) {
  if (name == "disk") return DomainTag::disk;
  if (name == "rectangle") return DomainTag::rectangle;
  if (name == "lshape") return DomainTag::lshape;
  if (name == "custom") return DomainTag::custom;
  throw std::invalid_argument("unknown domain tag: " + name);
}

double Mesh::signed_area(int t) const {
  const Tri& tr = triangles[t];
  return 0.5 * cross(vertices[tr[0]], vertices[tr[1]], vertices[tr[2]]);
}

Point Mesh::centroid(int t) const {
  const Tri& tr = triangles[t];
  return {(vertices[tr[0]][0] + vertices[tr[1]][0] + vertices[tr[2]][0]) / 3.0,
          (vertices[tr[0]][1] + vertices[tr[1]][1] + vertices[tr[2]][1]) / 3.0};
}

double Mesh::total_area() const {
  double a = 0.0;
  for (int t = 0; t < num_triangles(); ++t) a += signed_area(t);
  return a;
}

int Mesh::num_boundary_vertices() const {
  int n = 0;
  for (char f : boundary_vertex) n += (f != 0);
  return n;
}

Mesh refine(const Mesh& mesh) {
  Mesh out;
  out.domain_tag = mesh.domain_tag;
  out.vertices = mesh.vertices;
  out.boundary_vertex = mesh.boundary_vertex;

  std::set<std::pair<int, int>> bset;
  for (const Edge& e : mesh.boundary_edges) bset.insert(sorted_edge(e[0], e[1]));

  std::map<std::pair<int, int>, int> midpoint;
  auto mid = [&](int a, int b) {
    auto key = sorted_edge(a, b);
    auto it = midpoint.find(key);
    if (it != midpoint.end()) return it->second;
    Point pm = {0.5 * (mesh.vertices[a][0] + mesh.vertices[b][0]),
                0.5 * (mesh.vertices[a][1] + mesh.vertices[b][1])};
    bool on_boundary = bset.count(key) > 0;
    if (on_boundary && mesh.domain_tag == DomainTag::disk) {
      double r = std::hypot(pm[0], pm[1]);
      pm = {pm[0] / r, pm[1] / r};
    }
    int idx = static_cast<int>(out.vertices.size());
    out.vertices.push_back(pm);
    out.boundary_vertex.push_back(on_boundary ? 1 : 0);
    midpoint.emplace(key, idx);
    return idx;
  };

  out.triangles.reserve(mesh.triangles.size() * 4);
  for (const Tri& t : mesh.triangles) {
    int m01 = mid(t[0], t[1]);
    int m12 = mid(t[1], t[2]);
    int m20 = mid(t[2], t[0]);
    out.triangles.push_back({t[0], m01, m20});
    out.triangles.push_back({t[1], m12, m01});
    out.triangles.push_back({t[2], m20, m12});
    out.triangles.push_back({m01, m12, m20});
  }

  out.boundary_edges.reserve(mesh.boundary_edges.size() * 2);
  for (const Edge& e : mesh.boundary_edges) {
    int m = mid(e[0], e[1]);
    out.boundary_edges.push_back({e[0], m});
    out.boundary_edges.push_back({m, e[1]});
  }
  return out;
}

Mesh generate_rectangle(double width, double height, int refinements) {
  if (width <= 0.0 || height <= 0.0)
    throw std::invalid_argument("rectangle dimensions must be positive");
  Mesh m;
  m.domain_tag = DomainTag::rectangle;
  m.vertices = {{0, 0}, {width, 0}, {width, height}, {0, height}};
  m.triangles = {{0, 1, 2}, {0, 2, 3}};
  m.boundary_vertex = {1, 1, 1, 1};
  m.boundary_edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  for (int k = 0; k < refinements; ++k) m = refine(m);
  return m;
}

Mesh generate_disk(int refinements) {
  Mesh m;
  m.domain_tag = DomainTag::disk;
  m.vertices.push_back({0, 0});
  for (int k = 0; k < 6; ++k) {
    double a = M_PI * k / 3.0;
    m.vertices.push_back({std::cos(a), std::sin(a)});
  }
  for (int k = 0; k < 6; ++k) {
    int a = 1 + k;
    int b = 1 + (k + 1) % 6;
    m.triangles.push_back({0, a, b});
    m.boundary_edges.push_back({a, b});
  }
  m.boundary_vertex = {0, 1, 1, 1, 1, 1, 1};
  for (int k = 0; k < refinements; ++k) m = refine(m);
  return m;
}

Mesh generate_lshape(int refinements) {
  // [-1,1]^2 minus [0,1]x[-1,0]; reentrant corner at the origin.
  Mesh m;
  m.domain_tag = DomainTag::lshape;
  m.vertices = {{-1, -1}, {0, -1}, {0, 0}, {-1, 0},
                {-1, 1},  {0, 1},  {1, 0}, {1, 1}};
  m.triangles = {{0, 1, 2}, {0, 2, 3}, {3, 2, 5}, {3, 5, 4}, {2, 6, 7}, {2, 7, 5}};
  m.boundary_vertex = {1, 1, 1, 1, 1, 1, 1, 1};
  m.boundary_edges = {{0, 1}, {1, 2}, {2, 6}, {6, 7},
                      {7, 5}, {5, 4}, {4, 3}, {3, 0}};
  for (int k = 0; k < refinements; ++k) m = refine(m);
  return m;
}

ValidationReport validate(const Mesh& mesh) {
  ValidationReport rep;
  auto flag = [&](const std::string& msg) { rep.violations.push_back(msg); };

  const int nv = mesh.num_vertices();
  const int nt = mesh.num_triangles();
  if (static_cast<int>(mesh.boundary_vertex.size()) != nv)
    flag("boundary_vertex flag count does not match vertex count");

  rep.min_area = 0.0;
  rep.max_area = 0.0;
  rep.min_angle_deg = 180.0;
  bool first = true;
  for (int t = 0; t < nt; ++t) {
    double a = mesh.signed_area(t);
    if (a <= 0.0)
      flag("triangle " + std::to_string(t) + " has non-positive signed area");
    if (first) {
      rep.min_area = rep.max_area = a;
      first = false;
    } else {
      rep.min_area = std::min(rep.min_area, a);
      rep.max_area = std::max(rep.max_area, a);
    }
    const Tri& tr = mesh.triangles[t];
    for (int i = 0; i < 3; ++i) {
      const Point& p0 = mesh.vertices[tr[i]];
      const Point& p1 = mesh.vertices[tr[(i + 1) % 3]];
      const Point& p2 = mesh.vertices[tr[(i + 2) % 3]];
      double ux = p1[0] - p0[0], uy = p1[1] - p0[1];
      double vx = p2[0] - p0[0], vy = p2[1] - p0[1];
      double nu = std::hypot(ux, uy), nv2 = std::hypot(vx, vy);
      if (nu > 0.0 && nv2 > 0.0) {
        double c = std::clamp((ux * vx + uy * vy) / (nu * nv2), -1.0, 1.0);
        rep.min_angle_deg =
            std::min(rep.min_angle_deg, std::acos(c) * 180.0 / M_PI);
      }
    }
  }

  // Edge incidence counts.
  std::map<std::pair<int, int>, int> edge_count;
  for (const Tri& t : mesh.triangles) {
    for (int i = 0; i < 3; ++i)
      edge_count[sorted_edge(t[i], t[(i + 1) % 3])] += 1;
  }
  std::set<std::pair<int, int>> declared_boundary;
  for (const Edge& e : mesh.boundary_edges)
    declared_boundary.insert(sorted_edge(e[0], e[1]));

  std::set<std::pair<int, int>> single_edges;
  for (const auto& [e, c] : edge_count) {
    if (c > 2)
      flag("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
           ") shared by " + std::to_string(c) + " triangles");
    if (c == 1) single_edges.insert(e);
  }
  if (single_edges != declared_boundary)
    flag("boundary_edges do not match the edges incident to one triangle");

  if (mesh.domain_tag != DomainTag::custom) {
    long euler = nv - static_cast<long>(edge_count.size()) + nt;
    if (euler != 1)
      flag("Euler characteristic V-E+T = " + std::to_string(euler) + " != 1");
  }

  for (const auto& e : declared_boundary) {
    for (int v : {e.first, e.second}) {
      if (v >= 0 && v < nv && !mesh.boundary_vertex[v])
        flag("boundary-edge vertex " + std::to_string(v) + " not flagged");
    }
  }

  if (mesh.domain_tag == DomainTag::disk) {
    for (int v = 0; v < nv; ++v) {
      if (mesh.boundary_vertex[v]) {
        double r = std::hypot(mesh.vertices[v][0], mesh.vertices[v][1]);
        if (std::abs(r - 1.0) > 1e-12)
          flag("disk boundary vertex " + std::to_string(v) +
               " off the unit circle by " + std::to_string(std::abs(r - 1.0)));
      }
    }
  }
  return rep;
}

void write_mesh(const Mesh& mesh, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os.precision(17);
  os << mesh.num_vertices() << ' ' << mesh.num_triangles() << ' '
     << mesh.boundary_edges.size() << '\n';
  for (int v = 0; v < mesh.num_vertices(); ++v)
    os << mesh.vertices[v][0] << ' ' << mesh.vertices[v][1] << ' '
       << int(mesh.boundary_vertex[v]) << '\n';
  for (const Tri& t : mesh.triangles)
    os << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  for (const Edge& e : mesh.boundary_edges) os << e[0] << ' ' << e[1] << '\n';
}

Mesh read_mesh(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  int nv = 0, nt = 0, nb = 0;
  if (!(is >> nv >> nt >> nb) || nv < 0 || nt < 0 || nb < 0)
    throw std::runtime_error("malformed mesh header in " + path);
  Mesh m;
  m.vertices.resize(nv);
  m.boundary_vertex.resize(nv);
  for (int v = 0; v < nv; ++v) {
    int f = 0;
    if (!(is >> m.vertices[v][0] >> m.vertices[v][1] >> f))
      throw std::runtime_error("malformed vertex line in " + path);
    m.boundary_vertex[v] = f ? 1 : 0;
  }
  m.triangles.resize(nt);
  for (int t = 0; t < nt; ++t) {
    if (!(is >> m.triangles[t][0] >> m.triangles[t][1] >> m.triangles[t][2]))
      throw std::runtime_error("malformed triangle line in " + path);
  }
  m.boundary_edges.resize(nb);
  for (int b = 0; b < nb; ++b) {
    if (!(is >> m.boundary_edges[b][0] >> m.boundary_edges[b][1]))
      throw std::runtime_error("malformed boundary-edge line in " + path);
  }
  return m;
}

}  // namespace torsion
