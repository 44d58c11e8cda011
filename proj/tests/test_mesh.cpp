#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "torsion/mesh.hpp"

using namespace torsion;

namespace {

int count_edges(const Mesh& m) {
  std::set<std::pair<int, int>> edges;
  for (const Tri& t : m.triangles) {
    for (int i = 0; i < 3; ++i) {
      int a = t[i], b = t[(i + 1) % 3];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  return static_cast<int>(edges.size());
}

std::vector<Point> sorted_vertices(const Mesh& m) {
  std::vector<Point> v = m.vertices;
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("rectangle generator counts") {
  Mesh m = generate_rectangle(1, 1, 0);
  CHECK(m.num_triangles() == 2);
  CHECK(m.num_vertices() == 4);
  CHECK(m.num_vertices() - count_edges(m) + m.num_triangles() == 1);

  Mesh m1 = generate_rectangle(1, 1, 1);
  CHECK(m1.num_triangles() == 8);
  CHECK(m1.num_vertices() == 9);

  Mesh wide = generate_rectangle(2, 1, 0);
  CHECK(wide.num_boundary_vertices() == 4);

  CHECK_THROWS(generate_rectangle(0, 1, 0));
  CHECK_THROWS(generate_rectangle(1, -2, 0));
}

TEST_CASE("disk generator counts and boundary circle") {
  Mesh m0 = generate_disk(0);
  CHECK(m0.num_triangles() == 6);
  CHECK(m0.num_vertices() == 7);
  for (int v = 0; v < m0.num_vertices(); ++v) {
    if (m0.boundary_vertex[v])
      CHECK(std::hypot(m0.vertices[v][0], m0.vertices[v][1]) ==
            doctest::Approx(1.0).epsilon(1e-13));
  }

  Mesh m1 = generate_disk(1);
  CHECK(m1.num_triangles() == 24);
  int on_circle = 0;
  for (int v = 0; v < m1.num_vertices(); ++v) {
    if (m1.boundary_vertex[v]) {
      CHECK(std::abs(std::hypot(m1.vertices[v][0], m1.vertices[v][1]) - 1.0) <=
            1e-12);
      ++on_circle;
    }
  }
  CHECK(on_circle == 12);

  for (int k = 0; k <= 3; ++k)
    CHECK(generate_disk(k).num_triangles() == 6 * (1 << (2 * k)));
}

TEST_CASE("lshape generator") {
  Mesh m = generate_lshape(0);
  CHECK(m.num_triangles() == 6);
  CHECK(m.num_vertices() - count_edges(m) + m.num_triangles() == 1);
  CHECK(m.total_area() == doctest::Approx(3.0));

  for (int lvl : {0, 1, 3}) {
    Mesh mk = generate_lshape(lvl);
    bool origin_on_boundary = false;
    for (int v = 0; v < mk.num_vertices(); ++v) {
      if (std::abs(mk.vertices[v][0]) < 1e-14 &&
          std::abs(mk.vertices[v][1]) < 1e-14)
        origin_on_boundary = mk.boundary_vertex[v] != 0;
    }
    CHECK(origin_on_boundary);
  }
}

TEST_CASE("refine rules") {
  Mesh sq = generate_rectangle(1, 1, 0);
  Mesh r = refine(sq);
  CHECK(r.num_triangles() == 8);
  CHECK(r.total_area() == doctest::Approx(sq.total_area()).epsilon(1e-13));

  Mesh d1 = refine(generate_disk(0));
  int bdry = 0;
  for (int v = 0; v < d1.num_vertices(); ++v) {
    if (d1.boundary_vertex[v]) {
      ++bdry;
      CHECK(std::abs(std::hypot(d1.vertices[v][0], d1.vertices[v][1]) - 1.0) <=
            1e-12);
    }
  }
  CHECK(bdry == 12);

  // refine twice equals generating two levels deeper, up to vertex order
  Mesh a = refine(refine(generate_disk(1)));
  Mesh b = generate_disk(3);
  auto va = sorted_vertices(a), vb = sorted_vertices(b);
  REQUIRE(va.size() == vb.size());
  for (size_t i = 0; i < va.size(); ++i) {
    CHECK(va[i][0] == doctest::Approx(vb[i][0]).epsilon(1e-13));
    CHECK(va[i][1] == doctest::Approx(vb[i][1]).epsilon(1e-13));
  }
}

TEST_CASE("disk area approaches pi under refinement") {
  double prev = generate_disk(0).total_area();
  for (int k = 1; k <= 4; ++k) {
    double a = generate_disk(k).total_area();
    CHECK(a > prev);
    CHECK(a < M_PI);
    // error shrinks by about 4x per level
    CHECK((M_PI - a) < 0.35 * (M_PI - prev));
    prev = a;
  }
}

TEST_CASE("validate accepts generator output") {
  for (int k : {0, 2}) {
    CHECK(validate(generate_disk(k)).ok());
    CHECK(validate(generate_rectangle(2, 1, k)).ok());
    CHECK(validate(generate_lshape(k)).ok());
  }
}

TEST_CASE("validate flags a clockwise triangle") {
  Mesh m = generate_rectangle(1, 1, 0);
  std::swap(m.triangles[0][1], m.triangles[0][2]);
  ValidationReport rep = validate(m);
  CHECK(!rep.ok());
  bool found = false;
  for (const auto& v : rep.violations)
    found = found || v.find("non-positive signed area") != std::string::npos;
  CHECK(found);
}

TEST_CASE("validate reports geometry stats") {
  ValidationReport rep = validate(generate_rectangle(1, 1, 0));
  CHECK(rep.min_angle_deg == doctest::Approx(45.0));
  CHECK(rep.min_area == doctest::Approx(0.5));
  CHECK(rep.max_area == doctest::Approx(0.5));
}

TEST_CASE("mesh text format round trip") {
  Mesh m = generate_lshape(2);
  std::string path = "test_mesh_roundtrip.txt";
  write_mesh(m, path);
  Mesh r = read_mesh(path);
  REQUIRE(r.num_vertices() == m.num_vertices());
  REQUIRE(r.num_triangles() == m.num_triangles());
  REQUIRE(r.boundary_edges.size() == m.boundary_edges.size());
  for (int v = 0; v < m.num_vertices(); ++v) {
    CHECK(r.vertices[v][0] == m.vertices[v][0]);
    CHECK(r.vertices[v][1] == m.vertices[v][1]);
    CHECK(r.boundary_vertex[v] == m.boundary_vertex[v]);
  }
  CHECK(r.triangles == m.triangles);
  std::remove(path.c_str());
}
