#include "torsion/fem.hpp"

#include <cmath>
#include <stdexcept>

namespace torsion {

double Vec2::norm() const { return std::hypot(x, y); }

namespace {

struct P1Element {
  double area;
  Vec2 grad_phi[3];  // basis gradients, constant per triangle
};

P1Element p1_element(const Mesh& mesh, int t) {
  const Tri& tr = mesh.triangles[t];
  const Point& p0 = mesh.vertices[tr[0]];
  const Point& p1 = mesh.vertices[tr[1]];
  const Point& p2 = mesh.vertices[tr[2]];
  double two_a = (p1[0] - p0[0]) * (p2[1] - p0[1]) -
                 (p1[1] - p0[1]) * (p2[0] - p0[0]);
  if (two_a <= 0.0)
    throw std::runtime_error("degenerate triangle " + std::to_string(t));
  P1Element e;
  e.area = 0.5 * two_a;
  // grad phi_i = ((y_j - y_k), (x_k - x_j)) / (2A), indices cyclic
  e.grad_phi[0] = {(p1[1] - p2[1]) / two_a, (p2[0] - p1[0]) / two_a};
  e.grad_phi[1] = {(p2[1] - p0[1]) / two_a, (p0[0] - p2[0]) / two_a};
  e.grad_phi[2] = {(p0[1] - p1[1]) / two_a, (p1[0] - p0[0]) / two_a};
  return e;
}

// 6-point rule, exact for degree 4, weights relative to the triangle area.
struct QuadPoint {
  double l0, l1, l2, w;
};
constexpr QuadPoint kQuad6[6] = {
    {0.816847572980459, 0.091576213509771, 0.091576213509771, 0.109951743655322},
    {0.091576213509771, 0.816847572980459, 0.091576213509771, 0.109951743655322},
    {0.091576213509771, 0.091576213509771, 0.816847572980459, 0.109951743655322},
    {0.108103018168070, 0.445948490915965, 0.445948490915965, 0.223381589678011},
    {0.445948490915965, 0.108103018168070, 0.445948490915965, 0.223381589678011},
    {0.445948490915965, 0.445948490915965, 0.108103018168070, 0.223381589678011},
};

}  // namespace

ElementVecField element_gradients(const ScalarField& u) {
  const Mesh& mesh = *u.mesh;
  ElementVecField g(mesh);
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    P1Element e = p1_element(mesh, t);
    const Tri& tr = mesh.triangles[t];
    Vec2 v{0.0, 0.0};
    for (int i = 0; i < 3; ++i) {
      v.x += u.values[tr[i]] * e.grad_phi[i].x;
      v.y += u.values[tr[i]] * e.grad_phi[i].y;
    }
    g.values[t] = v;
  }
  return g;
}

SparseMatrix assemble_weighted_stiffness(const Mesh& mesh,
                                         const ElementField& weight) {
  const int nt = mesh.num_triangles();
  if (static_cast<int>(weight.values.size()) != nt)
    throw std::invalid_argument("weight length does not match triangle count");
  std::vector<std::tuple<int, int, double>> trip;
  trip.reserve(9 * static_cast<size_t>(nt));
  for (int t = 0; t < nt; ++t) {
    double w = weight.values[t];
    if (w < 0.0)
      throw std::invalid_argument("negative stiffness weight on element " +
                                  std::to_string(t));
    P1Element e = p1_element(mesh, t);
    const Tri& tr = mesh.triangles[t];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        trip.emplace_back(tr[i], tr[j],
                          w * e.area * e.grad_phi[i].dot(e.grad_phi[j]));
  }
  return SparseMatrix::from_triplets(mesh.num_vertices(), std::move(trip));
}

SparseMatrix assemble_weighted_stiffness(const Mesh& mesh, double weight) {
  return assemble_weighted_stiffness(mesh, ElementField(mesh, weight));
}

std::vector<double> assemble_load(const Mesh& mesh, const ElementField& h) {
  std::vector<double> b(mesh.num_vertices(), 0.0);
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    P1Element e = p1_element(mesh, t);
    const Tri& tr = mesh.triangles[t];
    double v = h.values[t] * e.area / 3.0;
    for (int i = 0; i < 3; ++i) b[tr[i]] += v;
  }
  return b;
}

std::vector<double> assemble_load(const Mesh& mesh, double h) {
  return assemble_load(mesh, ElementField(mesh, h));
}

void apply_dirichlet(SparseMatrix& K, std::vector<double>& b, const Mesh& mesh,
                     double value) {
  const auto& bdry = mesh.boundary_vertex;
  for (int i = 0; i < K.n; ++i) {
    if (bdry[i]) {
      for (int k = K.row_ptr[i]; k < K.row_ptr[i + 1]; ++k)
        K.values[k] = (K.col_idx[k] == i) ? 1.0 : 0.0;
      b[i] = value;
    } else {
      for (int k = K.row_ptr[i]; k < K.row_ptr[i + 1]; ++k) {
        int j = K.col_idx[k];
        if (bdry[j]) {
          b[i] -= K.values[k] * value;
          K.values[k] = 0.0;
        }
      }
    }
  }
}

FieldNorms norms(const ScalarField& u) {
  const Mesh& mesh = *u.mesh;
  FieldNorms out;
  double l2sq = 0.0, h1sq = 0.0;
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    P1Element e = p1_element(mesh, t);
    const Tri& tr = mesh.triangles[t];
    double u0 = u.values[tr[0]], u1 = u.values[tr[1]], u2 = u.values[tr[2]];
    // edge-midpoint rule, exact for quadratics
    double m01 = 0.5 * (u0 + u1), m12 = 0.5 * (u1 + u2), m20 = 0.5 * (u2 + u0);
    l2sq += e.area / 3.0 * (m01 * m01 + m12 * m12 + m20 * m20);
    Vec2 g{0.0, 0.0};
    for (int i = 0; i < 3; ++i) {
      g.x += u.values[tr[i]] * e.grad_phi[i].x;
      g.y += u.values[tr[i]] * e.grad_phi[i].y;
    }
    h1sq += e.area * g.dot(g);
    out.w1_inf = std::max(out.w1_inf, g.norm());
  }
  out.l2 = std::sqrt(l2sq);
  out.h1_semi = std::sqrt(h1sq);
  return out;
}

FieldNorms error_vs_function(const ScalarField& u, const PointFn& f_exact,
                             const GradFn& grad_exact) {
  const Mesh& mesh = *u.mesh;
  FieldNorms out;
  double l2sq = 0.0, h1sq = 0.0;
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    P1Element e = p1_element(mesh, t);
    const Tri& tr = mesh.triangles[t];
    const Point& p0 = mesh.vertices[tr[0]];
    const Point& p1 = mesh.vertices[tr[1]];
    const Point& p2 = mesh.vertices[tr[2]];
    Vec2 gu{0.0, 0.0};
    for (int i = 0; i < 3; ++i) {
      gu.x += u.values[tr[i]] * e.grad_phi[i].x;
      gu.y += u.values[tr[i]] * e.grad_phi[i].y;
    }
    for (const QuadPoint& q : kQuad6) {
      Point x = {q.l0 * p0[0] + q.l1 * p1[0] + q.l2 * p2[0],
                 q.l0 * p0[1] + q.l1 * p1[1] + q.l2 * p2[1]};
      double uh = q.l0 * u.values[tr[0]] + q.l1 * u.values[tr[1]] +
                  q.l2 * u.values[tr[2]];
      double dv = uh - f_exact(x);
      Vec2 ge = grad_exact(x);
      double dx = gu.x - ge.x, dy = gu.y - ge.y;
      l2sq += q.w * e.area * dv * dv;
      h1sq += q.w * e.area * (dx * dx + dy * dy);
    }
    Point c = mesh.centroid(t);
    Vec2 gc = grad_exact(c);
    out.w1_inf = std::max(
        out.w1_inf, std::hypot(gu.x - gc.x, gu.y - gc.y));
  }
  out.l2 = std::sqrt(l2sq);
  out.h1_semi = std::sqrt(h1sq);
  return out;
}

ScalarField interpolate(const Mesh& mesh, const PointFn& f) {
  ScalarField u(mesh);
  for (int v = 0; v < mesh.num_vertices(); ++v) u.values[v] = f(mesh.vertices[v]);
  return u;
}

}  // namespace torsion
