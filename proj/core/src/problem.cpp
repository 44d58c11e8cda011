#include "torsion/problem.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace torsion {

namespace {

constexpr double kBoundaryTol = 1e-10;
constexpr double kOverflowExponent = 600.0;

void check_boundary(const ProblemSpec& spec, const ScalarField& u) {
  const Mesh& mesh = *spec.mesh;
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    if (mesh.boundary_vertex[v] &&
        std::abs(u.values[v] - spec.g) > kBoundaryTol)
      throw std::invalid_argument(
          "field violates boundary value at vertex " + std::to_string(v));
  }
}

}  // namespace

void ProblemSpec::check() const {
  if (mesh == nullptr) throw std::invalid_argument("spec has no mesh");
  if (p < 2.0) throw std::invalid_argument("penalty exponent p must be >= 2");
  if (epsilon < 0.0) throw std::invalid_argument("epsilon must be >= 0");
  if (!std::isfinite(h) || !std::isfinite(g))
    throw std::invalid_argument("h and g must be finite");
}

EnergyBreakdown energy(const ProblemSpec& spec, const ScalarField& u) {
  spec.check();
  check_boundary(spec, u);
  const Mesh& mesh = *spec.mesh;
  ElementVecField grads = element_gradients(u);
  EnergyBreakdown e;
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    double area = mesh.signed_area(t);
    double gsq = grads.values[t].dot(grads.values[t]);
    double s = spec.epsilon * spec.epsilon + gsq;
    e.dirichlet_part += 0.5 * area * gsq;
    e.penalty_part += area * std::pow(s, 0.5 * spec.p) / spec.p;
    const Tri& tr = mesh.triangles[t];
    e.source_part -= spec.h * area / 3.0 *
                     (u.values[tr[0]] + u.values[tr[1]] + u.values[tr[2]]);
  }
  e.total = e.dirichlet_part + e.penalty_part + e.source_part;
  return e;
}

std::vector<double> residual(const ProblemSpec& spec, const ScalarField& u) {
  spec.check();
  check_boundary(spec, u);
  const Mesh& mesh = *spec.mesh;
  ElementVecField grads = element_gradients(u);
  std::vector<double> r = assemble_load(mesh, spec.h);
  for (double& v : r) v = -v;

  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const Tri& tr = mesh.triangles[t];
    const Point& p0 = mesh.vertices[tr[0]];
    const Point& p1 = mesh.vertices[tr[1]];
    const Point& p2 = mesh.vertices[tr[2]];
    double two_a = (p1[0] - p0[0]) * (p2[1] - p0[1]) -
                   (p1[1] - p0[1]) * (p2[0] - p0[0]);
    double area = 0.5 * two_a;
    const Vec2 g = grads.values[t];
    double s = spec.epsilon * spec.epsilon + g.dot(g);
    double w = 1.0 + std::pow(s, 0.5 * (spec.p - 2.0));
    Vec2 gp[3] = {{(p1[1] - p2[1]) / two_a, (p2[0] - p1[0]) / two_a},
                  {(p2[1] - p0[1]) / two_a, (p0[0] - p2[0]) / two_a},
                  {(p0[1] - p1[1]) / two_a, (p1[0] - p0[0]) / two_a}};
    for (int i = 0; i < 3; ++i) r[tr[i]] += w * area * g.dot(gp[i]);
  }
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    if (mesh.boundary_vertex[v]) r[v] = 0.0;
  }
  return r;
}

ElementField multiplier_field(const ProblemSpec& spec, const ScalarField& u) {
  spec.check();
  const Mesh& mesh = *spec.mesh;
  ElementVecField grads = element_gradients(u);
  ElementField lambda(mesh);
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    double gn = grads.values[t].norm();
    double m = std::max(gn, spec.epsilon);
    if (m > 0.0 && (spec.p - 2.0) * std::log(m) > kOverflowExponent)
      throw std::runtime_error("multiplier overflow on element " +
                               std::to_string(t) + " (|grad u| = " +
                               std::to_string(gn) + ")");
    double s = spec.epsilon * spec.epsilon + gn * gn;
    lambda.values[t] = std::pow(s, 0.5 * (spec.p - 2.0));
  }
  return lambda;
}

ElementVecField flux_field(const ProblemSpec& spec, const ScalarField& u) {
  ElementField lambda = multiplier_field(spec, u);
  ElementVecField grads = element_gradients(u);
  ElementVecField flux(*spec.mesh);
  for (size_t t = 0; t < flux.values.size(); ++t) {
    flux.values[t] = {lambda.values[t] * grads.values[t].x,
                      lambda.values[t] * grads.values[t].y};
  }
  return flux;
}

}  // namespace torsion
