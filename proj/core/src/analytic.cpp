#include "torsion/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace torsion {

namespace {

double radius_checked(const Point& x) {
  double r = std::hypot(x[0], x[1]);
  if (r > 1.0 + 1e-12)
    throw std::invalid_argument("point outside the closed unit disk");
  return r;
}

}  // namespace

double exact_disk_u(const Point& x) {
  double r = radius_checked(x);
  if (r >= 0.5) return 1.0 - r;
  return -r * r + 0.75;
}

Vec2 exact_disk_grad_u(const Point& x) {
  double r = radius_checked(x);
  if (r == 0.0) return {0.0, 0.0};
  if (r >= 0.5) return {-x[0] / r, -x[1] / r};
  return {-2.0 * x[0], -2.0 * x[1]};
}

double exact_disk_lambda(const Point& x) {
  double r = radius_checked(x);
  return r >= 0.5 ? 2.0 * r - 1.0 : 0.0;
}

double exact_disk_p2(double h, const Point& x) {
  double r = radius_checked(x);
  return h / 8.0 * (1.0 - r * r);
}

Vec2 exact_disk_p2_grad(double h, const Point& x) {
  radius_checked(x);
  return {-h / 4.0 * x[0], -h / 4.0 * x[1]};
}

double exact_disk_unconstrained(double h, const Point& x) {
  if (h > 2.0)
    throw std::invalid_argument(
        "exact_disk_unconstrained requires h <= 2 (inactive constraint)");
  double r = radius_checked(x);
  return h / 4.0 * (1.0 - r * r);
}

Vec2 exact_disk_unconstrained_grad(double h, const Point& x) {
  if (h > 2.0)
    throw std::invalid_argument(
        "exact_disk_unconstrained requires h <= 2 (inactive constraint)");
  radius_checked(x);
  return {-h / 2.0 * x[0], -h / 2.0 * x[1]};
}

ErrorRow error_row(const ProblemSpec& spec, const SolveReport& report) {
  const Mesh& mesh = *spec.mesh;
  if (mesh.domain_tag != DomainTag::disk)
    throw std::invalid_argument("error_row requires the unit-disk domain");
  if (spec.h != 4.0)
    throw std::invalid_argument("error_row requires the h = 4 problem");

  ErrorRow row;
  row.p = report.p;
  row.cells = mesh.num_triangles();
  row.dofs = mesh.num_vertices();

  FieldNorms err = error_vs_function(report.u, exact_disk_u, exact_disk_grad_u);
  row.l2 = err.l2;
  row.h1 = err.h1_semi;
  row.w1_inf = err.w1_inf;

  for (int t = 0; t < mesh.num_triangles(); ++t) {
    Point c = mesh.centroid(t);
    double d = std::abs(report.lambda.values[t] - exact_disk_lambda(c));
    row.dual_l1 += mesh.signed_area(t) * d;
    row.dual_linf = std::max(row.dual_linf, d);
  }
  return row;
}

}  // namespace torsion
