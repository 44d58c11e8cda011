#pragma once

#include "torsion/fem.hpp"
#include "torsion/problem.hpp"
#include "torsion/solver.hpp"

namespace torsion {

// Closed-form elastoplastic torsion solution on the unit disk for h = 4:
//   u(r) = 1 - r            for 1/2 <= r <= 1,
//   u(r) = -r^2 + 3/4       for 0 <= r <= 1/2.
// Throws when |x| > 1 + 1e-12.
double exact_disk_u(const Point& x);
Vec2 exact_disk_grad_u(const Point& x);

// Matching multiplier: 2r - 1 on the plastic annulus r >= 1/2, zero inside.
double exact_disk_lambda(const Point& x);

// Radial solution of -2 * laplace(u) = h with zero boundary data,
// u(r) = (h/8)(1 - r^2); the exact solution of the p = 2 penalized problem.
double exact_disk_p2(double h, const Point& x);
Vec2 exact_disk_p2_grad(double h, const Point& x);

// u(r) = (h/4)(1 - r^2), the solution of -laplace(u) = h; equals the
// constrained minimizer while the constraint stays inactive, which
// requires h <= 2 (max gradient h/2). Throws for h > 2.
double exact_disk_unconstrained(double h, const Point& x);
Vec2 exact_disk_unconstrained_grad(double h, const Point& x);

struct ErrorRow {
  double p = 0.0;
  int cells = 0;
  int dofs = 0;
  double l2 = 0.0;
  double h1 = 0.0;
  double w1_inf = 0.0;
  double dual_l1 = 0.0;
  double dual_linf = 0.0;
};

// One error-table row for the h = 4 unit-disk problem: primal errors
// against exact_disk_u, dual errors comparing the piecewise-constant
// lambda_p against exact_disk_lambda at element centroids (area-weighted
// L1 and max). Throws for a non-disk mesh or h != 4.
ErrorRow error_row(const ProblemSpec& spec, const SolveReport& report);

}  // namespace torsion
