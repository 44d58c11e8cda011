#pragma once

#include <functional>
#include <vector>

#include "torsion/linalg.hpp"
#include "torsion/mesh.hpp"

namespace torsion {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  double norm() const;
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
};

/// Piecewise-linear (P1) finite-element function given by nodal values.
struct ScalarField {
  const Mesh* mesh = nullptr;
  std::vector<double> values;  // one per vertex

  ScalarField() = default;
  ScalarField(const Mesh& m, double constant = 0.0)
      : mesh(&m), values(m.num_vertices(), constant) {}
};

/// One value per triangle (gradient norms, multipliers).
struct ElementField {
  const Mesh* mesh = nullptr;
  std::vector<double> values;

  ElementField() = default;
  ElementField(const Mesh& m, double constant = 0.0)
      : mesh(&m), values(m.num_triangles(), constant) {}
};

/// One 2-vector per triangle (P1 gradients, fluxes).
struct ElementVecField {
  const Mesh* mesh = nullptr;
  std::vector<Vec2> values;

  ElementVecField() = default;
  explicit ElementVecField(const Mesh& m)
      : mesh(&m), values(m.num_triangles()) {}
};

// Constant gradient of the P1 interpolant on each triangle.
// Throws on a degenerate (non-positive area) triangle.
ElementVecField element_gradients(const ScalarField& u);

// K_ij = sum_T weight_T * integral_T grad(phi_i) . grad(phi_j), exact for
// P1. Throws on a negative weight entry.
SparseMatrix assemble_weighted_stiffness(const Mesh& mesh,
                                         const ElementField& weight);
SparseMatrix assemble_weighted_stiffness(const Mesh& mesh, double weight);

// b_i = sum_T h_T * area_T / 3 over triangles containing vertex i
// (exact for element-wise constant h against the P1 basis).
std::vector<double> assemble_load(const Mesh& mesh, double h);
std::vector<double> assemble_load(const Mesh& mesh, const ElementField& h);

// Symmetric elimination of Dirichlet rows/columns: boundary rows and
// columns zeroed, diagonal set to 1, rhs adjusted so the solve returns
// `value` at every flagged vertex.
void apply_dirichlet(SparseMatrix& K, std::vector<double>& b, const Mesh& mesh,
                     double value);

struct FieldNorms {
  double l2 = 0.0;
  double h1_semi = 0.0;
  double w1_inf = 0.0;
};

// L2 by the edge-midpoint rule (exact for the square of a P1 function),
// H1 seminorm exact, W1_inf = max over triangles of |grad u|.
FieldNorms norms(const ScalarField& u);

using PointFn = std::function<double(const Point&)>;
using GradFn = std::function<Vec2(const Point&)>;

// Errors against a smooth exact solution: L2 and H1-seminorm errors by a
// 6-point degree-4 quadrature, W1_inf error at triangle centroids.
FieldNorms error_vs_function(const ScalarField& u, const PointFn& f_exact,
                             const GradFn& grad_exact);

// Nodal interpolant of a pointwise function.
ScalarField interpolate(const Mesh& mesh, const PointFn& f);

}  // namespace torsion
