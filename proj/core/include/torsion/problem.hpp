#pragma once

#include <vector>

#include "torsion/fem.hpp"
#include "torsion/mesh.hpp"

namespace torsion {

/// Gradient-constrained torsion problem data: minimize
///   1/2 int |grad u|^2 - int h u   subject to |grad u| <= 1, u = g on the
/// boundary, approximated by adding the penalty (1/p) int (eps^2 +
/// |grad u|^2)^{p/2}.
struct ProblemSpec {
  const Mesh* mesh = nullptr;
  double h = 4.0;        // constant source
  double g = 0.0;        // constant boundary value
  double p = 2.0;        // penalty exponent, >= 2
  double epsilon = 0.0;  // gradient regularization, >= 0

  void check() const;  // throws on an invalid field
};

struct EnergyBreakdown {
  double dirichlet_part = 0.0;  // 1/2 int |grad u|^2
  double penalty_part = 0.0;    // (1/p) int (eps^2 + |grad u|^2)^{p/2}
  double source_part = 0.0;     // -int h u
  double total = 0.0;
};

// Penalized energy, evaluated exactly element by element. Throws if u
// deviates from the boundary value g by more than 1e-10 at a flagged
// vertex.
EnergyBreakdown energy(const ProblemSpec& spec, const ScalarField& u);

// Exact gradient of `energy` with respect to the free nodal values:
//   r_i = sum_T [1 + (eps^2+|grad u|_T^2)^{(p-2)/2}] area_T grad u . grad
//   phi_i  -  b_i(h),
// with entries at Dirichlet vertices zeroed.
std::vector<double> residual(const ProblemSpec& spec, const ScalarField& u);

// Approximate multiplier lambda_T = (eps^2 + |grad u|_T^2)^{(p-2)/2}.
// Throws (naming the element) when (p-2)*log(max(|grad u|_T, eps))
// exceeds 600.
ElementField multiplier_field(const ProblemSpec& spec, const ScalarField& u);

// Flux A_T = lambda_T * grad u_T.
ElementVecField flux_field(const ProblemSpec& spec, const ScalarField& u);

}  // namespace torsion
