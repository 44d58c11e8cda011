#pragma once

#include <vector>

#include "torsion/fem.hpp"
#include "torsion/problem.hpp"

namespace torsion {

struct FeasibilityReport {
  double max_grad = 0.0;     // max over triangles of |grad u|
  double excess_area = 0.0;  // total area where |grad u| > 1
};

FeasibilityReport feasibility(const ScalarField& u);

struct ComplementarityResidual {
  double l1 = 0.0;   // sum_T area_T * lambda_T * (1 - |grad u|_T)_+
  double sup = 0.0;  // max_T lambda_T * (1 - |grad u|_T)_+
};

ComplementarityResidual complementarity(const ScalarField& u,
                                        const ElementField& lambda);

// Pairings int lambda_p grad u_p . grad v for each test field (which must
// vanish on the boundary); compared across a p-schedule to observe the
// weak-* convergence of the flux.
std::vector<double> flux_pairing(const ProblemSpec& spec, const ScalarField& u,
                                 const std::vector<ScalarField>& test_fields);

// sum_T area_T * (|A_T| - A_T . grad u_ref|_T)_+ ; near zero when the
// flux aligns with grad u_ref wherever it is nonzero and |grad u_ref| = 1
// there.
double representation_defect(const ScalarField& u_ref,
                             const ElementVecField& flux);

// Payne-Philippin auxiliary field, per triangle:
//   Psi = |grad u|^2 / 2 + 2 (p-1)/p |grad u|^p + alpha * (-h * u(centroid)).
// Reported for inspection only; no bound is asserted.
ElementField psi_field(const ProblemSpec& spec, const ScalarField& u,
                       double alpha);

}  // namespace torsion
