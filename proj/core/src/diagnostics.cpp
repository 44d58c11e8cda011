#include "torsion/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace torsion {

FeasibilityReport feasibility(const ScalarField& u) {
  const Mesh& mesh = *u.mesh;
  ElementVecField grads = element_gradients(u);
  FeasibilityReport rep;
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    double gn = grads.values[t].norm();
    rep.max_grad = std::max(rep.max_grad, gn);
    if (gn > 1.0) rep.excess_area += mesh.signed_area(t);
  }
  return rep;
}

ComplementarityResidual complementarity(const ScalarField& u,
                                        const ElementField& lambda) {
  const Mesh& mesh = *u.mesh;
  if (lambda.mesh != u.mesh)
    throw std::invalid_argument("complementarity: mesh mismatch");
  ElementVecField grads = element_gradients(u);
  ComplementarityResidual res;
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    double slack = std::max(0.0, 1.0 - grads.values[t].norm());
    double v = lambda.values[t] * slack;
    res.l1 += mesh.signed_area(t) * v;
    res.sup = std::max(res.sup, v);
  }
  return res;
}

std::vector<double> flux_pairing(const ProblemSpec& spec, const ScalarField& u,
                                 const std::vector<ScalarField>& test_fields) {
  const Mesh& mesh = *spec.mesh;
  ElementField lambda = multiplier_field(spec, u);
  ElementVecField gu = element_gradients(u);
  std::vector<double> out;
  out.reserve(test_fields.size());
  for (const ScalarField& v : test_fields) {
    for (int i = 0; i < mesh.num_vertices(); ++i) {
      if (mesh.boundary_vertex[i] && v.values[i] != 0.0)
        throw std::invalid_argument(
            "flux_pairing: test field does not vanish on the boundary");
    }
    ElementVecField gv = element_gradients(v);
    double s = 0.0;
    for (int t = 0; t < mesh.num_triangles(); ++t)
      s += mesh.signed_area(t) * lambda.values[t] *
           gu.values[t].dot(gv.values[t]);
    out.push_back(s);
  }
  return out;
}

double representation_defect(const ScalarField& u_ref,
                             const ElementVecField& flux) {
  const Mesh& mesh = *u_ref.mesh;
  ElementVecField g = element_gradients(u_ref);
  constexpr double kFeasTol = 1e-9;
  double defect = 0.0;
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    if (g.values[t].norm() > 1.0 + kFeasTol)
      throw std::invalid_argument(
          "representation_defect: reference field is infeasible on element " +
          std::to_string(t));
    const Vec2& a = flux.values[t];
    defect += mesh.signed_area(t) *
              std::max(0.0, a.norm() - a.dot(g.values[t]));
  }
  return defect;
}

ElementField psi_field(const ProblemSpec& spec, const ScalarField& u,
                       double alpha) {
  const Mesh& mesh = *spec.mesh;
  ElementVecField grads = element_gradients(u);
  ElementField psi(mesh);
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    double gsq = grads.values[t].dot(grads.values[t]);
    const Tri& tr = mesh.triangles[t];
    double uc = (u.values[tr[0]] + u.values[tr[1]] + u.values[tr[2]]) / 3.0;
    psi.values[t] = 0.5 * gsq +
                    2.0 * (spec.p - 1.0) / spec.p *
                        std::pow(gsq, 0.5 * spec.p) -
                    alpha * spec.h * uc;
  }
  return psi;
}

}  // namespace torsion
