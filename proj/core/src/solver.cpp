#include "torsion/solver.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "torsion/linalg.hpp"

namespace torsion {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double scaled_residual_norm(const Mesh& mesh, const std::vector<double>& r) {
  double s = 0.0;
  int nfree = 0;
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    if (!mesh.boundary_vertex[v]) {
      s += r[v] * r[v];
      ++nfree;
    }
  }
  return nfree > 0 ? std::sqrt(s / nfree) : 0.0;
}

ScalarField direction_from_residual(const ProblemSpec& spec,
                                    const ElementField& lambda,
                                    const std::vector<double>& r,
                                    const SolverConfig& cfg) {
  const Mesh& mesh = *spec.mesh;
  ElementField weight = lambda;
  for (double& w : weight.values) w += 1.0;
  SparseMatrix M = assemble_weighted_stiffness(mesh, weight);
  std::vector<double> rhs(r.size());
  for (size_t i = 0; i < r.size(); ++i) rhs[i] = -r[i];
  apply_dirichlet(M, rhs, mesh, 0.0);
  std::vector<double> x0(r.size(), 0.0);
  CgResult cg = cg_solve(M, rhs, x0, cfg.cg_tol, cfg.cg_maxit);
  if (!cg.converged)
    throw std::runtime_error(
        "inner CG did not converge: " + std::to_string(cg.iterations) +
        " iterations, relative residual " +
        std::to_string(cg.relative_residual));
  ScalarField w(mesh);
  w.values = std::move(cg.x);
  return w;
}

// Near a minimizer the predicted decrease c1*alpha*slope falls below the
// rounding error of the energy itself; without this allowance the line
// search rejects perfectly good steps and stalls.
double energy_noise(double j0) {
  return 16.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(j0));
}

}  // namespace

void SolverConfig::check() const {
  if (!(c1 > 0.0 && c1 < 1.0))
    throw std::invalid_argument("c1 must lie in (0,1)");
  if (!(shrink > 0.0 && shrink < 1.0))
    throw std::invalid_argument("shrink must lie in (0,1)");
  if (!(eps_tol > 0.0)) throw std::invalid_argument("eps_tol must be positive");
  if (max_outer <= 0) throw std::invalid_argument("max_outer must be positive");
  if (!(cg_tol > 0.0)) throw std::invalid_argument("cg_tol must be positive");
  if (!(alpha_init > 0.0))
    throw std::invalid_argument("alpha_init must be positive");
  if (p_schedule.empty())
    throw std::invalid_argument("p_schedule must be non-empty");
  if (p_schedule.front() < 2.0)
    throw std::invalid_argument("p_schedule entries must be >= 2");
  for (size_t i = 1; i < p_schedule.size(); ++i) {
    if (p_schedule[i] <= p_schedule[i - 1])
      throw std::invalid_argument("p_schedule must be strictly increasing");
  }
}

ScalarField descent_direction(const ProblemSpec& spec, const ScalarField& u_n,
                              const SolverConfig& cfg) {
  ElementField lambda = multiplier_field(spec, u_n);
  std::vector<double> r = residual(spec, u_n);
  return direction_from_residual(spec, lambda, r, cfg);
}

double armijo_search(const ProblemSpec& spec, const ScalarField& u_n,
                     const ScalarField& w_n, const SolverConfig& cfg) {
  std::vector<double> r = residual(spec, u_n);
  double slope = dot(r, w_n.values);
  if (!(slope < 0.0))
    throw std::invalid_argument("armijo_search: direction is not a descent "
                                "direction (r.w = " + std::to_string(slope) +
                                ")");
  const double j0 = energy(spec, u_n).total;
  double alpha = cfg.alpha_init;
  ScalarField trial = u_n;
  for (int k = 0; k <= 60; ++k) {
    for (size_t i = 0; i < trial.values.size(); ++i)
      trial.values[i] = u_n.values[i] + alpha * w_n.values[i];
    double jt = energy(spec, trial).total;
    if (std::isfinite(jt) && jt <= j0 + cfg.c1 * alpha * slope + energy_noise(j0))
      return alpha;
    alpha *= cfg.shrink;
  }
  throw std::runtime_error(
      "armijo_search: no sufficient decrease after 60 shrinks");
}

SolveReport solve(const ProblemSpec& spec, const SolverConfig& cfg,
                  const ScalarField& u_init) {
  cfg.check();
  spec.check();
  auto t0 = std::chrono::steady_clock::now();
  const Mesh& mesh = *spec.mesh;

  SolveReport rep;
  rep.p = spec.p;
  rep.u = u_init;
  rep.energy_history.push_back(energy(spec, rep.u).total);

  for (int n = 0; n < cfg.max_outer; ++n) {
    std::vector<double> r = residual(spec, rep.u);
    double rn = scaled_residual_norm(mesh, r);
    rep.residual_history.push_back(rn);
    if (rn <= cfg.eps_tol) {
      rep.converged = true;
      break;
    }
    ElementField lambda = multiplier_field(spec, rep.u);
    ScalarField w = direction_from_residual(spec, lambda, r, cfg);

    double slope = dot(r, w.values);
    if (!(slope < 0.0))
      throw std::runtime_error("solve: computed direction is not a descent "
                               "direction at iteration " + std::to_string(n));
    const double j0 = rep.energy_history.back();
    double alpha = cfg.alpha_init;
    bool accepted = false;
    ScalarField trial = rep.u;
    for (int k = 0; k <= 60; ++k) {
      for (size_t i = 0; i < trial.values.size(); ++i)
        trial.values[i] = rep.u.values[i] + alpha * w.values[i];
      double jt = energy(spec, trial).total;
      if (std::isfinite(jt) &&
          jt <= j0 + cfg.c1 * alpha * slope + energy_noise(j0)) {
        accepted = true;
        rep.u = trial;
        rep.energy_history.push_back(jt);
        rep.step_history.push_back(alpha);
        break;
      }
      alpha *= cfg.shrink;
    }
    if (!accepted)
      throw std::runtime_error(
          "solve: line search failed at iteration " + std::to_string(n));
    rep.outer_iterations = n + 1;
  }
  if (!rep.converged) {
    // one final residual check after exhausting max_outer
    double rn = scaled_residual_norm(mesh, residual(spec, rep.u));
    if (rep.residual_history.empty() ||
        rep.residual_history.size() == static_cast<size_t>(cfg.max_outer)) {
      rep.residual_history.push_back(rn);
      rep.converged = rn <= cfg.eps_tol;
    }
  }
  rep.lambda = multiplier_field(spec, rep.u);
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

ContinuationResult p_continuation(ProblemSpec spec, const SolverConfig& cfg) {
  cfg.check();
  ContinuationResult res;
  ScalarField u(*spec.mesh, spec.g);
  for (double p : cfg.p_schedule) {
    spec.p = p;
    try {
      SolveReport rep = solve(spec, cfg, u);
      u = rep.u;
      res.reports.push_back(std::move(rep));
    } catch (const std::exception& e) {
      res.ok = false;
      res.failure = "stage p = " + std::to_string(p) + ": " + e.what();
      return res;
    }
  }
  return res;
}

}  // namespace torsion
