#pragma once

#include <string>
#include <vector>

#include "torsion/problem.hpp"

namespace torsion {

struct SolverConfig {
  double c1 = 1e-4;        // Armijo sufficient-decrease constant, in (0,1)
  double shrink = 0.5;     // backtracking factor, in (0,1)
  double eps_tol = 1e-8;   // stopping tolerance on the scaled residual norm
  int max_outer = 2000;
  double cg_tol = 1e-10;
  int cg_maxit = 0;        // <= 0 selects 10*n
  double alpha_init = 1.0;
  std::vector<double> p_schedule = {2, 10, 50, 100, 300, 500};

  void check() const;  // throws, naming the offending field
};

struct SolveReport {
  ScalarField u;
  ElementField lambda;
  double p = 0.0;
  int outer_iterations = 0;
  std::vector<double> energy_history;    // initial energy plus one per step
  std::vector<double> residual_history;  // scaled norm, one per outer check
  std::vector<double> step_history;      // accepted Armijo steps
  bool converged = false;
  double wall_seconds = 0.0;
};

// Solves, in the P1 space with zero boundary values,
//   int (1 + lambda_n) grad w . grad v = -residual(u_n) . v  for all v,
// giving a descent direction for the penalized energy. Throws if the
// inner CG does not converge.
ScalarField descent_direction(const ProblemSpec& spec, const ScalarField& u_n,
                              const SolverConfig& cfg);

// Backtracking line search on the full penalized energy. Requires
// residual(u_n) . w_n < 0; throws after 60 shrinks without decrease.
double armijo_search(const ProblemSpec& spec, const ScalarField& u_n,
                     const ScalarField& w_n, const SolverConfig& cfg);

// Primal-dual preconditioned descent: multiplier, descent direction,
// Armijo step, repeat until the scaled residual norm (Euclidean norm over
// the free unknowns divided by sqrt(#free)) drops below eps_tol.
SolveReport solve(const ProblemSpec& spec, const SolverConfig& cfg,
                  const ScalarField& u_init);

struct ContinuationResult {
  std::vector<SolveReport> reports;  // one per completed p stage
  bool ok = true;
  std::string failure;  // set when a stage aborted
};

// Solves for each p in cfg.p_schedule, warm-starting every stage from the
// previous solution (the first from the constant boundary field). A stage
// failure aborts with the completed prefix returned.
ContinuationResult p_continuation(ProblemSpec spec, const SolverConfig& cfg);

}  // namespace torsion
