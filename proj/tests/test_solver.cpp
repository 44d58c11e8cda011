#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "torsion/analytic.hpp"
#include "torsion/solver.hpp"

using namespace torsion;

namespace {

ProblemSpec disk_spec(const Mesh& m, double h, double p) {
  ProblemSpec s;
  s.mesh = &m;
  s.h = h;
  s.p = p;
  return s;
}

// Discrete solution of the p = 2 problem by a single linear solve.
ScalarField p2_direct(const ProblemSpec& spec, const SolverConfig& cfg) {
  SparseMatrix K = assemble_weighted_stiffness(*spec.mesh, 2.0);
  std::vector<double> b = assemble_load(*spec.mesh, spec.h);
  apply_dirichlet(K, b, *spec.mesh, spec.g);
  CgResult r = cg_solve(K, b, std::vector<double>(K.n, 0.0), cfg.cg_tol);
  REQUIRE(r.converged);
  ScalarField u(*spec.mesh);
  u.values = std::move(r.x);
  return u;
}

}  // namespace

TEST_CASE("solver config validation") {
  SolverConfig cfg;
  CHECK_NOTHROW(cfg.check());
  SolverConfig bad = cfg;
  bad.c1 = 1.5;
  CHECK_THROWS(bad.check());
  bad = cfg;
  bad.shrink = 0.0;
  CHECK_THROWS(bad.check());
  bad = cfg;
  bad.p_schedule = {2, 10, 10};
  CHECK_THROWS(bad.check());
  bad = cfg;
  bad.p_schedule = {1.5, 10};
  CHECK_THROWS(bad.check());
}

TEST_CASE("zero residual gives a zero direction") {
  Mesh m = generate_disk(1);
  ProblemSpec spec = disk_spec(m, 0.0, 4.0);
  SolverConfig cfg;
  ScalarField u0(m);
  ScalarField w = descent_direction(spec, u0, cfg);
  for (double v : w.values) CHECK(std::abs(v) <= 1e-14);
}

TEST_CASE("descent direction vanishes on the boundary and descends") {
  Mesh m = generate_disk(2);
  ProblemSpec spec = disk_spec(m, 4.0, 10.0);
  SolverConfig cfg;
  ScalarField u0(m);
  ScalarField w = descent_direction(spec, u0, cfg);
  for (int v = 0; v < m.num_vertices(); ++v) {
    if (m.boundary_vertex[v]) CHECK(w.values[v] == 0.0);
  }
  std::vector<double> r = residual(spec, u0);
  double slope = 0.0;
  for (size_t i = 0; i < r.size(); ++i) slope += r[i] * w.values[i];
  CHECK(slope < 0.0);
}

TEST_CASE("p=2 descent is an exact Newton step") {
  Mesh m = generate_disk(3);
  ProblemSpec spec = disk_spec(m, 4.0, 2.0);
  SolverConfig cfg;
  SolveReport rep = solve(spec, cfg, ScalarField(m));
  CHECK(rep.converged);
  CHECK(rep.outer_iterations <= 2);
  ScalarField direct = p2_direct(spec, cfg);
  for (int v = 0; v < m.num_vertices(); ++v)
    CHECK(std::abs(rep.u.values[v] - direct.values[v]) <= 1e-8);
}

TEST_CASE("armijo accepts the full Newton step on a quadratic energy") {
  Mesh m = generate_disk(2);
  ProblemSpec spec = disk_spec(m, 4.0, 2.0);
  SolverConfig cfg;
  ScalarField u0(m);
  ScalarField w = descent_direction(spec, u0, cfg);
  CHECK(armijo_search(spec, u0, w, cfg) == doctest::Approx(1.0));
}

TEST_CASE("armijo backtracks an overscaled direction") {
  Mesh m = generate_disk(2);
  ProblemSpec spec = disk_spec(m, 4.0, 2.0);
  SolverConfig cfg;
  ScalarField u0(m);
  ScalarField w = descent_direction(spec, u0, cfg);
  for (double& v : w.values) v *= 1e6;
  double alpha = armijo_search(spec, u0, w, cfg);
  CHECK(alpha < 1e-4);
  // accepted step satisfies the decrease condition
  std::vector<double> r = residual(spec, u0);
  double slope = 0.0;
  for (size_t i = 0; i < r.size(); ++i) slope += r[i] * w.values[i];
  ScalarField trial = u0;
  for (size_t i = 0; i < trial.values.size(); ++i)
    trial.values[i] += alpha * w.values[i];
  CHECK(energy(spec, trial).total <=
        energy(spec, u0).total + cfg.c1 * alpha * slope);
}

TEST_CASE("armijo rejects a non-descent direction") {
  Mesh m = generate_disk(1);
  ProblemSpec spec = disk_spec(m, 4.0, 2.0);
  SolverConfig cfg;
  ScalarField u0(m);
  ScalarField w = descent_direction(spec, u0, cfg);
  for (double& v : w.values) v = -v;
  CHECK_THROWS_AS(armijo_search(spec, u0, w, cfg), std::invalid_argument);
}

TEST_CASE("zero data converges immediately") {
  Mesh m = generate_disk(2);
  for (double p : {2.0, 10.0, 100.0}) {
    SolveReport rep = solve(disk_spec(m, 0.0, p), SolverConfig{}, ScalarField(m));
    CHECK(rep.converged);
    CHECK(rep.outer_iterations == 0);
    for (double v : rep.u.values) CHECK(v == 0.0);
  }
}

TEST_CASE("energy history is monotone") {
  Mesh m = generate_disk(3);
  SolverConfig cfg;
  cfg.p_schedule = {2, 10, 50, 100};
  ContinuationResult res = p_continuation(disk_spec(m, 4.0, 2.0), cfg);
  REQUIRE(res.ok);
  for (const SolveReport& rep : res.reports) {
    CHECK(rep.converged);
    // each accepted step satisfies the sufficient-decrease test up to the
    // rounding allowance of the energy evaluation
    for (size_t i = 1; i < rep.energy_history.size(); ++i) {
      double prev = rep.energy_history[i - 1];
      CHECK(rep.energy_history[i] <= prev + 1e-13 * (1.0 + std::abs(prev)));
    }
    if (rep.energy_history.size() > 1)
      CHECK(rep.energy_history.back() < rep.energy_history.front());
    if (rep.converged)
      CHECK(rep.residual_history.back() <= cfg.eps_tol);
  }
}

TEST_CASE("schedule [2] equals a single p=2 solve") {
  Mesh m = generate_disk(2);
  SolverConfig cfg;
  cfg.p_schedule = {2};
  ProblemSpec spec = disk_spec(m, 4.0, 2.0);
  ContinuationResult res = p_continuation(spec, cfg);
  REQUIRE(res.ok);
  REQUIRE(res.reports.size() == 1);
  SolveReport single = solve(spec, cfg, ScalarField(m));
  CHECK(res.reports[0].u.values == single.u.values);
  CHECK(res.reports[0].outer_iterations == single.outer_iterations);
}

TEST_CASE("warm starts beat cold starts") {
  Mesh m = generate_disk(3);
  SolverConfig cfg;
  cfg.p_schedule = {2, 10, 50, 100};
  ContinuationResult res = p_continuation(disk_spec(m, 4.0, 2.0), cfg);
  REQUIRE(res.ok);
  for (size_t i = 1; i < res.reports.size(); ++i) {
    ProblemSpec spec = disk_spec(m, 4.0, res.reports[i].p);
    std::vector<double> r_cold = residual(spec, ScalarField(m));
    double cold = 0.0;
    int nfree = 0;
    for (int v = 0; v < m.num_vertices(); ++v) {
      if (!m.boundary_vertex[v]) {
        cold += r_cold[v] * r_cold[v];
        ++nfree;
      }
    }
    CHECK(res.reports[i].residual_history.front() <
          std::sqrt(cold / nfree) + 1e-30);
  }
  // multiplier maxima do not decrease along the schedule; skip p = 2 where
  // the exponent p - 2 vanishes and the multiplier is identically one
  double prev_max = 0.0;
  for (const SolveReport& rep : res.reports) {
    if (rep.p <= 2.0) continue;
    double mx = 0.0;
    for (double l : rep.lambda.values) mx = std::max(mx, l);
    CHECK(mx >= prev_max - 1e-12);
    prev_max = mx;
  }
}

TEST_CASE("solver is deterministic") {
  Mesh m = generate_disk(2);
  SolverConfig cfg;
  cfg.p_schedule = {2, 10};
  ContinuationResult a = p_continuation(disk_spec(m, 4.0, 2.0), cfg);
  ContinuationResult b = p_continuation(disk_spec(m, 4.0, 2.0), cfg);
  REQUIRE(a.ok);
  REQUIRE(b.ok);
  REQUIRE(a.reports.size() == b.reports.size());
  for (size_t i = 0; i < a.reports.size(); ++i) {
    CHECK(a.reports[i].outer_iterations == b.reports[i].outer_iterations);
    CHECK(a.reports[i].u.values == b.reports[i].u.values);
    CHECK(a.reports[i].energy_history == b.reports[i].energy_history);
  }
}
