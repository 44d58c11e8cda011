// Command-line driver for the gradient-constrained torsion solver.
//
// Subcommands:
//   solve       run a p-continuation from a JSON config
//   table1      disk error-table pipeline (h = 4)
//   export-vtk  convert a report JSON into a legacy ASCII VTK file
//   mesh-info   print mesh counts and validation summary

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "torsion/analytic.hpp"
#include "torsion/diagnostics.hpp"
#include "torsion/io.hpp"
#include "torsion/mesh.hpp"
#include "torsion/solver.hpp"

namespace fs = std::filesystem;
using namespace torsion;

namespace {

std::string p_label(double p) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", p);
  return buf;
}

void export_reports(const RunConfig& cfg, const Mesh& mesh,
                    const ContinuationResult& cont) {
  fs::create_directories(cfg.out_dir);
  std::vector<ErrorRow> rows;
  ProblemSpec spec;
  spec.mesh = &mesh;
  spec.h = cfg.h;
  spec.g = cfg.g;
  spec.epsilon = cfg.epsilon;
  for (const SolveReport& rep : cont.reports) {
    std::string stem = cfg.out_dir + "/report_p" + p_label(rep.p);
    if (cfg.export_json) {
      StoredReport sr;
      sr.domain = cfg.domain;
      sr.refinements = cfg.refinements;
      sr.width = cfg.width;
      sr.height = cfg.height;
      sr.h = cfg.h;
      sr.g = cfg.g;
      sr.epsilon = cfg.epsilon;
      sr.report = rep;
      write_report_json(sr, stem + ".json");
    }
    if (cfg.export_vtk) {
      ElementVecField g = element_gradients(rep.u);
      ElementField gn(mesh);
      for (int t = 0; t < mesh.num_triangles(); ++t)
        gn.values[t] = g.values[t].norm();
      write_vtk(mesh, rep.u, gn, rep.lambda, stem + ".vtk");
    }
    if (cfg.export_csv && cfg.domain == "disk" && cfg.h == 4.0) {
      spec.p = rep.p;
      rows.push_back(error_row(spec, rep));
    }
  }
  if (!rows.empty()) write_error_csv(rows, cfg.out_dir + "/errors.csv");
}

int cmd_solve(const std::string& config_path, const std::string& out_override) {
  RunConfig cfg = load_run_config(config_path);
  if (!out_override.empty()) cfg.out_dir = out_override;
  Mesh mesh = cfg.build_mesh();
  ProblemSpec spec;
  spec.mesh = &mesh;
  spec.h = cfg.h;
  spec.g = cfg.g;
  spec.epsilon = cfg.epsilon;
  ContinuationResult cont = p_continuation(spec, cfg.solver);
  export_reports(cfg, mesh, cont);
  if (!cont.ok) {
    std::cerr << "continuation aborted: " << cont.failure << "\n";
    return cont.reports.empty() ? 1 : 2;
  }
  bool all_converged = true;
  for (const SolveReport& rep : cont.reports) {
    std::cout << "p=" << p_label(rep.p) << " iters=" << rep.outer_iterations
              << " converged=" << (rep.converged ? "yes" : "no")
              << " energy=" << rep.energy_history.back() << "\n";
    all_converged = all_converged && rep.converged;
  }
  return all_converged ? 0 : 2;
}

int cmd_table1(int refinements, std::vector<double> p_list,
               const std::string& out_dir) {
  std::sort(p_list.begin(), p_list.end());
  Mesh mesh = generate_disk(refinements);
  ProblemSpec spec;
  spec.mesh = &mesh;
  spec.h = 4.0;

  SolverConfig cfg;
  cfg.p_schedule = {2.0};
  for (double p : p_list) {
    if (p > cfg.p_schedule.back()) cfg.p_schedule.push_back(p);
  }
  ContinuationResult cont = p_continuation(spec, cfg);
  if (!cont.ok) {
    std::cerr << "continuation aborted: " << cont.failure << "\n";
    return 1;
  }
  std::vector<ErrorRow> rows;
  for (const SolveReport& rep : cont.reports) {
    bool requested = false;
    for (double p : p_list) requested = requested || p == rep.p;
    if (!requested) continue;
    spec.p = rep.p;
    rows.push_back(error_row(spec, rep));
  }
  fs::create_directories(out_dir);
  std::string path = out_dir + "/table1.csv";
  write_error_csv(rows, path);
  for (const ErrorRow& r : rows) {
    std::printf("p=%-6g cells=%d dofs=%d L2=%.3e H1=%.3e W1inf=%.3e "
                "dualL1=%.3e dualLinf=%.3e\n",
                r.p, r.cells, r.dofs, r.l2, r.h1, r.w1_inf, r.dual_l1,
                r.dual_linf);
  }
  std::cout << "wrote " << path << "\n";
  return 0;
}

int cmd_export_vtk(const std::string& report_path, std::string out_path) {
  StoredReport sr = read_report_json(report_path);
  RunConfig mesh_cfg;
  mesh_cfg.domain = sr.domain;
  mesh_cfg.refinements = sr.refinements;
  mesh_cfg.width = sr.width;
  mesh_cfg.height = sr.height;
  Mesh mesh = mesh_cfg.build_mesh();
  if (static_cast<int>(sr.report.u.values.size()) != mesh.num_vertices() ||
      static_cast<int>(sr.report.lambda.values.size()) != mesh.num_triangles()) {
    std::cerr << "report field sizes do not match the regenerated mesh\n";
    return 1;
  }
  sr.report.u.mesh = &mesh;
  sr.report.lambda.mesh = &mesh;
  ElementVecField g = element_gradients(sr.report.u);
  ElementField gn(mesh);
  for (int t = 0; t < mesh.num_triangles(); ++t)
    gn.values[t] = g.values[t].norm();
  if (out_path.empty()) out_path = report_path + ".vtk";
  write_vtk(mesh, sr.report.u, gn, sr.report.lambda, out_path);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int cmd_mesh_info(const std::string& domain, int refinements, double width,
                  double height, const std::string& mesh_path,
                  const std::string& save_path) {
  Mesh mesh;
  if (!mesh_path.empty()) {
    mesh = read_mesh(mesh_path);
  } else {
    RunConfig cfg;
    cfg.domain = domain;
    cfg.refinements = refinements;
    cfg.width = width;
    cfg.height = height;
    mesh = cfg.build_mesh();
  }
  ValidationReport rep = validate(mesh);
  std::cout << "cells=" << mesh.num_triangles()
            << " dofs=" << mesh.num_vertices()
            << " boundary_edges=" << mesh.boundary_edges.size() << "\n";
  std::printf("min_area=%.6e max_area=%.6e min_angle=%.2f deg\n", rep.min_area,
              rep.max_area, rep.min_angle_deg);
  if (rep.ok()) {
    std::cout << "validation: ok\n";
  } else {
    std::cout << "validation: " << rep.violations.size() << " violation(s)\n";
    for (const std::string& v : rep.violations) std::cout << "  " << v << "\n";
  }
  if (!save_path.empty()) {
    write_mesh(mesh, save_path);
    std::cout << "wrote " << save_path << "\n";
  }
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-power penalty solver for gradient-constrained torsion"};
  app.require_subcommand(1);

  unsigned seed = 0;  // reserved for randomized test utilities
  app.add_option("--seed", seed, "seed for randomized utilities");

  auto* solve_cmd = app.add_subcommand("solve", "run a p-continuation");
  std::string config_path, out_dir;
  solve_cmd->add_option("--config", config_path, "JSON config path")
      ->required();
  solve_cmd->add_option("--out", out_dir, "output directory override");

  auto* table_cmd =
      app.add_subcommand("table1", "disk error table (h = 4)");
  int refinements = 5;
  std::vector<double> p_list = {10, 50, 100, 300, 500};
  std::string table_out = ".";
  table_cmd->add_option("--refinements", refinements, "disk refinement level");
  table_cmd->add_option("--p", p_list, "penalty exponents");
  table_cmd->add_option("--out", table_out, "output directory");

  auto* vtk_cmd = app.add_subcommand("export-vtk", "report JSON to VTK");
  std::string report_path, vtk_out;
  vtk_cmd->add_option("--report", report_path, "report JSON path")->required();
  vtk_cmd->add_option("--out", vtk_out, "output VTK path");

  auto* info_cmd = app.add_subcommand("mesh-info", "mesh counts and checks");
  std::string domain = "disk", mesh_path, save_path;
  int info_ref = 0;
  double width = 1.0, height = 1.0;
  info_cmd->add_option("--domain", domain, "disk, rectangle, or lshape");
  info_cmd->add_option("--refinements", info_ref, "refinement level");
  info_cmd->add_option("--width", width, "rectangle width");
  info_cmd->add_option("--height", height, "rectangle height");
  info_cmd->add_option("--mesh", mesh_path, "read a mesh text file instead");
  info_cmd->add_option("--save", save_path, "write the mesh text file here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return cmd_solve(config_path, out_dir);
    if (table_cmd->parsed()) return cmd_table1(refinements, p_list, table_out);
    if (vtk_cmd->parsed()) return cmd_export_vtk(report_path, vtk_out);
    if (info_cmd->parsed())
      return cmd_mesh_info(domain, info_ref, width, height, mesh_path,
                           save_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
