#pragma once

#include <string>
#include <vector>

#include "torsion/analytic.hpp"
#include "torsion/mesh.hpp"
#include "torsion/solver.hpp"

namespace torsion {

/// Flat run configuration, read from a single JSON document.
struct RunConfig {
  std::string domain = "disk";
  int refinements = 4;
  double width = 1.0;   // rectangle only
  double height = 1.0;  // rectangle only
  double h = 4.0;
  double g = 0.0;
  double epsilon = 0.0;
  SolverConfig solver;
  std::string out_dir = ".";
  bool export_csv = true;
  bool export_vtk = true;
  bool export_json = true;

  Mesh build_mesh() const;
};

// Parses and validates; throws std::runtime_error naming the offending
// key on any malformed or out-of-range entry.
RunConfig parse_run_config_text(const std::string& json_text);
RunConfig load_run_config(const std::string& path);

/// Everything needed to reconstruct a solve: the mesh is referenced by
/// its generation parameters, not embedded.
struct StoredReport {
  std::string domain;
  int refinements = 0;
  double width = 1.0;
  double height = 1.0;
  double h = 4.0;
  double g = 0.0;
  double epsilon = 0.0;
  SolveReport report;
};

void write_report_json(const StoredReport& sr, const std::string& path);
StoredReport read_report_json(const std::string& path);

// CSV schema: a "# discretization" metadata line, then the header
// "p,cells,dofs,L2,H1,W1inf,dualL1,dualLinf", one row per p, values at 17
// significant digits.
void write_error_csv(const std::vector<ErrorRow>& rows,
                     const std::string& path);
std::vector<ErrorRow> read_error_csv(const std::string& path);

// Legacy ASCII VTK unstructured grid: points, triangle cells, point data
// "u", cell data "grad_norm" and "lambda".
void write_vtk(const Mesh& mesh, const ScalarField& u,
               const ElementField& grad_norm, const ElementField& lambda,
               const std::string& path);

}  // namespace torsion
