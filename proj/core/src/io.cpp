#include "torsion/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace torsion {

using nlohmann::json;

namespace {

[[noreturn]] void bad_key(const std::string& key, const std::string& why) {
  throw std::runtime_error("config key \"" + key + "\": " + why);
}

double get_number(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) bad_key(key, "expected a number");
  return j[key].get<double>();
}

int get_int(const json& j, const std::string& key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer()) bad_key(key, "expected an integer");
  return j[key].get<int>();
}

bool get_bool(const json& j, const std::string& key, bool fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_boolean()) bad_key(key, "expected a boolean");
  return j[key].get<bool>();
}

std::string get_string(const json& j, const std::string& key,
                       const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_string()) bad_key(key, "expected a string");
  return j[key].get<std::string>();
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Mesh RunConfig::build_mesh() const {
  if (domain == "disk") return generate_disk(refinements);
  if (domain == "rectangle") return generate_rectangle(width, height, refinements);
  if (domain == "lshape") return generate_lshape(refinements);
  throw std::runtime_error("config key \"domain\": unknown domain \"" + domain +
                           "\"");
}

RunConfig parse_run_config_text(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("config is not valid JSON: ") +
                             e.what());
  }
  if (!j.is_object()) throw std::runtime_error("config must be a JSON object");

  static const char* known[] = {
      "domain",   "refinements", "width",     "height",   "h",
      "g",        "epsilon",     "c1",        "shrink",   "eps_tol",
      "max_outer", "cg_tol",     "cg_maxit",  "alpha_init", "p_schedule",
      "out_dir",  "export_csv",  "export_vtk", "export_json"};
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) bad_key(key, "unknown key");
  }

  RunConfig cfg;
  cfg.domain = get_string(j, "domain", cfg.domain);
  if (cfg.domain != "disk" && cfg.domain != "rectangle" && cfg.domain != "lshape")
    bad_key("domain", "must be disk, rectangle, or lshape");
  cfg.refinements = get_int(j, "refinements", cfg.refinements);
  if (cfg.refinements < 0) bad_key("refinements", "must be nonnegative");
  cfg.width = get_number(j, "width", cfg.width);
  cfg.height = get_number(j, "height", cfg.height);
  if (cfg.width <= 0.0) bad_key("width", "must be positive");
  if (cfg.height <= 0.0) bad_key("height", "must be positive");
  cfg.h = get_number(j, "h", cfg.h);
  cfg.g = get_number(j, "g", cfg.g);
  cfg.epsilon = get_number(j, "epsilon", cfg.epsilon);
  if (cfg.epsilon < 0.0) bad_key("epsilon", "must be nonnegative");

  cfg.solver.c1 = get_number(j, "c1", cfg.solver.c1);
  if (!(cfg.solver.c1 > 0.0 && cfg.solver.c1 < 1.0))
    bad_key("c1", "must lie in (0,1)");
  cfg.solver.shrink = get_number(j, "shrink", cfg.solver.shrink);
  if (!(cfg.solver.shrink > 0.0 && cfg.solver.shrink < 1.0))
    bad_key("shrink", "must lie in (0,1)");
  cfg.solver.eps_tol = get_number(j, "eps_tol", cfg.solver.eps_tol);
  if (!(cfg.solver.eps_tol > 0.0)) bad_key("eps_tol", "must be positive");
  cfg.solver.max_outer = get_int(j, "max_outer", cfg.solver.max_outer);
  if (cfg.solver.max_outer <= 0) bad_key("max_outer", "must be positive");
  cfg.solver.cg_tol = get_number(j, "cg_tol", cfg.solver.cg_tol);
  if (!(cfg.solver.cg_tol > 0.0)) bad_key("cg_tol", "must be positive");
  cfg.solver.cg_maxit = get_int(j, "cg_maxit", cfg.solver.cg_maxit);
  cfg.solver.alpha_init = get_number(j, "alpha_init", cfg.solver.alpha_init);
  if (!(cfg.solver.alpha_init > 0.0)) bad_key("alpha_init", "must be positive");

  if (j.contains("p_schedule")) {
    if (!j["p_schedule"].is_array()) bad_key("p_schedule", "expected an array");
    cfg.solver.p_schedule.clear();
    for (const auto& v : j["p_schedule"]) {
      if (!v.is_number()) bad_key("p_schedule", "entries must be numbers");
      cfg.solver.p_schedule.push_back(v.get<double>());
    }
    if (cfg.solver.p_schedule.empty()) bad_key("p_schedule", "must be non-empty");
    if (cfg.solver.p_schedule.front() < 2.0)
      bad_key("p_schedule", "entries must be >= 2");
    for (size_t i = 1; i < cfg.solver.p_schedule.size(); ++i) {
      if (cfg.solver.p_schedule[i] <= cfg.solver.p_schedule[i - 1])
        bad_key("p_schedule", "must be strictly increasing");
    }
  }

  cfg.out_dir = get_string(j, "out_dir", cfg.out_dir);
  cfg.export_csv = get_bool(j, "export_csv", cfg.export_csv);
  cfg.export_vtk = get_bool(j, "export_vtk", cfg.export_vtk);
  cfg.export_json = get_bool(j, "export_json", cfg.export_json);
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open config file " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_run_config_text(ss.str());
}

void write_report_json(const StoredReport& sr, const std::string& path) {
  json j;
  j["domain"] = sr.domain;
  j["refinements"] = sr.refinements;
  j["width"] = sr.width;
  j["height"] = sr.height;
  j["h"] = sr.h;
  j["g"] = sr.g;
  j["epsilon"] = sr.epsilon;
  j["p"] = sr.report.p;
  j["converged"] = sr.report.converged;
  j["outer_iterations"] = sr.report.outer_iterations;
  j["energy_history"] = sr.report.energy_history;
  j["residual_history"] = sr.report.residual_history;
  j["step_history"] = sr.report.step_history;
  j["wall_seconds"] = sr.report.wall_seconds;
  j["u"] = sr.report.u.values;
  j["lambda"] = sr.report.lambda.values;
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os << j.dump(1) << '\n';
}

StoredReport read_report_json(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open report " + path);
  json j = json::parse(is);
  StoredReport sr;
  for (const char* req : {"domain", "refinements", "p", "u", "lambda"}) {
    if (!j.contains(req))
      throw std::runtime_error("report " + path + " missing field \"" + req +
                               "\"");
  }
  sr.domain = j["domain"].get<std::string>();
  sr.refinements = j["refinements"].get<int>();
  sr.width = j.value("width", 1.0);
  sr.height = j.value("height", 1.0);
  sr.h = j.value("h", 4.0);
  sr.g = j.value("g", 0.0);
  sr.epsilon = j.value("epsilon", 0.0);
  sr.report.p = j["p"].get<double>();
  sr.report.converged = j.value("converged", false);
  sr.report.outer_iterations = j.value("outer_iterations", 0);
  sr.report.energy_history = j.value("energy_history", std::vector<double>{});
  sr.report.residual_history =
      j.value("residual_history", std::vector<double>{});
  sr.report.step_history = j.value("step_history", std::vector<double>{});
  sr.report.wall_seconds = j.value("wall_seconds", 0.0);
  sr.report.u.values = j["u"].get<std::vector<double>>();
  sr.report.lambda.values = j["lambda"].get<std::vector<double>>();
  return sr;
}

void write_error_csv(const std::vector<ErrorRow>& rows,
                     const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os << "# discretization: P1 triangles; dofs are vertex counts\n";
  os << "p,cells,dofs,L2,H1,W1inf,dualL1,dualLinf\n";
  for (const ErrorRow& r : rows) {
    os << fmt17(r.p) << ',' << r.cells << ',' << r.dofs << ',' << fmt17(r.l2)
       << ',' << fmt17(r.h1) << ',' << fmt17(r.w1_inf) << ','
       << fmt17(r.dual_l1) << ',' << fmt17(r.dual_linf) << '\n';
  }
}

std::vector<ErrorRow> read_error_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  std::vector<ErrorRow> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("p,", 0) == 0) continue;
    std::stringstream ss(line);
    ErrorRow r;
    char comma;
    if (!(ss >> r.p >> comma >> r.cells >> comma >> r.dofs >> comma >> r.l2 >>
          comma >> r.h1 >> comma >> r.w1_inf >> comma >> r.dual_l1 >> comma >>
          r.dual_linf))
      throw std::runtime_error("malformed CSV row: " + line);
    rows.push_back(r);
  }
  return rows;
}

void write_vtk(const Mesh& mesh, const ScalarField& u,
               const ElementField& grad_norm, const ElementField& lambda,
               const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os.precision(17);
  os << "# vtk DataFile Version 2.0\n";
  os << "penalized torsion solution\n";
  os << "ASCII\n";
  os << "DATASET UNSTRUCTURED_GRID\n";
  os << "POINTS " << mesh.num_vertices() << " double\n";
  for (const Point& p : mesh.vertices) os << p[0] << ' ' << p[1] << " 0\n";
  os << "CELLS " << mesh.num_triangles() << ' ' << 4 * mesh.num_triangles()
     << '\n';
  for (const Tri& t : mesh.triangles)
    os << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  os << "CELL_TYPES " << mesh.num_triangles() << '\n';
  for (int t = 0; t < mesh.num_triangles(); ++t) os << "5\n";
  os << "POINT_DATA " << mesh.num_vertices() << '\n';
  os << "SCALARS u double 1\nLOOKUP_TABLE default\n";
  for (double v : u.values) os << v << '\n';
  os << "CELL_DATA " << mesh.num_triangles() << '\n';
  os << "SCALARS grad_norm double 1\nLOOKUP_TABLE default\n";
  for (double v : grad_norm.values) os << v << '\n';
  os << "SCALARS lambda double 1\nLOOKUP_TABLE default\n";
  for (double v : lambda.values) os << v << '\n';
}

}  // namespace torsion
