// Test-only oracles, independent of the library's solve paths: dense
// direct solve, 1D radial quadrature, and a minimal legacy-VTK re-reader.
#pragma once

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracles {

// Gaussian elimination with partial pivoting on a dense copy.
inline std::vector<double> dense_solve(std::vector<std::vector<double>> A,
                                       std::vector<double> b) {
  const int n = static_cast<int>(b.size());
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(A[i][k]) > std::abs(A[piv][k])) piv = i;
    std::swap(A[k], A[piv]);
    std::swap(b[k], b[piv]);
    if (A[k][k] == 0.0) throw std::runtime_error("singular matrix");
    for (int i = k + 1; i < n; ++i) {
      double f = A[i][k] / A[k][k];
      for (int j = k; j < n; ++j) A[i][j] -= f * A[k][j];
      b[i] -= f * b[k];
    }
  }
  std::vector<double> x(n);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= A[i][j] * x[j];
    x[i] = s / A[i][i];
  }
  return x;
}

// Composite Simpson for int_a^b f(r) dr.
inline double simpson(const std::function<double(double)>& f, double a,
                      double b, int intervals = 20000) {
  if (intervals % 2) ++intervals;
  double h = (b - a) / intervals;
  double s = f(a) + f(b);
  for (int i = 1; i < intervals; ++i)
    s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// L2 norm over the unit disk of a radial function, splitting at the given
// breakpoints to keep Simpson accurate across kinks.
inline double radial_l2(const std::function<double(double)>& f,
                        std::vector<double> breaks = {0.5}) {
  breaks.insert(breaks.begin(), 0.0);
  breaks.push_back(1.0);
  double sq = 0.0;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    sq += simpson([&](double r) { return f(r) * f(r) * r; }, breaks[i],
                  breaks[i + 1]);
  }
  return std::sqrt(2.0 * M_PI * sq);
}

struct VtkFile {
  int num_points = 0;
  int num_cells = 0;
  std::map<std::string, std::vector<double>> point_data;
  std::map<std::string, std::vector<double>> cell_data;
};

// Minimal reader for the legacy ASCII unstructured-grid files the library
// writes; enough to verify counts and named data arrays.
inline VtkFile read_vtk(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  VtkFile out;
  std::string line;
  enum { none, points, cells } section = none;
  int data_count = 0;
  auto* target = &out.point_data;
  while (std::getline(is, line)) {
    std::stringstream ss(line);
    std::string tok;
    ss >> tok;
    if (tok == "POINTS") {
      ss >> out.num_points;
    } else if (tok == "CELLS") {
      ss >> out.num_cells;
    } else if (tok == "POINT_DATA") {
      ss >> data_count;
      target = &out.point_data;
      section = none;
    } else if (tok == "CELL_DATA") {
      ss >> data_count;
      target = &out.cell_data;
      section = none;
    } else if (tok == "SCALARS") {
      std::string name;
      ss >> name;
      std::vector<double>& arr = (*target)[name];
      std::getline(is, line);  // LOOKUP_TABLE
      arr.resize(data_count);
      for (int i = 0; i < data_count; ++i) is >> arr[i];
      std::getline(is, line);
    }
    (void)section;
  }
  return out;
}

}  // namespace oracles
