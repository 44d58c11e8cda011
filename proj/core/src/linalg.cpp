#include "torsion/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace torsion {

SparseMatrix SparseMatrix::from_triplets(
    int n, std::vector<std::tuple<int, int, double>> triplets) {
  for (const auto& [i, j, v] : triplets) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw std::invalid_argument("triplet index out of range");
  }
  std::sort(triplets.begin(), triplets.end(),
            [](const auto& a, const auto& b) {
              return std::tie(std::get<0>(a), std::get<1>(a)) <
                     std::tie(std::get<0>(b), std::get<1>(b));
            });
  SparseMatrix A;
  A.n = n;
  A.row_ptr.assign(n + 1, 0);
  for (size_t k = 0; k < triplets.size();) {
    int i = std::get<0>(triplets[k]);
    int j = std::get<1>(triplets[k]);
    double v = 0.0;
    while (k < triplets.size() && std::get<0>(triplets[k]) == i &&
           std::get<1>(triplets[k]) == j) {
      v += std::get<2>(triplets[k]);
      ++k;
    }
    A.col_idx.push_back(j);
    A.values.push_back(v);
    A.row_ptr[i + 1] = static_cast<int>(A.col_idx.size());
  }
  for (int i = 0; i < n; ++i)
    A.row_ptr[i + 1] = std::max(A.row_ptr[i + 1], A.row_ptr[i]);
  return A;
}

std::vector<double> SparseMatrix::diagonal() const {
  std::vector<double> d(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
      if (col_idx[k] == i) d[i] = values[k];
    }
  }
  return d;
}

std::vector<double> matvec(const SparseMatrix& A, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != A.n)
    throw std::invalid_argument("matvec: length mismatch");
  std::vector<double> y(A.n, 0.0);
  for (int i = 0; i < A.n; ++i) {
    double s = 0.0;
    for (int k = A.row_ptr[i]; k < A.row_ptr[i + 1]; ++k)
      s += A.values[k] * x[A.col_idx[k]];
    y[i] = s;
  }
  return y;
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace

CgResult cg_solve(const SparseMatrix& A, const std::vector<double>& b,
                  const std::vector<double>& x0, double tol, int maxit) {
  const int n = A.n;
  if (static_cast<int>(b.size()) != n || static_cast<int>(x0.size()) != n)
    throw std::invalid_argument("cg_solve: length mismatch");
  if (tol <= 0.0) throw std::invalid_argument("cg_solve: tol must be positive");
  for (double v : A.values)
    if (!std::isfinite(v)) throw std::invalid_argument("cg_solve: non-finite matrix entry");
  for (double v : b)
    if (!std::isfinite(v)) throw std::invalid_argument("cg_solve: non-finite rhs entry");
  if (maxit <= 0) maxit = 10 * n;

  std::vector<double> d = A.diagonal();
  for (int i = 0; i < n; ++i) {
    if (d[i] == 0.0)
      throw std::invalid_argument("cg_solve: zero diagonal at row " +
                                  std::to_string(i));
  }

  CgResult res;
  res.x = x0;
  const double bnorm = norm2(b);
  if (bnorm == 0.0) {
    res.x.assign(n, 0.0);
    res.converged = true;
    return res;
  }

  std::vector<double> r = b;
  {
    std::vector<double> Ax = matvec(A, res.x);
    for (int i = 0; i < n; ++i) r[i] -= Ax[i];
  }
  std::vector<double> z(n), p(n);
  for (int i = 0; i < n; ++i) z[i] = r[i] / d[i];
  p = z;
  double rz = dot(r, z);

  double rnorm = norm2(r);
  for (int it = 0; it < maxit && rnorm > tol * bnorm; ++it) {
    std::vector<double> Ap = matvec(A, p);
    double pAp = dot(p, Ap);
    if (pAp <= 0.0)
      throw std::runtime_error("cg_solve: matrix not positive definite");
    double alpha = rz / pAp;
    for (int i = 0; i < n; ++i) {
      res.x[i] += alpha * p[i];
      r[i] -= alpha * Ap[i];
    }
    for (int i = 0; i < n; ++i) z[i] = r[i] / d[i];
    double rz_new = dot(r, z);
    double beta = rz_new / rz;
    rz = rz_new;
    for (int i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
    rnorm = norm2(r);
    res.iterations = it + 1;
  }
  res.relative_residual = rnorm / bnorm;
  res.converged = rnorm <= tol * bnorm;
  return res;
}

}  // namespace torsion
