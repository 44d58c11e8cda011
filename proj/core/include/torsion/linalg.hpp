#pragma once

#include <tuple>
#include <vector>

namespace torsion {

/// Sparse symmetric matrix in CSR form. Column indices are sorted and
/// unique within each row.
struct SparseMatrix {
  int n = 0;
  std::vector<int> row_ptr;   // size n+1
  std::vector<int> col_idx;
  std::vector<double> values;

  static SparseMatrix from_triplets(
      int n, std::vector<std::tuple<int, int, double>> triplets);

  int nnz() const { return static_cast<int>(values.size()); }
  std::vector<double> diagonal() const;
};

std::vector<double> matvec(const SparseMatrix& A, const std::vector<double>& x);

struct CgResult {
  std::vector<double> x;
  int iterations = 0;
  bool converged = false;
  double relative_residual = 0.0;
};

// Jacobi-preconditioned conjugate gradients. Stops when
// ||Ax - b||_2 <= tol * ||b||_2. maxit <= 0 selects the default 10*n.
// Throws on non-finite input or a zero diagonal entry; a maxit-exceeded
// run is returned with converged = false.
CgResult cg_solve(const SparseMatrix& A, const std::vector<double>& b,
                  const std::vector<double>& x0, double tol = 1e-10,
                  int maxit = 0);

}  // namespace torsion
