#pragma once

#include <cstddef>
#include <vector>

namespace fiedler {

/// Eigen-decomposition of a real symmetric matrix.
struct SymmetricEigen {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // row-major n x n, column j pairs with values[j]
};

/// Householder tridiagonalization followed by the implicit-shift QL
/// iteration (tred2/tql2). `a` is row-major n x n and must be symmetric;
/// only the lower triangle is read.
SymmetricEigen symmetric_eigen(std::vector<double> a, std::size_t n);

/// max_j ||A v_j - lambda_j v_j||_2 for a decomposition of `a`.
double max_residual(const std::vector<double>& a, std::size_t n, const SymmetricEigen& eig);

}  // namespace fiedler
