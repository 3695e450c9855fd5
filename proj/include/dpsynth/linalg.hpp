#pragma once

#include <cstddef>
#include <vector>

namespace dpsynth {

/// Dense p x p matrix, row-major.
struct SquareMatrix {
  std::size_t dim = 0;
  std::vector<double> data;  // dim * dim

  static SquareMatrix identity(std::size_t dim);
  double& at(std::size_t i, std::size_t j) { return data[i * dim + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * dim + j]; }
};

std::vector<double> mat_vec(const SquareMatrix& a, const std::vector<double>& x);

/// Eigen decomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Returns eigenvalues and the matrix whose columns are eigenvectors.
struct SymmetricEigen {
  std::vector<double> values;
  SquareMatrix vectors;
};
SymmetricEigen symmetric_eigen(const SquareMatrix& a);

/// A^{-1/2} for a symmetric positive-definite matrix.
SquareMatrix sym_inverse_sqrt(const SquareMatrix& a);

/// Spectral norm (largest |eigenvalue|) of a symmetric matrix by power
/// iteration with a deterministic start vector.
double spectral_norm(const SquareMatrix& a, double tol = 1e-8,
                     std::size_t max_iter = 10'000);

}  // namespace dpsynth
