#pragma once

#include <functional>
#include <vector>

#include "dpsynth/domain.hpp"

namespace dpsynth {

/// Basis polynomial C(k,l) y^l (1-y)^{k-l}. Requires 0 <= l <= k.
double bernstein_basis(int l, int k, double y);

/// Evaluator for the order-j iterated Bernstein operator on degree-k bases.
///
/// The plain operator maps a function to sum_l f(l/k) b_{l,k}(y); iterating it
/// j times and telescoping yields per-index weights
///   b^{(j)}_{l,k}(y) = sum_{i=1}^{j} C(j,i) (-1)^{i-1} (B^{i-1} b_{l,k})(y),
/// which this class evaluates through a precomputed (k+1)x(k+1) coefficient
/// matrix: applying the operator to a polynomial written in the basis acts as
/// the node-evaluation matrix M[r][s] = b_{s,k}(r/k).
class IteratedBernstein {
 public:
  IteratedBernstein(int lattice_k, int order_j);

  int lattice() const { return k_; }
  int order() const { return j_; }

  /// Values of b^{(j)}_{l,k}(y) for l = 0..k.
  std::vector<double> basis_at(double y) const;

  /// Tensor-product interpolant of lattice values laid out lexicographically
  /// over {0, 1/k, ..., 1}^p (last coordinate fastest), evaluated at y.
  double interpolate(const std::vector<double>& lattice_values, int dimension,
                     const Point& y) const;

 private:
  int k_;
  int j_;
  std::vector<double> weight_;  // (k+1)x(k+1), row-major: sum_i C(j,i)(-1)^{i-1} M^{i-1}
};

/// Order-j iterated Bernstein polynomial of f on the lattice {0,1/k,...,1}^p,
/// evaluated at y. Samples f at the (k+1)^p lattice nodes.
double iterated_bernstein(const std::function<double(const Point&)>& f,
                          int dimension, int lattice_k, int order_j,
                          const Point& y);

}  // namespace dpsynth
