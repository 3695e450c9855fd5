#pragma once

#include <cstddef>
#include <vector>

namespace dpsynth {

/// min c'x  subject to  A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<double> objective;
  std::vector<std::vector<double>> a_ub;
  std::vector<double> b_ub;
  std::vector<std::vector<double>> a_eq;
  std::vector<double> b_eq;
};

struct LpSolution {
  std::vector<double> x;
  double objective = 0.0;
  std::size_t iterations = 0;
};

/// Two-phase dense-tableau simplex with Bland's anti-cycling rule.
/// Deterministic: entering variable is the lowest-index column with negative
/// reduced cost, leaving row breaks ratio ties by lowest basic index.
/// Throws IterationLimitError past 50*(rows+cols) pivots and InfeasibleError
/// when phase 1 cannot reach feasibility.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace dpsynth
