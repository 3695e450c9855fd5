#pragma once

#include <cstddef>
#include <vector>

#include "dpsynth/domain.hpp"
#include "dpsynth/query_family.hpp"

namespace dpsynth {

/// Confidence interval for a binomial proportion read off synthetic data.
struct IntervalEstimate {
  enum class Basis { OriginalN, SyntheticK, AccuracyAdjusted };
  double center = 0.0;
  double half_width = 0.0;
  Basis basis = Basis::AccuracyAdjusted;

  double lower() const { return center - half_width; }
  double upper() const { return center + half_width; }
};

/// center = synthetic proportion of a {0,1}-valued function; half width =
/// accuracy_delta + 1.96 sqrt(center(1-center)/n_original). The Wald term is
/// scaled by the original sample size, not the synthetic one.
IntervalEstimate proportion_interval(const QueryFunction& f,
                                     const Dataset& synthetic,
                                     std::size_t n_original,
                                     double accuracy_delta);

struct ChiSquareResult {
  double statistic = 0.0;
  double correction = 0.0;  // worst-case shift if proportions move by delta
};

/// Goodness-of-fit statistic n sum (p_l - q_l)^2 / q_l on synthetic
/// proportions, with the first-order correction
/// n sum (2|p_l - q_l| delta + delta^2) / q_l for proportions each off by at
/// most delta. Expected proportions must be strictly positive and sum to 1.
ChiSquareResult chi_square_adjusted(const std::vector<double>& observed,
                                    const std::vector<double>& expected,
                                    std::size_t n, double accuracy_delta);

/// Spectral norm of X'X/n - Y'Y/m (uncentered second-moment matrices), by
/// power iteration on the symmetric difference.
double covariance_deviation(const Dataset& original, const Dataset& synthetic);

}  // namespace dpsynth
