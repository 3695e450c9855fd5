#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dpsynth/density.hpp"
#include "dpsynth/domain.hpp"
#include "dpsynth/query_family.hpp"

namespace dpsynth {

/// Worst-case empirical-average gap over a query family.
struct AccuracyReport {
  std::string worst_function;
  double worst_gap = 0.0;
  std::vector<std::pair<std::string, double>> per_function;

  std::string to_text() const;
  /// Header "worst_function,worst_gap"; one row.
  std::string to_csv() const;
};

/// max_f |(1/k) sum f(y_j) - (1/n) sum f(x_i)|.
AccuracyReport accuracy(const QueryFamily& family, const Dataset& original,
                        const Dataset& synthetic);

/// Same gap with the synthetic side replaced by an exact expectation under a
/// density: max_f |sum_z f(z) h(z) - (1/n) sum f(x_i)|.
AccuracyReport accuracy(const QueryFamily& family, const Dataset& original,
                        const DiscreteDensity& fitted);

/// (1/2) sum |p_i - q_i| over a shared support, in [0,1].
double total_variation(const DiscreteDensity& p, const DiscreteDensity& q);

/// Renyi divergence of order alpha (alpha > 0, alpha != 1):
/// (1/(alpha-1)) ln sum p_i^alpha / q_i^{alpha-1}. Terms with p_i = 0
/// contribute nothing; q_i = 0 with p_i > 0 is an absolute-continuity error.
double renyi_divergence(const DiscreteDensity& p, const DiscreteDensity& q,
                        double alpha);

/// Renyi condition number kappa(p||q) = exp(D_2(p||q)) = sum p_i^2 / q_i.
double renyi_condition_number(const DiscreteDensity& p,
                              const DiscreteDensity& q);

struct MinRatioBound {
  double exact;  // min_x p(x)/q(x)
  double bound;  // 1 / (1 + TV(p,q)/min_x p(x)); never exceeds exact
};

/// Exact minimum ratio and its TV-based lower bound. Requires p strictly
/// positive on the shared support.
MinRatioBound min_ratio_bound(const DiscreteDensity& p,
                              const DiscreteDensity& q);

/// TV/beta envelope on D_alpha(p||q):
/// (1/(alpha-1)) ln(1 + TV(p,q) (beta^{1-alpha} - 1)/(1 - beta)), where beta
/// is a lower bound on min_x q(x)/p(x). beta -> 1 uses the limit alpha - 1.
double tv_renyi_envelope(double tv, double alpha, double beta);

/// Upper bound on D_2(nu||mu) by chaining through nu1:
/// (3/2) D_4(nu||nu1) + D_3(nu1||mu), each term bounded by its TV/beta
/// envelope with beta from min_ratio_bound. Requires strictly positive
/// densities on a shared support.
double chained_renyi_bound(const DiscreteDensity& nu,
                           const DiscreteDensity& nu1,
                           const DiscreteDensity& mu);

/// Tail bound on the L1 deviation of the canonical frequency estimator of a
/// `cardinality`-cell distribution from n samples:
/// exp(-(n/2)(t - sqrt(cardinality/n))^2) for t >= sqrt(cardinality/n).
double l1_tail_bound(std::size_t cardinality, std::size_t n, double t);

}  // namespace dpsynth
