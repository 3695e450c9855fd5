#pragma once

#include <cstddef>
#include <vector>

#include "dpsynth/domain.hpp"
#include "dpsynth/rng.hpp"

namespace dpsynth {

/// Probability vector over a finite list of points. Weights are nonnegative,
/// sum to 1 within 1e-9, and support points are pairwise distinct.
class DiscreteDensity {
 public:
  static DiscreteDensity create(std::vector<Point> support,
                                std::vector<double> weights);

  /// Point mass at z.
  static DiscreteDensity point_mass(Point z);

  /// Equal weight on each of the given points.
  static DiscreteDensity uniform(std::vector<Point> support);

  const std::vector<Point>& support() const { return support_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }

  /// Weight of the given point, 0 if it is not in the support.
  double weight_at(const Point& x) const;

  /// Inverse-CDF draw over the stored support order.
  std::size_t sample_index(SeededRng& rng) const;

  /// Cumulative weights, used by repeated sampling.
  const std::vector<double>& cumulative() const { return cumulative_; }

 private:
  DiscreteDensity(std::vector<Point> support, std::vector<double> weights);

  std::vector<Point> support_;
  std::vector<double> weights_;
  std::vector<double> cumulative_;
};

/// `count` i.i.d. draws from the density by inverse CDF over the stored
/// support order; deterministic given the rng seed. count must be >= 1 and
/// every support point must lie in `domain`.
Dataset sample_density(const DiscreteDensity& density, const DomainSpec& domain,
                       std::size_t count, SeededRng& rng);

}  // namespace dpsynth
