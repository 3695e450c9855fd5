#pragma once

#include <cstddef>
#include <vector>

#include "dpsynth/rng.hpp"

namespace dpsynth {

/// Scale sigma of the Laplace density (1/2 sigma) exp(-|x|/sigma).
class LaplaceScale {
 public:
  explicit LaplaceScale(double scale);
  double value() const { return scale_; }

 private:
  double scale_;
};

/// Noise scale for the density-fitting step: delta / ln(family_size / gamma).
/// Requires 0 < delta <= 1/2, 0 < gamma < 1/4, family_size >= 2.
LaplaceScale laplace_scale_for_generation(double delta,
                                          std::size_t family_size,
                                          double gamma);

/// Inverse-CDF transform of a uniform u in [0,1):
/// sign(u - 1/2) * sigma * ln(1 - 2|u - 1/2|). One uniform per draw.
double laplace_transform(const LaplaceScale& scale, double u);

/// count i.i.d. Laplace draws.
std::vector<double> sample_laplace(const LaplaceScale& scale, std::size_t count,
                                   SeededRng& rng);

/// Probability-(1 - gamma) envelope for the maximum of n i.i.d. Laplace
/// draws: sigma * ln(n) / gamma. Requires n >= 2 and gamma in (0, 1).
double max_laplace_bound(const LaplaceScale& scale, std::size_t n,
                         double gamma);

}  // namespace dpsynth
