#include "dpsynth/density.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "dpsynth/errors.hpp"

namespace dpsynth {

namespace {
constexpr double kSumTolerance = 1e-9;
}

DiscreteDensity::DiscreteDensity(std::vector<Point> support,
                                 std::vector<double> weights)
    : support_(std::move(support)), weights_(std::move(weights)) {
  cumulative_.resize(weights_.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    acc += weights_[i];
    cumulative_[i] = acc;
  }
}

DiscreteDensity DiscreteDensity::create(std::vector<Point> support,
                                        std::vector<double> weights) {
  if (support.empty()) throw ParameterError("density needs a nonempty support");
  if (support.size() != weights.size())
    throw ParameterError("support/weight length mismatch");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw ParameterError("density weights must be >= 0");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kSumTolerance)
    throw ParameterError("density weights must sum to 1");

  std::vector<const Point*> sorted;
  sorted.reserve(support.size());
  for (const Point& z : support) sorted.push_back(&z);
  std::sort(sorted.begin(), sorted.end(),
            [](const Point* a, const Point* b) { return *a < *b; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (*sorted[i - 1] == *sorted[i])
      throw ParameterError("density support points must be pairwise distinct");
  }
  return DiscreteDensity(std::move(support), std::move(weights));
}

DiscreteDensity DiscreteDensity::point_mass(Point z) {
  return create({std::move(z)}, {1.0});
}

DiscreteDensity DiscreteDensity::uniform(std::vector<Point> support) {
  const std::size_t count = support.size();
  const double w = 1.0 / static_cast<double>(count);
  return create(std::move(support), std::vector<double>(count, w));
}

double DiscreteDensity::weight_at(const Point& x) const {
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (support_[i] == x) return weights_[i];
  }
  return 0.0;
}

std::size_t DiscreteDensity::sample_index(SeededRng& rng) const {
  const double u = rng.uniform();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) return cumulative_.size() - 1;
  return static_cast<std::size_t>(it - cumulative_.begin());
}

Dataset sample_density(const DiscreteDensity& density, const DomainSpec& domain,
                       std::size_t count, SeededRng& rng) {
  if (count < 1) throw ParameterError("sample count must be >= 1");
  std::vector<Point> rows;
  rows.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    rows.push_back(density.support()[density.sample_index(rng)]);
  return Dataset::create(domain, std::move(rows));
}

}  // namespace dpsynth
