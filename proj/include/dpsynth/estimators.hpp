#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dpsynth/density.hpp"
#include "dpsynth/domain.hpp"
#include "dpsynth/linalg.hpp"
#include "dpsynth/rng.hpp"

namespace dpsynth {

/// Kernel density estimation and private-release parameters.
struct KdeConfig {
  double bandwidth = 0.0;    // 0 = auto: bandwidth_scale * (ln n / n)^{1/p}
  double bandwidth_scale = 1.0;
  SquareMatrix h0;           // empty = identity; else SPD with spectral norm 1
  int lattice = 16;          // release lattice {0,1/k,...,1}^p
  int order = 2;             // iterated Bernstein order
  double epsilon = 1.0;
  int grid = 0;              // sampling cells per axis; 0 = auto by dimension
};

/// Parameters recorded with an estimate; together with the seed they are
/// enough to reproduce the density bit for bit.
struct EstimateMetadata {
  std::string method;
  double epsilon = 0.0;
  double bandwidth = 0.0;
  int lattice = 0;
  int order = 0;
  int grid = 0;
  std::uint64_t seed = 0;
  bool degenerate_fallback = false;  // all perturbed values clamped to zero
  bool clamped_negative = false;     // some surrogate values were negative
};

/// The reference distribution the generator samples its reduced support from.
/// Discrete estimates live on the exact domain points (grid() == 0);
/// continuous estimates are lattice discretizations whose sample() draws a
/// cell and then a uniform point inside it.
class ReferenceDistribution {
 public:
  enum class Kind { Uniform, PerturbedHistogram, BernsteinKde };

  ReferenceDistribution(Kind kind, DomainSpec domain, DiscreteDensity density,
                        int grid, EstimateMetadata metadata);

  Kind kind() const { return kind_; }
  const DomainSpec& domain() const { return domain_; }
  const DiscreteDensity& density() const { return density_; }
  int grid() const { return grid_; }
  const EstimateMetadata& metadata() const { return metadata_; }

  /// Density weight of the point (exact match on discrete supports, weight of
  /// the containing cell on lattice discretizations).
  double evaluate(const Point& x) const;

  Dataset sample(std::size_t count, SeededRng& rng) const;

 private:
  Kind kind_;
  DomainSpec domain_;
  DiscreteDensity density_;
  int grid_;
  EstimateMetadata metadata_;
};

/// Uniform reference over a discrete domain: weight 1/t^p on every point.
ReferenceDistribution uniform_reference(const DomainSpec& domain,
                                        std::uint64_t cap = kDefaultEnumerationCap);

/// Empirical frequencies of the data over the enumerated domain.
DiscreteDensity empirical_density(const Dataset& data,
                                  std::uint64_t cap = kDefaultEnumerationCap);

/// Clamp-and-normalize step of the perturbed histogram: weights
/// (counts_j + noise_j)_+ / sum, with a uniform fallback when the sum is 0.
/// Exposed separately so tests can inject fixed noise.
struct PerturbedWeights {
  std::vector<double> weights;
  bool degenerate_fallback;
};
PerturbedWeights apply_perturbed_counts(const std::vector<double>& counts,
                                        const std::vector<double>& noise);

/// Private histogram over the enumerated domain: per-point counts plus
/// Laplace(2/epsilon) noise, clamped at zero and renormalized.
ReferenceDistribution perturbed_histogram(const Dataset& data, double epsilon,
                                          SeededRng& rng,
                                          std::uint64_t cap = kDefaultEnumerationCap);

/// Bandwidth actually used by the estimators for a given sample size.
double resolve_bandwidth(const KdeConfig& config, std::size_t n, int dimension);

/// Sampling cells per axis actually used for lattice discretization.
int resolve_grid(const KdeConfig& config, int dimension);

/// Gaussian-kernel density estimate at x:
/// (1/(n h^p)) sum_i (2 pi)^{-p/2} exp(-|H0^{-1/2}(x - x_i)/h|^2 / 2).
double kde_evaluate(const Dataset& data, const KdeConfig& config,
                    const Point& x);

/// Sup-query sensitivity of the kernel density estimate under a one-record
/// swap: 2 (2 pi)^{-p/2} / (n h^p).
double kde_sensitivity(int dimension, std::size_t n, double bandwidth);

/// Laplace scale of the private function release: sensitivity * (k+1) / epsilon.
double bernstein_noise_scale(double sensitivity, int lattice_k, double epsilon);

/// Private continuous estimate: evaluates the KDE on the release lattice,
/// perturbs with Laplace noise, smooths with the iterated Bernstein
/// interpolant, then discretizes to a grid^p cell density (negatives clamped,
/// renormalized; uniform fallback if everything clamps to zero).
ReferenceDistribution bernstein_mechanism(const Dataset& data,
                                          const KdeConfig& config,
                                          SeededRng& rng,
                                          std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace dpsynth
