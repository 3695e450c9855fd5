#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dpsynth/domain.hpp"
#include "dpsynth/query_family.hpp"

namespace dpsynth {

/// Which reference-distribution pipeline a bound is calibrated for.
enum class Regime { UniformRef, HistogramRef, KdeRef };

std::string regime_name(Regime regime);
Regime regime_from_name(const std::string& name);

struct PrivacyParams {
  double epsilon = 0.0;
  double delta = 0.0;
  double gamma = 0.0;
};

/// Extremes of the data-generating density. Discrete regimes need tau1/tau2
/// (min/max point mass); the continuous regime needs tau (density infimum).
struct DensityExtremes {
  std::optional<double> tau1;
  std::optional<double> tau2;
  std::optional<double> tau;

  static DensityExtremes uniform_discrete(double cardinality);
  static DensityExtremes uniform_continuous();
};

/// The analysis' absolute constants, never pinned numerically by the theory;
/// default 1 and configurable. Echoed in every report.
struct BoundConstants {
  double c1 = 1.0;        // histogram condition-number, sampling factor
  double c2 = 1.0;        // histogram condition-number, perturbation factor
  double c1_prime = 1.0;  // kde condition-number factor
  double c_bandwidth = 1.0;
};

/// Minimal sizes and noise scale that activate a regime's accuracy guarantee.
struct BoundReport {
  Regime regime = Regime::UniformRef;
  double condition_number = 1.0;  // K
  std::int64_t n_min = 1;
  std::int64_t m_min = 1;
  std::int64_t k_min = 1;
  double sigma = 0.0;
  double epsilon_total = 0.0;  // epsilon (uniform) or 2 epsilon (two-stage)
  double bandwidth = 0.0;      // kde regime only
  double family_size = 0.0;
  double cardinality = 0.0;  // discrete domains
  PrivacyParams privacy;
  BoundConstants constants;

  std::string to_text() const;
  static std::string csv_header();
  std::string to_csv_row() const;
};

/// Evaluates the regime's size requirements at the given parameters:
/// n_min as the max over the regime's listed sample-size terms, the
/// condition-number bound K, m_min from K, and k_min from the shared
/// (1/delta^2) ln(|F|/gamma) term. Sizes are rounded up.
BoundReport required_parameters(Regime regime, const DomainSpec& domain,
                                const QueryFamily& family,
                                const PrivacyParams& privacy,
                                const DensityExtremes& extremes,
                                const BoundConstants& constants = {});

}  // namespace dpsynth
