#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dpsynth/density.hpp"
#include "dpsynth/domain.hpp"
#include "dpsynth/estimators.hpp"
#include "dpsynth/query_family.hpp"
#include "dpsynth/rng.hpp"

namespace dpsynth {

/// Per-stage privacy spend. Total is exact basic composition.
struct PrivacyBudget {
  double epsilon_estimation = 0.0;
  double epsilon_generation = 0.0;
  double total() const { return epsilon_estimation + epsilon_generation; }
};

/// The minimax density-fitting instance: a reduced support (duplicates kept,
/// i.i.d. sampling may repeat points), noisy targets per test function, and
/// the coefficient matrix F[f][i] = f(z_i).
struct FittingProblem {
  DomainSpec domain;
  std::vector<Point> support;                     // z_1..z_m
  QueryFamily family;
  std::vector<double> targets;                    // a_f
  std::vector<std::vector<double>> coefficients;  // [f][i], |entries| <= 1

  std::size_t support_size() const { return support.size(); }
};

/// Fitted density and solver diagnostics. raw_weights aligns with the
/// problem's support entries (one variable per entry, duplicates and all);
/// density merges duplicate points so it is a valid probability vector.
struct FitResult {
  DiscreteDensity density;
  std::vector<double> raw_weights;
  double objective = 0.0;
  std::size_t iterations = 0;
  double solve_ms = 0.0;
};

/// Draws the reduced support from mu and builds noisy targets
/// a_f = (1/n) sum_i f(x_i) + Lap(sigma). sigma = 0 injects no noise.
FittingProblem build_problem(const Dataset& data, const QueryFamily& family,
                             const ReferenceDistribution& mu, std::size_t m,
                             double sigma, SeededRng& rng);

/// Solves min_h max_f |sum_i F[f][i] h_i - a_f| over densities h on the
/// support, as an LP with 2|F| two-sided rows, the simplex row sum h = 1,
/// and nonnegativity as variable bounds.
FitResult solve_minimax(const FittingProblem& problem);

/// max_f |sum_i F[f][i] w_i - a_f| for a candidate weight vector; independent
/// check of the solver's reported objective.
double recompute_objective(const FittingProblem& problem,
                           const std::vector<double>& weights);

/// Plain-text dump of the LP (objective row, constraint rows, bounds) for
/// cross-checking with external solvers.
std::string lp_to_text(const FittingProblem& problem);

struct GenerationParams {
  std::size_t m = 0;  // reduced-support size
  std::size_t k = 0;  // synthetic rows to emit
  double delta = 0.0;
  double gamma = 0.0;
};

/// One pipeline trial: sizes, realized accuracy, objective, stage wall-times.
struct TrialRecord {
  std::string regime;
  int p = 0;
  int t = 0;  // 0 for continuous
  int trial = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0, m = 0, k = 0;
  double epsilon_total = 0.0;
  double accuracy = 0.0;
  double lp_objective = 0.0;
  double estimate_ms = 0.0;
  double sample_support_ms = 0.0;
  double solve_ms = 0.0;
  double sample_output_ms = 0.0;
  std::string error;  // empty on success
};

struct GenerationResult {
  Dataset synthetic;
  FitResult fit;
  TrialRecord record;  // regime/trial/seed/estimate_ms left to the caller
};

/// Full generation pass: build the problem (noise scale from delta, |F|,
/// gamma), solve the minimax LP, draw k rows from the fitted density, and
/// score the result against the input data.
GenerationResult generate(const Dataset& data, const QueryFamily& family,
                          const ReferenceDistribution& mu,
                          const GenerationParams& params,
                          const PrivacyBudget& budget, SeededRng& rng);

}  // namespace dpsynth
