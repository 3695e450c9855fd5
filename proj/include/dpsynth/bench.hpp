#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpsynth/bounds.hpp"
#include "dpsynth/density.hpp"
#include "dpsynth/domain.hpp"
#include "dpsynth/estimators.hpp"
#include "dpsynth/fitting.hpp"

namespace dpsynth {

/// Ground-truth distribution the harness samples original data from.
struct TruthSpec {
  enum class Kind { Uniform, Weights, File };
  Kind kind = Kind::Uniform;
  std::vector<double> weights;  // over the enumerated domain / lattice cells
  std::string file;             // density CSV
};

/// Size that is either explicit or resolved from the regime's bound report.
struct SizeSpec {
  bool theorem_min = true;
  std::int64_t value = 0;

  static SizeSpec explicit_value(std::int64_t v) { return {false, v}; }
  static SizeSpec from_token(const std::string& token);
};

/// Declarative experiment: domain sweep, ground truth, family, privacy,
/// sizes, regimes, trial count, seed, output directory.
struct ExperimentConfig {
  DomainKind domain_kind = DomainKind::Discrete;
  int levels = 2;
  std::vector<int> dimensions = {3};

  TruthSpec truth;

  int degree = 2;
  int family_grid = 4;  // box cells per axis, continuous families

  PrivacyParams privacy{1.0, 0.2, 0.25};
  SizeSpec n, m, k;

  KdeConfig kde;
  BoundConstants constants;

  std::vector<Regime> regimes = {Regime::UniformRef};
  int trials = 1;
  std::uint64_t seed = 0;
  std::string output_dir = "out";
  int threads = 0;  // 0 = hardware concurrency
  bool dump_data = false;
};

/// Parses the flat key=value config format (see README for the schema).
ExperimentConfig parse_experiment_config(const std::string& text);
ExperimentConfig load_experiment_config(const std::string& path);

/// Resolved sizes for one (regime, dimension) cell of a sweep.
struct ResolvedSizes {
  std::int64_t n = 0, m = 0, k = 0;
  BoundReport report;
};
ResolvedSizes resolve_sizes(const ExperimentConfig& config, Regime regime,
                            const DomainSpec& domain,
                            const QueryFamily& family);

/// Runs every (dimension, regime, trial) cell. Trials are seeded
/// deterministically from config.seed + trial index and may run in a worker
/// pool; failed trials carry an error code instead of aborting the batch.
std::vector<TrialRecord> run_experiment(const ExperimentConfig& config);

/// Writes trials.csv, summary.csv, plotdata_time.csv and plotdata_error.csv
/// under output_dir. Column order is fixed; wall-time columns are the ones
/// suffixed _ms.
void emit_reports(const std::vector<TrialRecord>& records,
                  const std::string& output_dir);

std::string trial_csv_header();
std::string trial_csv_row(const TrialRecord& record);

}  // namespace dpsynth
