#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "noisyperc/infer.hpp"
#include "noisyperc/io.hpp"
#include "noisyperc/process.hpp"

namespace noisyperc::cli {

/// Environment variable consulted for the default seed.
inline constexpr const char* kSeedEnv = "NOISYPERC_SEED";
inline constexpr std::uint64_t kFallbackSeed = 20150101;

std::uint64_t default_seed();

struct RunSpec {
  Model model = Model::ER;
  std::uint32_t n = 100;
  std::optional<std::uint32_t> steps; // default 6n
  double p = 1.0;
  std::optional<double> q;            // default 1 - p
  int initial_y = 0;
  std::optional<double> alpha;        // noise is on when either rate is given
  std::optional<double> beta;
  std::size_t runs = 1;
  std::uint64_t seed = kFallbackSeed;
  unsigned jobs = 0;
  Normalization normalization = Normalization::ByVertices;
  double x1 = 0.05;
  double x2 = 0.75;
  bool drop_censored = false;
  bool edge_sets = false;
  std::filesystem::path out_dir = "out";

  ProcessConfig process_config() const;
  SampleOptions sample_options() const;
  void validate() const;
};

/// N trajectory CSVs plus mean_curve.csv.
void cmd_simulate(const RunSpec& spec, std::ostream& log);

struct CompareSpec {
  RunSpec base;
  std::vector<double> p_values{1.0};
  std::vector<double> alpha_values;
  std::vector<double> beta_values;
  bool noise = false; // set when any alpha/beta list was given
  std::size_t thresholds = SmoothedDensity::kGridSize;

  void validate() const;
};

struct ComparePoint {
  double p = 1.0;
  double q = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double auc_qd_kde = 0.0;
  double auc_sec_kde = 0.0;
  double auc_qd_empirical = 0.0;
  double auc_sec_empirical = 0.0;
  double mean_sec_er = 0.0;
  double mean_sec_pr = 0.0;
  double mean_qd_er = 0.0;
  double mean_qd_pr = 0.0;
  double mean_q50_er = 0.0;
  double mean_q50_pr = 0.0;
  std::size_t censored_qd_er = 0;
  std::size_t censored_qd_pr = 0;
};

/// One sweep point: both models sampled, both statistics, both ROC paths.
ComparePoint compare_point(const RunSpec& base, double p, std::optional<double> q, std::optional<NoiseParams> noise,
                           std::uint64_t seed, std::size_t thresholds = SmoothedDensity::kGridSize,
                           const std::filesystem::path* out_dir = nullptr);

/// Sweep over p x alpha x beta; writes auc.csv, auc_empirical.csv, means.csv and per-point ROC/statistic files.
std::vector<ComparePoint> cmd_compare(const CompareSpec& spec, std::ostream& log);

struct FormulaSpec {
  std::uint32_t n = 100;
  std::uint64_t m = 0;
  double p = 1.0;
  double alpha = 0.0;
  double beta = 0.0;
};

/// All closed-form tables as CSV; returns false when a printed table is not row-stochastic.
bool cmd_formulas(const FormulaSpec& spec, std::ostream& out);

struct IngestSpec {
  std::filesystem::path input;
  RunSpec reference; // model field ignored; both models are simulated
  io::ColumnChoice columns = io::ColumnChoice::Auto;
  std::optional<std::uint32_t> n; // overrides the file's `# n=`
};

struct IngestRow {
  Model null_model = Model::ER;
  StatKind kind = StatKind::QD;
  double observed = 0.0;
  bool censored = false;
  Direction direction = Direction::Greater;
  double p_value = 1.0;
};

struct IngestResult {
  std::uint32_t n = 0;
  std::uint32_t steps = 0;
  std::uint32_t q_low = 0;
  std::uint32_t q_high = 0;
  std::uint32_t q_half = 0;
  std::vector<IngestRow> rows;
};

/// Direction of the one-sided test of `kind` under `null_model`, pointing toward the other model.
Direction alternative_direction(Model null_model, StatKind kind);

IngestResult ingest(const io::IngestedTrajectory& traj, const IngestSpec& spec);
IngestResult cmd_ingest(const IngestSpec& spec, std::ostream& out);

} // namespace noisyperc::cli
