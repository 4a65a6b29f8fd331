#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "noisyperc/process.hpp"
#include "noisyperc/stats.hpp"

namespace noisyperc {

struct SampleOptions {
  double x1 = 0.05;
  double x2 = 0.75;
  Normalization normalization = Normalization::ByVertices;
  unsigned jobs = 0; // 0: hardware concurrency
};

/// Everything a single run reduces to.
struct RunStatistics {
  double qd = 0.0;
  bool qd_censored = false;
  double sec = 0.0;
  std::uint32_t q_half = 0; // Q(0.5)
  bool q_half_censored = false;
};

/// Reduce one trajectory: observed summaries when present, latent otherwise.
RunStatistics reduce_run(const TrajectoryRecord& traj, const SampleOptions& options = {});

/// N independent runs; run i uses the stream derived from (seed, i). The result
/// is ordered by run index and does not depend on `jobs`.
std::vector<RunStatistics> simulate_statistics(const ProcessConfig& config, std::size_t runs, std::uint64_t seed,
                                               const SampleOptions& options = {});

struct StatisticSample {
  Model model = Model::ER;
  StatKind kind = StatKind::QD;
  std::vector<double> values;
  std::vector<bool> censored;
  ProcessConfig config;
  std::uint64_t seed = 0;

  std::size_t size() const { return values.size(); }
};

StatisticSample make_sample(const ProcessConfig& config, StatKind kind, std::span<const RunStatistics> runs,
                            std::uint64_t seed, bool drop_censored = false);

StatisticSample sample_statistic(const ProcessConfig& config, StatKind kind, std::size_t runs, std::uint64_t seed,
                                 const SampleOptions& options = {}, bool drop_censored = false);

/// 0.9 * min(sd, IQR/1.34) * N^(-1/5). Falls back to sd when the IQR is zero.
double silverman_bandwidth(std::span<const double> values);

/// Gaussian kernel density estimate of a sample, tabulated on a grid.
class SmoothedDensity {
public:
  static constexpr std::size_t kGridSize = 512;

  SmoothedDensity(std::vector<double> sample, double bandwidth);

  double bandwidth() const { return bandwidth_; }
  const std::vector<double>& sample() const { return sample_; }
  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& density() const { return density_; }

  double pdf(double x) const;
  double cdf(double x) const;
  /// Sample range padded by three bandwidths on each side.
  double lower() const { return lower_; }
  double upper() const { return upper_; }

private:
  std::vector<double> sample_;
  double bandwidth_;
  double lower_;
  double upper_;
  std::vector<double> grid_;
  std::vector<double> density_;
};

/// Silverman bandwidth unless one is given. Throws when the automatic
/// bandwidth is undefined (fewer than two values, or zero spread).
SmoothedDensity kde(std::span<const double> sample, std::optional<double> bandwidth = std::nullopt);

/// Which side of the threshold is called positive (the PR class).
enum class Orientation {
  LargerIsPositive,  // theta_Sec: PR expected larger
  SmallerIsPositive, // theta_QD: PR expected smaller
};

Orientation orientation_for(StatKind kind);

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;
};

struct RocCurve {
  std::vector<RocPoint> points; // (0,0) ... (1,1), both coordinates nondecreasing
  Orientation orientation = Orientation::LargerIsPositive;
};

/// Empirical ROC from thresholds at every distinct pooled value.
RocCurve roc(std::span<const double> negatives, std::span<const double> positives, Orientation orientation);
/// ROC of the smoothed distributions on a shared grid of `thresholds` points.
RocCurve roc(const SmoothedDensity& negatives, const SmoothedDensity& positives, Orientation orientation,
             std::size_t thresholds = SmoothedDensity::kGridSize);

/// Trapezoidal area under the curve.
double auc(const RocCurve& curve);

/// Fraction of (negative, positive) pairs ordered as the orientation expects; ties count 1/2.
double empirical_auc(std::span<const double> negatives, std::span<const double> positives, Orientation orientation);

enum class Direction { Greater, Less };

/// (1 + #{null draws at least as extreme as observed}) / (N + 1).
double mc_pvalue(std::span<const double> null_sample, double observed, Direction direction);

} // namespace noisyperc
