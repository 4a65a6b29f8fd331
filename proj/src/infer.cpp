#include "noisyperc/infer.hpp"
#include "noisyperc/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace noisyperc {

RunStatistics reduce_run(const TrajectoryRecord& traj, const SampleOptions& options) {
  const Track track = traj.has_observed() ? Track::Observed : Track::Latent;
  const auto series = gcc_fraction_series(traj, track, options.normalization);
  const auto qd = quantile_difference(series, options.x1, options.x2);
  const auto half = quantile(series, 0.5);
  RunStatistics out;
  out.qd = qd.value;
  out.qd_censored = qd.censored;
  out.sec = max_second_component(traj, track).value;
  out.q_half = half.t;
  out.q_half_censored = half.censored;
  return out;
}

std::vector<RunStatistics> simulate_statistics(const ProcessConfig& config, std::size_t runs, std::uint64_t seed,
                                               const SampleOptions& options) {
  if (runs == 0) throw std::invalid_argument("run count must be at least 1");
  config.validate();
  ProcessConfig cfg = config;
  cfg.keep_edge_sets = false;

  std::vector<RunStatistics> out(runs);
  parallel_for(runs, options.jobs, [&](std::size_t i) { out[i] = reduce_run(simulate(cfg, stream_seed(seed, i)), options); });
  return out;
}

StatisticSample make_sample(const ProcessConfig& config, StatKind kind, std::span<const RunStatistics> runs,
                            std::uint64_t seed, bool drop_censored) {
  StatisticSample sample;
  sample.model = config.model;
  sample.kind = kind;
  sample.config = config;
  sample.seed = seed;
  for (const auto& r : runs) {
    const bool censored = kind == StatKind::QD && r.qd_censored;
    if (censored && drop_censored) continue;
    sample.values.push_back(kind == StatKind::QD ? r.qd : r.sec);
    sample.censored.push_back(censored);
  }
  if (sample.values.empty()) throw std::runtime_error("every run was censored; sample is empty");
  return sample;
}

StatisticSample sample_statistic(const ProcessConfig& config, StatKind kind, std::size_t runs, std::uint64_t seed,
                                 const SampleOptions& options, bool drop_censored) {
  const auto stats = simulate_statistics(config, runs, seed, options);
  return make_sample(config, kind, stats, seed, drop_censored);
}

namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143267794;

double sample_quantile(std::vector<double> sorted, double prob) {
  // Linear interpolation between order statistics (type 7).
  const double h = (double(sorted.size()) - 1.0) * prob;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - double(lo)) * (sorted[hi] - sorted[lo]);
}

} // namespace

double silverman_bandwidth(std::span<const double> values) {
  const auto n = values.size();
  if (n < 2) throw std::invalid_argument("bandwidth undefined: need at least two values");
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / double(n);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / double(n - 1));
  if (!(sd > 0.0)) throw std::invalid_argument("bandwidth undefined: sample has zero variance; pass one explicitly");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double iqr = sample_quantile(sorted, 0.75) - sample_quantile(sorted, 0.25);
  double spread = std::min(sd, iqr / 1.34);
  if (!(spread > 0.0)) spread = sd;
  return 0.9 * spread * std::pow(double(n), -0.2);
}

SmoothedDensity::SmoothedDensity(std::vector<double> sample, double bandwidth)
    : sample_(std::move(sample)), bandwidth_(bandwidth) {
  if (sample_.empty()) throw std::invalid_argument("density of an empty sample");
  if (!(bandwidth_ > 0.0) || !std::isfinite(bandwidth_)) throw std::invalid_argument("bandwidth must be positive");
  std::sort(sample_.begin(), sample_.end());
  lower_ = sample_.front() - 3.0 * bandwidth_;
  upper_ = sample_.back() + 3.0 * bandwidth_;
  grid_.resize(kGridSize);
  density_.resize(kGridSize);
  const double step = (upper_ - lower_) / double(kGridSize - 1);
  for (std::size_t i = 0; i < kGridSize; ++i) {
    grid_[i] = lower_ + step * double(i);
    density_[i] = pdf(grid_[i]);
  }
}

double SmoothedDensity::pdf(double x) const {
  double acc = 0.0;
  for (double v : sample_) {
    const double z = (x - v) / bandwidth_;
    acc += std::exp(-0.5 * z * z);
  }
  return acc * kInvSqrt2Pi / (bandwidth_ * double(sample_.size()));
}

double SmoothedDensity::cdf(double x) const {
  double acc = 0.0;
  for (double v : sample_) acc += 0.5 * std::erfc(-(x - v) / (bandwidth_ * std::sqrt(2.0)));
  return acc / double(sample_.size());
}

SmoothedDensity kde(std::span<const double> sample, std::optional<double> bandwidth) {
  const double h = bandwidth ? *bandwidth : silverman_bandwidth(sample);
  return SmoothedDensity(std::vector<double>(sample.begin(), sample.end()), h);
}

Orientation orientation_for(StatKind kind) {
  return kind == StatKind::Sec ? Orientation::LargerIsPositive : Orientation::SmallerIsPositive;
}

RocCurve roc(std::span<const double> negatives, std::span<const double> positives, Orientation orientation) {
  if (negatives.empty() || positives.empty()) throw std::invalid_argument("ROC needs two nonempty samples");
  // Score so that larger always means "more positive".
  const double sign = orientation == Orientation::LargerIsPositive ? 1.0 : -1.0;
  std::vector<double> neg, pos;
  for (double v : negatives) neg.push_back(sign * v);
  for (double v : positives) pos.push_back(sign * v);
  std::sort(neg.begin(), neg.end(), std::greater<>());
  std::sort(pos.begin(), pos.end(), std::greater<>());

  RocCurve curve;
  curve.orientation = orientation;
  curve.points.push_back({0.0, 0.0});
  std::size_t i = 0, j = 0;
  while (i < neg.size() || j < pos.size()) {
    double thr;
    if (i == neg.size()) thr = pos[j];
    else if (j == pos.size()) thr = neg[i];
    else thr = std::max(neg[i], pos[j]);
    while (i < neg.size() && neg[i] == thr) ++i;
    while (j < pos.size() && pos[j] == thr) ++j;
    curve.points.push_back({double(i) / double(neg.size()), double(j) / double(pos.size())});
  }
  return curve;
}

RocCurve roc(const SmoothedDensity& negatives, const SmoothedDensity& positives, Orientation orientation,
             std::size_t thresholds) {
  if (thresholds < 2) throw std::invalid_argument("need at least two thresholds");
  const double lo = std::min(negatives.lower(), positives.lower());
  const double hi = std::max(negatives.upper(), positives.upper());
  const double step = (hi - lo) / double(thresholds - 1);

  RocCurve curve;
  curve.orientation = orientation;
  curve.points.reserve(thresholds + 2);
  curve.points.push_back({0.0, 0.0});
  for (std::size_t k = 0; k < thresholds; ++k) {
    if (orientation == Orientation::LargerIsPositive) {
      const double thr = hi - step * double(k);
      curve.points.push_back({1.0 - negatives.cdf(thr), 1.0 - positives.cdf(thr)});
    } else {
      const double thr = lo + step * double(k);
      curve.points.push_back({negatives.cdf(thr), positives.cdf(thr)});
    }
  }
  curve.points.push_back({1.0, 1.0});
  return curve;
}

double auc(const RocCurve& curve) {
  double area = 0.0;
  for (std::size_t k = 1; k < curve.points.size(); ++k) {
    const auto& a = curve.points[k - 1];
    const auto& b = curve.points[k];
    area += (b.fpr - a.fpr) * (a.tpr + b.tpr) * 0.5;
  }
  return area;
}

double empirical_auc(std::span<const double> negatives, std::span<const double> positives, Orientation orientation) {
  if (negatives.empty() || positives.empty()) throw std::invalid_argument("AUC needs two nonempty samples");
  std::vector<double> neg(negatives.begin(), negatives.end());
  std::sort(neg.begin(), neg.end());
  // Twice the number of correctly ordered pairs, ties counting one.
  std::uint64_t doubled = 0;
  for (double x : positives) {
    const auto below = std::lower_bound(neg.begin(), neg.end(), x) - neg.begin();
    const auto upto = std::upper_bound(neg.begin(), neg.end(), x) - neg.begin();
    const auto ties = upto - below;
    const auto above = static_cast<std::ptrdiff_t>(neg.size()) - upto;
    const auto wins = orientation == Orientation::LargerIsPositive ? below : above;
    doubled += static_cast<std::uint64_t>(2 * wins + ties);
  }
  return double(doubled) / (2.0 * double(neg.size()) * double(positives.size()));
}

double mc_pvalue(std::span<const double> null_sample, double observed, Direction direction) {
  if (null_sample.empty()) throw std::invalid_argument("null sample is empty");
  std::size_t extreme = 0;
  for (double v : null_sample)
    if (direction == Direction::Greater ? v >= observed : v <= observed) ++extreme;
  return double(1 + extreme) / double(null_sample.size() + 1);
}

} // namespace noisyperc
