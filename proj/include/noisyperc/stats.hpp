#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "noisyperc/process.hpp"

namespace noisyperc {

enum class Normalization {
  ByVertices, // s1 / n
  ByPairs,    // s1 / C(n,2)
};

enum class Track { Latent, Observed };

enum class StatKind { QD, Sec };

std::string to_string(StatKind kind);
StatKind parse_stat_kind(std::string_view text);
Normalization parse_normalization(std::string_view text);

/// Giant-component fraction F(t), t = 0..T.
struct GccSeries {
  std::vector<double> values;
  Normalization normalization = Normalization::ByVertices;

  std::uint32_t horizon() const { return static_cast<std::uint32_t>(values.size() - 1); }
};

struct QuantileResult {
  std::uint32_t t = 0;
  bool censored = false;
};

struct DetectionStatistic {
  StatKind kind = StatKind::QD;
  double value = 0.0;
  bool censored = false;
};

GccSeries gcc_fraction_series(std::span<const std::uint32_t> s1, std::uint32_t n,
                              Normalization normalization = Normalization::ByVertices);
GccSeries gcc_fraction_series(const TrajectoryRecord& traj, Track which,
                              Normalization normalization = Normalization::ByVertices);

/// Q(x) = min{t : F(t) >= x}; T with the censored flag when x is never reached.
QuantileResult quantile(const GccSeries& series, double x);

/// Q(x2) - Q(x1), with censored quantiles at their sentinel T.
DetectionStatistic quantile_difference(const GccSeries& series, double x1 = 0.05, double x2 = 0.75);

DetectionStatistic max_second_component(std::span<const std::uint32_t> s2);
DetectionStatistic max_second_component(const TrajectoryRecord& traj, Track which);

} // namespace noisyperc
