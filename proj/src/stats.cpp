#include "noisyperc/stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace noisyperc {

std::string to_string(StatKind kind) { return kind == StatKind::QD ? "QD" : "Sec"; }

StatKind parse_stat_kind(std::string_view text) {
  if (text == "QD" || text == "qd") return StatKind::QD;
  if (text == "Sec" || text == "sec") return StatKind::Sec;
  throw std::invalid_argument("unknown statistic '" + std::string(text) + "' (expected qd or sec)");
}

Normalization parse_normalization(std::string_view text) {
  if (text == "vertices") return Normalization::ByVertices;
  if (text == "pairs") return Normalization::ByPairs;
  throw std::invalid_argument("unknown normalization '" + std::string(text) + "' (expected vertices or pairs)");
}

GccSeries gcc_fraction_series(std::span<const std::uint32_t> s1, std::uint32_t n, Normalization normalization) {
  if (s1.empty()) throw std::invalid_argument("empty component-size series");
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  const double denom = normalization == Normalization::ByVertices ? double(n) : double(pair_count(n));
  GccSeries series;
  series.normalization = normalization;
  series.values.reserve(s1.size());
  for (auto s : s1) series.values.push_back(double(s) / denom);
  return series;
}

GccSeries gcc_fraction_series(const TrajectoryRecord& traj, Track which, Normalization normalization) {
  if (which == Track::Observed) {
    if (!traj.has_observed()) throw std::invalid_argument("observed series requested but noise was off");
    return gcc_fraction_series(traj.s1_obs, traj.config.n, normalization);
  }
  return gcc_fraction_series(traj.s1, traj.config.n, normalization);
}

QuantileResult quantile(const GccSeries& series, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("quantile level must lie in [0,1]");
  const auto& v = series.values;
  const auto it = std::find_if(v.begin(), v.end(), [x](double f) { return f >= x; });
  if (it == v.end()) return {series.horizon(), true};
  return {static_cast<std::uint32_t>(it - v.begin()), false};
}

DetectionStatistic quantile_difference(const GccSeries& series, double x1, double x2) {
  if (!(x1 < x2)) throw std::invalid_argument("quantile pair must satisfy x1 < x2");
  const auto lo = quantile(series, x1);
  const auto hi = quantile(series, x2);
  // F need not be monotone, but the first crossing of x2 can't precede that of x1.
  return {StatKind::QD, double(hi.t) - double(lo.t), lo.censored || hi.censored};
}

DetectionStatistic max_second_component(std::span<const std::uint32_t> s2) {
  if (s2.empty()) throw std::invalid_argument("empty component-size series");
  return {StatKind::Sec, double(*std::max_element(s2.begin(), s2.end())), false};
}

DetectionStatistic max_second_component(const TrajectoryRecord& traj, Track which) {
  if (which == Track::Observed) {
    if (!traj.has_observed()) throw std::invalid_argument("observed series requested but noise was off");
    return max_second_component(traj.s2_obs);
  }
  return max_second_component(traj.s2);
}

} // namespace noisyperc
