#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "noisyperc/infer.hpp"
#include "oracles.hpp"

using namespace noisyperc;

namespace {

std::vector<double> normal_sample(std::size_t n, double mean, double sd, std::uint64_t seed) {
  Rng rng(seed);
  std::normal_distribution<double> dist(mean, sd);
  std::vector<double> out(n);
  for (auto& v : out) v = dist(rng);
  return out;
}

std::vector<double> integer_sample(std::size_t n, int lo, int hi, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<double> out(n);
  for (auto& v : out) v = dist(rng);
  return out;
}

double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
  double area = 0;
  for (std::size_t i = 1; i < x.size(); ++i) area += (x[i] - x[i - 1]) * (y[i] + y[i - 1]) / 2;
  return area;
}

} // namespace

TEST_CASE("Silverman bandwidth") {
  const std::vector<double> v{1, 2, 3, 4, 5};
  // sd = 1.5811, IQR = 2 -> 2/1.34 = 1.4925 is smaller
  CHECK(silverman_bandwidth(v) == doctest::Approx(0.9 * (2.0 / 1.34) * std::pow(5.0, -0.2)));
  const std::vector<double> flat{3, 3, 3};
  CHECK_THROWS_AS(silverman_bandwidth(flat), std::invalid_argument);
  const std::vector<double> one{3};
  CHECK_THROWS_AS(silverman_bandwidth(one), std::invalid_argument);
  // Zero IQR with nonzero spread falls back to the standard deviation.
  const std::vector<double> spike{0, 0, 0, 0, 0, 0, 0, 10};
  CHECK(silverman_bandwidth(spike) > 0.0);
}

TEST_CASE("KDE basics") {
  const std::vector<double> sym{-1.0, 1.0};
  const auto d = kde(sym, 0.5);
  for (double x : {0.1, 0.7, 1.3, 2.9}) CHECK(std::abs(d.pdf(x) - d.pdf(-x)) < 1e-12);
  CHECK(d.cdf(0.0) == doctest::Approx(0.5).epsilon(1e-12));

  const auto sample = normal_sample(500, 3.0, 2.0, 1);
  const auto est = kde(sample);
  const double area = trapezoid(est.grid(), est.density());
  CHECK(area >= 0.99);
  CHECK(area <= 1.01);
  CHECK(est.grid().size() == SmoothedDensity::kGridSize);
  CHECK(est.lower() == doctest::Approx(*std::min_element(sample.begin(), sample.end()) - 3 * est.bandwidth()));
  for (double v : est.density()) CHECK(v >= 0.0);

  // Scaling the data by two with a doubled bandwidth halves the density at 2x.
  std::vector<double> doubled(sample);
  for (auto& v : doubled) v *= 2;
  const auto a = kde(sample, 0.4);
  const auto b = kde(doubled, 0.8);
  for (double x : {0.0, 2.5, 4.0}) CHECK(b.pdf(2 * x) == doctest::Approx(a.pdf(x) / 2).epsilon(1e-12));

  const std::vector<double> flat{2, 2, 2};
  CHECK_THROWS_AS(kde(flat), std::invalid_argument);
  CHECK_NOTHROW(kde(flat, 1.0));
  CHECK_THROWS_AS(kde(flat, 0.0), std::invalid_argument);
}

TEST_CASE("empirical AUC") {
  const std::vector<double> er{1, 2, 3}, pr{4, 5, 6};
  CHECK(empirical_auc(er, pr, Orientation::LargerIsPositive) == 1.0);
  CHECK(empirical_auc(er, er, Orientation::LargerIsPositive) == 0.5);
  const std::vector<double> a{1, 3}, b{2, 4};
  CHECK(empirical_auc(a, b, Orientation::LargerIsPositive) == 0.75);
  CHECK(oracle::pair_auc(a, b, true) == 0.75);
}

TEST_CASE("empirical AUC agrees with pair enumeration, flips, and is rank-invariant") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto neg = integer_sample(40 + seed, 0, 12, seed);
    const auto pos = integer_sample(55, 2, 15, seed + 1000);
    const double larger = empirical_auc(neg, pos, Orientation::LargerIsPositive);
    const double smaller = empirical_auc(neg, pos, Orientation::SmallerIsPositive);
    CHECK(larger == doctest::Approx(oracle::pair_auc(neg, pos, true)).epsilon(1e-14));
    CHECK(larger + smaller == doctest::Approx(1.0).epsilon(1e-14));
    std::vector<double> tn(neg), tp(pos);
    for (auto& v : tn) v = std::exp(v / 3.0) + v * v * v;
    for (auto& v : tp) v = std::exp(v / 3.0) + v * v * v;
    CHECK(empirical_auc(tn, tp, Orientation::LargerIsPositive) == larger);
    CHECK(empirical_auc(neg, neg, Orientation::SmallerIsPositive) == 0.5);
  }
}

TEST_CASE("sample ROC curves") {
  const std::vector<double> er{1, 2}, pr{10, 11};
  const auto curve = roc(er, pr, Orientation::LargerIsPositive);
  const bool through_corner = std::any_of(curve.points.begin(), curve.points.end(),
                                          [](const RocPoint& p) { return p.fpr == 0.0 && p.tpr == 1.0; });
  CHECK(through_corner);
  CHECK(auc(curve) == 1.0);

  const std::vector<double> a{1, 3}, b{2, 4};
  CHECK(auc(roc(a, b, Orientation::LargerIsPositive)) == 0.75);
  CHECK(auc(roc(a, b, Orientation::SmallerIsPositive)) == 0.25);

  // Endpoints exact, coordinates monotone, area equal to the rank statistic with ties.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto neg = integer_sample(1000, 0, 30, seed);
    const auto pos = integer_sample(1000, 5, 40, seed + 50);
    for (auto o : {Orientation::LargerIsPositive, Orientation::SmallerIsPositive}) {
      const auto c = roc(neg, pos, o);
      REQUIRE(c.points.front().fpr == 0.0);
      REQUIRE(c.points.front().tpr == 0.0);
      REQUIRE(c.points.back().fpr == 1.0);
      REQUIRE(c.points.back().tpr == 1.0);
      for (std::size_t k = 1; k < c.points.size(); ++k) {
        REQUIRE(c.points[k].fpr >= c.points[k - 1].fpr);
        REQUIRE(c.points[k].tpr >= c.points[k - 1].tpr);
      }
      CHECK(std::abs(auc(c) - empirical_auc(neg, pos, o)) < 1e-12);
    }
  }
  const std::vector<double> none;
  CHECK_THROWS_AS(roc(none, a, Orientation::LargerIsPositive), std::invalid_argument);
}

TEST_CASE("smoothed ROC curves") {
  RocCurve diag;
  diag.points = {{0, 0}, {1, 1}};
  CHECK(auc(diag) == 0.5);
  RocCurve perfect;
  perfect.points = {{0, 0}, {0, 1}, {1, 1}};
  CHECK(auc(perfect) == 1.0);

  const auto same = normal_sample(1000, 10, 3, 4);
  const auto d = kde(same);
  const auto c = roc(d, d, Orientation::LargerIsPositive);
  CHECK(std::abs(auc(c) - 0.5) < 1e-12);
  for (const auto& pt : c.points) CHECK(std::abs(pt.fpr - pt.tpr) < 1e-12);

  const auto er = normal_sample(1000, 0, 1, 5);
  const auto pr = normal_sample(1000, 1, 1, 6);
  for (auto o : {Orientation::LargerIsPositive, Orientation::SmallerIsPositive}) {
    const auto curve = roc(kde(er), kde(pr), o);
    REQUIRE(curve.points.size() == SmoothedDensity::kGridSize + 2);
    for (std::size_t k = 1; k < curve.points.size(); ++k) {
      REQUIRE(curve.points[k].fpr >= curve.points[k - 1].fpr);
      REQUIRE(curve.points[k].tpr >= curve.points[k - 1].tpr);
    }
    // Smoothing blurs the separation slightly, but stays close to the rank statistic.
    CHECK(std::abs(auc(curve) - empirical_auc(er, pr, o)) < 0.02);
  }
  CHECK(auc(roc(kde(er), kde(pr), Orientation::LargerIsPositive)) > 0.7);
}

TEST_CASE("Monte Carlo p-values") {
  std::vector<double> null(999);
  std::iota(null.begin(), null.end(), 0.0);
  CHECK(mc_pvalue(null, 5000.0, Direction::Greater) == doctest::Approx(1.0 / 1000));
  CHECK(mc_pvalue(null, -1.0, Direction::Greater) == 1.0);
  CHECK(mc_pvalue(null, -1.0, Direction::Less) == doctest::Approx(1.0 / 1000));
  CHECK(mc_pvalue(null, 998.0, Direction::Greater) == doctest::Approx(2.0 / 1000));
  const std::vector<double> empty;
  CHECK_THROWS_AS(mc_pvalue(empty, 0.0, Direction::Less), std::invalid_argument);
}

TEST_CASE("Monte Carlo p-value equals the exact permutation p-value") {
  // Two samples of 4; the null sample is the statistic under every other split.
  const std::vector<double> x{3.1, 4.7, 5.2, 6.0}, y{1.0, 2.2, 3.9, 2.5};
  std::vector<double> pooled(x);
  pooled.insert(pooled.end(), y.begin(), y.end());
  auto stat = [&](unsigned mask) {
    double a = 0, b = 0;
    for (int i = 0; i < 8; ++i) ((mask >> i) & 1U ? a : b) += pooled[i];
    return a / 4 - b / 4;
  };
  const unsigned observed_mask = 0x0F;
  const double observed = stat(observed_mask);
  std::vector<double> null;
  std::size_t at_least = 0, total = 0;
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) != 4) continue;
    ++total;
    const double s = stat(mask);
    if (s >= observed) ++at_least;
    if (mask != observed_mask) null.push_back(s);
  }
  REQUIRE(total == 70);
  CHECK(mc_pvalue(null, observed, Direction::Greater) == doctest::Approx(double(at_least) / 70.0).epsilon(1e-15));
}

TEST_CASE("statistic sampling") {
  ProcessConfig cfg;
  cfg.n = 40;
  cfg.steps = 240;
  const auto one = sample_statistic(cfg, StatKind::QD, 1, 9);
  CHECK(one.size() == 1);

  SampleOptions serial;
  serial.jobs = 1;
  SampleOptions threaded;
  threaded.jobs = 4;
  const auto a = sample_statistic(cfg, StatKind::Sec, 50, 123, serial);
  const auto b = sample_statistic(cfg, StatKind::Sec, 50, 123, threaded);
  CHECK(a.values == b.values);
  for (double v : a.values) CHECK(v >= 0.0);
  CHECK_THROWS_AS(sample_statistic(cfg, StatKind::Sec, 0, 1), std::invalid_argument);

  // Every run censored at x2 when the horizon is too short.
  cfg.steps = 5;
  const auto censored = sample_statistic(cfg, StatKind::QD, 10, 3);
  for (bool c : censored.censored) CHECK(c);
  CHECK_THROWS_AS(sample_statistic(cfg, StatKind::QD, 10, 3, {}, true), std::runtime_error);
}

TEST_CASE("orientation per statistic") {
  CHECK(orientation_for(StatKind::Sec) == Orientation::LargerIsPositive);
  CHECK(orientation_for(StatKind::QD) == Orientation::SmallerIsPositive);
}
