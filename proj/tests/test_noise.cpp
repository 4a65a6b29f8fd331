#include <doctest.h>

#include <cmath>
#include <set>

#include "noisyperc/noise.hpp"
#include "noisyperc/process.hpp"
#include "oracles.hpp"

using namespace noisyperc;

namespace {

DynamicGraph random_graph(std::uint32_t n, std::uint64_t m, Rng& rng) {
  DynamicGraph g(n);
  while (g.edge_count() < m) g.add_edge(g.sample_absent_pairs(1, rng).front());
  return g;
}

// Chi-square goodness of fit of observed counts against Binomial(trials, prob),
// pooling the tails so every cell expects at least 5.
double binomial_gof_pvalue(const std::vector<std::size_t>& counts, std::uint64_t trials, double prob) {
  const double total = [&] {
    double s = 0;
    for (auto c : counts) s += double(c);
    return s;
  }();
  std::vector<double> obs, expect;
  double acc_obs = 0, acc_exp = 0;
  for (std::uint64_t k = 0; k <= trials; ++k) {
    acc_obs += k < counts.size() ? double(counts[k]) : 0.0;
    acc_exp += total * oracle::binom_pmf(trials, prob, k);
    if (acc_exp >= 5.0) {
      obs.push_back(acc_obs);
      expect.push_back(acc_exp);
      acc_obs = acc_exp = 0;
    }
  }
  obs.back() += acc_obs;
  expect.back() += acc_exp;
  double chi2 = 0;
  for (std::size_t i = 0; i < obs.size(); ++i) chi2 += (obs[i] - expect[i]) * (obs[i] - expect[i]) / expect[i];
  return oracle::chi2_sf(chi2, double(obs.size() - 1));
}

} // namespace

TEST_CASE("noise parameters are validated") {
  CHECK_THROWS_AS((NoiseParams{1.5, 0.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((NoiseParams{0.0, -0.5}.validate()), std::invalid_argument);
  CHECK_NOTHROW((NoiseParams{0.0, 1.0}.validate()));
}

TEST_CASE("zero rates reproduce the latent graph; unit rates its complement") {
  Rng rng(3);
  const auto g = random_graph(12, 20, rng);
  auto obs = observe_edges(g, {0.0, 0.0}, rng);
  auto latent = g.edges();
  std::sort(obs.begin(), obs.end());
  std::sort(latent.begin(), latent.end());
  CHECK(obs == latent);

  const auto comp = observe_edges(g, {1.0, 1.0}, rng);
  CHECK(comp.size() == pair_count(12) - 20);
  for (const auto& e : comp) CHECK_FALSE(g.has_edge(e));
}

TEST_CASE("mean observed edge count matches the binomial mean") {
  Rng rng(2015);
  const auto g = random_graph(100, 200, rng);
  const NoiseParams noise{0.0125, 0.01};
  constexpr std::size_t draws = 10000;
  double sum = 0;
  for (std::size_t i = 0; i < draws; ++i) sum += double(observe_edges(g, noise, rng).size());
  const double expected = (4950.0 - 200.0) * 0.0125 + 200.0 * 0.99; // 257.375
  const double var = 4750.0 * 0.0125 * 0.9875 + 200.0 * 0.01 * 0.99;
  CHECK(std::abs(sum / draws - expected) <= 3.0 * std::sqrt(var / draws));
}

TEST_CASE("flip counts follow the binomial laws") {
  Rng rng(17);
  const auto g = random_graph(20, 40, rng); // 150 absent pairs
  const NoiseParams noise{0.05, 0.2};
  constexpr std::size_t draws = 20000;
  std::vector<std::size_t> fp(151, 0), fn(41, 0);
  for (std::size_t i = 0; i < draws; ++i) {
    FlipCounts counts;
    const auto obs = observe_edges(g, noise, rng, counts);
    REQUIRE(obs.size() == 40 - counts.false_negatives + counts.false_positives);
    ++fp[counts.false_positives];
    ++fn[counts.false_negatives];
  }
  CHECK(binomial_gof_pvalue(fp, 150, 0.05) > 0.001);
  CHECK(binomial_gof_pvalue(fn, 40, 0.2) > 0.001);
}

TEST_CASE("observations of a frozen latent graph are independent over time") {
  Rng rng(23);
  const auto g = random_graph(30, 60, rng);
  const NoiseParams noise{0.02, 0.1};
  constexpr std::size_t steps = 20000;
  std::vector<double> flips;
  flips.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) {
    FlipCounts c;
    observe_edges(g, noise, rng, c);
    flips.push_back(double(c.false_positives + c.false_negatives));
  }
  double mean = 0;
  for (double f : flips) mean += f;
  mean /= steps;
  double num = 0, den = 0;
  for (std::size_t t = 0; t < steps; ++t) {
    den += (flips[t] - mean) * (flips[t] - mean);
    if (t + 1 < steps) num += (flips[t] - mean) * (flips[t + 1] - mean);
  }
  CHECK(std::abs(num / den) < 4.0 / std::sqrt(double(steps)));
}

TEST_CASE("observe_trajectory with zero rates reproduces latent summaries") {
  ProcessConfig cfg;
  cfg.n = 40;
  cfg.steps = 120;
  cfg.model = Model::PR;
  cfg.keep_edge_sets = true;
  const auto rec = simulate(cfg, 4);
  Rng rng(1);
  const auto obs = observe_trajectory(cfg.n, rec.latent_edges, {0.0, 0.0}, rng);
  REQUIRE(obs.size() == rec.length());
  for (std::size_t t = 0; t < obs.size(); ++t) {
    CHECK(obs[t].m == rec.m[t]);
    CHECK(obs[t].s1 == rec.s1[t]);
    CHECK(obs[t].s2 == rec.s2[t]);
  }
}

TEST_CASE("simulated observed summaries match their stored edge sets") {
  ProcessConfig cfg;
  cfg.n = 30;
  cfg.steps = 80;
  cfg.noise = NoiseParams{0.01, 0.05};
  cfg.keep_edge_sets = true;
  const auto rec = simulate(cfg, 12);
  REQUIRE(rec.observed_edges.size() == rec.length());
  for (std::size_t t = 0; t < rec.length(); ++t) {
    const auto s = summarize_edges(cfg.n, rec.observed_edges[t]);
    CHECK(rec.m_obs[t] == rec.observed_edges[t].size());
    CHECK(rec.s1_obs[t] == s.s1);
    CHECK(rec.s2_obs[t] == s.s2);
  }
}
