#include "noisyperc/process.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace noisyperc {

std::string to_string(Model model) { return model == Model::ER ? "er" : "pr"; }

Model parse_model(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "er") return Model::ER;
  if (lower == "pr") return Model::PR;
  throw std::invalid_argument("unknown model '" + std::string(text) + "' (expected er or pr)");
}

namespace {
void check_rate(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0))
    throw std::invalid_argument(std::string(name) + " must lie in [0,1], got " + std::to_string(value));
}
} // namespace

IndicatorChain::IndicatorChain(double p, double q, int initial_state) : p_(p), q_(q), state_(initial_state) {
  check_rate(p, "p");
  check_rate(q, "q");
  if (initial_state != 0 && initial_state != 1) throw std::invalid_argument("indicator state must be 0 or 1");
}

int IndicatorChain::step(Rng& rng) {
  state_ = bernoulli(rng, prob_next_one()) ? 1 : 0;
  return state_;
}

Choice product_rule_choice(std::uint64_t c11, std::uint64_t c12, std::uint64_t c21, std::uint64_t c22) {
  if (c11 == 0 || c12 == 0 || c21 == 0 || c22 == 0) throw std::invalid_argument("component sizes must be >= 1");
  return c11 * c12 < c21 * c22 ? Choice::First : Choice::Second;
}

void er_step(DynamicGraph& g, int y, Rng& rng) {
  if (y == 1) {
    if (g.saturated()) return;
    g.add_edge(g.sample_absent_pairs(1, rng).front());
  } else {
    if (g.edge_count() == 0) return;
    g.remove_edge(g.sample_present_pairs(1, rng).front());
  }
}

namespace {
Choice rule_for(const DynamicGraph& g, const Edge& e1, const Edge& e2) {
  return product_rule_choice(g.component_of(e1.lo), g.component_of(e1.hi), g.component_of(e2.lo),
                             g.component_of(e2.hi));
}
} // namespace

Edge pr_birth_with_candidates(DynamicGraph& g, const Edge& e1, const Edge& e2) {
  if (e1 == e2) throw std::invalid_argument("PR candidates must be distinct");
  const Edge& chosen = rule_for(g, e1, e2) == Choice::First ? e1 : e2;
  g.add_edge(chosen);
  return chosen;
}

Edge pr_death_with_candidates(DynamicGraph& g, const Edge& e1, const Edge& e2) {
  if (e1 == e2) throw std::invalid_argument("PR candidates must be distinct");
  g.remove_edge(e1);
  g.remove_edge(e2);
  // First: e2 stays deleted and e1 re-enters; otherwise the reverse.
  if (rule_for(g, e1, e2) == Choice::First) {
    g.add_edge(e1);
    return e2;
  }
  g.add_edge(e2);
  return e1;
}

void pr_birth_step(DynamicGraph& g, Rng& rng) {
  if (g.saturated()) return;
  const auto candidates = g.sample_absent_pairs(2, rng);
  if (candidates.size() == 1) {
    g.add_edge(candidates.front());
    return;
  }
  pr_birth_with_candidates(g, candidates[0], candidates[1]);
}

void pr_death_step(DynamicGraph& g, Rng& rng) {
  if (g.edge_count() == 0) return;
  const auto candidates = g.sample_present_pairs(2, rng);
  if (candidates.size() == 1) {
    g.remove_edge(candidates.front());
    return;
  }
  pr_death_with_candidates(g, candidates[0], candidates[1]);
}

void ProcessConfig::validate() const {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  check_rate(p, "p");
  check_rate(q, "q");
  if (initial_y != 0 && initial_y != 1) throw std::invalid_argument("initial_y must be 0 or 1");
  if (noise) noise->validate();
}

TrajectoryRecord simulate(const ProcessConfig& config, Rng& rng) {
  config.validate();
  TrajectoryRecord rec;
  rec.config = config;
  const std::size_t len = std::size_t{config.steps} + 1;
  rec.m.reserve(len);
  rec.s1.reserve(len);
  rec.s2.reserve(len);
  const bool noisy = config.noise.has_value();
  if (noisy) {
    rec.m_obs.reserve(len);
    rec.s1_obs.reserve(len);
    rec.s2_obs.reserve(len);
  }

  DynamicGraph g(config.n);
  IndicatorChain chain(config.p, config.q, config.initial_y);

  auto record = [&] {
    const auto [s1, s2] = g.top_two();
    rec.m.push_back(g.edge_count());
    rec.s1.push_back(static_cast<std::uint32_t>(s1));
    rec.s2.push_back(static_cast<std::uint32_t>(s2));
    if (config.keep_edge_sets) rec.latent_edges.push_back(g.edges());
    if (noisy) {
      auto obs = observe_edges(g, *config.noise, rng);
      const auto summary = summarize_edges(config.n, obs);
      rec.m_obs.push_back(obs.size());
      rec.s1_obs.push_back(static_cast<std::uint32_t>(summary.s1));
      rec.s2_obs.push_back(static_cast<std::uint32_t>(summary.s2));
      if (config.keep_edge_sets) rec.observed_edges.push_back(std::move(obs));
    }
  };

  record();
  for (std::uint32_t t = 1; t <= config.steps; ++t) {
    const int y = chain.step(rng);
    if (config.model == Model::ER) {
      er_step(g, y, rng);
    } else if (y == 1) {
      pr_birth_step(g, rng);
    } else {
      pr_death_step(g, rng);
    }
    record();
  }
  return rec;
}

TrajectoryRecord simulate(const ProcessConfig& config, std::uint64_t seed) {
  auto rng = make_rng(seed);
  auto rec = simulate(config, rng);
  rec.seed = seed;
  return rec;
}

} // namespace noisyperc
