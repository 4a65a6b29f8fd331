#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "noisyperc/dyngraph.hpp"
#include "noisyperc/noise.hpp"
#include "noisyperc/rng.hpp"

namespace noisyperc {

enum class Model { ER, PR };

std::string to_string(Model model);
Model parse_model(std::string_view text);

/// Two-state birth/death indicator chain with rows (1-p, p) and (q, 1-q).
class IndicatorChain {
public:
  IndicatorChain(double p, double q, int initial_state = 0);

  int state() const { return state_; }
  double p() const { return p_; }
  double q() const { return q_; }
  /// Probability that the next state is 1 given the current one.
  double prob_next_one() const { return state_ == 0 ? p_ : 1.0 - q_; }

  int step(Rng& rng);

private:
  double p_;
  double q_;
  int state_;
};

enum class Choice { First, Second };

/// Product rule: First iff c11*c12 < c21*c22; ties go to Second.
Choice product_rule_choice(std::uint64_t c11, std::uint64_t c12, std::uint64_t c21, std::uint64_t c22);

/// Uniform edge birth (y = 1) or death (y = 0). Boundary cases are no-ops.
void er_step(DynamicGraph& g, int y, Rng& rng);

void pr_birth_step(DynamicGraph& g, Rng& rng);
void pr_death_step(DynamicGraph& g, Rng& rng);

// Deterministic cores of the PR steps, with the two candidates given.
// Both return the edge that was added / deleted.
Edge pr_birth_with_candidates(DynamicGraph& g, const Edge& e1, const Edge& e2);
Edge pr_death_with_candidates(DynamicGraph& g, const Edge& e1, const Edge& e2);

struct ProcessConfig {
  std::uint32_t n = 100;
  std::uint32_t steps = 600; // T
  Model model = Model::ER;
  double p = 1.0;
  double q = 0.0;
  int initial_y = 0;
  std::optional<NoiseParams> noise;
  bool keep_edge_sets = false; // retain latent/observed edge sets per step

  void validate() const;
};

/// Default horizon used when none is given: 6n steps.
inline std::uint32_t default_steps(std::uint32_t n) { return 6 * n; }

struct TrajectoryRecord {
  ProcessConfig config;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> m;
  std::vector<std::uint32_t> s1;
  std::vector<std::uint32_t> s2;
  // Empty when noise is off.
  std::vector<std::uint64_t> m_obs;
  std::vector<std::uint32_t> s1_obs;
  std::vector<std::uint32_t> s2_obs;
  // Filled only with keep_edge_sets.
  std::vector<std::vector<Edge>> latent_edges;
  std::vector<std::vector<Edge>> observed_edges;

  bool has_observed() const { return !s1_obs.empty(); }
  std::size_t length() const { return s1.size(); }
};

/// Starting from the empty graph, draw Y_t at the start of step t and apply it
/// to obtain G_t from G_{t-1}, for t = 1..T. Deterministic in (config, rng state).
TrajectoryRecord simulate(const ProcessConfig& config, Rng& rng);
TrajectoryRecord simulate(const ProcessConfig& config, std::uint64_t seed);

} // namespace noisyperc
