#include "noisyperc/noise.hpp"

#include <stdexcept>
#include <string>

namespace noisyperc {

void NoiseParams::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0,1], got " + std::to_string(alpha));
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in [0,1], got " + std::to_string(beta));
}

std::vector<Edge> observe_edges(const DynamicGraph& latent, const NoiseParams& params, Rng& rng,
                                FlipCounts& counts) {
  counts = {};
  std::vector<Edge> observed;
  observed.reserve(latent.edge_count() + 8);

  for (const auto& e : latent.edges()) {
    if (bernoulli(rng, params.beta))
      ++counts.false_negatives;
    else
      observed.push_back(e);
  }

  // Type I flips: walk the pair index space with geometric gaps, so each pair is
  // hit independently with probability alpha; hits on present edges are ignored.
  const auto n = latent.vertex_count();
  const auto total = pair_count(n);
  if (params.alpha >= 1.0) {
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const auto e = pair_from_index(n, idx);
      if (!latent.has_edge(e)) {
        observed.push_back(e);
        ++counts.false_positives;
      }
    }
  } else if (params.alpha > 0.0) {
    std::geometric_distribution<std::uint64_t> gap(params.alpha);
    for (std::uint64_t idx = gap(rng); idx < total; idx += 1 + gap(rng)) {
      const auto e = pair_from_index(n, idx);
      if (!latent.has_edge(e)) {
        observed.push_back(e);
        ++counts.false_positives;
      }
    }
  }
  return observed;
}

std::vector<Edge> observe_edges(const DynamicGraph& latent, const NoiseParams& params, Rng& rng) {
  FlipCounts ignored;
  return observe_edges(latent, params, rng, ignored);
}

std::vector<ObservedSummary> observe_trajectory(std::uint32_t n,
                                                const std::vector<std::vector<Edge>>& latent_edge_sets,
                                                const NoiseParams& params, Rng& rng) {
  params.validate();
  std::vector<ObservedSummary> out;
  out.reserve(latent_edge_sets.size());
  for (const auto& edges : latent_edge_sets) {
    DynamicGraph g(n);
    for (const auto& e : edges) g.add_edge(e);
    const auto obs = observe_edges(g, params, rng);
    const auto summary = summarize_edges(n, obs);
    out.push_back({obs.size(), static_cast<std::uint32_t>(summary.s1), static_cast<std::uint32_t>(summary.s2)});
  }
  return out;
}

} // namespace noisyperc
