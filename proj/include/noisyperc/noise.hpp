#pragma once

#include <vector>

#include "noisyperc/dyngraph.hpp"
#include "noisyperc/rng.hpp"

namespace noisyperc {

/// Per-edge confusion matrix: absent pairs read as present with probability
/// alpha (Type I), present edges read as absent with probability beta (Type II).
struct NoiseParams {
  double alpha = 0.0;
  double beta = 0.0;

  void validate() const;
  bool is_identity() const { return alpha == 0.0 && beta == 0.0; }
};

/// One independent noisy reading of every vertex pair of `latent`.
std::vector<Edge> observe_edges(const DynamicGraph& latent, const NoiseParams& params, Rng& rng);

struct FlipCounts {
  std::uint64_t false_positives = 0;
  std::uint64_t false_negatives = 0;
};

/// Same as observe_edges, also reporting how many pairs were flipped each way.
std::vector<Edge> observe_edges(const DynamicGraph& latent, const NoiseParams& params, Rng& rng,
                                FlipCounts& counts);

struct ObservedSummary {
  std::uint64_t m = 0;
  std::uint32_t s1 = 0;
  std::uint32_t s2 = 0;
};

/// Fresh, independent observation of each latent edge set in turn.
std::vector<ObservedSummary> observe_trajectory(std::uint32_t n,
                                                const std::vector<std::vector<Edge>>& latent_edge_sets,
                                                const NoiseParams& params, Rng& rng);

} // namespace noisyperc
