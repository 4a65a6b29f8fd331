#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace noisyperc::closedform {

// Single-edge transition tables for the birth/death ER process. Rows are indexed
// by the latent status X_t(e), columns by the next (latent or observed) status.
// A row is undefined when its denominator vanishes: row 0 when the graph is
// saturated (m = C(n,2)), row 1 when it is empty (m = 0). Undefined entries are NaN.
struct TransitionTable {
  std::string name;
  std::array<std::array<double, 2>, 2> entry{};
  std::array<bool, 2> row_defined{true, true};
  std::uint32_t n = 0;
  std::uint64_t m = 0;
  double p = 0.0;
  double alpha = 0.0;
  double beta = 0.0;

  double row_sum(int from) const { return entry[from][0] + entry[from][1]; }
  /// True when every defined row sums to 1 within `tol`.
  bool row_stochastic(double tol = 1e-12) const;
};

TransitionTable latent_transition_given_y(std::uint32_t n, std::uint64_t m, int y);

/// Expectation of the y-conditional table over y ~ Bernoulli(p) (the p = 1 - q case).
TransitionTable latent_transition_marginal(std::uint32_t n, std::uint64_t m, double p);

/// Observed-process table exactly as printed: each latent entry multiplied by a
/// single confusion-matrix factor. Rows generally do not sum to 1.
TransitionTable observed_transition_paper(std::uint32_t n, std::uint64_t m, double p, double alpha, double beta);

/// P[X*_{t+1} | X_t] obtained by composing the marginal latent table with the
/// confusion matrix. Row-stochastic.
TransitionTable observed_transition_consistent(std::uint32_t n, std::uint64_t m, double p, double alpha,
                                               double beta);

struct ProbabilityPair {
  double zero = 0.0;
  double one = 0.0;
};

/// Printed marginal: P[X*=0] = (1-a)(C-m-p)/(C-m) + b(1-p)/m, and its complement.
ProbabilityPair observed_marginal_paper(std::uint32_t n, std::uint64_t m, double p, double alpha, double beta);

/// P[X*_{t+1} = 0] for an edge whose latent status is 1 with probability
/// `weight_present`, using the consistent table. Reference for the printed form.
ProbabilityPair observed_marginal_weighted(std::uint32_t n, std::uint64_t m, double p, double alpha, double beta,
                                           double weight_present);

} // namespace noisyperc::closedform
