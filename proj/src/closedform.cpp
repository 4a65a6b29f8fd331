#include "noisyperc/closedform.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace noisyperc::closedform {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double saturated_count(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  return double(std::uint64_t{n} * (n - 1) / 2);
}

void check_args(std::uint32_t n, std::uint64_t m, double p, double alpha, double beta) {
  const double total = saturated_count(n);
  if (double(m) > total) throw std::invalid_argument("m exceeds C(n,2)");
  auto unit = [](double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument(std::string(name) + " must lie in [0,1]");
  };
  unit(p, "p");
  unit(alpha, "alpha");
  unit(beta, "beta");
}

TransitionTable skeleton(const char* name, std::uint32_t n, std::uint64_t m, double p, double alpha, double beta) {
  TransitionTable t;
  t.name = name;
  t.n = n;
  t.m = m;
  t.p = p;
  t.alpha = alpha;
  t.beta = beta;
  const double total = saturated_count(n);
  t.row_defined = {double(m) < total, m >= 1};
  for (int r = 0; r < 2; ++r)
    if (!t.row_defined[r]) t.entry[r] = {kNaN, kNaN};
  return t;
}

} // namespace

bool TransitionTable::row_stochastic(double tol) const {
  for (int r = 0; r < 2; ++r)
    if (row_defined[r] && std::abs(row_sum(r) - 1.0) > tol) return false;
  return true;
}

TransitionTable latent_transition_given_y(std::uint32_t n, std::uint64_t m, int y) {
  if (y != 0 && y != 1) throw std::invalid_argument("y must be 0 or 1");
  check_args(n, m, 0.0, 0.0, 0.0);
  auto t = skeleton("latent_given_y", n, m, double(y), 0.0, 0.0);
  const double absent = saturated_count(n) - double(m);
  const double birth = y == 1 ? 1.0 : 0.0;
  const double death = 1.0 - birth;
  if (t.row_defined[0]) t.entry[0] = {(absent - birth) / absent, birth / absent};
  if (t.row_defined[1]) t.entry[1] = {death / double(m), (double(m) - death) / double(m)};
  return t;
}

TransitionTable latent_transition_marginal(std::uint32_t n, std::uint64_t m, double p) {
  check_args(n, m, p, 0.0, 0.0);
  auto t = skeleton("latent_marginal", n, m, p, 0.0, 0.0);
  const double absent = saturated_count(n) - double(m);
  if (t.row_defined[0]) t.entry[0] = {(absent - p) / absent, p / absent};
  if (t.row_defined[1]) t.entry[1] = {(1.0 - p) / double(m), (double(m) - 1.0 + p) / double(m)};
  return t;
}

TransitionTable observed_transition_paper(std::uint32_t n, std::uint64_t m, double p, double alpha, double beta) {
  check_args(n, m, p, alpha, beta);
  const auto latent = latent_transition_marginal(n, m, p);
  auto t = skeleton("observed_paper", n, m, p, alpha, beta);
  if (t.row_defined[0]) t.entry[0] = {(1.0 - alpha) * latent.entry[0][0], alpha * latent.entry[0][1]};
  if (t.row_defined[1]) t.entry[1] = {beta * latent.entry[1][0], (1.0 - beta) * latent.entry[1][1]};
  return t;
}

TransitionTable observed_transition_consistent(std::uint32_t n, std::uint64_t m, double p, double alpha,
                                               double beta) {
  check_args(n, m, p, alpha, beta);
  const auto latent = latent_transition_marginal(n, m, p);
  auto t = skeleton("observed_consistent", n, m, p, alpha, beta);
  for (int r = 0; r < 2; ++r) {
    if (!t.row_defined[r]) continue;
    const double to_absent = latent.entry[r][0];
    const double to_present = latent.entry[r][1];
    t.entry[r][0] = (1.0 - alpha) * to_absent + beta * to_present;
    t.entry[r][1] = alpha * to_absent + (1.0 - beta) * to_present;
  }
  return t;
}

ProbabilityPair observed_marginal_paper(std::uint32_t n, std::uint64_t m, double p, double alpha, double beta) {
  check_args(n, m, p, alpha, beta);
  const double absent = saturated_count(n) - double(m);
  if (m == 0 || absent == 0.0) throw std::domain_error("marginal undefined for an empty or saturated graph");
  const double md = double(m);
  ProbabilityPair out;
  out.zero = (1.0 - alpha) * (absent - p) / absent + beta * (1.0 - p) / md;
  out.one = alpha * p / absent + (1.0 - beta) * (md - 1.0 + p) / md;
  return out;
}

ProbabilityPair observed_marginal_weighted(std::uint32_t n, std::uint64_t m, double p, double alpha, double beta,
                                           double weight_present) {
  if (!(weight_present >= 0.0 && weight_present <= 1.0)) throw std::invalid_argument("weight must lie in [0,1]");
  const auto t = observed_transition_consistent(n, m, p, alpha, beta);
  if (!t.row_defined[0] || !t.row_defined[1])
    throw std::domain_error("marginal undefined for an empty or saturated graph");
  ProbabilityPair out;
  out.zero = (1.0 - weight_present) * t.entry[0][0] + weight_present * t.entry[1][0];
  out.one = (1.0 - weight_present) * t.entry[0][1] + weight_present * t.entry[1][1];
  return out;
}

} // namespace noisyperc::closedform
