#include "noisyperc/cli.hpp"

#include <fmt/format.h>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "noisyperc/closedform.hpp"
#include "noisyperc/parallel.hpp"
#include "noisyperc/stats.hpp"

namespace noisyperc::cli {

namespace fs = std::filesystem;
using io::format_number;

std::uint64_t default_seed() {
  if (const char* env = std::getenv(kSeedEnv); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0') throw std::invalid_argument(std::string(kSeedEnv) + " is not an integer");
    return value;
  }
  return kFallbackSeed;
}

namespace {

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw std::runtime_error("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

void check_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument(fmt::format("{} must lie in [0,1], got {}", name, v));
}

std::string point_tag(double p, double alpha, double beta) {
  return fmt::format("p{}_a{}_b{}", p, alpha, beta);
}

void write_run_metadata(std::ostream& out, const ProcessConfig& cfg, std::size_t runs, std::uint64_t seed) {
  out << "# model=" << to_string(cfg.model) << '\n';
  out << "# n=" << cfg.n << '\n';
  out << "# T=" << cfg.steps << '\n';
  out << "# p=" << format_number(cfg.p) << '\n';
  out << "# q=" << format_number(cfg.q) << '\n';
  out << "# alpha=" << (cfg.noise ? format_number(cfg.noise->alpha) : "") << '\n';
  out << "# beta=" << (cfg.noise ? format_number(cfg.noise->beta) : "") << '\n';
  out << "# runs=" << runs << '\n';
  out << "# seed=" << seed << '\n';
}

double mean(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x;
  return acc / double(v.size());
}

} // namespace

ProcessConfig RunSpec::process_config() const {
  ProcessConfig cfg;
  cfg.model = model;
  cfg.n = n;
  cfg.steps = steps.value_or(default_steps(n));
  cfg.p = p;
  cfg.q = q.value_or(1.0 - p);
  cfg.initial_y = initial_y;
  if (alpha || beta) cfg.noise = NoiseParams{alpha.value_or(0.0), beta.value_or(0.0)};
  cfg.keep_edge_sets = edge_sets;
  return cfg;
}

SampleOptions RunSpec::sample_options() const {
  SampleOptions opts;
  opts.x1 = x1;
  opts.x2 = x2;
  opts.normalization = normalization;
  opts.jobs = jobs;
  return opts;
}

void RunSpec::validate() const {
  process_config().validate();
  if (runs == 0) throw std::invalid_argument("runs must be at least 1");
  check_unit(x1, "x1");
  check_unit(x2, "x2");
  if (!(x1 < x2)) throw std::invalid_argument("quantile pair must satisfy x1 < x2");
}

void cmd_simulate(const RunSpec& spec, std::ostream& log) {
  spec.validate();
  const auto cfg = spec.process_config();
  std::vector<TrajectoryRecord> trajs(spec.runs);
  parallel_for(spec.runs, spec.jobs, [&](std::size_t i) { trajs[i] = simulate(cfg, stream_seed(spec.seed, i)); });

  const auto width = std::to_string(spec.runs - 1).size();
  for (std::size_t i = 0; i < spec.runs; ++i) {
    const auto stem = fmt::format("traj_{:0{}}", i, width);
    auto out = open_output(spec.out_dir / (stem + ".csv"));
    out << "# run=" << i << '\n';
    io::write_trajectory_csv(out, trajs[i]);
    if (spec.edge_sets) {
      auto latent = open_output(spec.out_dir / (stem + "_latent.edges"));
      latent << "# n=" << cfg.n << '\n';
      io::write_edge_blocks(latent, trajs[i].latent_edges);
      if (trajs[i].has_observed()) {
        auto observed = open_output(spec.out_dir / (stem + "_observed.edges"));
        observed << "# n=" << cfg.n << '\n';
        io::write_edge_blocks(observed, trajs[i].observed_edges);
      }
    }
  }

  // Per-step means across runs of F(t) and s2.
  const std::size_t len = std::size_t{cfg.steps} + 1;
  const bool noisy = cfg.noise.has_value();
  std::vector<double> f(len), s2(len), f_obs(len), s2_obs(len);
  for (const auto& tr : trajs) {
    const auto series = gcc_fraction_series(tr, Track::Latent, spec.normalization);
    for (std::size_t t = 0; t < len; ++t) {
      f[t] += series.values[t];
      s2[t] += tr.s2[t];
    }
    if (noisy) {
      const auto obs = gcc_fraction_series(tr, Track::Observed, spec.normalization);
      for (std::size_t t = 0; t < len; ++t) {
        f_obs[t] += obs.values[t];
        s2_obs[t] += tr.s2_obs[t];
      }
    }
  }
  auto out = open_output(spec.out_dir / "mean_curve.csv");
  write_run_metadata(out, cfg, spec.runs, spec.seed);
  out << "# normalization=" << (spec.normalization == Normalization::ByVertices ? "vertices" : "pairs") << '\n';
  out << "t,gcc_fraction,s2,gcc_fraction_obs,s2_obs\n";
  const double runs = double(spec.runs);
  for (std::size_t t = 0; t < len; ++t) {
    out << t << ',' << format_number(f[t] / runs) << ',' << format_number(s2[t] / runs) << ',';
    if (noisy) out << format_number(f_obs[t] / runs) << ',' << format_number(s2_obs[t] / runs);
    else out << ',';
    out << '\n';
  }
  log << "wrote " << spec.runs << " trajectories and mean_curve.csv to " << spec.out_dir.string() << '\n';
}

void CompareSpec::validate() const {
  base.validate();
  if (p_values.empty()) throw std::invalid_argument("empty sweep: give at least one p");
  for (double p : p_values) check_unit(p, "p");
  for (double a : alpha_values) check_unit(a, "alpha");
  for (double b : beta_values) check_unit(b, "beta");
  if (base.runs < 2) throw std::invalid_argument("compare needs at least 2 runs per model");
}

ComparePoint compare_point(const RunSpec& base, double p, std::optional<double> q, std::optional<NoiseParams> noise,
                           std::uint64_t seed, std::size_t thresholds, const fs::path* out_dir) {
  RunSpec spec = base;
  spec.p = p;
  spec.q = q;
  spec.alpha.reset();
  spec.beta.reset();
  spec.edge_sets = false;
  auto cfg = spec.process_config();
  cfg.noise = noise;
  const auto opts = spec.sample_options();

  ComparePoint point;
  point.p = p;
  point.q = cfg.q;
  point.alpha = noise ? noise->alpha : 0.0;
  point.beta = noise ? noise->beta : 0.0;

  StatisticSample qd[2], sec[2];
  for (int k = 0; k < 2; ++k) {
    cfg.model = k == 0 ? Model::ER : Model::PR;
    const auto model_seed = stream_seed(seed, static_cast<std::uint64_t>(k));
    const auto runs = simulate_statistics(cfg, spec.runs, model_seed, opts);
    qd[k] = make_sample(cfg, StatKind::QD, runs, model_seed, spec.drop_censored);
    sec[k] = make_sample(cfg, StatKind::Sec, runs, model_seed, false);
    double q50 = 0.0;
    std::size_t censored = 0;
    for (const auto& r : runs) {
      q50 += r.q_half;
      censored += r.qd_censored ? 1 : 0;
    }
    q50 /= double(runs.size());
    (k == 0 ? point.mean_q50_er : point.mean_q50_pr) = q50;
    (k == 0 ? point.censored_qd_er : point.censored_qd_pr) = censored;
    (k == 0 ? point.mean_qd_er : point.mean_qd_pr) = mean(qd[k].values);
    (k == 0 ? point.mean_sec_er : point.mean_sec_pr) = mean(sec[k].values);
  }

  const auto qd_orient = orientation_for(StatKind::QD);
  const auto sec_orient = orientation_for(StatKind::Sec);
  const auto qd_roc = roc(kde(qd[0].values), kde(qd[1].values), qd_orient, thresholds);
  const auto sec_roc = roc(kde(sec[0].values), kde(sec[1].values), sec_orient, thresholds);
  point.auc_qd_kde = auc(qd_roc);
  point.auc_sec_kde = auc(sec_roc);
  point.auc_qd_empirical = empirical_auc(qd[0].values, qd[1].values, qd_orient);
  point.auc_sec_empirical = empirical_auc(sec[0].values, sec[1].values, sec_orient);

  if (out_dir != nullptr) {
    const auto tag = point_tag(p, point.alpha, point.beta);
    {
      auto out = open_output(*out_dir / "roc" / fmt::format("roc_{}_QD.csv", tag));
      io::write_roc_csv(out, qd_roc);
    }
    {
      auto out = open_output(*out_dir / "roc" / fmt::format("roc_{}_Sec.csv", tag));
      io::write_roc_csv(out, sec_roc);
    }
    {
      auto out = open_output(*out_dir / "roc" / fmt::format("roc_{}_QD_empirical.csv", tag));
      io::write_roc_csv(out, roc(qd[0].values, qd[1].values, qd_orient));
    }
    {
      auto out = open_output(*out_dir / "roc" / fmt::format("roc_{}_Sec_empirical.csv", tag));
      io::write_roc_csv(out, roc(sec[0].values, sec[1].values, sec_orient));
    }
    for (int k = 0; k < 2; ++k) {
      auto out = open_output(*out_dir / "stats" / fmt::format("stats_{}_{}.csv", tag, to_string(qd[k].model)));
      io::write_statistic_csv(out, qd[k]);
      for (std::size_t i = 0; i < sec[k].values.size(); ++i)
        out << i << ",Sec," << format_number(sec[k].values[i]) << ",0\n";
    }
  }
  return point;
}

std::vector<ComparePoint> cmd_compare(const CompareSpec& spec, std::ostream& log) {
  spec.validate();
  std::vector<std::optional<NoiseParams>> noise_grid;
  if (spec.noise) {
    const auto alphas = spec.alpha_values.empty() ? std::vector<double>{0.0} : spec.alpha_values;
    const auto betas = spec.beta_values.empty() ? std::vector<double>{0.0} : spec.beta_values;
    for (double a : alphas)
      for (double b : betas) noise_grid.emplace_back(NoiseParams{a, b});
  } else {
    noise_grid.emplace_back(std::nullopt);
  }

  const auto& out_dir = spec.base.out_dir;
  auto auc_kde = open_output(out_dir / "auc.csv");
  auto auc_emp = open_output(out_dir / "auc_empirical.csv");
  auto means = open_output(out_dir / "means.csv");
  for (auto* out : {&auc_kde, &auc_emp}) {
    *out << "# n=" << spec.base.n << '\n';
    *out << "# T=" << spec.base.steps.value_or(default_steps(spec.base.n)) << '\n';
    *out << "# quantiles=" << format_number(spec.base.x1) << ',' << format_number(spec.base.x2) << '\n';
    *out << "p,alpha,beta,kind,auc,n_runs,seed\n";
  }
  means << "p,q,alpha,beta,model,mean_qd,mean_sec,mean_q50,censored_qd,n_runs\n";

  std::vector<ComparePoint> points;
  std::uint64_t index = 0;
  for (double p : spec.p_values) {
    for (const auto& noise : noise_grid) {
      const auto point_seed = stream_seed(spec.base.seed, index++);
      log << "point " << index << ": p=" << p;
      if (noise) log << " alpha=" << noise->alpha << " beta=" << noise->beta;
      log << '\n';
      const auto pt = compare_point(spec.base, p, spec.base.q, noise, point_seed, spec.thresholds, &out_dir);
      const auto prefix = fmt::format("{},{},{}", format_number(pt.p), format_number(pt.alpha), format_number(pt.beta));
      const auto suffix = fmt::format("{},{}", spec.base.runs, point_seed);
      auc_kde << prefix << ",QD," << format_number(pt.auc_qd_kde) << ',' << suffix << '\n';
      auc_kde << prefix << ",Sec," << format_number(pt.auc_sec_kde) << ',' << suffix << '\n';
      auc_emp << prefix << ",QD," << format_number(pt.auc_qd_empirical) << ',' << suffix << '\n';
      auc_emp << prefix << ",Sec," << format_number(pt.auc_sec_empirical) << ',' << suffix << '\n';
      const auto head = fmt::format("{},{},{},{}", format_number(pt.p), format_number(pt.q), format_number(pt.alpha),
                                    format_number(pt.beta));
      means << head << ",er," << format_number(pt.mean_qd_er) << ',' << format_number(pt.mean_sec_er) << ','
            << format_number(pt.mean_q50_er) << ',' << pt.censored_qd_er << ',' << spec.base.runs << '\n';
      means << head << ",pr," << format_number(pt.mean_qd_pr) << ',' << format_number(pt.mean_sec_pr) << ','
            << format_number(pt.mean_q50_pr) << ',' << pt.censored_qd_pr << ',' << spec.base.runs << '\n';
      points.push_back(pt);
    }
  }
  log << "wrote " << points.size() << " sweep point(s) to " << out_dir.string() << '\n';
  return points;
}

bool cmd_formulas(const FormulaSpec& spec, std::ostream& out) {
  using namespace closedform;
  out << "# n=" << spec.n << '\n';
  out << "# m=" << spec.m << '\n';
  out << "# p=" << format_number(spec.p) << '\n';
  out << "# alpha=" << format_number(spec.alpha) << '\n';
  out << "# beta=" << format_number(spec.beta) << '\n';
  const std::vector<TransitionTable> tables{
      latent_transition_given_y(spec.n, spec.m, 0),
      latent_transition_given_y(spec.n, spec.m, 1),
      latent_transition_marginal(spec.n, spec.m, spec.p),
      observed_transition_paper(spec.n, spec.m, spec.p, spec.alpha, spec.beta),
      observed_transition_consistent(spec.n, spec.m, spec.p, spec.alpha, spec.beta),
  };
  io::write_table_csv_header(out);
  bool all_stochastic = true;
  for (std::size_t k = 0; k < tables.size(); ++k) {
    auto named = tables[k];
    if (k < 2) named.name = fmt::format("latent_given_y{}", k);
    io::write_table_csv_rows(out, named);
  }
  for (const auto& t : tables) {
    for (int r = 0; r < 2; ++r)
      if (!t.row_defined[r])
        out << fmt::format("# note: {} row {} undefined (m={} of {} pairs)\n", t.name, r, spec.m, pair_count(spec.n));
    if (!t.row_stochastic()) {
      all_stochastic = false;
      out << "# warning: " << t.name << " rows do not sum to 1\n";
    }
  }
  out << '\n' << "marginal,p_zero,p_one,sum\n";
  try {
    const auto mp = observed_marginal_paper(spec.n, spec.m, spec.p, spec.alpha, spec.beta);
    out << "observed_marginal_paper," << format_number(mp.zero) << ',' << format_number(mp.one) << ','
        << format_number(mp.zero + mp.one) << '\n';
  } catch (const std::domain_error& e) {
    out << "# note: observed_marginal_paper undefined: " << e.what() << '\n';
  }
  return all_stochastic;
}

Direction alternative_direction(Model null_model, StatKind kind) {
  // PR is expected to show a larger theta_Sec and a smaller theta_QD than ER.
  const bool toward_larger = (null_model == Model::ER) == (kind == StatKind::Sec);
  return toward_larger ? Direction::Greater : Direction::Less;
}

IngestResult ingest(const io::IngestedTrajectory& traj, const IngestSpec& spec) {
  if (traj.length() < 2) throw std::invalid_argument("trajectory must span at least 2 steps");
  const auto n = spec.n ? *spec.n : traj.n.value_or(spec.reference.n);
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  for (std::size_t t = 0; t < traj.length(); ++t)
    if (traj.s1[t] > n || traj.s1[t] + traj.s2[t] > n || traj.s2[t] > traj.s1[t])
      throw std::invalid_argument(fmt::format("step {}: component sizes inconsistent with n={}", t, n));

  RunSpec ref = spec.reference;
  ref.n = n;
  ref.steps = static_cast<std::uint32_t>(traj.length() - 1);
  ref.edge_sets = false;
  ref.validate();

  IngestResult result;
  result.n = n;
  result.steps = *ref.steps;
  const auto series = gcc_fraction_series(traj.s1, n, ref.normalization);
  const auto lo = quantile(series, ref.x1);
  const auto hi = quantile(series, ref.x2);
  result.q_low = lo.t;
  result.q_high = hi.t;
  result.q_half = quantile(series, 0.5).t;
  const auto qd = quantile_difference(series, ref.x1, ref.x2);
  const auto sec = max_second_component(traj.s2);

  const auto opts = ref.sample_options();
  for (int k = 0; k < 2; ++k) {
    auto cfg = ref.process_config();
    cfg.model = k == 0 ? Model::ER : Model::PR;
    const auto model_seed = stream_seed(ref.seed, static_cast<std::uint64_t>(k));
    const auto runs = simulate_statistics(cfg, ref.runs, model_seed, opts);
    for (auto kind : {StatKind::QD, StatKind::Sec}) {
      const auto null = make_sample(cfg, kind, runs, model_seed, ref.drop_censored && kind == StatKind::QD);
      IngestRow row;
      row.null_model = cfg.model;
      row.kind = kind;
      row.observed = kind == StatKind::QD ? qd.value : sec.value;
      row.censored = kind == StatKind::QD && qd.censored;
      row.direction = alternative_direction(cfg.model, kind);
      row.p_value = mc_pvalue(null.values, row.observed, row.direction);
      result.rows.push_back(row);
    }
  }
  return result;
}

IngestResult cmd_ingest(const IngestSpec& spec, std::ostream& out) {
  std::ifstream in(spec.input, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + spec.input.string());
  const auto traj = io::read_trajectory(in, spec.n, spec.columns);
  const auto result = ingest(traj, spec);

  const auto& ref = spec.reference;
  out << "# input=" << spec.input.string() << '\n';
  out << "# columns=" << (traj.from_observed_columns ? "observed" : "latent") << '\n';
  out << "# n=" << result.n << '\n';
  out << "# T=" << result.steps << '\n';
  out << "# p=" << format_number(ref.p) << '\n';
  out << "# q=" << format_number(ref.q.value_or(1.0 - ref.p)) << '\n';
  out << "# alpha=" << (ref.alpha ? format_number(*ref.alpha) : "") << '\n';
  out << "# beta=" << (ref.beta ? format_number(*ref.beta) : "") << '\n';
  out << "# runs=" << ref.runs << '\n';
  out << "# seed=" << ref.seed << '\n';
  out << fmt::format("# Q({})={}\n# Q({})={}\n# Q(0.5)={}\n", ref.x1, result.q_low, ref.x2, result.q_high,
                     result.q_half);
  out << "null_model,kind,observed,censored,direction,p_value,n_runs\n";
  for (const auto& row : result.rows)
    out << to_string(row.null_model) << ',' << to_string(row.kind) << ',' << format_number(row.observed) << ','
        << (row.censored ? 1 : 0) << ',' << (row.direction == Direction::Greater ? "greater" : "less") << ','
        << format_number(row.p_value) << ',' << ref.runs << '\n';
  return result;
}

} // namespace noisyperc::cli
