// noisyperc: simulate noisy birth/death percolation, compare ER and PR
// detection statistics, print closed-form edge transition tables, and score
// external trajectories against simulated null distributions.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "noisyperc/cli.hpp"

namespace {

using namespace noisyperc;

// Options shared by simulate, compare and ingest.
void add_run_options(CLI::App& cmd, cli::RunSpec& spec, std::string& normalization, bool with_model) {
  if (with_model)
    cmd.add_option_function<std::string>(
           "--model", [&spec](const std::string& v) { spec.model = parse_model(v); }, "er or pr")
        ->default_str("er");
  cmd.add_option("--n", spec.n, "vertex count")->capture_default_str()->check(CLI::Range(2U, 1U << 20));
  cmd.add_option("--steps,-T", spec.steps, "time steps (default 6n)");
  cmd.add_option("--q", spec.q, "death rate (default 1-p)")->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--initial-y", spec.initial_y, "initial indicator state")->capture_default_str()->check(CLI::Range(0, 1));
  cmd.add_option("--runs", spec.runs, "independent runs")->capture_default_str();
  cmd.add_option("--seed", spec.seed, std::string("base seed (default $") + cli::kSeedEnv + ")")->capture_default_str();
  cmd.add_option("--jobs", spec.jobs, "worker threads (0: all cores)")->capture_default_str();
  cmd.add_option("--normalization", normalization, "GCC fraction denominator: vertices or pairs")
      ->capture_default_str()
      ->check(CLI::IsMember({"vertices", "pairs"}));
  cmd.add_option("--x1", spec.x1, "lower quantile level")->capture_default_str();
  cmd.add_option("--x2", spec.x2, "upper quantile level")->capture_default_str();
  cmd.add_flag("--drop-censored", spec.drop_censored, "drop runs whose QD is censored");
  cmd.add_option("--out", spec.out_dir, "output directory")->capture_default_str();
}

int run(int argc, char** argv) {
  CLI::App app{"Noisy birth/death percolation: ER vs Achlioptas product rule"};
  app.set_config("--config", "", "key=value config file; command-line flags take precedence");
  app.require_subcommand(1);

  const auto seed = cli::default_seed();

  cli::RunSpec sim;
  sim.seed = seed;
  std::string sim_norm = "vertices";
  auto* simulate = app.add_subcommand("simulate", "write trajectory CSVs and the mean curve");
  add_run_options(*simulate, sim, sim_norm, true);
  simulate->add_option("--p", sim.p, "birth rate")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--alpha", sim.alpha, "Type I (false positive) rate")->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--beta", sim.beta, "Type II (false negative) rate")->check(CLI::Range(0.0, 1.0));
  simulate->add_flag("--edge-sets", sim.edge_sets, "also write per-step edge-list blocks");

  cli::CompareSpec cmp;
  cmp.base.seed = seed;
  cmp.base.runs = 1000;
  std::string cmp_norm = "vertices";
  auto* compare = app.add_subcommand("compare", "sweep p and noise rates; ROC curves and AUCs for both statistics");
  add_run_options(*compare, cmp.base, cmp_norm, false);
  compare->get_option("--runs")->default_val(1000);
  compare->add_option("--p", cmp.p_values, "birth rates to sweep")->delimiter(',')->capture_default_str();
  auto* alphas = compare->add_option("--alpha", cmp.alpha_values, "Type I rates to sweep")->delimiter(',');
  auto* betas = compare->add_option("--beta", cmp.beta_values, "Type II rates to sweep")->delimiter(',');
  compare->add_option("--thresholds", cmp.thresholds, "ROC grid size for smoothed densities")->capture_default_str();

  cli::FormulaSpec form;
  auto* formulas = app.add_subcommand("formulas", "print the closed-form edge transition tables as CSV");
  formulas->add_option("--n", form.n, "vertex count")->capture_default_str();
  formulas->add_option("--m", form.m, "current edge count")->capture_default_str();
  formulas->add_option("--p", form.p, "birth rate (death rate 1-p)")->capture_default_str();
  formulas->add_option("--alpha", form.alpha, "Type I rate")->capture_default_str();
  formulas->add_option("--beta", form.beta, "Type II rate")->capture_default_str();

  cli::IngestSpec ing;
  ing.reference.seed = seed;
  ing.reference.runs = 1000;
  std::string ing_norm = "vertices";
  std::string columns = "auto";
  std::uint32_t ingest_n = 0;
  auto* ingest = app.add_subcommand("ingest", "score an observed trajectory against simulated ER and PR nulls");
  ingest->add_option("file", ing.input, "trajectory: CSV with s1,s2 columns or edge-list blocks")->required();
  add_run_options(*ingest, ing.reference, ing_norm, false);
  ingest->get_option("--runs")->default_val(1000);
  auto* ingest_n_opt = ingest->get_option("--n");
  ingest_n_opt->description("vertex count (overrides the file's '# n=' line)");
  ingest_n_opt->default_str("");
  ingest_n_opt->each([&](const std::string& v) { ingest_n = static_cast<std::uint32_t>(std::stoul(v)); });
  ingest->add_option("--p", ing.reference.p, "reference birth rate")->capture_default_str();
  ingest->add_option("--alpha", ing.reference.alpha, "reference Type I rate");
  ingest->add_option("--beta", ing.reference.beta, "reference Type II rate");
  ingest->add_option("--columns", columns, "which CSV columns to read")
      ->capture_default_str()
      ->check(CLI::IsMember({"auto", "latent", "observed"}));

  CLI11_PARSE(app, argc, argv);

  if (simulate->parsed()) {
    sim.normalization = parse_normalization(sim_norm);
    cli::cmd_simulate(sim, std::cerr);
  } else if (compare->parsed()) {
    cmp.base.normalization = parse_normalization(cmp_norm);
    cmp.noise = alphas->count() > 0 || betas->count() > 0;
    cli::cmd_compare(cmp, std::cerr);
  } else if (formulas->parsed()) {
    if (!cli::cmd_formulas(form, std::cout)) std::cerr << "warning: a printed table is not row-stochastic\n";
  } else if (ingest->parsed()) {
    ing.reference.normalization = parse_normalization(ing_norm);
    ing.columns = columns == "latent"     ? io::ColumnChoice::Latent
                  : columns == "observed" ? io::ColumnChoice::Observed
                                          : io::ColumnChoice::Auto;
    if (ingest_n_opt->count() > 0) ing.n = ingest_n;
    cli::cmd_ingest(ing, std::cout);
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "noisyperc: error: " << e.what() << '\n';
    return 1;
  }
}
