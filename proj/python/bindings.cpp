#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "noisyperc/cli.hpp"
#include "noisyperc/closedform.hpp"
#include "noisyperc/infer.hpp"
#include "noisyperc/process.hpp"
#include "noisyperc/stats.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace noisyperc;

namespace {

py::dict table_to_dict(const closedform::TransitionTable& t) {
  py::dict d;
  d["name"] = t.name;
  d["entries"] = t.entry;
  d["row_defined"] = t.row_defined;
  d["row_stochastic"] = t.row_stochastic();
  return d;
}

ProcessConfig make_config(const std::string& model, std::uint32_t n, std::optional<std::uint32_t> steps, double p,
                          std::optional<double> q, std::optional<double> alpha, std::optional<double> beta,
                          int initial_y) {
  ProcessConfig cfg;
  cfg.model = parse_model(model);
  cfg.n = n;
  cfg.steps = steps.value_or(default_steps(n));
  cfg.p = p;
  cfg.q = q.value_or(1.0 - p);
  cfg.initial_y = initial_y;
  if (alpha || beta) cfg.noise = NoiseParams{alpha.value_or(0.0), beta.value_or(0.0)};
  return cfg;
}

Orientation orientation_from(const std::string& kind) { return orientation_for(parse_stat_kind(kind)); }

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Noisy birth/death percolation: ER and Achlioptas product-rule simulation, detection statistics, ROC/AUC";

  py::class_<DynamicGraph>(m, "DynamicGraph")
      .def(py::init<std::uint32_t>(), py::arg("n"))
      .def_property_readonly("n", &DynamicGraph::vertex_count)
      .def_property_readonly("m", &DynamicGraph::edge_count)
      .def("add_edge", [](DynamicGraph& g, VertexId u, VertexId v) { g.add_edge(Edge(u, v)); })
      .def("remove_edge", [](DynamicGraph& g, VertexId u, VertexId v) { g.remove_edge(Edge(u, v)); })
      .def("has_edge", [](const DynamicGraph& g, VertexId u, VertexId v) { return g.has_edge(Edge(u, v)); })
      .def("component_sizes", [](const DynamicGraph& g) { return g.component_sizes().sizes; })
      .def("component_of", &DynamicGraph::component_of)
      .def("edges", [](const DynamicGraph& g) {
        std::vector<std::pair<VertexId, VertexId>> out;
        for (const auto& e : g.edges()) out.emplace_back(e.lo, e.hi);
        return out;
      });

  m.def(
      "simulate",
      [](const std::string& model, std::uint32_t n, std::optional<std::uint32_t> steps, double p,
         std::optional<double> q, std::optional<double> alpha, std::optional<double> beta, int initial_y,
         std::uint64_t seed) {
        const auto rec = simulate(make_config(model, n, steps, p, q, alpha, beta, initial_y), seed);
        py::dict d;
        d["m"] = rec.m;
        d["s1"] = rec.s1;
        d["s2"] = rec.s2;
        if (rec.has_observed()) {
          d["m_obs"] = rec.m_obs;
          d["s1_obs"] = rec.s1_obs;
          d["s2_obs"] = rec.s2_obs;
        }
        return d;
      },
      py::arg("model") = "er", py::arg("n") = 100, py::arg("steps") = py::none(), py::arg("p") = 1.0,
      py::arg("q") = py::none(), py::arg("alpha") = py::none(), py::arg("beta") = py::none(),
      py::arg("initial_y") = 0, py::arg("seed") = 0,
      "Simulate one trajectory; returns per-step edge counts and top-two component sizes.");

  m.def(
      "sample_statistic",
      [](const std::string& model, const std::string& kind, std::size_t runs, std::uint64_t seed, std::uint32_t n,
         std::optional<std::uint32_t> steps, double p, std::optional<double> q, std::optional<double> alpha,
         std::optional<double> beta, unsigned jobs) {
        SampleOptions opts;
        opts.jobs = jobs;
        py::gil_scoped_release release;
        return sample_statistic(make_config(model, n, steps, p, q, alpha, beta, 0), parse_stat_kind(kind), runs, seed,
                                opts)
            .values;
      },
      py::arg("model"), py::arg("kind"), py::arg("runs"), py::arg("seed") = 0, py::arg("n") = 100,
      py::arg("steps") = py::none(), py::arg("p") = 1.0, py::arg("q") = py::none(), py::arg("alpha") = py::none(),
      py::arg("beta") = py::none(), py::arg("jobs") = 0);

  m.def("quantile_difference",
        [](const std::vector<std::uint32_t>& s1, std::uint32_t n, double x1, double x2) {
          const auto qd = quantile_difference(gcc_fraction_series(s1, n), x1, x2);
          return py::make_tuple(qd.value, qd.censored);
        },
        py::arg("s1"), py::arg("n"), py::arg("x1") = 0.05, py::arg("x2") = 0.75);
  m.def("max_second_component",
        [](const std::vector<std::uint32_t>& s2) { return max_second_component(s2).value; }, py::arg("s2"));

  m.def("silverman_bandwidth", [](const std::vector<double>& v) { return silverman_bandwidth(v); });
  m.def(
      "kde",
      [](const std::vector<double>& sample, std::optional<double> bandwidth) {
        const auto d = kde(sample, bandwidth);
        return py::make_tuple(d.grid(), d.density(), d.bandwidth());
      },
      py::arg("sample"), py::arg("bandwidth") = py::none(), "Returns (grid, density, bandwidth).");
  m.def(
      "roc",
      [](const std::vector<double>& er, const std::vector<double>& pr, const std::string& kind, bool smoothed) {
        const auto orient = orientation_from(kind);
        const auto curve = smoothed ? roc(kde(er), kde(pr), orient) : roc(er, pr, orient);
        std::vector<std::pair<double, double>> pts;
        for (const auto& pt : curve.points) pts.emplace_back(pt.fpr, pt.tpr);
        return py::make_tuple(pts, auc(curve));
      },
      py::arg("er"), py::arg("pr"), py::arg("kind"), py::arg("smoothed") = true,
      "ROC points and trapezoidal AUC, PR as the positive class.");
  m.def(
      "empirical_auc",
      [](const std::vector<double>& er, const std::vector<double>& pr, const std::string& kind) {
        return empirical_auc(er, pr, orientation_from(kind));
      },
      py::arg("er"), py::arg("pr"), py::arg("kind"));
  m.def(
      "mc_pvalue",
      [](const std::vector<double>& null, double observed, const std::string& direction) {
        if (direction != "greater" && direction != "less")
          throw py::value_error("direction must be 'greater' or 'less'");
        return mc_pvalue(null, observed, direction == "greater" ? Direction::Greater : Direction::Less);
      },
      py::arg("null"), py::arg("observed"), py::arg("direction"));

  auto cf = m.def_submodule("closedform", "Single-edge transition tables of the birth/death ER process");
  cf.def("latent_transition_given_y",
         [](std::uint32_t n, std::uint64_t mm, int y) { return table_to_dict(closedform::latent_transition_given_y(n, mm, y)); });
  cf.def("latent_transition_marginal", [](std::uint32_t n, std::uint64_t mm, double p) {
    return table_to_dict(closedform::latent_transition_marginal(n, mm, p));
  });
  cf.def("observed_transition_paper", [](std::uint32_t n, std::uint64_t mm, double p, double a, double b) {
    return table_to_dict(closedform::observed_transition_paper(n, mm, p, a, b));
  });
  cf.def("observed_transition_consistent", [](std::uint32_t n, std::uint64_t mm, double p, double a, double b) {
    return table_to_dict(closedform::observed_transition_consistent(n, mm, p, a, b));
  });
  cf.def("observed_marginal_paper", [](std::uint32_t n, std::uint64_t mm, double p, double a, double b) {
    const auto r = closedform::observed_marginal_paper(n, mm, p, a, b);
    return py::make_tuple(r.zero, r.one);
  });

  m.def(
      "formulas_csv",
      [](std::uint32_t n, std::uint64_t mm, double p, double alpha, double beta) {
        std::ostringstream out;
        cli::cmd_formulas({n, mm, p, alpha, beta}, out);
        return out.str();
      },
      py::arg("n"), py::arg("m"), py::arg("p"), py::arg("alpha") = 0.0, py::arg("beta") = 0.0);

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
