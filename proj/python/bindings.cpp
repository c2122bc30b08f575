#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sqturan/canonical.hpp"
#include "sqturan/coloring.hpp"
#include "sqturan/detector.hpp"
#include "sqturan/error.hpp"
#include "sqturan/graph.hpp"
#include "sqturan/graph_io.hpp"
#include "sqturan/prooflab.hpp"
#include "sqturan/search.hpp"
#include "sqturan/spectral.hpp"

namespace py = pybind11;
using namespace sqturan;

namespace {

py::dict search_dict(const SearchReport& r) {
  py::dict d;
  d["ell"] = r.ell;
  d["n"] = r.n;
  d["objective"] = to_string(r.objective);
  d["best_value"] = r.best_value;
  d["witnesses"] = r.witnesses;
  d["graphs_enumerated"] = r.graphs_enumerated;
  d["exhaustive"] = r.exhaustive;
  d["level_counts"] = r.level_counts;
  d["nodes"] = r.nodes;
  d["gn_value"] = r.gn_value;
  d["gn_comparison"] = r.gn_comparison ? py::cast(to_string(*r.gn_comparison)) : py::none();
  d["method"] = r.method;
  d["notes"] = r.notes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_sqturan, m) {
  m.doc() = "Squared-cycle Turán toolkit";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", error.ptr());
  py::register_exception<InternalCheckError>(m, "InternalCheckError", error.ptr());
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
      .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
      .def_property_readonly("order", &Graph::order)
      .def("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("neighbors",
           [](const Graph& g, int v) {
             std::vector<int> out;
             const VertexSet& s = g.neighbors(v);
             for (int u = s.first(); u >= 0; u = s.next(u)) out.push_back(u);
             return out;
           })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("cycle_graph", &cycle_graph);
  m.def("path_graph", &path_graph);
  m.def("complete_graph", &complete_graph);
  m.def("squared_cycle", &squared_cycle);
  m.def("squared_path", &squared_path);
  m.def("graph_power", &graph_power);
  m.def("turan_graph", &turan_graph, py::arg("n"), py::arg("r") = 3);
  m.def("gn_graph", &gn_graph);
  m.def("complete_multipartite", [](const std::vector<int>& parts) { return complete_multipartite(parts); });
  m.def("matching_number", [](const Graph& g) { return max_matching(g).size(); });
  m.def("canonical_form", [](const Graph& g) { return canonical_form(g); });

  m.def(
      "chromatic_number",
      [](const Graph& g) {
        const auto r = chromatic_number(g);
        return py::make_tuple(r.chi, r.certificate.colors);
      },
      "Returns (chi, colors).");
  m.def("good_partition_unique", [](int ell) { return good_partition_uniqueness_check(ell).unique; });

  m.def(
      "find_squared_cycle",
      [](const Graph& g, int ell, std::int64_t node_limit, int threads) -> std::optional<std::vector<int>> {
        DetectorOptions o;
        o.node_limit = node_limit;
        o.threads = threads;
        py::gil_scoped_release release;
        const auto r = find_squared_cycle(g, ell, o);
        if (!r.embedding) return std::nullopt;
        return r.embedding->ordering;
      },
      py::arg("g"), py::arg("ell"), py::arg("node_limit") = DetectorOptions{}.node_limit, py::arg("threads") = 1);

  m.def(
      "spectral_radius",
      [](const Graph& g, double tol) {
        SpectralOptions o;
        o.tol = tol;
        const auto r = spectral_radius(g, o);
        py::dict d;
        d["rho"] = r.rho;
        d["vector"] = r.vector;
        d["residual"] = r.residual;
        d["iterations"] = r.iterations;
        d["disconnected"] = r.disconnected;
        return d;
      },
      py::arg("g"), py::arg("tol") = 1e-10);

  m.def("eigenvector_balance_ok",
        [](int n1, int n2, int n3) { return eigenvector_balance_check(n1, n2, n3).ok(); });

  m.def(
      "max_cross_tripartition",
      [](const Graph& g, bool exact, std::uint64_t seed) {
        MaxCutOptions o;
        o.mode = exact ? MaxCutMode::exact : MaxCutMode::local;
        o.seed = seed;
        const auto r = max_cross_tripartition(g, o);
        return py::make_tuple(r.partition.parts, r.partition.cross_edges);
      },
      py::arg("g"), py::arg("exact") = false, py::arg("seed") = 0, "Returns (parts, cross_edges).");

  m.def(
      "lemma_audit",
      [](const Graph& g, double eta) {
        const auto a = lemma_audit(g, eta);
        py::dict d;
        for (const auto& r : a.reports) d[py::str(r.id)] = r.holds;
        py::dict out;
        out["checks"] = d;
        out["low_degree"] = a.sets.low_degree;
        out["w5"] = a.sets.w5.all;
        out["part_matching"] = a.part_matching;
        out["perron_floor"] = a.perron_floor;
        out["warnings"] = a.warnings;
        return out;
      },
      py::arg("g"), py::arg("eta") = 1e-4);

  m.def(
      "exhaustive_extremal",
      [](int ell, int n, const std::string& objective, std::int64_t node_limit) {
        ExhaustiveOptions o;
        o.node_limit = node_limit;
        SearchReport r;
        {
          py::gil_scoped_release release;
          r = exhaustive_extremal(ell, n, parse_objective(objective), o);
        }
        return search_dict(r);
      },
      py::arg("ell"), py::arg("n"), py::arg("objective") = "edges",
      py::arg("node_limit") = ExhaustiveOptions{}.node_limit);

  m.def(
      "hillclimb_extremal",
      [](int ell, int n, const std::string& objective, std::int64_t budget, std::uint64_t seed) {
        HillclimbOptions o;
        o.budget = budget;
        o.seed = seed;
        SearchReport r;
        {
          py::gil_scoped_release release;
          r = hillclimb_extremal(ell, n, parse_objective(objective), o);
        }
        return search_dict(r);
      },
      py::arg("ell"), py::arg("n"), py::arg("objective") = "edges", py::arg("budget") = 20000, py::arg("seed") = 0);

  m.def(
      "theorem_consistency",
      [](const std::vector<int>& ells, int n_min, int n_max) {
        py::list rows;
        for (const auto& r : theorem_consistency(ells, n_min, n_max)) {
          py::dict d;
          d["ell"] = r.ell;
          d["n"] = r.n;
          d["gn_free"] = r.gn_free;
          d["turan3_free"] = r.turan3_free;
          d["turan2_free"] = r.turan2_free;
          d["edges_turan3"] = r.edges_turan3;
          d["edges_gn"] = r.edges_gn;
          d["rho_turan3"] = r.rho_turan3;
          d["rho_gn"] = r.rho_gn;
          d["ok"] = r.ok();
          rows.append(d);
        }
        return rows;
      });
}
