#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cliquearch/enumeration.hpp"
#include "cliquearch/errors.hpp"
#include "cliquearch/generators.hpp"
#include "cliquearch/harness.hpp"
#include "cliquearch/historical.hpp"
#include "cliquearch/io.hpp"
#include "cliquearch/maxclique.hpp"
#include "cliquearch/motifs.hpp"
#include "cliquearch/oracle.hpp"

namespace py = pybind11;
using namespace cliquearch;

namespace {

using Cliques = std::vector<std::vector<VertexId>>;

Cliques to_lists(const std::vector<Clique>& cliques) {
  Cliques out;
  out.reserve(cliques.size());
  for (const auto& c : cliques) out.push_back(c.vertices);
  return out;
}

py::dict report_dict(const CliqueReport& r) {
  py::dict d;
  d["algorithm"] = r.algorithm;
  d["n"] = r.n;
  d["m"] = r.m;
  d["cliques"] = to_lists(r.cliques);
  d["census"] = r.census;
  d["elapsed_us"] = r.elapsed_us;
  d["flags"] = r.flags;
  return d;
}

Graph make_graph(std::size_t n, const std::vector<Edge>& edges,
                 std::optional<std::vector<std::string>> labels) {
  return from_edges(n, edges, std::move(labels));
}

}  // namespace

PYBIND11_MODULE(_cliquearch, m) {
  m.doc() = "Maximal clique enumeration and comparison";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);
  py::register_exception<DatasetError>(m, "DatasetError", PyExc_RuntimeError);
  py::register_exception<DisagreementError>(m, "DisagreementError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"), py::arg("labels") = py::none())
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph& g, VertexId v) { return g.neighbors(v).to_vector(); })
      .def("name", &Graph::name)
      .def("__len__", &Graph::order)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("parse_graph", [](const std::string& text, const std::string& format) {
    return parse_graph(text, parse_format(format));
  }, py::arg("text"), py::arg("format") = "edgelist");
  m.def("read_graph", [](const std::string& path, std::optional<std::string> format) {
    return read_graph(path, format ? parse_format(*format) : format_for_path(path));
  }, py::arg("path"), py::arg("format") = py::none());
  m.def("write_graph", [](const Graph& g, const std::string& format) {
    return write_graph(g, parse_format(format));
  }, py::arg("graph"), py::arg("format") = "edgelist");
  m.def("load_assyrian", py::overload_cast<>(&load_assyrian));
  m.def("graph_digest", &graph_digest);

  m.def("generate", &from_spec, py::arg("spec"));
  m.def("moon_moser", &moon_moser, py::arg("k"));
  m.def("gnp", &gnp, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("random_ktree", &random_ktree, py::arg("n"), py::arg("k"), py::arg("seed"));

  m.def("algorithm_ids", &algorithm_ids);
  m.def("maximal_cliques", [](const Graph& g, const std::string& algorithm, std::size_t min_size) {
    return report_dict(run_algorithm(resolve_algorithm(algorithm), g, min_size));
  }, py::arg("graph"), py::arg("algorithm") = "bk_pivot", py::arg("min_size") = 1);
  m.def("oracle_maximal_cliques", [](const Graph& g, std::size_t min_size) {
    return to_lists(oracle_maximal_cliques(g, min_size));
  }, py::arg("graph"), py::arg("min_size") = 1);
  m.def("max_clique", [](const Graph& g) { return max_clique_bb(g).clique.vertices; },
        py::arg("graph"));
  m.def("degeneracy", [](const Graph& g) {
    const auto d = degeneracy_ordering(g);
    return py::make_tuple(d.degeneracy, d.order);
  }, py::arg("graph"));
  m.def("simplicial_reduction", [](const Graph& g) {
    const auto r = simplicial_reduction(g);
    py::dict d;
    d["peel_order"] = r.peel_order;
    d["recorded"] = to_lists(r.recorded);
    d["residual"] = r.residual.mapping;
    return d;
  }, py::arg("graph"));

  m.def("harary_ross", [](const Graph& g) {
    const auto r = harary_ross_reconstruction(g);
    py::list sets;
    for (const auto& s : r.sets) {
      py::dict d;
      d["members"] = s.members.vertices;
      d["provenance"] = to_string(s.provenance);
      d["is_clique"] = s.is_clique;
      d["is_maximal"] = s.is_maximal;
      d["failure"] = s.failure();
      sets.append(d);
    }
    py::dict d;
    d["cliques"] = to_lists(r.cliques);
    d["spurious"] = to_lists(r.spurious);
    d["sets"] = sets;
    d["flags"] = r.flags;
    return d;
  }, py::arg("graph"));

  m.def("motif_census", [](const Graph& g, std::size_t max_length) {
    const auto c = motif_census(g, max_length);
    py::dict d;
    d["cycles"] = c.cycles;
    d["chains"] = c.chains;
    d["stars"] = c.stars;
    return d;
  }, py::arg("graph"), py::arg("max_length") = 4);

  m.def("compare", [](const Graph& g, const std::vector<std::string>& algorithms,
                      std::size_t min_size) {
    return write_report_json(run_comparison(g, algorithms, min_size));
  }, py::arg("graph"), py::arg("algorithms"), py::arg("min_size") = 1,
     "Runs a differential comparison and returns its JSON report.");
  m.def("render_comparison", [](const Graph& g, const std::vector<std::string>& algorithms,
                                std::size_t min_size) {
    return render_diff_table(run_comparison(g, algorithms, min_size), g);
  }, py::arg("graph"), py::arg("algorithms"), py::arg("min_size") = 1);
  m.def("table1", [](bool with_historical, std::size_t min_size) {
    return write_report_json(table1(with_historical, min_size));
  }, py::arg("with_historical") = false, py::arg("min_size") = 3);
}
