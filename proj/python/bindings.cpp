#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "rigidpack/connectivity.hpp"
#include "rigidpack/constructions.hpp"
#include "rigidpack/errors.hpp"
#include "rigidpack/graph.hpp"
#include "rigidpack/matroid.hpp"
#include "rigidpack/orientation.hpp"
#include "rigidpack/rigidity.hpp"
#include "rigidpack/stochastic.hpp"

namespace py = pybind11;
using namespace rigidpack;

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

Graph make_graph(std::size_t n, const std::vector<Pair>& edges) {
  std::vector<Edge> e;
  e.reserve(edges.size());
  for (auto [u, v] : edges) e.push_back({u, v});
  return Graph(n, std::move(e));
}

std::vector<Pair> edge_pairs(const Graph& g) {
  std::vector<Pair> out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

py::dict verdict_dict(const ConnectivityVerdict& v) {
  py::dict d;
  d["connected"] = v.connected;
  d["reason"] = v.reason;
  if (v.cut) {
    d["separator"] = v.cut->separator;
    d["source"] = v.cut->source;
    d["target"] = v.cut->target;
  } else {
    d["separator"] = py::none();
  }
  return d;
}

py::dict packing_dict(const PackingReport& r) {
  py::dict d;
  d["dimension"] = r.dimension;
  d["parts"] = r.parts;
  d["targets"] = r.targets;
  d["total"] = r.total;
  d["required"] = r.required;
  d["success"] = r.success;
  d["verified"] = r.verified;
  d["seed"] = r.seed;
  return d;
}

py::dict witness_dict(const PackingWitness& w) {
  py::dict d;
  d["host"] = w.host;
  d["dimension"] = w.dimension;
  py::list parts;
  for (const auto& p : w.parts) {
    py::dict pd;
    pd["label"] = p.label;
    pd["claim"] = p.claim;
    pd["edges"] = p.edges;
    parts.append(pd);
  }
  d["parts"] = parts;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rigidity-matroid packings and k-connected orientations";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<OracleInconsistency>(m, "OracleInconsistency", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_static("complete", &Graph::complete, py::arg("n"))
      .def_static("parse", &parse_graph, py::arg("text"))
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("edges", &edge_pairs)
      .def("degree", &Graph::degree, py::arg("v"))
      .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
      .def("subgraph", [](const Graph& g, const std::vector<EdgeId>& ids) { return g.subgraph(ids); })
      .def("to_text", [](const Graph& g) { return to_string(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) + ", m=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("complete_graph_rank", &complete_graph_rank, py::arg("n"), py::arg("d"));
  m.def(
      "rigidity_rank",
      [](const Graph& g, std::size_t d, std::uint64_t seed, std::optional<std::vector<EdgeId>> edges) {
        RigidityOracle o(g, d, seed, 0);
        return edges ? o.rank(*edges) : o.rank_all();
      },
      py::arg("graph"), py::arg("d"), py::arg("seed") = 0, py::arg("edges") = py::none());
  m.def(
      "is_d_rigid",
      [](const Graph& g, std::size_t d, std::uint64_t seed) { return RigidityOracle(g, d, seed, 0).is_d_rigid(); },
      py::arg("graph"), py::arg("d"), py::arg("seed") = 0);
  m.def("exact_independent_d2", [](const Graph& g, const std::vector<EdgeId>& f) { return exact_independent_d2(g, f); });

  m.def(
      "pack_rigid", [](const Graph& g, std::size_t d, std::size_t t, std::uint64_t seed) {
        return packing_dict(pack_rigid(g, d, t, seed));
      },
      py::arg("graph"), py::arg("d"), py::arg("t"), py::arg("seed") = 0);
  m.def(
      "pack_tree_rigid", [](const Graph& g, std::size_t d, std::uint64_t seed) {
        return packing_dict(pack_tree_rigid(g, d, seed));
      },
      py::arg("graph"), py::arg("d"), py::arg("seed") = 0);

  m.def(
      "is_k_connected",
      [](const Graph& g, std::size_t k, std::size_t threads) { return verdict_dict(is_k_connected(g, k, threads)); },
      py::arg("graph"), py::arg("k"), py::arg("threads") = 1);
  m.def(
      "is_k_connected_digraph",
      [](std::size_t n, const std::vector<Pair>& arcs, std::size_t k, std::size_t threads) {
        ArcSet d{n, {}};
        for (auto [u, v] : arcs) d.arcs.push_back({u, v});
        return verdict_dict(is_k_connected(d, k, threads));
      },
      py::arg("n"), py::arg("arcs"), py::arg("k"), py::arg("threads") = 1);

  m.def(
      "k_connected_orientation",
      [](const Graph& g, std::size_t k, std::uint64_t seed, bool verify, std::optional<std::vector<Vertex>> r,
         std::size_t threads) {
        OrientationOptions opts;
        opts.seed = seed;
        opts.verify = verify;
        opts.r_override = std::move(r);
        opts.threads = threads;
        auto rep = k_connected_orientation(g, k, opts);
        py::dict d;
        std::vector<Pair> arcs;
        for (const auto& a : rep.orientation.arcs()) arcs.emplace_back(a.tail, a.head);
        d["arcs"] = arcs;
        d["d"] = rep.dimension;
        d["R"] = rep.r.members;
        std::vector<std::size_t> sizes;
        for (const auto& b : rep.bases) sizes.push_back(b.size());
        d["base_sizes"] = sizes;
        d["in_degrees_match"] = rep.in_degrees_match;
        d["out_degrees_match"] = rep.out_degrees_match;
        d["verified"] = rep.verified ? py::object(py::bool_(rep.verified->connected)) : py::object(py::none());
        return d;
      },
      py::arg("graph"), py::arg("k"), py::arg("seed") = 0, py::arg("verify") = false, py::arg("R") = py::none(),
      py::arg("threads") = 1);

  m.def("harary_host", &harary_host, py::arg("K"), py::arg("n"));
  m.def("gnp", &gnp, py::arg("n"), py::arg("p"), py::arg("seed"), py::arg("stream") = 0);
  m.def(
      "tdrigid_packing", [](std::size_t n, std::size_t d, std::size_t t) { return witness_dict(tdrigid_packing(n, d, t)); },
      py::arg("n"), py::arg("d"), py::arg("t"));
  m.def(
      "tree_rigid_decomposition",
      [](std::size_t n, std::size_t d) { return witness_dict(tree_rigid_decomposition(n, d)); }, py::arg("n"),
      py::arg("d"));
  m.def(
      "lovasz_yemini",
      [](const std::vector<std::size_t>& dims, std::size_t s) {
        auto ex = lovasz_yemini(dims, s);
        py::dict d;
        d["graph"] = ex.graph;
        d["K"] = ex.connectivity;
        d["rank_upper_bound"] = ex.rank_upper_bound;
        d["packing_requirement"] = ex.packing_requirement;
        d["deficiency_strict"] = ex.deficiency_strict();
        return d;
      },
      py::arg("dimensions"), py::arg("s"));

  m.def(
      "min_order_expectation_exact",
      [](std::size_t setsize, std::size_t d) {
        auto r = min_order_expectation_exact(setsize, d);
        return std::make_pair(r.num, r.den);
      },
      py::arg("setsize"), py::arg("d"));
  m.def(
      "min_order_expectation_montecarlo",
      [](std::size_t setsize, std::size_t d, std::size_t trials, std::uint64_t seed, std::size_t threads) {
        auto e = min_order_expectation_montecarlo(setsize, d, trials, seed, threads);
        return std::make_pair(e.mean, e.standard_error);
      },
      py::arg("setsize"), py::arg("d"), py::arg("trials"), py::arg("seed") = 0, py::arg("threads") = 1);
}
