#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wc/enumerate.hpp"
#include "wc/fedder.hpp"
#include "wc/witness.hpp"

namespace py = pybind11;
using namespace wc;

namespace {

// The python surface speaks 1-based vertex names throughout.

std::vector<std::pair<int, int>> edges_1based(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : g.edges()) out.emplace_back(u + 1, v + 1);
  return out;
}

Labeling labeling_from_list(const std::vector<int>& labels) {
  Labeling lab;
  for (int l : labels) lab.label_of.push_back(l - 1);
  return lab;
}

std::vector<int> labeling_to_list(const Labeling& lab) {
  std::vector<int> out;
  for (int l : lab.label_of) out.push_back(l + 1);
  return out;
}

py::object optional_labeling(const std::optional<Labeling>& lab) {
  if (!lab) return py::none();
  return py::cast(labeling_to_list(*lab));
}

py::dict certificate_dict(const InterchangeSequence& cert, const Graph& g) {
  py::dict d;
  py::list start;
  for (int v : cert.start.entries) start.append(v + 1);
  d["start"] = start;
  py::list swaps;
  for (const auto& s : cert.swaps) {
    py::dict step;
    step["pos"] = s.pos + 1;
    step["pair"] = py::make_tuple(s.a + 1, s.b + 1);
    swaps.append(step);
  }
  d["swaps"] = swaps;
  py::list fin;
  for (int v : replay(cert, g).entries) fin.append(v + 1);
  d["final"] = fin;
  return d;
}

VertexSequence sequence_from_list(const std::vector<int>& entries) {
  VertexSequence seq;
  for (int v : entries) seq.entries.push_back(v - 1);
  return seq;
}

}  // namespace

PYBIND11_MODULE(_wcgraph, m) {
  m.doc() = "structure and F-purity toolkit for small graphs";

  py::register_exception<Error>(m, "WcError");

  py::class_<Graph>(m, "Graph")
      .def_static(
          "from_edges",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
            return Graph::from_edges(n, edges);
          },
          py::arg("n"), py::arg("edges"), "build from 1-based edge pairs")
      .def_static("from_graph6", &parse_graph6, py::arg("text"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &edges_1based)
      .def("graph6", &to_graph6)
      .def("has_edge", [](const Graph& g, int u, int v) { return g.has_edge(u - 1, v - 1); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__",
           [](const Graph& g) { return "Graph(graph6='" + to_graph6(g) + "')"; });

  m.def("complement", &complement);
  m.def("is_connected", &is_connected);
  m.def("clique_number", &clique_number);
  m.def("relabel", [](const Graph& g, const std::vector<int>& labels) {
    return relabel(g, labeling_from_list(labels));
  });
  m.def("canonical_graph6",
        [](const Graph& g) { return to_graph6(graph_from_code(canonical_code(g))); });
  m.def("isomorphic", [](const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && canonical_code(a) == canonical_code(b);
  });

  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("complete_graph", &complete_graph);
  m.def("claw_graph", &claw_graph);
  m.def("bigclaw_graph", &bigclaw_graph);

  m.def("is_weakly_closed", [](const Graph& g) {
    auto [flag, lab] = is_weakly_closed(g);
    return py::make_tuple(flag, optional_labeling(lab));
  });
  m.def("is_closed", [](const Graph& g) {
    auto [flag, lab] = is_closed(g);
    return py::make_tuple(flag, optional_labeling(lab));
  });
  m.def("is_complete_multipartite", [](const Graph& g) {
    auto [flag, parts] = is_complete_multipartite(g);
    py::object cert = py::none();
    if (flag) {
      py::list out;
      for (const auto& part : *parts) {
        py::list p;
        for (int v : part) p.append(v + 1);
        out.append(p);
      }
      cert = out;
    }
    return py::make_tuple(flag, cert);
  });
  m.def("is_chordal", [](const Graph& g) {
    auto [flag, order] = is_chordal(g);
    py::object cert = py::none();
    if (flag) {
      py::list out;
      for (int v : *order) out.append(v + 1);
      cert = out;
    }
    return py::make_tuple(flag, cert);
  });
  m.def("is_perfect", &is_perfect);
  m.def("is_tree", &is_tree);
  m.def("is_caterpillar", &is_caterpillar);
  m.def("has_induced_odd_hole", &has_induced_odd_hole);
  m.def("has_chordless_cycle_at_least", &has_chordless_cycle_at_least, py::arg("g"),
        py::arg("k"));
  m.def("contains_induced", &contains_induced, py::arg("g"), py::arg("pattern"));
  m.def("wc_condition_holds", &wc_condition_holds);
  m.def("closed_condition_holds", &closed_condition_holds);

  m.def(
      "is_adjacentable",
      [](const Graph& g, int i, int j, bool strict) {
        return is_adjacentable(g, i - 1, j - 1,
                               strict ? AdjacencyMode::Strict : AdjacencyMode::Unordered);
      },
      py::arg("g"), py::arg("i"), py::arg("j"), py::arg("strict") = false);
  m.def(
      "adjacentability_certificate",
      [](const Graph& g, int i, int j, bool strict) -> py::object {
        auto cert = adjacentability_certificate(
            g, i - 1, j - 1, strict ? AdjacencyMode::Strict : AdjacencyMode::Unordered);
        if (!cert) return py::none();
        return certificate_dict(*cert, g);
      },
      py::arg("g"), py::arg("i"), py::arg("j"), py::arg("strict") = false);
  m.def(
      "constructive_certificate",
      [](const Graph& g, int i, int j) {
        return certificate_dict(constructive_certificate(g, i - 1, j - 1), g);
      },
      py::arg("g"), py::arg("i"), py::arg("j"));
  m.def("all_edges_adjacentable", [](const Graph& g) { return all_edges_adjacentable(g); });
  m.def("is_weakly_closed_by_definition", [](const Graph& g) {
    auto [flag, lab] = is_weakly_closed_by_definition(g);
    return py::make_tuple(flag, optional_labeling(lab));
  });

  m.def("enumerate_connected", &enumerate_connected, py::arg("n"));
  m.def("enumerate_trees", &enumerate_trees, py::arg("n"));
  m.def(
      "classify",
      [](int n, py::object fpure_p, int jobs, bool slow) {
        ClassifyOptions opts;
        opts.jobs = jobs;
        opts.slow = slow;
        opts.budget = Budget::from_env();
        if (!fpure_p.is_none()) {
          opts.with_fpure = true;
          opts.p = fpure_p.cast<int>();
        }
        py::list out;
        py::module_ json = py::module_::import("json");
        for (const auto& rec : classify_all(n, opts))
          out.append(json.attr("loads")(record_to_json(rec)));
        return out;
      },
      py::arg("n"), py::arg("fpure_p") = py::none(), py::arg("jobs") = 1,
      py::arg("slow") = false);

  m.def(
      "is_fpure",
      [](const Graph& g, int p, bool slow) {
        FedderResult r = is_fpure_fedder(g, p, Budget::from_env(), slow);
        py::object witness = py::none();
        if (r.witness) witness = py::cast(poly_to_string(*r.witness, g.vertex_count()));
        return py::make_tuple(r.fpure, witness);
      },
      py::arg("g"), py::arg("p") = 2, py::arg("slow") = false);
  m.def(
      "check_witness_fast_path",
      [](const Graph& g, int p) { return check_witness_fast_path(g, p, Budget::from_env()); },
      py::arg("g"), py::arg("p") = 2);
  m.def(
      "fedder_witness",
      [](const Graph& g, int p) {
        return poly_to_string(fedder_witness_product(g, p), g.vertex_count());
      },
      py::arg("g"), py::arg("p") = 2);
  m.def(
      "lemma_congruence_holds",
      [](const Graph& g, int p, const std::vector<int>& arrangement, int pos) {
        return lemma_congruence_holds(g, p, sequence_from_list(arrangement), pos - 1,
                                      Budget::from_env());
      },
      py::arg("g"), py::arg("p"), py::arg("arrangement"), py::arg("pos"));

  m.attr("__version__") = "0.1.0";
}
