// py_module.cpp
// pybind11 module exposing the core library: graphs, exact counting and
// densities, enumeration, blow-up constructions, extremal search, grid
// certification and bounds rows. Big integers cross the boundary as python
// ints, rationals as fractions.Fraction; graphs are a thin wrapper class
// constructible from either text format.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "indpath/bounds.hpp"
#include "indpath/canonical.hpp"
#include "indpath/constructions.hpp"
#include "indpath/counting.hpp"
#include "indpath/enumerate.hpp"
#include "indpath/error.hpp"
#include "indpath/graph.hpp"
#include "indpath/grid.hpp"
#include "indpath/numbers.hpp"
#include "indpath/search.hpp"

namespace py = pybind11;
using namespace indpath;

namespace {

// ----- value conversion -----

py::object py_int(const Int& v) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object py_frac(const Rat& r) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(rat_str(r));
}

Family family_of(bool t3_free) {
  return t3_free ? Family::T3Free : Family::AllOriented;
}

EnumBackend enum_backend(const std::string& s) {
  if (s == "sweep") return EnumBackend::Sweep;
  if (s == "orderly") return EnumBackend::Orderly;
  if (s == "auto") return EnumBackend::Auto;
  throw Error(Errc::InvalidSpec, "unknown backend '" + s + "'");
}

py::dict report_dict(const SearchReport& rep) {
  py::dict d;
  d["n"] = rep.n;
  d["constraint"] = family_name(rep.constraint);
  d["max"] = py_int(rep.max_count);
  d["maximizers"] = rep.maximizer_codes;
  d["exhaustive"] = rep.exhaustive;
  d["examined"] = py_int(rep.labeled_examined);
  return d;
}

py::dict cert_dict(const GridCertificate& c) {
  py::dict d;
  d["label"] = c.label;
  d["resolution"] = c.resolution;
  d["slack_steps"] = c.slack_steps;
  d["slack"] = py_frac(c.slack_value);
  d["d"] = c.d;
  d["free"] = c.free_names;
  d["argmax_units"] = c.argmax_units;
  py::list argmax;
  for (const auto& r : c.argmax) argmax.append(py_frac(r));
  d["argmax"] = argmax;
  d["sampled"] = py_frac(c.sampled);
  d["feasible_points"] = (std::uint64_t)c.feasible_points;
  if (c.has_bound) {
    d["lipschitz"] = py_frac(c.lipschitz);
    d["certified"] = py_frac(c.certified);
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact induced-subgraph density toolkit for small oriented graphs";

  py::register_exception<Error>(m, "IndpathError");

  // ----- graphs -----

  py::class_<OrientedGraph>(m, "Graph")
      .def(py::init([](const std::string& text) { return parse_graph_text(text); }),
           py::arg("text"))
      .def_property_readonly("n", [](const OrientedGraph& g) { return g.n; })
      .def("state", [](const OrientedGraph& g, int u, int v) {
        if (u < 0 || v < 0 || u >= g.n || v >= g.n || u == v)
          throw Error(Errc::OutOfRange, "bad vertex pair");
        return (int)g.state(u, v);
      })
      .def("arc_count", &OrientedGraph::arc_count)
      .def("compact", [](const OrientedGraph& g) { return format_graph_compact(g); })
      .def("arcs_text", [](const OrientedGraph& g) { return format_graph_arcs(g); })
      .def("arcs",
           [](const OrientedGraph& g) {
             std::vector<std::pair<int, int>> out;
             for (int u = 0; u < g.n; ++u)
               for (int v = 0; v < g.n; ++v)
                 if (u != v && g.has_arc(u, v)) out.emplace_back(u, v);
             return out;
           })
      .def("__eq__", [](const OrientedGraph& a, const OrientedGraph& b) { return a == b; })
      .def("__hash__",
           [](const OrientedGraph& g) {
             return py::hash(py::str(format_graph_compact(g)));
           })
      .def("__repr__", [](const OrientedGraph& g) {
        return "Graph('" + format_graph_compact(g) + "')";
      });

  m.def("make_graph", &make_graph, py::arg("n"), py::arg("arcs"));
  m.def("directed_path", &directed_path, py::arg("k"));
  m.def("directed_cycle", &directed_cycle, py::arg("k"));
  m.def("transitive_tournament", &transitive_tournament, py::arg("k"));
  m.def("reverse", &reverse, py::arg("g"));
  m.def("is_t3_free", &is_t3_free, py::arg("g"));
  m.def("read_graph_file", &read_graph_file, py::arg("path"));
  m.def(
      "induced_subgraph",
      [](const OrientedGraph& g, const std::vector<int>& members) {
        return induced_subgraph(g, VertexSet(members));
      },
      py::arg("g"), py::arg("members"));
  m.def("clone_vertex", &clone_vertex, py::arg("g"), py::arg("x"));
  m.def("delete_vertex", &delete_vertex, py::arg("g"), py::arg("x"));
  m.def("clone_delete", &clone_delete, py::arg("g"), py::arg("x"), py::arg("y"));
  m.def(
      "canonical_code",
      [](const OrientedGraph& g) { return canonical_form(g).code; }, py::arg("g"));
  m.def("are_isomorphic", &are_isomorphic, py::arg("a"), py::arg("b"));

  // ----- counting -----

  m.def(
      "count_induced",
      [](const OrientedGraph& g, const OrientedGraph& h) {
        return py_int(count_induced(g, h));
      },
      py::arg("g"), py::arg("h"));
  m.def(
      "density",
      [](const OrientedGraph& g, const OrientedGraph& h) {
        return py_frac(density(g, h));
      },
      py::arg("g"), py::arg("h"));
  m.def(
      "count_p4", [](const OrientedGraph& g) { return py_int(count_p4(g)); },
      py::arg("g"));
  m.def(
      "count_p4_through",
      [](const OrientedGraph& g, const std::vector<int>& members) {
        return py_int(count_p4_through(g, VertexSet(members)));
      },
      py::arg("g"), py::arg("members"));
  m.def(
      "induced_profile",
      [](const OrientedGraph& g, int k) {
        py::dict d;
        for (const auto& [code, cnt] : induced_profile(g, k))
          d[py::str(code)] = py_int(cnt);
        return d;
      },
      py::arg("g"), py::arg("k"));
  m.def(
      "vertex_min_participation",
      [](const OrientedGraph& g) {
        auto [v, c] = vertex_min_participation(g);
        return py::make_tuple(v, py_int(c));
      },
      py::arg("g"));

  // ----- enumeration -----

  m.def(
      "enumerate_codes",
      [](int n, bool t3_free, const std::string& backend, int threads) {
        return enumerate_family(n, family_of(t3_free), enum_backend(backend),
                                threads)
            .codes;
      },
      py::arg("n"), py::arg("t3_free") = false, py::arg("backend") = "auto",
      py::arg("threads") = 0);
  m.def(
      "labeled_count",
      [](int n, bool t3_free, int threads) {
        return labeled_count(n, family_of(t3_free), threads);
      },
      py::arg("n"), py::arg("t3_free") = false, py::arg("threads") = 0);

  // ----- constructions -----

  m.def(
      "blow_up",
      [](const OrientedGraph& base, const std::vector<int>& sizes) {
        return blow_up({base, sizes});
      },
      py::arg("base"), py::arg("sizes"));
  m.def("balanced_blow_up", &balanced_blow_up, py::arg("base"), py::arg("n"));
  m.def(
      "iterated_balanced_blow_up",
      [](const OrientedGraph& base, int n) {
        return iterated_balanced_blow_up({base, n});
      },
      py::arg("base"), py::arg("n"));
  m.def(
      "blowup_p4_count",
      [](const std::vector<long long>& sizes) {
        std::vector<Int> s(sizes.begin(), sizes.end());
        return py_int(blowup_p4_count(s));
      },
      py::arg("sizes"));
  m.def(
      "iterated_c5_p4_count",
      [](long long n) { return py_int(iterated_c5_p4_count(Int(n))); },
      py::arg("n"));
  m.def(
      "conjectured_density",
      [](int k, bool iterated) { return py_frac(conjectured_density(k, iterated)); },
      py::arg("k"), py::arg("iterated"));

  // ----- search -----

  m.def(
      "exhaustive_max",
      [](int n, bool t3_free, const OrientedGraph& target,
         const std::string& backend, int threads) {
        SearchBackend b = backend == "sweep"     ? SearchBackend::Sweep
                          : backend == "orderly" ? SearchBackend::Orderly
                                                 : SearchBackend::Auto;
        return report_dict(exhaustive_max(n, family_of(t3_free), target, b, threads));
      },
      py::arg("n"), py::arg("t3_free"), py::arg("target"),
      py::arg("backend") = "auto", py::arg("threads") = 0);
  m.def(
      "local_search",
      [](const OrientedGraph& g0, bool t3_free, std::uint64_t budget) {
        return report_dict(local_search(g0, family_of(t3_free), MoveSet{}, budget));
      },
      py::arg("g0"), py::arg("t3_free"), py::arg("budget") = 1000000);

  // ----- grid certification -----

  m.def(
      "certify_case",
      [](int case_id, int resolution, int slack, bool tight, int threads,
         std::uint64_t budget) {
        GridProblem p = case_id == 0 ? standard_problem() : restricted_case(case_id);
        return cert_dict(certify(p, resolution, slack, std::nullopt, tight,
                                 threads, budget));
      },
      py::arg("case_id"), py::arg("resolution"), py::arg("slack") = 1,
      py::arg("tight") = false, py::arg("threads") = 0,
      py::arg("budget") = 1000000000ULL);
  m.def("builtin_cases_text", &builtin_cases_text);

  // ----- bounds -----

  m.def(
      "bounds_row",
      [](int k) {
        BoundsRow r = bounds_row(k);
        py::dict d;
        d["k"] = r.k;
        d["lower_iterated"] = py_frac(r.lower_iterated);
        d["lower_generic"] = py_frac(r.lower_generic);
        d["conj_t3free"] = py_frac(r.conj_t3free);
        d["upper_pg"] = py_frac(r.upper_pg);
        d["upper_knv_t3free"] = py_frac(r.upper_knv_t3free);
        d["upper_fa"] = r.upper_fa ? py_frac(*r.upper_fa) : py::none();
        d["upper_fa_text"] =
            r.upper_fa_text ? py::object(py::str(*r.upper_fa_text)) : py::none();
        return d;
      },
      py::arg("k"));
  m.def(
      "empirical_floor",
      [](int k, int n, long long budget) {
        return py_frac(empirical_floor(k, n, Int(budget)));
      },
      py::arg("k"), py::arg("n"), py::arg("budget") = 100000000LL);
}
