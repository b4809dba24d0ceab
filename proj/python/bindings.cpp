#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>

#include "pdcut/cut_query.hpp"
#include "pdcut/engines.hpp"
#include "pdcut/graph.hpp"
#include "pdcut/pseudodet.hpp"
#include "pdcut/replicate.hpp"
#include "pdcut/streaming.hpp"

namespace py = pybind11;
using namespace pdcut;

namespace {

py::int_ to_py(Wide v) {
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  const auto lo = static_cast<std::uint64_t>(v);
  if (hi == 0) return py::int_(lo);
  py::object big = py::int_(hi).attr("__lshift__")(64).attr("__or__")(py::int_(lo));
  return py::reinterpret_borrow<py::int_>(big);
}

Wide from_py(const py::handle& h) {
  return parse_wide(py::str(py::int_(py::reinterpret_borrow<py::object>(h))).cast<std::string>());
}

py::dict cut_dict(const CutResult& c) {
  py::list weight;
  for (std::size_t i = 0; i < c.weight.arity(); ++i) weight.append(to_py(c.weight[i]));
  py::dict d;
  d["side"] = c.side;
  d["base_value"] = to_py(c.weight.base());
  d["weight"] = py::tuple(weight);
  return d;
}

EngineHandle engine_from_name(const std::string& name, Vertex n, unsigned trials,
                              std::optional<Vertex> s, std::optional<Vertex> t) {
  EngineHandle base;
  if (name == "karger") {
    base = make_karger_stein_engine();
  } else if (name == "stoer") {
    base = make_stoer_wagner_engine();
  } else if (name == "brute") {
    base = (s && t) ? make_brute_force_engine(Terminals{*s, *t}) : make_brute_force_engine();
  } else if (name == "flow") {
    if (!s || !t) throw py::value_error("the flow engine needs s and t");
    base = make_st_flow_engine(*s, *t);
  } else {
    throw py::value_error("unknown engine '" + name + "' (karger, stoer, brute, flow)");
  }
  const unsigned r = trials ? trials : default_amplification(base->rho(), n);
  return r == 1 ? base : amplify(base, r);
}

StreamEvent event_from_tuple(const py::tuple& t) {
  const auto op = t[0].cast<std::string>();
  if (op == "i" && t.size() == 4) {
    return StreamEvent::insert(t[1].cast<Vertex>(), t[2].cast<Vertex>(), from_py(t[3]));
  }
  if (op == "d" && t.size() == 3) {
    return StreamEvent::remove(t[1].cast<Vertex>(), t[2].cast<Vertex>());
  }
  throw py::value_error("events are ('i', u, v, w) or ('d', u, v)");
}

py::list events_to_list(const std::vector<StreamEvent>& events) {
  py::list out;
  for (const auto& e : events) {
    if (e.op == StreamEvent::Op::insert) {
      out.append(py::make_tuple("i", e.u, e.v, to_py(e.w)));
    } else {
      out.append(py::make_tuple("d", e.u, e.v));
    }
  }
  return out;
}

std::vector<StreamEvent> events_from_list(const py::iterable& events) {
  std::vector<StreamEvent> out;
  for (const auto& item : events) out.push_back(event_from_tuple(py::cast<py::tuple>(item)));
  return out;
}

AuxWeight aux_from_args(Vertex center, std::optional<Vertex> threshold,
                        std::optional<VertexSet> reference, Vertex n) {
  if (threshold && reference) throw py::value_error("give threshold or reference, not both");
  if (threshold) return AuxWeight::indexed_star(center, *threshold);
  if (reference) return AuxWeight::indicator_cut_star(center, *reference, n);
  return AuxWeight::star(center);
}

}  // namespace

PYBIND11_MODULE(_pdcut, m) {
  m.doc() = "Pseudodeterministic minimum cuts";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<StreamError>(m, "StreamError", PyExc_ValueError);
  py::register_exception<ProtocolError>(m, "ProtocolError", PyExc_RuntimeError);
  py::register_exception<RandomnessFailure>(m, "RandomnessFailure", PyExc_RuntimeError);

  py::class_<WeightedGraph>(m, "Graph")
      .def(py::init([](Vertex n, const std::vector<std::tuple<Vertex, Vertex, Weight>>& edges) {
             std::vector<Edge> es;
             for (const auto& [u, v, w] : edges) es.push_back({u, v, w});
             return WeightedGraph::create(n, std::move(es));
           }),
           py::arg("n"), py::arg("edges"))
      .def_static("parse", [](const std::string& text) { return parse_graph(text); })
      .def_static("load", &load_graph_file, py::arg("path"))
      .def_property_readonly("n", &WeightedGraph::vertex_count)
      .def_property_readonly("edges",
                             [](const WeightedGraph& g) {
                               std::vector<std::tuple<Vertex, Vertex, Weight>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v, e.w);
                               return out;
                             })
      .def("format", &format_graph)
      .def("__repr__", [](const WeightedGraph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def(
      "global_cut",
      [](const WeightedGraph& g, const std::string& engine, std::uint64_t seed, unsigned trials) {
        auto counter = std::make_shared<CallCounter>();
        auto e = count_calls(engine_from_name(engine, g.vertex_count(), trials, {}, {}), counter);
        PdGlobalTrace trace;
        CutResult r;
        {
          py::gil_scoped_release release;
          r = pd_global_cut(g, e, seed, &trace);
        }
        py::dict d = cut_dict(r);
        d["engine_calls"] = counter->value();
        d["early_exit"] = trace.early_exit;
        d["probes"] = trace.probes;
        return d;
      },
      py::arg("graph"), py::arg("engine") = "karger", py::arg("seed") = 0, py::arg("trials") = 0,
      "Canonical global minimum cut; raises RandomnessFailure if a randomized subcall failed.");

  m.def(
      "st_cut",
      [](const WeightedGraph& g, Vertex s, Vertex t, const std::string& engine,
         std::uint64_t seed, unsigned trials) {
        return cut_dict(pd_st_cut(g, s, t, engine_from_name(engine, g.vertex_count(), trials, s, t),
                                  seed));
      },
      py::arg("graph"), py::arg("s"), py::arg("t"), py::arg("engine") = "flow",
      py::arg("seed") = 0, py::arg("trials") = 0);

  m.def(
      "uniqueness_test",
      [](const WeightedGraph& g, const std::string& engine, std::uint64_t seed,
         unsigned trials) -> py::object {
        auto v = uniqueness_test(g, {}, engine_from_name(engine, g.vertex_count(), trials, {}, {}),
                                 seed);
        if (!v.unique()) return py::none();
        return cut_dict(*v.cut);
      },
      py::arg("graph"), py::arg("engine") = "stoer", py::arg("seed") = 0, py::arg("trials") = 0,
      "The unique minimum cut, or None when the minimum is not unique.");

  m.def(
      "canonical_cut_oracle",
      [](const WeightedGraph& g) { return cut_dict(canonical_cut_oracle(g)); }, py::arg("graph"),
      "Canonical cut found by enumeration (n <= 20).");

  m.def(
      "min_cut_family",
      [](const WeightedGraph& g) { return brute_force_min_cut_family(g, {}).sides; },
      py::arg("graph"), "Every minimum cut side containing vertex 1 (n <= 20).");

  m.def(
      "replicate",
      [](const WeightedGraph& g, unsigned runs, const std::string& engine,
         std::uint64_t seed_base, unsigned trials) {
        auto e = engine_from_name(engine, g.vertex_count(), trials, {}, {});
        ReplicationReport rep;
        {
          py::gil_scoped_release release;
          rep = replicate(g, e, runs, seed_base);
        }
        py::list outputs;
        for (const auto& o : rep.outputs) outputs.append(py::make_tuple(o.side, o.count));
        py::dict d;
        d["runs"] = rep.runs;
        d["failures"] = rep.failures;
        d["modal_count"] = rep.modal_count();
        d["outputs"] = outputs;
        return d;
      },
      py::arg("graph"), py::arg("runs") = 100, py::arg("engine") = "karger",
      py::arg("seed_base") = 0, py::arg("trials") = 0);

  m.def(
      "global_cut_via_queries",
      [](const WeightedGraph& g, std::uint64_t seed) {
        const auto r = pd_global_via_queries(oracle_from_graph(g), g.vertex_count(), seed);
        py::dict d = cut_dict(r.cut);
        d["queries"] = r.queries;
        d["engine_calls"] = r.engine_calls;
        return d;
      },
      py::arg("graph"), py::arg("seed") = 0,
      "Canonical cut computed through cut-value queries only.");

  m.def(
      "transform_stream",
      [](const py::iterable& events, Vertex n, Vertex center, std::optional<Vertex> threshold,
         std::optional<VertexSet> reference) {
        const auto in = events_from_list(events);
        SpaceMeter meter;
        const auto out = transform_stream(in, n, aux_from_args(center, threshold, reference, n),
                                          &meter);
        return py::make_tuple(events_to_list(out), meter.peak());
      },
      py::arg("events"), py::arg("n"), py::arg("center") = 1, py::arg("threshold") = py::none(),
      py::arg("reference") = py::none(),
      "Stitched star-extension stream and the peak number of words held.");

  m.def(
      "accumulate_cut_weight",
      [](const py::iterable& events, Vertex n, const VertexSet& side, Vertex center,
         Vertex threshold) {
        const auto in = events_from_list(events);
        return to_py(
            accumulate_cut_weight(in, n, side, AuxWeight::indexed_star(center, threshold)));
      },
      py::arg("events"), py::arg("n"), py::arg("side"), py::arg("center"), py::arg("threshold"));

  m.def(
      "materialize",
      [](const py::iterable& events, Vertex n) { return materialize(events_from_list(events), n); },
      py::arg("events"), py::arg("n"));

  m.def(
      "global_cut_via_stream",
      [](const py::iterable& events, Vertex n, std::uint64_t seed) {
        const auto r = pd_global_via_stream(Stream{n, events_from_list(events)}, seed);
        py::dict d = cut_dict(r.cut);
        d["passes"] = r.passes;
        d["peak_words"] = r.peak_words;
        return d;
      },
      py::arg("events"), py::arg("n"), py::arg("seed") = 0);

  m.def("call_budget", &pd_global_call_budget, py::arg("n"));
  m.def("default_amplification", &default_amplification, py::arg("rho"), py::arg("n"));
}
