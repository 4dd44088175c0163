#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leapfrog/analysis.hpp"
#include "leapfrog/engine.hpp"
#include "leapfrog/oracle.hpp"
#include "leapfrog/poset.hpp"
#include "leapfrog/workbench.hpp"

namespace py = pybind11;
using namespace leapfrog;

namespace {

using Names = std::vector<std::string>;

Names to_names(const Poset& poset, const Arrangement& arr) {
  Names out;
  for (ElementIndex e : arr.order) out.push_back(poset.element(e).token);
  return out;
}

Arrangement from_names(const Poset& poset, const Names& names) {
  std::vector<ElementId> ids;
  for (const auto& n : names) ids.push_back({n});
  return arrangement_from_names(poset, ids);
}

ElementIndex index(const Poset& poset, const std::string& name) { return poset.index_of({name}); }

Strategy make_strategy(const std::string& name, std::optional<std::uint64_t> seed) {
  if (name == "leftmost") return Leftmost{};
  if (name == "rightmost") return Rightmost{};
  if (name == "random") {
    if (!seed) throw py::value_error("the random strategy requires a seed");
    return RandomChoice{*seed};
  }
  throw py::value_error("strategy must be 'leftmost', 'rightmost' or 'random'");
}

// A trace bundled with its poset so element names can be rendered.
struct PyTrace {
  Poset poset;
  SwapTrace trace;
};

GeneratorSpec make_spec(const std::string& kind, std::size_t a, std::size_t b) {
  if (kind == "chain") return ChainSpec{a};
  if (kind == "antichain") return AntichainSpec{a};
  if (kind == "boolean") return BooleanSpec{a};
  if (kind == "grid") return GridSpec{a, b};
  throw py::value_error("kind must be 'chain', 'antichain', 'boolean' or 'grid'");
}

}  // namespace

PYBIND11_MODULE(_leapfrog, m) {
  m.doc() = "Leapfrog adjacent-swap rewriting on finite posets";
  py::register_exception<Error>(m, "LeapfrogError", PyExc_ValueError);

  py::class_<Poset>(m, "Poset")
      .def(py::init([](const Names& elements, const std::vector<std::pair<std::string, std::string>>& relations) {
             std::vector<ElementId> ids;
             for (const auto& e : elements) ids.push_back({e});
             std::vector<Relation> rels;
             for (const auto& [a, b] : relations) rels.push_back({{a}, {b}});
             return build_poset(std::move(ids), rels);
           }),
           py::arg("elements"), py::arg("relations") = std::vector<std::pair<std::string, std::string>>{})
      .def_property_readonly("elements",
                             [](const Poset& p) {
                               Names out;
                               for (const auto& e : p.elements()) out.push_back(e.token);
                               return out;
                             })
      .def("__len__", &Poset::size)
      .def("less", [](const Poset& p, const std::string& x, const std::string& y) { return p.less(ElementId{x}, ElementId{y}); })
      .def("incomparable",
           [](const Poset& p, const std::string& x, const std::string& y) { return p.incomparable(ElementId{x}, ElementId{y}); })
      .def("transitive_reduction",
           [](const Poset& p) {
             std::vector<std::pair<std::string, std::string>> out;
             for (auto [a, b] : transitive_reduction(p)) out.emplace_back(p.element(a).token, p.element(b).token);
             return out;
           })
      .def("__eq__", [](const Poset& a, const Poset& b) { return a == b; })
      .def("__repr__", [](const Poset& p) { return "<Poset with " + std::to_string(p.size()) + " elements>"; });

  py::class_<PyTrace>(m, "SwapTrace")
      .def_property_readonly("initial", [](const PyTrace& t) { return to_names(t.poset, t.trace.initial); })
      .def_property_readonly("final", [](const PyTrace& t) { return to_names(t.poset, t.trace.final); })
      .def_property_readonly("swap_count", [](const PyTrace& t) { return t.trace.swap_count(); })
      .def_property_readonly("events", [](const PyTrace& t) {
        py::list out;
        for (const auto& ev : t.trace.events) {
          out.append(py::make_tuple(ev.step, ev.index, t.poset.element(ev.left).token, t.poset.element(ev.right).token));
        }
        return out;
      });

  py::class_<ConfluenceReport>(m, "ConfluenceReport")
      .def_readonly("reachable_count", &ConfluenceReport::reachable_count)
      .def_readonly("swap_count_set", &ConfluenceReport::swap_count_set)
      .def_readonly("predicted_count", &ConfluenceReport::predicted_count)
      .def_readonly("confluent", &ConfluenceReport::confluent)
      .def_readonly("agrees", &ConfluenceReport::agrees);

  m.def("permissible_swaps",
        [](const Poset& p, const Names& arr) { return permissible_swaps(p, from_names(p, arr)); });
  m.def("apply_swap", [](const Poset& p, const Names& arr, std::size_t i) {
    return to_names(p, apply_swap(p, from_names(p, arr), i));
  });
  m.def("is_terminal", [](const Poset& p, const Names& arr) { return is_terminal(p, from_names(p, arr)); });
  m.def(
      "run_to_terminal",
      [](const Poset& p, const Names& arr, const std::string& strategy, std::optional<std::uint64_t> seed) {
        return PyTrace{p, run_to_terminal(p, from_names(p, arr), make_strategy(strategy, seed))};
      },
      py::arg("poset"), py::arg("arrangement"), py::arg("strategy") = "leftmost", py::arg("seed") = py::none());
  m.def(
      "write_trace", [](const PyTrace& t, bool verbose) { return write_trace(t.poset, t.trace, verbose); },
      py::arg("trace"), py::arg("verbose") = false);

  m.def("fence_exists", [](const Poset& p, const Names& arr, const std::string& x, const std::string& y) {
    return fence_exists(p, from_names(p, arr), index(p, x), index(p, y));
  });
  m.def("find_fence",
        [](const Poset& p, const Names& arr, const std::string& x, const std::string& y) -> std::optional<Names> {
          auto cert = find_fence(p, from_names(p, arr), index(p, x), index(p, y));
          if (!cert) return std::nullopt;
          return to_names(p, Arrangement{cert->chain});
        });
  m.def("classify_pair", [](const Poset& p, const Names& arr, const std::string& x, const std::string& y) -> py::tuple {
    const PairOutcome outcome = classify_pair(p, from_names(p, arr), index(p, x), index(p, y));
    if (std::holds_alternative<PreservedByOrder>(outcome)) return py::make_tuple("order", py::none());
    if (const auto* f = std::get_if<PreservedByFence>(&outcome)) {
      return py::make_tuple("fence", to_names(p, Arrangement{f->certificate.chain}));
    }
    return py::make_tuple("reversed", py::none());
  });
  m.def("critical_pairs", [](const Poset& p, const Names& arr) {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto [a, b] : critical_pairs(p, from_names(p, arr))) out.emplace_back(p.element(a).token, p.element(b).token);
    return out;
  });
  m.def("predict_terminal",
        [](const Poset& p, const Names& arr) { return to_names(p, predict_terminal(p, from_names(p, arr))); });
  m.def("predict_swap_count", [](const Poset& p, const Names& arr) { return predict_swap_count(p, from_names(p, arr)); });

  m.def(
      "reachable_set",
      [](const Poset& p, const Names& arr, std::size_t node_limit) {
        std::vector<Names> out;
        for (const auto& a : reachable_set(p, from_names(p, arr), node_limit)) out.push_back(to_names(p, a));
        return out;
      },
      py::arg("poset"), py::arg("arrangement"), py::arg("node_limit") = kDefaultNodeLimit);
  m.def(
      "check_confluence",
      [](const Poset& p, const Names& arr, std::size_t node_limit) {
        return check_confluence(p, from_names(p, arr), node_limit);
      },
      py::arg("poset"), py::arg("arrangement"), py::arg("node_limit") = kDefaultNodeLimit);
  m.def("enumerate_labeled_posets", &enumerate_labeled_posets, py::arg("n"));

  m.def(
      "gen_named_poset",
      [](const std::string& kind, std::size_t a, std::size_t b) { return gen_named_poset(make_spec(kind, a, b)); },
      py::arg("kind"), py::arg("size"), py::arg("cols") = 0);
  m.def("gen_random_poset", &gen_random_poset, py::arg("n"), py::arg("edge_prob"), py::arg("seed"));
  m.def(
      "gen_random_arrangement",
      [](const Poset& p, std::uint64_t seed) { return to_names(p, gen_random_arrangement(p, seed)); },
      py::arg("poset"), py::arg("seed"));
  m.def("parse_poset", [](const std::string& text) { return parse_poset(text); });
  m.def("write_poset", &write_poset);
  m.def("export_dot", &export_dot);
}
