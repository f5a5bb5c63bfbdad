#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperforge/classify.hpp"
#include "hyperforge/cli.hpp"
#include "hyperforge/congruence.hpp"
#include "hyperforge/explore.hpp"
#include "hyperforge/ideals.hpp"
#include "hyperforge/structure_file.hpp"
#include "hyperforge/verify.hpp"

namespace py = pybind11;
using namespace hyperforge;

namespace {

// None picks Ordered for ordered structures.
Flavor flavor_for(const HyperStructure& s, const std::optional<std::string>& name) {
  if (!name) return s.has_order() ? Flavor::kOrdered : Flavor::kPlain;
  if (*name == "ordered") return Flavor::kOrdered;
  if (*name == "plain") return Flavor::kPlain;
  throw py::value_error("flavor must be 'ordered' or 'plain'");
}

IdealKind kind_for(const std::string& name) {
  for (IdealKind k : {IdealKind::kRight, IdealKind::kLeft, IdealKind::kTwoSided, IdealKind::kBi, IdealKind::kQuasi}) {
    if (to_string(k) == name) return k;
  }
  throw py::value_error("unknown ideal kind '" + name + "'");
}

std::vector<int> members(ElementSet A) {
  std::vector<int> out;
  for (Element a : A) out.push_back(a);
  return out;
}

std::vector<std::vector<int>> blocks(const Partition& p) {
  std::vector<std::vector<int>> out;
  for (ElementSet b : p.blocks()) out.push_back(members(b));
  return out;
}

std::vector<std::vector<int>> sets(const std::vector<ElementSet>& family) {
  std::vector<std::vector<int>> out;
  for (ElementSet A : family) out.push_back(members(A));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite hyperstructure engine";

  py::register_exception<Error>(m, "HyperforgeError", PyExc_ValueError);

  py::class_<HyperStructure>(m, "Structure")
      .def_static("from_json", [](const std::string& text) { return parse_structure(text).structure; },
                  py::arg("text"))
      .def_static("load", [](const std::string& path) { return load_structure(path).structure; }, py::arg("path"))
      .def_property_readonly("size", &HyperStructure::size)
      .def_property_readonly("ordered", &HyperStructure::has_order)
      .def("product", [](const HyperStructure& s, int a, int b) {
        if (a < 0 || b < 0 || a >= s.size() || b >= s.size()) throw py::index_error("element out of range");
        return members(s(a, b));
      })
      .def("to_json", [](const HyperStructure& s) { return print_structure(with_default_names(s)); })
      .def("validate", [](HyperStructure s) { return validate(s).to_text(); })
      .def("classify", [](const HyperStructure& s, std::optional<std::string> flavor) {
        return classify_all(s, flavor_for(s, flavor)).bits();
      }, py::arg("flavor") = py::none())
      .def("ideals", [](const HyperStructure& s, const std::string& kind, std::optional<std::string> flavor) {
        return sets(enumerate_ideals(s, kind_for(kind), flavor_for(s, flavor)));
      }, py::arg("kind"), py::arg("flavor") = py::none())
      .def("filters", [](const HyperStructure& s, std::optional<std::string> flavor) {
        return sets(enumerate_filters(s, flavor_for(s, flavor)));
      }, py::arg("flavor") = py::none())
      .def("relation_n", [](const HyperStructure& s, std::optional<std::string> flavor) {
        return blocks(relation_N(s, flavor_for(s, flavor)));
      }, py::arg("flavor") = py::none())
      .def("least_semilattice_congruence",
           [](const HyperStructure& s) { return blocks(least_semilattice_congruence(s)); })
      .def("canonical_form", [](const HyperStructure& s) { return canonical_form(s); })
      .def("verify", [](const HyperStructure& s, std::optional<std::vector<std::string>> ids, int threads) {
        std::vector<TheoremId> chosen;
        if (!ids) {
          chosen.assign(all_theorems().begin(), all_theorems().end());
        } else {
          for (const std::string& text : *ids) {
            auto id = parse_theorem_id(text);
            if (!id) throw py::value_error("unknown theorem id '" + text + "'");
            chosen.push_back(*id);
          }
        }
        std::vector<py::dict> out;
        for (const TheoremReport& r : run_suite(s, chosen, {}, threads)) {
          py::dict d;
          d["id"] = std::string(to_string(r.id));
          d["verdict"] = std::string(to_string(r.verdict));
          d["witness"] = r.witness;
          d["note"] = r.note;
          out.push_back(d);
        }
        return out;
      }, py::arg("theorems") = py::none(), py::arg("threads") = 1)
      .def("__eq__", [](const HyperStructure& a, const HyperStructure& b) { return a == b; })
      .def("__repr__", [](const HyperStructure& s) {
        return "<Structure n=" + std::to_string(s.size()) + (s.has_order() ? " ordered>" : ">");
      });

  m.def("enumerate", [](int n, bool associative, bool compatible, bool canonical) {
    EnumSpec spec;
    spec.n = n;
    spec.require.associative = associative;
    spec.require.compatible = compatible;
    spec.canonical_only = canonical;
    return collect(spec);
  }, py::arg("n"), py::arg("associative") = false, py::arg("compatible") = false, py::arg("canonical") = false);

  m.def("sample", [](int n, std::uint64_t count, std::uint64_t seed, bool compatible) {
    EnumSpec spec;
    spec.n = n;
    spec.require.associative = true;
    spec.require.compatible = compatible;
    spec.mode = EnumMode::kRandom;
    spec.count = count;
    spec.seed = seed;
    return collect(spec);
  }, py::arg("n"), py::arg("count"), py::arg("seed") = 0, py::arg("compatible") = false);

  m.def("search_p85", [](int n, bool canonical) {
    EnumSpec spec;
    spec.n = n;
    spec.canonical_only = canonical;
    const SearchResult r = search_p85(spec);
    py::dict d;
    d["examined"] = r.examined;
    std::vector<HyperStructure> found;
    for (const SearchFinding& f : r.findings) found.push_back(f.structure);
    d["findings"] = found;
    d["certificate"] = r.certificate;
    return d;
  }, py::arg("n"), py::arg("canonical") = true);

  m.def("theorem_ids", [] {
    std::vector<std::string> out;
    for (TheoremId id : all_theorems()) out.emplace_back(to_string(id));
    return out;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
