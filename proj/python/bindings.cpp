#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <variant>
#include <vector>

#include <cayleyfn/cayley.hpp>
#include <cayleyfn/centralizer.hpp>
#include <cayleyfn/digraph.hpp>
#include <cayleyfn/oracle.hpp>
#include <cayleyfn/symbolic.hpp>
#include <cayleyfn/transformation.hpp>

namespace py = pybind11;
using namespace cayleyfn;

namespace {

// Descriptors cross the boundary as JSON strings; the variant and spec types
// stay on the C++ side.
std::variant<RightRayDescriptor, DoubleRayDescriptor> parse_descriptor(
    const std::string& text) {
  return descriptor_from_json(json::parse(text));
}

SymbolicVerdict check_descriptor(const std::string& text) {
  auto d = parse_descriptor(text);
  if (const auto* ray = std::get_if<RightRayDescriptor>(&d)) {
    return check_right_ray_condition(*ray);
  }
  const auto& dray = std::get<DoubleRayDescriptor>(d);
  int bound = 0;
  for (const BranchGroup& group : dray.window) {
    for (const BranchSpec& b : group) {
      if (b.kind == BranchKind::Finite) {
        bound = std::max(bound, b.length);
      }
    }
  }
  return check_double_ray_condition(dray, bound);
}

Materialization materialize_descriptor(const std::string& text, int radius) {
  auto d = parse_descriptor(text);
  if (const auto* ray = std::get_if<RightRayDescriptor>(&d)) {
    return materialize(*ray, radius);
  }
  return materialize(std::get<DoubleRayDescriptor>(d), radius);
}

std::vector<std::vector<int>> table_rows(const OperationTable& t) {
  std::vector<std::vector<int>> rows(t.size, std::vector<int>(t.size));
  for (int a = 0; a < t.size; ++a) {
    for (int x = 0; x < t.size; ++x) {
      rows[a][x] = t.entry(a, x);
    }
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_cayleyfn, m) {
  m.doc() = "Cayley function analysis for finite transformations";

  py::register_exception<Error>(m, "CayleyfnError", PyExc_ValueError);

  py::class_<Transformation>(m, "Transformation")
      .def(py::init<std::vector<int>, std::optional<std::vector<std::string>>>(),
           py::arg("images"), py::arg("labels") = std::nullopt)
      .def_static("identity", &Transformation::identity, py::arg("n"))
      .def("__call__", &Transformation::operator(), py::arg("x"))
      .def("__len__", &Transformation::size)
      .def("__eq__", &Transformation::operator==)
      .def("__repr__",
           [](const Transformation& f) {
             std::ostringstream out;
             out << "Transformation(\"" << format_transformation(f) << "\")";
             return out.str();
           })
      .def_property_readonly("images", &Transformation::images)
      .def_property_readonly("labels",
                             [](const Transformation& f) { return f.labels(); })
      .def("label", &Transformation::label, py::arg("x"));

  m.def("parse", [](const std::string& text) { return parse_transformation(text); },
        py::arg("text"));
  m.def("format", &format_transformation, py::arg("f"));
  m.def("compose", &compose, py::arg("f"), py::arg("g"));
  m.def("power", &power, py::arg("f"), py::arg("exponent"));
  m.def("is_idempotent", &is_idempotent, py::arg("f"));
  m.def("commutes", &commutes, py::arg("f"), py::arg("g"));

  m.def("stabilizer", &stabilizer, py::arg("f"));
  m.def("stable_image", &stable_image, py::arg("f"));
  m.def("max_branch_length", &max_branch_length, py::arg("f"));
  m.def("digraph_to_dot", &digraph_to_dot, py::arg("f"));

  py::class_<CayleyVerdict>(m, "CayleyVerdict")
      .def_property_readonly(
          "status", [](const CayleyVerdict& v) { return to_string(v.status); })
      .def_readonly("criterion", &CayleyVerdict::criterion)
      .def_readonly("witness", &CayleyVerdict::witness)
      .def_readonly("details", &CayleyVerdict::details)
      .def("__repr__", [](const CayleyVerdict& v) {
        return "CayleyVerdict(" + to_string(v.status) + ")";
      });

  m.def("zupnik_criterion", &zupnik_criterion, py::arg("f"));
  m.def("digraph_criterion", &digraph_criterion, py::arg("f"));
  m.def("is_cayley", &is_cayley, py::arg("f"));

  m.def(
      "find_witness_table",
      [](const Transformation& f) -> std::optional<std::pair<std::vector<std::vector<int>>, int>> {
        auto w = find_witness_table(f);
        if (!w) {
          return std::nullopt;
        }
        return std::make_pair(table_rows(w->table), w->element);
      },
      py::arg("f"),
      "The (table, element) pair of an associative operation whose row "
      "`element` is f, or None when the exhaustive search finds none.");
  m.def("all_cayley_functions", &all_cayley_functions, py::arg("n"));

  py::class_<SufficiencyVerdict>(m, "SufficiencyVerdict")
      .def_property_readonly(
          "status", [](const SufficiencyVerdict& v) { return to_string(v.status); })
      .def_readonly("cycle_lengths", &SufficiencyVerdict::cycle_lengths)
      .def_readonly("max_branch", &SufficiencyVerdict::max_branch)
      .def_readonly("failed_condition", &SufficiencyVerdict::failed_condition)
      .def("__repr__", [](const SufficiencyVerdict& v) {
        return "SufficiencyVerdict(" + to_string(v.status) + ")";
      });

  m.def("centralizer_criterion", &centralizer_criterion, py::arg("f"), py::arg("e"));
  m.def(
      "quotient_base",
      [](const Transformation& f, const Transformation& e) {
        return quotient_map(f, e).base;
      },
      py::arg("f"), py::arg("e"),
      "The map induced on the components of the idempotent e.");
  m.def("random_commuting", &random_commuting, py::arg("e"), py::arg("seed"));

  py::class_<SymbolicVerdict>(m, "SymbolicVerdict")
      .def_property_readonly(
          "status", [](const SymbolicVerdict& v) { return to_string(v.status); })
      .def_readonly("witness_position", &SymbolicVerdict::witness_position)
      .def_readonly("detail", &SymbolicVerdict::detail)
      .def("__repr__", [](const SymbolicVerdict& v) {
        return "SymbolicVerdict(" + to_string(v.status) + ")";
      });

  m.def("check_descriptor", &check_descriptor, py::arg("descriptor_json"),
        "Ray condition for an rro descriptor, double-ray condition (twig "
        "bound = largest finite branch) for a double-ray descriptor.");
  m.def(
      "materialize",
      [](const std::string& text, int radius) {
        Materialization mat = materialize_descriptor(text, radius);
        return std::make_tuple(mat.map, mat.boundary, mat.spine);
      },
      py::arg("descriptor_json"), py::arg("radius"),
      "Finite truncation: (map, boundary vertices, position -> vertex).");
}
