// Python module _amr. Values cross the boundary as text: ideals and
// polynomials in the "<a*b, c>" notation, instances and reports as JSON
// strings decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "amr/concept.hpp"
#include "amr/error.hpp"
#include "amr/generation.hpp"
#include "amr/groebner.hpp"
#include "amr/invariance.hpp"
#include "amr/io.hpp"
#include "amr/raven_xml.hpp"
#include "amr/synthetic.hpp"
#include "amr/text_format.hpp"

namespace py = pybind11;
using namespace amr;

namespace {

/// Fixed variable order when given, else order of first appearance.
VariableNames names_for(const std::optional<std::vector<std::string>>& variables) {
  return variables ? VariableNames(*variables, true) : VariableNames({}, false);
}

SolverConfig make_config(const std::vector<int>& deltas, const std::string& ops, const std::string& modules) {
  SolverConfig config;
  config.deltas = deltas;
  config.binary_ops.clear();
  for (char c : ops) {
    const auto op = parse_op(c);
    if (!op) throw PreconditionError(std::string("unknown binary operator '") + c + "'");
    config.binary_ops.push_back(*op);
  }
  config.modules = parse_modules(modules);
  validate_config(config);
  return config;
}

template <typename Op>
std::string binary_ideal_op(const std::string& a, const std::string& b,
                            const std::optional<std::vector<std::string>>& variables, Op op) {
  VariableNames names = names_for(variables);
  const Concept first = parse_concept(a, names);
  const Concept second = parse_concept(b, names);
  return format_concept(op(first, second), names);
}

}  // namespace

PYBIND11_MODULE(_amr, m) {
  m.doc() = "Algebraic reasoning over monomial-ideal encodings of Raven-style matrices";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<IngestionError>(m, "IngestionError", PyExc_ValueError);
  py::register_exception<EncodingError>(m, "EncodingError", PyExc_ValueError);
  py::register_exception<GenerationError>(m, "GenerationError", PyExc_RuntimeError);

  m.def(
      "primary_decomposition",
      [](const std::string& ideal, const std::optional<std::vector<std::string>>& variables) {
        VariableNames names = names_for(variables);
        const Concept J = parse_concept(ideal, names);
        std::vector<std::string> out;
        for (const Concept& q : primary_decompose(J).components) out.push_back(format_concept(q, names));
        return out;
      },
      py::arg("ideal"), py::arg("variables") = py::none());
  m.def(
      "ideal_sum",
      [](const std::string& a, const std::string& b, const std::optional<std::vector<std::string>>& v) {
        return binary_ideal_op(a, b, v, [](const Concept& x, const Concept& y) { return sum(x, y); });
      },
      py::arg("a"), py::arg("b"), py::arg("variables") = py::none());
  m.def(
      "ideal_product",
      [](const std::string& a, const std::string& b, const std::optional<std::vector<std::string>>& v) {
        return binary_ideal_op(a, b, v, [](const Concept& x, const Concept& y) { return product(x, y); });
      },
      py::arg("a"), py::arg("b"), py::arg("variables") = py::none());
  m.def(
      "ideal_intersection",
      [](const std::string& a, const std::string& b, const std::optional<std::vector<std::string>>& v) {
        return binary_ideal_op(a, b, v, [](const Concept& x, const Concept& y) { return intersect(x, y); });
      },
      py::arg("a"), py::arg("b"), py::arg("variables") = py::none());
  m.def(
      "groebner_basis",
      [](const std::string& polys, const std::optional<std::vector<std::string>>& variables) {
        VariableNames names = names_for(variables);
        const auto gens = parse_polynomial_list(polys, names);
        std::vector<std::string> out;
        for (const Polynomial& p : buchberger(gens).elements) out.push_back(format_polynomial(p, names));
        return out;
      },
      py::arg("polynomials"), py::arg("variables") = py::none());

  m.def("schema_variables", [](const std::string& schema) { return resolve_schema(schema).names().labels(); },
        py::arg("schema") = "iraven-full");

  m.def(
      "solve_json",
      [](const std::string& instance, const std::string& schema_name, const std::vector<int>& deltas,
         const std::string& ops, const std::string& modules) {
        const AttributeSchema schema = resolve_schema(schema_name);
        const RpmInstance inst = instance_from_json(Json::parse(instance), schema);
        py::gil_scoped_release release;
        ReasoningContext ctx(schema, make_config(deltas, ops, modules));
        return report_to_json(select_answer(inst, ctx), schema).dump();
      },
      py::arg("instance"), py::arg("schema") = "iraven-full", py::arg("deltas") = std::vector<int>{1, 2, -1, -2},
      py::arg("ops") = "+-", py::arg("modules") = "all");

  m.def(
      "generate_json",
      [](const std::string& instance, std::uint64_t seed, const std::string& schema_name,
         const std::vector<int>& deltas, const std::string& ops, const std::string& modules) {
        const AttributeSchema schema = resolve_schema(schema_name);
        const RpmInstance inst = instance_from_json(Json::parse(instance), schema);
        py::gil_scoped_release release;
        ReasoningContext ctx(schema, make_config(deltas, ops, modules));
        const GeneratedAnswer g = generate_answer(inst.question_matrix(), ctx, seed);
        Json doc = generated_to_json(g, schema);
        if (inst.ground_truth) {
          doc["similarity"] = similarity_to_json(similarity(g.ideal, inst.answers[*inst.ground_truth], schema), schema);
        }
        return doc.dump();
      },
      py::arg("instance"), py::arg("seed") = 0, py::arg("schema") = "iraven-full",
      py::arg("deltas") = std::vector<int>{1, 2, -1, -2}, py::arg("ops") = "+-", py::arg("modules") = "all");

  m.def(
      "synthetic_json",
      [](const std::string& family, const std::string& configuration, std::uint64_t seed) {
        const auto f = parse_family(family);
        if (!f) throw PreconditionError("unknown rule family '" + family + "'");
        const auto c = parse_configuration(configuration);
        if (!c) throw PreconditionError("unknown configuration '" + configuration + "'");
        const RpmInstance inst = generate_synthetic(sample_family_config(*f, *c, seed), seed);
        return instance_to_json(inst, AttributeSchema::iraven_full()).dump();
      },
      py::arg("family"), py::arg("configuration") = "center", py::arg("seed") = 0);

  m.def(
      "raven_xml_json",
      [](const std::string& path, const std::optional<std::string>& mapping) {
        const RavenMapping map = mapping ? load_mapping(*mapping) : RavenMapping{};
        const auto& schema = AttributeSchema::iraven_full();
        return instance_to_json(load_raven_xml(path, schema, map), schema).dump();
      },
      py::arg("path"), py::arg("mapping") = py::none());
}
