#include "amr/io.hpp"

#include <fstream>
#include <sstream>

#include "amr/error.hpp"
#include "amr/text_format.hpp"

namespace amr {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw IngestionError((where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& doc, const char* key, const std::string& where) {
  if (!doc.is_object()) fail(where, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const Json& doc, const char* key, const std::string& where) {
  const Json& v = field(doc, key, where);
  if (!v.is_string()) fail(where + "/" + key, "expected a string");
  return v.get<std::string>();
}

Concept panel_from_json(const Json& doc, const AttributeSchema& schema, const std::string& where) {
  if (!doc.is_array()) fail(where, "expected a list of entity records");
  if (doc.empty()) fail(where, "panel has no entities");
  std::vector<PanelEntity> entities;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    auto resolve = [&](Attribute a) {
      const char* key = attribute_label(a).data();
      const std::string label = string_field(doc[i], key, at);
      try {
        return schema.resolve(a, label);
      } catch (const IngestionError& e) {
        fail(at + "/" + key, e.what());
      }
    };
    entities.push_back(
        {resolve(Attribute::kPos), resolve(Attribute::kType), resolve(Attribute::kColor), resolve(Attribute::kSize)});
  }
  try {
    return encode_panel(entities, schema);
  } catch (const EncodingError& e) {
    fail(where, e.what());
  }
}

std::vector<Concept> panels_from_json(const Json& doc, const char* key, const AttributeSchema& schema) {
  const Json& list = field(doc, key, "");
  if (!list.is_array()) fail(std::string("/") + key, "expected a list of panels");
  if (list.size() != 8) {
    fail(std::string("/") + key, "expected 8 panels, found " + std::to_string(list.size()));
  }
  std::vector<Concept> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    out.push_back(panel_from_json(list[i], schema, std::string("/") + key + "/" + std::to_string(i)));
  }
  return out;
}

Json panel_to_json(const Concept& J, const AttributeSchema& schema) {
  Json out = Json::array();
  for (const PanelEntity& e : decode_panel(J, schema)) {
    out.push_back({{"pos", schema.label(e.pos)},
                   {"type", schema.label(e.type)},
                   {"color", schema.label(e.color)},
                   {"size", schema.label(e.size)}});
  }
  return out;
}

Json view_to_json(const ViewTag& v, const AttributeSchema& schema) {
  switch (v.kind) {
    case ViewTag::Kind::kFull:
      return Json{{"kind", "full"}};
    case ViewTag::Kind::kBar:
      return Json{{"kind", "bar"}, {"position", schema.label(v.position)}};
    case ViewTag::Kind::kHat:
      return Json{{"kind", "hat"}, {"position", schema.label(v.position)}};
  }
  return Json();
}

ViewTag view_from_json(const Json& doc, const AttributeSchema& schema) {
  const std::string kind = string_field(doc, "kind", "/view");
  if (kind == "full") return ViewTag::full();
  const VariableId p = schema.resolve(Attribute::kPos, string_field(doc, "position", "/view"));
  if (kind == "bar") return ViewTag::bar(p);
  if (kind == "hat") return ViewTag::hat(p);
  fail("/view/kind", "unknown view kind '" + kind + "'");
}

Attribute attribute_from_json(const Json& doc, const std::string& where) {
  if (!doc.is_string()) fail(where, "expected an attribute label");
  auto a = parse_attribute(doc.get<std::string>());
  if (!a) fail(where, "unknown attribute '" + doc.get<std::string>() + "'");
  return *a;
}

std::string ops_to_string(std::span<const BinaryOp> ops) {
  std::string out;
  for (BinaryOp op : ops) out += op_symbol(op);
  return out;
}

std::vector<BinaryOp> ops_from_string(const std::string& text, const std::string& where) {
  std::vector<BinaryOp> out;
  for (char c : text) {
    auto op = parse_op(c);
    if (!op) fail(where, std::string("unknown operator '") + c + "'");
    out.push_back(*op);
  }
  return out;
}

Concept concept_from_text(const std::string& text, const AttributeSchema& schema, const std::string& where) {
  VariableNames names = schema.names();
  try {
    return parse_concept(text, names);
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

Monomial monomial_from_text(const std::string& text, const AttributeSchema& schema, const std::string& where) {
  VariableNames names = schema.names();
  try {
    return parse_monomial(text, names);
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

}  // namespace

RpmInstance instance_from_json(const Json& doc, const AttributeSchema& schema) {
  RpmInstance out;
  out.schema_name = string_field(doc, "schema", "");
  if (out.schema_name != schema.name()) {
    fail("/schema", "instance uses schema '" + out.schema_name + "' but '" + schema.name() + "' is active");
  }
  if (auto it = doc.find("id"); it != doc.end() && it->is_string()) out.id = it->get<std::string>();
  out.question = panels_from_json(doc, "panels", schema);
  out.answers = panels_from_json(doc, "answers", schema);
  if (auto it = doc.find("ground_truth"); it != doc.end() && !it->is_null()) {
    if (!it->is_number_integer() || it->get<long long>() < 0 || it->get<long long>() >= 8) {
      fail("/ground_truth", "expected an integer in 0..7");
    }
    out.ground_truth = it->get<std::size_t>();
  }
  return out;
}

Json instance_to_json(const RpmInstance& instance, const AttributeSchema& schema) {
  Json doc;
  doc["schema"] = schema.name();
  doc["id"] = instance.id;
  Json panels = Json::array();
  for (const Concept& J : instance.question) panels.push_back(panel_to_json(J, schema));
  doc["panels"] = std::move(panels);
  Json answers = Json::array();
  for (const Concept& J : instance.answers) answers.push_back(panel_to_json(J, schema));
  doc["answers"] = std::move(answers);
  if (instance.ground_truth) doc["ground_truth"] = *instance.ground_truth;
  return doc;
}

RpmInstance load_instance(const std::filesystem::path& path, const AttributeSchema& schema) {
  const Json doc = read_json_file(path);
  try {
    RpmInstance out = instance_from_json(doc, schema);
    if (out.id.empty()) out.id = path.stem().string();
    return out;
  } catch (const IngestionError& e) {
    throw IngestionError(path.string() + ":" + e.what());
  }
}

void save_instance(const RpmInstance& instance, const AttributeSchema& schema, const std::filesystem::path& path) {
  write_json_file(instance_to_json(instance, schema), path);
}

AttributeSchema schema_from_json(const Json& doc) {
  const std::string name = string_field(doc, "name", "");
  const Json& attrs = field(doc, "attributes", "");
  if (!attrs.is_array()) fail("/attributes", "expected a list");
  std::vector<AttributeSpec> specs;
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    const std::string at = "/attributes/" + std::to_string(i);
    AttributeSpec spec;
    spec.attribute = attribute_from_json(field(attrs[i], "attribute", at), at + "/attribute");
    try {
      spec.labels = field(attrs[i], "variables", at).get<std::vector<std::string>>();
      if (auto it = attrs[i].find("cycles"); it != attrs[i].end()) {
        spec.cycles = it->get<std::vector<std::vector<std::string>>>();
      }
    } catch (const nlohmann::json::exception& e) {
      fail(at, e.what());
    }
    if (auto it = attrs[i].find("sink"); it != attrs[i].end() && !it->is_null()) {
      if (!it->is_string()) fail(at + "/sink", "expected a string");
      spec.sink = it->get<std::string>();
    }
    specs.push_back(std::move(spec));
  }
  try {
    return AttributeSchema::build(name, std::move(specs));
  } catch (const PreconditionError& e) {
    fail("/attributes", e.what());
  }
}

Json schema_to_json(const AttributeSchema& schema) {
  Json attrs = Json::array();
  for (const AttributeSpec& spec : schema.specs()) {
    Json a;
    a["attribute"] = std::string(attribute_label(spec.attribute));
    a["variables"] = spec.labels;
    a["cycles"] = spec.cycles;
    a["sink"] = spec.sink ? Json(*spec.sink) : Json(nullptr);
    attrs.push_back(std::move(a));
  }
  return Json{{"name", schema.name()}, {"attributes", std::move(attrs)}};
}

AttributeSchema load_schema(const std::filesystem::path& path) {
  try {
    return schema_from_json(read_json_file(path));
  } catch (const IngestionError& e) {
    throw IngestionError(path.string() + ":" + e.what());
  }
}

void save_schema(const AttributeSchema& schema, const std::filesystem::path& path) {
  write_json_file(schema_to_json(schema), path);
}

AttributeSchema resolve_schema(const std::string& preset_or_path) {
  if (preset_or_path == "iraven-full" || preset_or_path == "running-example") {
    return AttributeSchema::preset(preset_or_path);
  }
  return load_schema(preset_or_path);
}

Json pattern_to_json(const TaggedPattern& p, const AttributeSchema& schema) {
  Json doc;
  doc["attribute"] = std::string(attribute_label(pattern_attribute(p.pattern)));
  if (std::holds_alternative<IntraPattern>(p.pattern)) {
    doc["kind"] = "intra";
  } else if (const auto* inter = std::get_if<InterPattern>(&p.pattern)) {
    doc["kind"] = "inter";
    Json comps = Json::array();
    for (const Concept& c : inter->components) comps.push_back(format_concept(c, schema.names()));
    doc["components"] = std::move(comps);
  } else if (const auto* comp = std::get_if<CompPattern>(&p.pattern)) {
    doc["kind"] = "comp";
    doc["delta"] = comp->delta;
  } else {
    doc["kind"] = "binary";
    doc["ops"] = ops_to_string(std::get<BinaryPattern>(p.pattern).ops);
  }
  doc["view"] = view_to_json(p.view, schema);
  return doc;
}

TaggedPattern pattern_from_json(const Json& doc, const AttributeSchema& schema) {
  const Attribute a = attribute_from_json(field(doc, "attribute", "/pattern"), "/pattern/attribute");
  const std::string kind = string_field(doc, "kind", "/pattern");
  TaggedPattern out{IntraPattern{a}, view_from_json(field(doc, "view", "/pattern"), schema)};
  if (kind == "intra") return out;
  if (kind == "inter") {
    std::vector<Concept> comps;
    for (const Json& c : field(doc, "components", "/pattern")) {
      comps.push_back(concept_from_text(c.get<std::string>(), schema, "/pattern/components"));
    }
    std::sort(comps.begin(), comps.end());
    out.pattern = InterPattern{a, std::move(comps)};
  } else if (kind == "comp") {
    out.pattern = CompPattern{a, field(doc, "delta", "/pattern").get<int>()};
  } else if (kind == "binary") {
    out.pattern = BinaryPattern{a, ops_from_string(string_field(doc, "ops", "/pattern"), "/pattern/ops")};
  } else {
    fail("/pattern/kind", "unknown pattern kind '" + kind + "'");
  }
  return out;
}

Json report_to_json(const SelectionReport& report, const AttributeSchema& schema) {
  Json doc;
  doc["instance"] = report.instance_id;
  doc["com_pattern"] = report.com_pattern;
  doc["chosen_index"] = report.chosen_index;
  doc["tie_size"] = report.tie_size;
  Json rows = Json::array();
  for (const TaggedPattern& p : report.row_patterns) rows.push_back(pattern_to_json(p, schema));
  doc["row_patterns"] = std::move(rows);
  Json matched = Json::array();
  for (const auto& list : report.matched) {
    Json m = Json::array();
    for (const TaggedPattern& p : list) m.push_back(pattern_to_json(p, schema));
    matched.push_back(std::move(m));
  }
  doc["matched"] = std::move(matched);
  return doc;
}

SelectionReport report_from_json(const Json& doc, const AttributeSchema& schema) {
  SelectionReport r;
  try {
    r.instance_id = string_field(doc, "instance", "");
    r.com_pattern = field(doc, "com_pattern", "").get<std::vector<std::size_t>>();
    r.chosen_index = field(doc, "chosen_index", "").get<std::size_t>();
    r.tie_size = field(doc, "tie_size", "").get<std::size_t>();
    for (const Json& p : field(doc, "row_patterns", "")) r.row_patterns.push_back(pattern_from_json(p, schema));
    for (const Json& list : field(doc, "matched", "")) {
      std::vector<TaggedPattern> m;
      for (const Json& p : list) m.push_back(pattern_from_json(p, schema));
      r.matched.push_back(std::move(m));
    }
  } catch (const nlohmann::json::exception& e) {
    fail("/report", e.what());
  }
  return r;
}

void save_report(const SelectionReport& report, const AttributeSchema& schema, const std::filesystem::path& path) {
  write_json_file(report_to_json(report, schema), path);
}

SelectionReport load_report(const std::filesystem::path& path, const AttributeSchema& schema) {
  return report_from_json(read_json_file(path), schema);
}

Json config_to_json(const SolverConfig& config) {
  return Json{{"deltas", config.deltas},
              {"binary_ops", ops_to_string(config.binary_ops)},
              {"enable_modules", format_modules(config.modules)}};
}

SolverConfig config_from_json(const Json& doc) {
  SolverConfig config;
  try {
    if (auto it = doc.find("deltas"); it != doc.end()) config.deltas = it->get<std::vector<int>>();
    if (auto it = doc.find("binary_ops"); it != doc.end()) {
      config.binary_ops = ops_from_string(it->get<std::string>(), "/binary_ops");
    }
    if (auto it = doc.find("enable_modules"); it != doc.end()) {
      config.modules = parse_modules(it->get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    fail("/config", e.what());
  } catch (const PreconditionError& e) {
    fail("/config", e.what());
  }
  validate_config(config);
  return config;
}

Json generated_to_json(const GeneratedAnswer& answer, const AttributeSchema& schema) {
  Json choices = Json::array();
  for (const RandomChoice& c : answer.random_choices) {
    Json candidates = Json::array();
    for (const Monomial& m : c.candidates) candidates.push_back(format_monomial(m, schema.names()));
    choices.push_back({{"position", schema.label(c.position)},
                       {"attribute", c.attribute ? Json(std::string(attribute_label(*c.attribute))) : Json(nullptr)},
                       {"candidates", std::move(candidates)},
                       {"chosen", format_monomial(c.chosen, schema.names())}});
  }
  return Json{{"ideal", format_concept(answer.ideal, schema.names())},
              {"random_choices", std::move(choices)},
              {"seed", answer.seed}};
}

GeneratedAnswer generated_from_json(const Json& doc, const AttributeSchema& schema) {
  GeneratedAnswer out;
  out.ideal = concept_from_text(string_field(doc, "ideal", ""), schema, "/ideal");
  out.seed = field(doc, "seed", "").get<std::uint64_t>();
  for (const Json& c : field(doc, "random_choices", "")) {
    RandomChoice choice;
    choice.position = schema.resolve(Attribute::kPos, string_field(c, "position", "/random_choices"));
    if (!c.at("attribute").is_null()) choice.attribute = attribute_from_json(c.at("attribute"), "/random_choices");
    for (const Json& m : field(c, "candidates", "/random_choices")) {
      choice.candidates.push_back(monomial_from_text(m.get<std::string>(), schema, "/random_choices"));
    }
    choice.chosen = monomial_from_text(string_field(c, "chosen", "/random_choices"), schema, "/random_choices");
    out.random_choices.push_back(std::move(choice));
  }
  return out;
}

Json similarity_to_json(const SimilarityReport& report, const AttributeSchema& schema) {
  Json pairs = Json::array();
  for (const EntityPair& p : report.s1_pairs) {
    pairs.push_back(Json::array({format_monomial(p.first, schema.names()), format_monomial(p.second, schema.names())}));
  }
  Json s2 = Json::array();
  for (const Monomial& m : report.s2_only) s2.push_back(format_monomial(m, schema.names()));
  Json s3 = Json::array();
  for (const Monomial& m : report.s3_only) s3.push_back(format_monomial(m, schema.names()));
  return Json{{"phi", format_rational(report.phi)},
              {"phi_value", report.phi.get_d()},
              {"s1_pairs", std::move(pairs)},
              {"s2_only", std::move(s2)},
              {"s3_only", std::move(s3)}};
}

std::string format_rational(const Rational& r) {
  Rational reduced(r);
  reduced.canonicalize();
  return reduced.get_str();
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IngestionError(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw IngestionError(path.string() + ": malformed JSON: " + e.what());
  }
}

void write_json_file(const Json& doc, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw IngestionError(path.string() + ": cannot write file");
  out << doc.dump(2) << '\n';
}

}  // namespace amr
