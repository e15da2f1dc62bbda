#include "amr/raven_xml.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

#include "amr/error.hpp"

namespace amr {

namespace pt = boost::property_tree;

RavenMapping mapping_from_json(const Json& doc) {
  RavenMapping m;
  try {
    if (auto it = doc.find("type_labels"); it != doc.end()) m.type_labels = it->get<std::vector<std::string>>();
    if (auto it = doc.find("color_labels"); it != doc.end()) m.color_labels = it->get<std::vector<std::string>>();
    if (auto it = doc.find("size_values"); it != doc.end()) m.size_values = it->get<std::vector<double>>();
    if (auto it = doc.find("tolerance"); it != doc.end()) m.tolerance = it->get<double>();
    auto text = [&](const char* key, std::string& out) {
      if (auto it = doc.find(key); it != doc.end()) out = it->get<std::string>();
    };
    text("panel_tag", m.panel_tag);
    text("entity_tag", m.entity_tag);
    text("bbox_attribute", m.bbox_attribute);
    text("type_attribute", m.type_attribute);
    text("size_attribute", m.size_attribute);
    text("color_attribute", m.color_attribute);
    text("target_attribute", m.target_attribute);
  } catch (const nlohmann::json::exception& e) {
    throw IngestionError(std::string("mapping: ") + e.what());
  }
  return m;
}

Json mapping_to_json(const RavenMapping& m) {
  return Json{{"type_labels", m.type_labels},
              {"color_labels", m.color_labels},
              {"size_values", m.size_values},
              {"tolerance", m.tolerance},
              {"panel_tag", m.panel_tag},
              {"entity_tag", m.entity_tag},
              {"bbox_attribute", m.bbox_attribute},
              {"type_attribute", m.type_attribute},
              {"size_attribute", m.size_attribute},
              {"color_attribute", m.color_attribute},
              {"target_attribute", m.target_attribute}};
}

RavenMapping load_mapping(const std::filesystem::path& path) { return mapping_from_json(read_json_file(path)); }

std::optional<std::vector<double>> parse_tuple_label(const std::string& label) {
  if (label.size() < 2 || label.front() != '(' || label.back() != ')') return std::nullopt;
  std::vector<double> out;
  std::stringstream in(label.substr(1, label.size() - 2));
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) return std::nullopt;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return out;
}

namespace {

// "[0.5, 0.5, 1, 1]" -> numbers.
std::vector<double> parse_number_list(const std::string& text, const std::string& where) {
  std::string cleaned;
  for (char c : text) cleaned += (c == '[' || c == ']' || c == ',') ? ' ' : c;
  std::stringstream in(cleaned);
  std::vector<double> out;
  double v = 0;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw IngestionError(where + ": malformed number list '" + text + "'");
  return out;
}

struct TupleIndex {
  std::vector<std::pair<std::vector<double>, VariableId>> entries;

  std::optional<VariableId> snap(const std::vector<double>& key, double tolerance) const {
    std::optional<VariableId> best;
    double best_gap = tolerance;
    for (const auto& [tuple, v] : entries) {
      if (tuple.size() != key.size()) continue;
      double gap = 0;
      for (std::size_t i = 0; i < key.size(); ++i) gap = std::max(gap, std::abs(tuple[i] - key[i]));
      if (gap <= best_gap) {
        best_gap = gap;
        best = v;
      }
    }
    return best;
  }
};

TupleIndex index_attribute(const AttributeSchema& schema, Attribute a) {
  TupleIndex index;
  for (VariableId v : schema.variables(a)) {
    if (auto t = parse_tuple_label(schema.label(v))) index.entries.emplace_back(std::move(*t), v);
  }
  return index;
}

std::size_t raw_index(const pt::ptree& attrs, const std::string& key, const std::string& where) {
  auto value = attrs.get_optional<std::string>(key);
  if (!value) throw IngestionError(where + ": missing attribute '" + key + "'");
  try {
    std::size_t used = 0;
    const long long i = std::stoll(*value, &used);
    if (used != value->size() || i < 0) throw std::invalid_argument("negative");
    return static_cast<std::size_t>(i);
  } catch (const std::exception&) {
    throw IngestionError(where + ": attribute '" + key + "' is not a non-negative integer: '" + *value + "'");
  }
}

void collect_panels(const pt::ptree& node, const std::string& tag, std::vector<const pt::ptree*>& out) {
  for (const auto& [name, child] : node) {
    if (name == tag) out.push_back(&child);
    else if (name != "<xmlattr>") collect_panels(child, tag, out);
  }
}

void collect_entities(const pt::ptree& node, const std::string& tag, std::vector<const pt::ptree*>& out) {
  for (const auto& [name, child] : node) {
    if (name == tag) out.push_back(&child);
    else if (name != "<xmlattr>") collect_entities(child, tag, out);
  }
}

std::string format_coords(const std::vector<double>& xs) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  out << ')';
  return out.str();
}

}  // namespace

RpmInstance parse_raven_xml(const std::string& xml, const AttributeSchema& schema, const RavenMapping& mapping,
                            const std::string& id) {
  pt::ptree tree;
  try {
    std::istringstream in(xml);
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error& e) {
    throw IngestionError(id + ": malformed XML: " + e.what());
  }
  std::vector<const pt::ptree*> panels;
  collect_panels(tree, mapping.panel_tag, panels);
  if (panels.size() != 16) {
    throw IngestionError(id + ": expected 16 panels, found " + std::to_string(panels.size()));
  }

  const TupleIndex positions = index_attribute(schema, Attribute::kPos);
  const TupleIndex sizes = index_attribute(schema, Attribute::kSize);

  std::vector<Concept> concepts;
  for (std::size_t p = 0; p < panels.size(); ++p) {
    std::vector<const pt::ptree*> entities;
    collect_entities(*panels[p], mapping.entity_tag, entities);
    std::vector<PanelEntity> decoded;
    for (std::size_t e = 0; e < entities.size(); ++e) {
      const std::string where = id + ": panel " + std::to_string(p) + " entity " + std::to_string(e);
      const pt::ptree attrs = entities[e]->get_child("<xmlattr>", pt::ptree());
      const std::size_t type = raw_index(attrs, mapping.type_attribute, where);
      if (type >= mapping.type_labels.size()) {
        throw IngestionError(where + ": Type index " + std::to_string(type) + " out of range");
      }
      if (mapping.type_labels[type].empty()) continue;
      const std::size_t color = raw_index(attrs, mapping.color_attribute, where);
      if (color >= mapping.color_labels.size()) {
        throw IngestionError(where + ": Color index " + std::to_string(color) + " out of range");
      }
      const std::size_t size = raw_index(attrs, mapping.size_attribute, where);
      if (size >= mapping.size_values.size()) {
        throw IngestionError(where + ": Size index " + std::to_string(size) + " out of range");
      }
      auto bbox_text = attrs.get_optional<std::string>(mapping.bbox_attribute);
      if (!bbox_text) throw IngestionError(where + ": missing attribute '" + mapping.bbox_attribute + "'");
      const auto bbox = parse_number_list(*bbox_text, where);
      if (bbox.size() < 3) throw IngestionError(where + ": bbox needs at least 3 numbers");
      const std::vector<double> key(bbox.begin(), bbox.begin() + 3);
      const auto pos = positions.snap(key, mapping.tolerance);
      if (!pos) throw IngestionError(where + ": no position within tolerance of " + format_coords(key));
      const std::vector<double> size_key = {mapping.size_values[size], key[2]};
      const auto size_var = sizes.snap(size_key, mapping.tolerance);
      if (!size_var) throw IngestionError(where + ": no size within tolerance of " + format_coords(size_key));
      try {
        decoded.push_back({*pos, schema.resolve(Attribute::kType, mapping.type_labels[type]),
                           schema.resolve(Attribute::kColor, mapping.color_labels[color]), *size_var});
      } catch (const IngestionError& err) {
        throw IngestionError(where + ": " + err.what());
      }
    }
    try {
      concepts.push_back(encode_panel(decoded, schema));
    } catch (const EncodingError& err) {
      throw IngestionError(id + ": panel " + std::to_string(p) + ": " + err.what());
    }
  }

  RpmInstance out;
  out.id = id;
  out.schema_name = schema.name();
  out.question.assign(concepts.begin(), concepts.begin() + 8);
  out.answers.assign(concepts.begin() + 8, concepts.end());
  for (const auto& [name, root] : tree) {
    if (auto t = root.get_optional<long long>("<xmlattr>." + mapping.target_attribute)) {
      if (*t < 0 || *t >= 8) throw IngestionError(id + ": target " + std::to_string(*t) + " outside 0..7");
      out.ground_truth = static_cast<std::size_t>(*t);
    }
  }
  return out;
}

RpmInstance load_raven_xml(const std::filesystem::path& path, const AttributeSchema& schema,
                           const RavenMapping& mapping) {
  std::ifstream in(path);
  if (!in) throw IngestionError(path.string() + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_raven_xml(buffer.str(), schema, mapping, path.stem().string());
}

}  // namespace amr
