#include "amr/schema.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "amr/error.hpp"

namespace amr {

namespace {

std::size_t slot(Attribute a) { return static_cast<std::size_t>(a); }

int wrap(int value, int modulus) {
  const int r = value % modulus;
  return r < 0 ? r + modulus : r;
}

std::vector<std::string> tuple_labels(std::initializer_list<const char*> items) {
  return std::vector<std::string>(items.begin(), items.end());
}

}  // namespace

std::string_view attribute_label(Attribute a) {
  switch (a) {
    case Attribute::kNum:
      return "num";
    case Attribute::kPos:
      return "pos";
    case Attribute::kType:
      return "type";
    case Attribute::kColor:
      return "color";
    case Attribute::kSize:
      return "size";
  }
  return "?";
}

std::optional<Attribute> parse_attribute(std::string_view label) {
  if (label == "num" || label == "number") return Attribute::kNum;
  if (label == "pos" || label == "position") return Attribute::kPos;
  if (label == "type") return Attribute::kType;
  if (label == "color") return Attribute::kColor;
  if (label == "size") return Attribute::kSize;
  return std::nullopt;
}

AttributeSchema AttributeSchema::build(std::string name, std::vector<AttributeSpec> specs) {
  std::sort(specs.begin(), specs.end(),
            [](const AttributeSpec& a, const AttributeSpec& b) { return a.attribute < b.attribute; });
  for (std::size_t i = 0; i < kAllAttributes.size(); ++i) {
    if (specs.size() <= i || specs[i].attribute != kAllAttributes[i]) {
      throw PreconditionError("schema '" + name + "' must define each of num, pos, type, color, size exactly once");
    }
  }
  if (specs.size() != kAllAttributes.size()) {
    throw PreconditionError("schema '" + name + "' repeats an attribute");
  }

  AttributeSchema schema;
  schema.name_ = std::move(name);
  std::vector<std::string> all_labels;
  for (const AttributeSpec& spec : specs) {
    if (spec.labels.empty()) {
      throw PreconditionError("attribute '" + std::string(attribute_label(spec.attribute)) + "' has no variables");
    }
    all_labels.insert(all_labels.end(), spec.labels.begin(), spec.labels.end());
  }
  schema.names_ = VariableNames(all_labels, true);

  for (const AttributeSpec& spec : specs) {
    const std::size_t a = slot(spec.attribute);
    const std::string attr(attribute_label(spec.attribute));
    std::unordered_map<std::string, VariableId> local;
    for (const std::string& l : spec.labels) {
      const VariableId v = *schema.names_.find(l);
      local.emplace(l, v);
      schema.variables_[a].push_back(v);
    }
    auto lookup = [&](const std::string& l) {
      auto it = local.find(l);
      if (it == local.end()) {
        throw PreconditionError("'" + l + "' is not a variable of attribute '" + attr + "'");
      }
      return it->second;
    };
    std::set<VariableId> placed;
    for (const auto& cycle : spec.cycles) {
      if (cycle.empty()) throw PreconditionError("empty sub-sequence in attribute '" + attr + "'");
      std::vector<VariableId> ids;
      for (const std::string& l : cycle) {
        const VariableId v = lookup(l);
        if (!placed.insert(v).second) {
          throw PreconditionError("variable '" + l + "' lies in two sub-sequences of '" + attr + "'");
        }
        ids.push_back(v);
      }
      schema.cycles_[a].push_back(std::move(ids));
    }
    if (spec.sink) {
      const VariableId s = lookup(*spec.sink);
      if (placed.count(s) != 0) throw PreconditionError("sink of '" + attr + "' lies in a sub-sequence");
      schema.sinks_[a] = s;
    }
    for (const std::string& l : spec.labels) {
      const VariableId v = local.at(l);
      if (placed.count(v) == 0 && !spec.sink) {
        throw PreconditionError("variable '" + l + "' of '" + attr + "' has no sub-sequence and no sink");
      }
    }
    schema.attribute_concepts_[a] = Concept::of_variables(schema.variables_[a]);
  }
  if (schema.cycles_[slot(Attribute::kNum)].size() != 1 ||
      schema.cycles_[slot(Attribute::kNum)].front().size() != schema.variables_[slot(Attribute::kNum)].size()) {
    throw PreconditionError("the num attribute must be a single sub-sequence over all its variables");
  }

  schema.info_.resize(all_labels.size());
  for (Attribute attr : kAllAttributes) {
    const std::size_t a = slot(attr);
    for (VariableId v : schema.variables_[a]) schema.info_[v.index] = {attr, std::nullopt, 0};
    for (std::size_t c = 0; c < schema.cycles_[a].size(); ++c) {
      const auto& ids = schema.cycles_[a][c];
      for (std::size_t i = 0; i < ids.size(); ++i) {
        schema.info_[ids[i].index].cycle = c;
        schema.info_[ids[i].index].index = static_cast<int>(i);
      }
    }
  }
  schema.specs_ = std::move(specs);
  return schema;
}

const AttributeSchema& AttributeSchema::iraven_full() {
  static const AttributeSchema schema = [] {
    std::vector<std::string> num = {"one", "two", "three", "four", "five", "six", "seven", "eight", "nine"};
    auto grid3 = tuple_labels({"(0.16,0.16,0.33)", "(0.16,0.5,0.33)", "(0.16,0.83,0.33)", "(0.5,0.16,0.33)",
                               "(0.5,0.5,0.33)", "(0.5,0.83,0.33)", "(0.83,0.16,0.33)", "(0.83,0.5,0.33)",
                               "(0.83,0.83,0.33)"});
    auto grid2 = tuple_labels({"(0.25,0.25,0.5)", "(0.25,0.75,0.5)", "(0.75,0.25,0.5)", "(0.75,0.75,0.5)"});
    auto inner = tuple_labels({"(0.42,0.42,0.15)", "(0.42,0.58,0.15)", "(0.58,0.42,0.15)", "(0.58,0.58,0.15)"});
    auto loose = tuple_labels({"(0.5,0.25,0.5)", "(0.5,0.75,0.5)", "(0.25,0.5,0.5)", "(0.75,0.5,0.5)",
                               "(0.5,0.5,1.0)"});
    std::vector<std::string> pos;
    for (const auto* group : {&grid3, &grid2, &inner, &loose}) pos.insert(pos.end(), group->begin(), group->end());
    pos.emplace_back("dummy");

    std::vector<std::string> type = {"triangle", "square", "pentagon", "hexagon", "circle"};
    std::vector<std::string> color = {"#255", "#224", "#196", "#168", "#140", "#112", "#84", "#56", "#28", "#0"};

    std::vector<std::vector<std::string>> size_cycles;
    for (const char* width : {"0.15", "0.33", "0.5", "1"}) {
      std::vector<std::string> seq;
      for (const char* rel : {"0.4", "0.5", "0.6", "0.7", "0.8", "0.9"}) {
        if (std::string(width) == "0.15" && (std::string(rel) == "0.4" || std::string(rel) == "0.5")) continue;
        seq.push_back("(" + std::string(rel) + "," + width + ")");
      }
      size_cycles.push_back(std::move(seq));
    }
    std::vector<std::string> size;
    for (const auto& seq : size_cycles) size.insert(size.end(), seq.begin(), seq.end());

    return build("iraven-full", {
                                    {Attribute::kNum, num, {num}, std::nullopt},
                                    {Attribute::kPos, pos, {grid3, grid2, inner}, std::string("dummy")},
                                    {Attribute::kType, type, {type}, std::nullopt},
                                    {Attribute::kColor, color, {color}, std::nullopt},
                                    {Attribute::kSize, size, size_cycles, std::nullopt},
                                });
  }();
  return schema;
}

const AttributeSchema& AttributeSchema::running_example() {
  static const AttributeSchema schema = [] {
    std::vector<std::string> num = {"one", "two"};
    std::vector<std::string> type = {"triangle", "square", "pentagon", "hexagon", "circle"};
    std::vector<std::string> color = {"white", "gray", "dgray", "black"};
    std::vector<std::string> size = {"small", "avg", "large"};
    return build("running-example", {
                                         {Attribute::kNum, num, {num}, std::nullopt},
                                         {Attribute::kPos, {"left", "right", "dummy"}, {}, std::string("dummy")},
                                         {Attribute::kType, type, {type}, std::nullopt},
                                         {Attribute::kColor, color, {color}, std::nullopt},
                                         {Attribute::kSize, size, {size}, std::nullopt},
                                     });
  }();
  return schema;
}

const AttributeSchema& AttributeSchema::preset(std::string_view name) {
  if (name == "iraven-full") return iraven_full();
  if (name == "running-example") return running_example();
  throw PreconditionError("unknown schema preset '" + std::string(name) + "'");
}

Attribute AttributeSchema::attribute_of(VariableId v) const {
  if (v.index >= info_.size()) throw PreconditionError("variable id out of range for schema '" + name_ + "'");
  return info_[v.index].attribute;
}

std::span<const VariableId> AttributeSchema::variables(Attribute a) const { return variables_[slot(a)]; }

const Concept& AttributeSchema::attribute_concept(Attribute a) const { return attribute_concepts_[slot(a)]; }

bool AttributeSchema::within_attribute(const Concept& J, Attribute a) const {
  if (J.is_zero()) return false;
  return std::all_of(J.mingen().begin(), J.mingen().end(), [&](const Monomial& m) {
    return std::any_of(m.factors().begin(), m.factors().end(), [&](const Monomial::Factor& f) {
      return f.var.index < info_.size() && info_[f.var.index].attribute == a;
    });
  });
}

VariableId AttributeSchema::resolve(Attribute a, std::string_view label) const {
  auto v = names_.find(label);
  if (!v || attribute_of(*v) != a) {
    throw IngestionError("unknown " + std::string(attribute_label(a)) + " label '" + std::string(label) +
                         "' in schema '" + name_ + "'");
  }
  return *v;
}

VariableId AttributeSchema::shift(VariableId v, int delta) const {
  const VariableInfo& info = info_.at(v.index);
  if (!info.cycle) return *sinks_[slot(info.attribute)];
  const auto& ids = cycles_[slot(info.attribute)][*info.cycle];
  return ids[static_cast<std::size_t>(wrap(info.index + delta, static_cast<int>(ids.size())))];
}

std::optional<int> AttributeSchema::numeric_index(VariableId v) const {
  const VariableInfo& info = info_.at(v.index);
  if (!info.cycle) return std::nullopt;
  return info.index;
}

std::optional<std::size_t> AttributeSchema::cycle_index(VariableId v) const { return info_.at(v.index).cycle; }

std::span<const VariableId> AttributeSchema::cycle(Attribute a, std::size_t index) const {
  return cycles_[slot(a)].at(index);
}

std::optional<VariableId> AttributeSchema::num_variable(std::size_t count) const {
  const auto& seq = cycles_[slot(Attribute::kNum)].front();
  if (count == 0 || count > seq.size()) return std::nullopt;
  return seq[count - 1];
}

std::size_t AttributeSchema::count_of(VariableId num_var) const {
  const VariableInfo& info = info_.at(num_var.index);
  if (info.attribute != Attribute::kNum) throw PreconditionError("not a number variable");
  return static_cast<std::size_t>(info.index) + 1;
}

}  // namespace amr
