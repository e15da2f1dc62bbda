#include "amr/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "amr/error.hpp"
#include "amr/raven_xml.hpp"
#include "amr/rng.hpp"

namespace amr {

std::string_view family_label(RuleFamily f) {
  switch (f) {
    case RuleFamily::kConstant: return "constant";
    case RuleFamily::kSetPermutation: return "set-permutation";
    case RuleFamily::kProgression: return "progression";
    case RuleFamily::kArithmetic: return "arithmetic";
  }
  return "?";
}

std::optional<RuleFamily> parse_family(std::string_view label) {
  for (RuleFamily f : {RuleFamily::kConstant, RuleFamily::kSetPermutation, RuleFamily::kProgression,
                       RuleFamily::kArithmetic}) {
    if (family_label(f) == label) return f;
  }
  return std::nullopt;
}

std::string_view configuration_label(Configuration c) {
  switch (c) {
    case Configuration::kCenter: return "center";
    case Configuration::kTwoEntity: return "two-entity";
    case Configuration::kFourGrid: return "four-grid";
  }
  return "?";
}

std::optional<Configuration> parse_configuration(std::string_view label) {
  for (Configuration c : {Configuration::kCenter, Configuration::kTwoEntity, Configuration::kFourGrid}) {
    if (configuration_label(c) == label) return c;
  }
  return std::nullopt;
}

std::string_view owning_module(RuleFamily f) {
  switch (f) {
    case RuleFamily::kConstant: return "intra";
    case RuleFamily::kSetPermutation: return "inter";
    case RuleFamily::kProgression: return "comp";
    case RuleFamily::kArithmetic: return "binary";
  }
  return "?";
}

const AttributeRule& SyntheticConfig::rule(Attribute a) const {
  switch (a) {
    case Attribute::kType: return type;
    case Attribute::kColor: return color;
    case Attribute::kSize: return size;
    default: throw PreconditionError("synthetic rules cover type, color and size only");
  }
}

AttributeRule& SyntheticConfig::rule(Attribute a) {
  return const_cast<AttributeRule&>(std::as_const(*this).rule(a));
}

namespace {

constexpr std::array<Attribute, 3> kRuled = {Attribute::kType, Attribute::kColor, Attribute::kSize};
constexpr std::array<int, 4> kDeltas = {1, 2, -1, -2};
constexpr std::array<BinaryOp, 2> kOps = {BinaryOp::kAdd, BinaryOp::kSub};

std::size_t slot_of(Attribute a) { return a == Attribute::kType ? 0 : a == Attribute::kColor ? 1 : 2; }

// Value indices of one attribute over the 3x3 matrix, row-major.
using Grid = std::array<int, 9>;

int wrap(int v, int n) { return ((v % n) + n) % n; }

std::array<int, 3> row_of(const Grid& g, int r) { return {g[3 * r], g[3 * r + 1], g[3 * r + 2]}; }

std::set<int> value_set(const std::array<int, 3>& row) { return {row.begin(), row.end()}; }

bool all_distinct(const std::array<int, 3>& row) { return value_set(row).size() == 3; }

// Integer-level relations mirrored from the four modules.
struct Relation {
  std::string_view module;
  bool holds[3];
};

std::vector<Relation> relations(const Grid& g, int domain, bool numeric) {
  std::vector<Relation> out;
  Relation constant{"intra", {}};
  for (int r = 0; r < 3; ++r) {
    const auto row = row_of(g, r);
    constant.holds[r] = row[0] == row[1] && row[1] == row[2];
  }
  out.push_back(constant);
  // Same value set as row 1, compared for rows 2 and 3; row 1 trivially holds.
  Relation same_set{"inter", {true, value_set(row_of(g, 1)) == value_set(row_of(g, 0)),
                              value_set(row_of(g, 2)) == value_set(row_of(g, 0))}};
  out.push_back(same_set);
  for (int delta : kDeltas) {
    Relation progression{"comp", {}};
    for (int r = 0; r < 3; ++r) {
      const auto row = row_of(g, r);
      progression.holds[r] = row[1] == wrap(row[0] + delta, domain) && row[2] == wrap(row[1] + delta, domain);
    }
    out.push_back(progression);
  }
  if (numeric) {
    for (BinaryOp op : kOps) {
      Relation binary{"binary", {}};
      for (int r = 0; r < 3; ++r) {
        const auto row = row_of(g, r);
        binary.holds[r] = apply_op(op, row[0], row[1]) == row[2];
      }
      out.push_back(binary);
    }
  }
  return out;
}

// A relation seen in rows 1 and 2 that row 3 breaks would be an accidental
// pattern the correct panel fails. For a ruled attribute, a second module
// recognizing rows 1 and 2 would let that module stand in for the planted one.
bool acceptable(const Grid& g, int domain, bool numeric, const AttributeRule& rule, bool ruled) {
  const bool constant_rows = row_of(g, 0)[0] == row_of(g, 0)[1] && row_of(g, 0)[1] == row_of(g, 0)[2];
  for (const Relation& rel : relations(g, domain, numeric)) {
    const bool seen = rel.holds[0] && rel.holds[1];
    if (seen && !rel.holds[2]) return false;
    if (ruled && seen && rel.module != owning_module(rule.family)) {
      // Identical panels give equal J_+ and J_∩, so no inter pattern arises.
      if (rel.module == "inter" && constant_rows) continue;
      return false;
    }
  }
  return true;
}

int draw_value(Rng& rng, int lo, int domain) { return lo + static_cast<int>(rng.uniform_index(domain - lo)); }

// Values of `rule` over `domain`; constant values start at `constant_lo`.
Grid draw_grid(const AttributeRule& rule, int domain, int constant_lo, Rng& rng) {
  Grid g{};
  switch (rule.family) {
    case RuleFamily::kConstant: {
      const int v = draw_value(rng, constant_lo, domain);
      g.fill(v);
      break;
    }
    case RuleFamily::kSetPermutation: {
      std::array<int, 3> s{};
      do {
        for (int& v : s) v = draw_value(rng, 0, domain);
      } while (!all_distinct(s));
      for (int r = 0; r < 3; ++r) {
        for (int k = 0; k < 3; ++k) g[3 * r + k] = s[(k + r) % 3];
      }
      break;
    }
    case RuleFamily::kProgression:
      for (int r = 0; r < 3; ++r) {
        const int start = draw_value(rng, 0, domain);
        for (int k = 0; k < 3; ++k) g[3 * r + k] = wrap(start + k * rule.delta, domain);
      }
      break;
    case RuleFamily::kArithmetic:
      for (int r = 0; r < 3; ++r) {
        std::array<int, 3> row{};
        for (;;) {
          row[0] = draw_value(rng, 0, domain);
          row[1] = draw_value(rng, 1, domain);
          const auto c = apply_op(rule.op, row[0], row[1]);
          if (!c || *c < 0 || *c >= domain) continue;
          row[2] = *c;
          if (all_distinct(row)) break;
        }
        for (int k = 0; k < 3; ++k) g[3 * r + k] = row[k];
      }
      break;
  }
  return g;
}

struct Layout {
  std::vector<VariableId> positions;
  // Independent value draws per position; otherwise one draw shared by all.
  bool independent = false;
  std::size_t size_cycle = 0;
};

std::size_t size_cycle_for_width(const AttributeSchema& schema, double width) {
  for (std::size_t i = 0;; ++i) {
    const auto cycle = schema.cycle(Attribute::kSize, i);
    const auto tuple = parse_tuple_label(schema.label(cycle.front()));
    if (tuple && tuple->size() == 2 && std::abs((*tuple)[1] - width) < 1e-9) return i;
  }
}

Layout layout_for(Configuration c, const AttributeSchema& schema) {
  Layout out;
  auto pos = [&](const char* label) { return schema.resolve(Attribute::kPos, label); };
  switch (c) {
    case Configuration::kCenter:
      out.positions = {pos("(0.5,0.5,1.0)")};
      out.size_cycle = size_cycle_for_width(schema, 1.0);
      break;
    case Configuration::kTwoEntity:
      out.positions = {pos("(0.5,0.25,0.5)"), pos("(0.5,0.75,0.5)")};
      out.independent = true;
      out.size_cycle = size_cycle_for_width(schema, 0.5);
      break;
    case Configuration::kFourGrid:
      out.positions = {pos("(0.25,0.25,0.5)"), pos("(0.25,0.75,0.5)"), pos("(0.75,0.25,0.5)"),
                       pos("(0.75,0.75,0.5)")};
      out.size_cycle = size_cycle_for_width(schema, 0.5);
      break;
  }
  return out;
}

// Attribute values of one entity slot: grids for type, color, size.
using SlotValues = std::array<Grid, 3>;

struct Domains {
  std::array<std::span<const VariableId>, 3> vars;
  int size(std::size_t slot) const { return static_cast<int>(vars[slot].size()); }
};

Concept panel_concept(const std::vector<std::array<int, 3>>& entity_values, const Layout& layout,
                      const Domains& domains, const AttributeSchema& schema) {
  std::vector<PanelEntity> entities;
  for (std::size_t p = 0; p < layout.positions.size(); ++p) {
    const auto& v = entity_values[layout.independent ? p : 0];
    entities.push_back({layout.positions[p], domains.vars[0][v[0]], domains.vars[1][v[1]], domains.vars[2][v[2]]});
  }
  return encode_panel(entities, schema);
}

}  // namespace

SyntheticConfig sample_family_config(RuleFamily family, Configuration configuration, std::uint64_t seed) {
  Rng rng(seed ^ 0x5eedc0f1ULL);
  SyntheticConfig config;
  config.configuration = configuration;
  if (family == RuleFamily::kConstant) return config;
  const Attribute target = family == RuleFamily::kArithmetic
                               ? (rng.coin() ? Attribute::kSize : Attribute::kColor)
                               : kRuled[rng.uniform_index(kRuled.size())];
  AttributeRule& rule = config.rule(target);
  rule.family = family;
  rule.delta = kDeltas[rng.uniform_index(kDeltas.size())];
  rule.op = kOps[rng.uniform_index(kOps.size())];
  return config;
}

std::optional<Attribute> target_attribute(const SyntheticConfig& config) {
  std::optional<Attribute> out;
  for (Attribute a : kRuled) {
    if (config.rule(a).family == RuleFamily::kConstant) continue;
    if (out) return std::nullopt;
    out = a;
  }
  return out;
}

RpmInstance generate_synthetic(const SyntheticConfig& config, std::uint64_t seed) {
  for (Attribute a : kRuled) {
    const AttributeRule& rule = config.rule(a);
    if (rule.family == RuleFamily::kArithmetic && a == Attribute::kType) {
      throw PreconditionError("arithmetic rules apply to color and size only");
    }
    if (rule.family == RuleFamily::kProgression && rule.delta == 0) {
      throw PreconditionError("progression delta must be nonzero");
    }
  }
  const AttributeSchema& schema = AttributeSchema::iraven_full();
  const Layout layout = layout_for(config.configuration, schema);
  const Domains domains{{schema.variables(Attribute::kType), schema.variables(Attribute::kColor),
                         schema.cycle(Attribute::kSize, layout.size_cycle)}};
  const std::size_t slots = layout.independent ? layout.positions.size() : 1;
  Rng rng(seed);

  for (std::size_t attempt = 0; attempt < config.max_attempts; ++attempt) {
    std::vector<SlotValues> values(slots);
    bool ok = true;
    for (std::size_t s = 0; s < slots && ok; ++s) {
      for (Attribute a : kRuled) {
        const std::size_t i = slot_of(a);
        const AttributeRule& rule = config.rule(a);
        const bool numeric = a != Attribute::kType;
        // Nonzero constants keep v + v = v and v - v = v from holding.
        values[s][i] = draw_grid(rule, domains.size(i), numeric ? 1 : 0, rng);
        if (!acceptable(values[s][i], domains.size(i), numeric, rule, rule.family != RuleFamily::kConstant)) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;

    auto cell_values = [&](std::size_t cell) {
      std::vector<std::array<int, 3>> out;
      for (const SlotValues& sv : values) out.push_back({sv[0][cell], sv[1][cell], sv[2][cell]});
      return out;
    };
    RpmInstance instance;
    instance.id = "synthetic-" + std::string(configuration_label(config.configuration)) + "-" + std::to_string(seed);
    instance.schema_name = schema.name();
    for (std::size_t cell = 0; cell < 8; ++cell) {
      instance.question.push_back(panel_concept(cell_values(cell), layout, domains, schema));
    }
    const auto correct_values = cell_values(8);
    const Concept correct = panel_concept(correct_values, layout, domains, schema);

    const std::optional<Attribute> target = target_attribute(config);
    std::vector<Concept> distractors;
    std::size_t guard = 0;
    while (distractors.size() < 7 && guard++ < 1000) {
      const Attribute a = target && distractors.size() < 3 ? *target : kRuled[rng.uniform_index(kRuled.size())];
      const std::size_t i = slot_of(a);
      auto perturbed = correct_values;
      const std::size_t s = rng.uniform_index(slots);
      const int old = perturbed[s][i];
      int fresh = old;
      while (fresh == old) fresh = draw_value(rng, 0, domains.size(i));
      perturbed[s][i] = fresh;
      Concept d = panel_concept(perturbed, layout, domains, schema);
      if (d == correct || std::find(distractors.begin(), distractors.end(), d) != distractors.end()) continue;
      distractors.push_back(std::move(d));
    }
    if (distractors.size() < 7) continue;

    const std::size_t truth = rng.uniform_index(8);
    for (std::size_t k = 0, next = 0; k < 8; ++k) {
      instance.answers.push_back(k == truth ? correct : distractors[next++]);
    }
    instance.ground_truth = truth;
    return instance;
  }
  throw GenerationError("no synthetic instance satisfied the rules after " + std::to_string(config.max_attempts) +
                        " attempts");
}

}  // namespace amr
