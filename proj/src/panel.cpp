#include "amr/panel.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "amr/error.hpp"

namespace amr {

namespace {

void check_attribute(VariableId v, Attribute expected, const AttributeSchema& schema) {
  if (v.index >= schema.size() || schema.attribute_of(v) != expected) {
    throw EncodingError("variable " + std::to_string(v.index) + " is not a " +
                        std::string(attribute_label(expected)) + " variable");
  }
}

// Replaces the number factor of m, if any, by `num`.
Monomial with_number(const Monomial& m, VariableId num, const AttributeSchema& schema) {
  std::vector<Monomial::Factor> factors;
  for (const auto& f : m.factors()) {
    if (schema.attribute_of(f.var) != Attribute::kNum) factors.push_back(f);
  }
  factors.push_back({num, 1});
  return Monomial::from_factors(std::move(factors));
}

std::optional<VariableId> attribute_variable(const Monomial& m, Attribute a, const AttributeSchema& schema) {
  std::optional<VariableId> found;
  for (const auto& f : m.factors()) {
    if (schema.attribute_of(f.var) != a) continue;
    if (found) return std::nullopt;
    found = f.var;
  }
  return found;
}

}  // namespace

Concept encode_panel(std::span<const PanelEntity> entities, const AttributeSchema& schema) {
  if (entities.empty()) throw EncodingError("panel has no entities");
  const auto num = schema.num_variable(entities.size());
  if (!num) {
    throw EncodingError("panel has " + std::to_string(entities.size()) + " entities; the num alphabet of '" +
                        schema.name() + "' stops at " + std::to_string(schema.variables(Attribute::kNum).size()));
  }
  std::set<VariableId> positions;
  std::vector<Monomial> gens;
  for (const PanelEntity& e : entities) {
    check_attribute(e.pos, Attribute::kPos, schema);
    check_attribute(e.type, Attribute::kType, schema);
    check_attribute(e.color, Attribute::kColor, schema);
    check_attribute(e.size, Attribute::kSize, schema);
    if (!positions.insert(e.pos).second) {
      throw EncodingError("two entities share position '" + schema.label(e.pos) + "'");
    }
    gens.push_back(Monomial::product_of({*num, e.pos, e.type, e.color, e.size}));
  }
  return Concept(std::move(gens));
}

std::vector<PanelEntity> decode_panel(const Concept& J, const AttributeSchema& schema) {
  std::vector<PanelEntity> out;
  for (const Monomial& m : J.mingen()) {
    std::array<VariableId, 5> vars{};
    for (Attribute a : kAllAttributes) {
      auto v = attribute_variable(m, a, schema);
      if (!v) {
        throw EncodingError("generator does not carry exactly one " + std::string(attribute_label(a)) +
                            " variable");
      }
      vars[static_cast<std::size_t>(a)] = *v;
    }
    out.push_back({vars[1], vars[2], vars[3], vars[4]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Concept f_next(const Concept& J, int delta, const AttributeSchema& schema) {
  std::vector<Monomial> gens;
  gens.reserve(J.size());
  for (const Monomial& m : J.mingen()) {
    std::vector<Monomial::Factor> factors;
    factors.reserve(m.support_size());
    for (const auto& f : m.factors()) factors.push_back({schema.shift(f.var, delta), f.exponent});
    gens.push_back(Monomial::from_factors(std::move(factors)));
  }
  return Concept(std::move(gens));
}

Concept f_next_iterated(const Concept& J, int delta, std::size_t times, const AttributeSchema& schema) {
  Concept out = J;
  for (std::size_t i = 0; i < times; ++i) out = f_next(out, delta, schema);
  return out;
}

std::size_t g_num(const Concept& J) { return J.size(); }

std::optional<VariableId> shared_variable(const Concept& J, Attribute a, const AttributeSchema& schema) {
  if (J.is_zero()) return std::nullopt;
  std::optional<VariableId> shared;
  for (const Monomial& m : J.mingen()) {
    auto v = attribute_variable(m, a, schema);
    if (!v || (shared && *shared != *v)) return std::nullopt;
    shared = v;
  }
  return shared;
}

std::optional<int> g_color(const Concept& J, const AttributeSchema& schema) {
  auto v = shared_variable(J, Attribute::kColor, schema);
  return v ? schema.numeric_index(*v) : std::nullopt;
}

std::optional<int> g_size(const Concept& J, const AttributeSchema& schema) {
  auto v = shared_variable(J, Attribute::kSize, schema);
  return v ? schema.numeric_index(*v) : std::nullopt;
}

std::optional<int> g_value(Attribute a, const Concept& J, const AttributeSchema& schema) {
  switch (a) {
    case Attribute::kNum:
      return static_cast<int>(g_num(J));
    case Attribute::kColor:
      return g_color(J, schema);
    case Attribute::kSize:
      return g_size(J, schema);
    default:
      return std::nullopt;
  }
}

std::string format_view(const ViewTag& tag, const AttributeSchema& schema) {
  switch (tag.kind) {
    case ViewTag::Kind::kFull:
      return "full";
    case ViewTag::Kind::kBar:
      return "bar(" + schema.label(tag.position) + ")";
    case ViewTag::Kind::kHat:
      return "hat(" + schema.label(tag.position) + ")";
  }
  return "?";
}

std::span<const Concept> ConceptMatrix::row(std::size_t r) const {
  const std::size_t begin = std::min(cells.size(), 3 * r);
  const std::size_t end = std::min(cells.size(), 3 * r + 3);
  return std::span<const Concept>(cells).subspan(begin, end - begin);
}

std::vector<VariableId> com_pos(const ConceptMatrix& M, const AttributeSchema& schema) {
  std::vector<VariableId> out;
  if (M.cells.empty()) return out;
  for (VariableId p : schema.variables(Attribute::kPos)) {
    const bool unique_everywhere = std::all_of(M.cells.begin(), M.cells.end(), [&](const Concept& cell) {
      return std::count_if(cell.mingen().begin(), cell.mingen().end(),
                           [&](const Monomial& m) { return m.has_variable(p); }) == 1;
    });
    if (unique_everywhere) out.push_back(p);
  }
  return out;
}

Concept renormalize_count(const Concept& J, const AttributeSchema& schema) {
  if (J.is_zero()) return J;
  const auto num = schema.num_variable(J.size());
  if (!num) throw EncodingError("entity count exceeds the num alphabet");
  std::vector<Monomial> gens;
  for (const Monomial& m : J.mingen()) gens.push_back(with_number(m, *num, schema));
  return Concept(std::move(gens));
}

std::vector<ConceptMatrix> split_views(const ConceptMatrix& M, const AttributeSchema& schema) {
  std::vector<ConceptMatrix> views{{M.cells, ViewTag::full()}};
  std::vector<ConceptMatrix> bars;
  std::vector<ConceptMatrix> hats;
  for (VariableId p : com_pos(M, schema)) {
    ConceptMatrix bar{{}, ViewTag::bar(p)};
    ConceptMatrix hat{{}, ViewTag::hat(p)};
    bool hat_empty = false;
    for (const Concept& cell : M.cells) {
      std::vector<Monomial> with_p;
      std::vector<Monomial> without_p;
      for (const Monomial& m : cell.mingen()) (m.has_variable(p) ? with_p : without_p).push_back(m);
      bar.cells.push_back(renormalize_count(Concept(std::move(with_p)), schema));
      hat_empty = hat_empty || without_p.empty();
      hat.cells.push_back(renormalize_count(Concept(std::move(without_p)), schema));
    }
    bars.push_back(std::move(bar));
    if (!hat_empty) hats.push_back(std::move(hat));
  }
  std::vector<ConceptMatrix> kept_hats;
  for (ConceptMatrix& hat : hats) {
    auto same_cells = [&](const ConceptMatrix& other) { return other.cells == hat.cells; };
    if (std::none_of(bars.begin(), bars.end(), same_cells) &&
        std::none_of(kept_hats.begin(), kept_hats.end(), same_cells)) {
      kept_hats.push_back(std::move(hat));
    }
  }
  for (ConceptMatrix& bar : bars) {
    const VariableId p = bar.view.position;
    views.push_back(std::move(bar));
    for (ConceptMatrix& hat : kept_hats) {
      if (hat.view.position == p) views.push_back(std::move(hat));
    }
  }
  return views;
}

ConceptMatrix RpmInstance::with_candidate(std::size_t i) const {
  if (i >= answers.size()) throw PreconditionError("candidate index out of range");
  ConceptMatrix M{question, ViewTag::full()};
  M.cells.push_back(answers[i]);
  return M;
}

void validate_instance(const RpmInstance& instance) {
  if (instance.question.size() != 8) {
    throw PreconditionError("instance '" + instance.id + "' has " + std::to_string(instance.question.size()) +
                            " question panels, expected 8");
  }
  if (instance.answers.size() != 8) {
    throw PreconditionError("instance '" + instance.id + "' has " + std::to_string(instance.answers.size()) +
                            " answer panels, expected 8");
  }
  for (const auto* cells : {&instance.question, &instance.answers}) {
    for (const Concept& c : *cells) {
      if (!c.is_basic()) throw PreconditionError("instance '" + instance.id + "' has a non-basic panel");
    }
  }
  if (instance.ground_truth && *instance.ground_truth >= 8) {
    throw PreconditionError("instance '" + instance.id + "' has ground truth outside 0..7");
  }
}

}  // namespace amr
