#include "amr/generation.hpp"

#include <algorithm>
#include <map>

#include "amr/error.hpp"
#include "amr/rng.hpp"

namespace amr {

namespace {

void require_row3(std::span<const Concept> row3) {
  if (row3.size() != 2) throw PreconditionError("inverse modules take the first two panels of the third row");
}

// The last qualifying component wins, as in the loop of the inverse modules.
Concept last_within(std::span<const Concept> components, Attribute a, const AttributeSchema& schema) {
  Concept out;
  for (const Concept& I : components) {
    if (schema.within_attribute(I, a)) out = I;
  }
  return out;
}

}  // namespace

Concept inv_intra(Attribute a, std::span<const Concept> row3, const ReasoningContext& ctx) {
  require_row3(row3);
  auto shared = common_components(ctx.pd(sum(row3[0], row3[1])), ctx.pd(intersect(row3[0], row3[1])));
  if (a != Attribute::kNum && a != Attribute::kPos) {
    std::erase_if(shared, [](const Concept& I) { return I.size() != 1; });
  }
  return last_within(shared, a, ctx.schema());
}

Concept inv_inter(Attribute a, std::span<const Concept> components, std::span<const Concept> row3,
                  const ReasoningContext& ctx) {
  require_row3(row3);
  std::vector<Concept> expected(components.begin(), components.end());
  std::sort(expected.begin(), expected.end());
  std::vector<Concept> seen;
  for (const Concept& I :
       component_difference(ctx.pd(intersect(row3[0], row3[1])), ctx.pd(sum(row3[0], row3[1])))) {
    if (ctx.schema().within_attribute(I, a)) seen.push_back(I);
  }
  const auto missing = component_difference(expected, seen);
  if (missing.empty() || common_components(expected, seen).empty()) return Concept::zero();
  return sum(missing);
}

Concept inv_comp(Attribute a, int delta, std::span<const Concept> row3, const ReasoningContext& ctx) {
  require_row3(row3);
  const auto& first = ctx.pd(f_next_iterated(row3[0], delta, 2, ctx.schema()));
  const auto& second = ctx.pd(f_next(row3[1], delta, ctx.schema()));
  return last_within(common_components(first, second), a, ctx.schema());
}

Concept inv_binary(Attribute a, std::span<const BinaryOp> ops, std::span<const Concept> row3,
                   const ReasoningContext& ctx) {
  require_row3(row3);
  const AttributeSchema& schema = ctx.schema();
  if (ops.size() != 1) return Concept::zero();
  const auto lhs = g_value(a, row3[0], schema);
  const auto rhs = g_value(a, row3[1], schema);
  if (!lhs || !rhs) return Concept::zero();
  const auto t = apply_op(ops[0], *lhs, *rhs);
  if (!t || *t < 0) return Concept::zero();
  if (a == Attribute::kNum) {
    const auto v = schema.num_variable(static_cast<std::size_t>(*t));
    return v ? Concept::principal(Monomial::variable(*v)) : Concept::zero();
  }
  const auto first = shared_variable(row3[0], a, schema);
  const auto second = shared_variable(row3[1], a, schema);
  const auto cycle = schema.cycle_index(*first);
  if (!cycle || schema.cycle_index(*second) != cycle) return Concept::zero();
  const auto seq = schema.cycle(a, *cycle);
  if (static_cast<std::size_t>(*t) >= seq.size()) return Concept::zero();
  return Concept::principal(Monomial::variable(seq[static_cast<std::size_t>(*t)]));
}

Concept inverse(const Pattern& p, std::span<const Concept> row3, const ReasoningContext& ctx) {
  if (const auto* intra = std::get_if<IntraPattern>(&p)) return inv_intra(intra->attribute, row3, ctx);
  if (const auto* inter = std::get_if<InterPattern>(&p)) {
    return inv_inter(inter->attribute, inter->components, row3, ctx);
  }
  if (const auto* comp = std::get_if<CompPattern>(&p)) return inv_comp(comp->attribute, comp->delta, row3, ctx);
  const auto& bin = std::get<BinaryPattern>(p);
  return inv_binary(bin.attribute, bin.ops, row3, ctx);
}

GeneratedAnswer generate_answer(const ConceptMatrix& M, const ReasoningContext& ctx, std::uint64_t seed) {
  const AttributeSchema& schema = ctx.schema();
  if (M.cells.size() != 8) throw PreconditionError("answer generation needs the 8 question panels");
  const auto positions = com_pos(M, schema);
  if (positions.empty()) throw GenerationError("the question panels share no common position");
  const auto num = schema.num_variable(positions.size());
  if (!num) throw GenerationError("too many common positions for the num alphabet");

  std::map<VariableId, ConceptMatrix> bars;
  for (ConceptMatrix& view : split_views(M, schema)) {
    if (view.view.kind == ViewTag::Kind::kBar) bars.emplace(view.view.position, std::move(view));
  }

  Rng rng(seed);
  GeneratedAnswer answer;
  answer.seed = seed;
  std::vector<Monomial> picks;
  for (VariableId p : positions) {
    const ConceptMatrix& bar = bars.at(p);
    const PatternSet first = p_row(bar.row(0), ctx);
    const PatternSet second = p_row(bar.row(1), ctx);
    Concept I = Concept::principal(Monomial::product_of({*num, p}));
    for (const Pattern& pattern : first) {
      if (second.count(pattern) == 0) continue;
      // Number and position are fixed by the initializer in every Bar view.
      const Attribute a = pattern_attribute(pattern);
      if (a == Attribute::kNum || a == Attribute::kPos) continue;
      const Concept implied = inverse(pattern, bar.row(2), ctx);
      if (!implied.is_zero()) I = intersect(I, implied);
    }
    const auto gens = I.mingen();
    std::size_t k = 0;
    if (gens.size() > 1) {
      k = rng.uniform_index(gens.size());
      answer.random_choices.push_back({p, std::nullopt, {gens.begin(), gens.end()}, gens[k]});
    }
    picks.push_back(gens[k]);
  }

  std::vector<Monomial> filled;
  for (std::size_t i = 0; i < picks.size(); ++i) {
    Monomial m = picks[i];
    for (Attribute a : {Attribute::kType, Attribute::kColor, Attribute::kSize}) {
      const bool present = std::any_of(m.factors().begin(), m.factors().end(),
                                       [&](const Monomial::Factor& f) { return schema.attribute_of(f.var) == a; });
      if (present) continue;
      const auto vars = schema.variables(a);
      std::vector<Monomial> candidates;
      for (VariableId v : vars) candidates.push_back(Monomial::variable(v));
      std::size_t k = 0;
      if (candidates.size() > 1) k = rng.uniform_index(candidates.size());
      if (candidates.size() > 1) answer.random_choices.push_back({positions[i], a, candidates, candidates[k]});
      m = m * candidates[k];
    }
    filled.push_back(std::move(m));
  }
  answer.ideal = Concept(std::move(filled));
  return answer;
}

namespace {

VariableId position_of(const Monomial& m, const AttributeSchema& schema) {
  std::optional<VariableId> pos;
  for (const auto& f : m.factors()) {
    if (schema.attribute_of(f.var) != Attribute::kPos) continue;
    if (pos) throw PreconditionError("an entity carries two position variables");
    pos = f.var;
  }
  if (!pos) throw PreconditionError("an entity carries no position variable");
  return *pos;
}

std::map<VariableId, Monomial> by_position(const Concept& J, const AttributeSchema& schema) {
  std::map<VariableId, Monomial> out;
  for (const Monomial& m : J.mingen()) {
    if (!out.emplace(position_of(m, schema), m).second) {
      throw PreconditionError("two entities share a position");
    }
  }
  return out;
}

std::vector<VariableId> attribute_part(const Monomial& m, Attribute a, const AttributeSchema& schema) {
  std::vector<VariableId> out;
  for (const auto& f : m.factors()) {
    if (schema.attribute_of(f.var) == a) out.push_back(f.var);
  }
  return out;
}

}  // namespace

SimilarityReport similarity(const Concept& J, const Concept& J_prime, const AttributeSchema& schema) {
  const auto left = by_position(J, schema);
  const auto right = by_position(J_prime, schema);
  SimilarityReport report;
  Rational score(0);
  for (const auto& [pos, m] : left) {
    auto it = right.find(pos);
    if (it == right.end()) {
      report.s2_only.push_back(m);
      continue;
    }
    report.s1_pairs.push_back({m, it->second});
    int equal = 0;
    for (Attribute a : {Attribute::kPos, Attribute::kType, Attribute::kColor, Attribute::kSize}) {
      if (attribute_part(m, a, schema) == attribute_part(it->second, a, schema)) ++equal;
    }
    score += Rational(equal, 4);
  }
  for (const auto& [pos, m] : right) {
    if (left.count(pos) == 0) report.s3_only.push_back(m);
  }
  const std::size_t total = report.s1_pairs.size() + report.s2_only.size() + report.s3_only.size();
  report.phi = total == 0 ? Rational(1) : score / Rational(static_cast<unsigned long>(total));
  report.phi.canonicalize();
  return report;
}

}  // namespace amr
