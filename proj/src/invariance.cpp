#include "amr/invariance.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "amr/error.hpp"
#include "amr/text_format.hpp"

namespace amr {

std::strong_ordering operator<=>(const InterPattern& a, const InterPattern& b) {
  if (auto c = a.attribute <=> b.attribute; c != 0) return c;
  return std::lexicographical_compare_three_way(a.components.begin(), a.components.end(), b.components.begin(),
                                                b.components.end());
}

namespace {

std::strong_ordering compare_patterns(const Pattern& a, const Pattern& b) {
  if (a.index() != b.index()) return a.index() <=> b.index();
  return std::visit(
      [&](const auto& x) -> std::strong_ordering {
        using T = std::decay_t<decltype(x)>;
        return x <=> std::get<T>(b);
      },
      a);
}

}  // namespace

std::strong_ordering operator<=>(const TaggedPattern& a, const TaggedPattern& b) {
  if (auto c = compare_patterns(a.pattern, b.pattern); c != 0) return c;
  return a.view <=> b.view;
}

char op_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd:
      return '+';
    case BinaryOp::kSub:
      return '-';
    case BinaryOp::kMul:
      return '*';
    case BinaryOp::kDiv:
      return '/';
  }
  return '?';
}

std::optional<BinaryOp> parse_op(char symbol) {
  switch (symbol) {
    case '+':
      return BinaryOp::kAdd;
    case '-':
      return BinaryOp::kSub;
    case '*':
      return BinaryOp::kMul;
    case '/':
      return BinaryOp::kDiv;
    default:
      return std::nullopt;
  }
}

std::optional<int> apply_op(BinaryOp op, int lhs, int rhs) {
  switch (op) {
    case BinaryOp::kAdd:
      return lhs + rhs;
    case BinaryOp::kSub:
      return lhs - rhs;
    case BinaryOp::kMul:
      return lhs * rhs;
    case BinaryOp::kDiv:
      if (rhs == 0 || lhs % rhs != 0) return std::nullopt;
      return lhs / rhs;
  }
  return std::nullopt;
}

Attribute pattern_attribute(const Pattern& p) {
  return std::visit([](const auto& x) { return x.attribute; }, p);
}

std::string format_pattern(const Pattern& p, const AttributeSchema& schema) {
  std::ostringstream out;
  const std::string attr(attribute_label(pattern_attribute(p)));
  if (std::holds_alternative<IntraPattern>(p)) {
    out << "intra(" << attr << ")";
  } else if (const auto* inter = std::get_if<InterPattern>(&p)) {
    out << "inter(" << attr << ", {";
    for (std::size_t i = 0; i < inter->components.size(); ++i) {
      out << (i ? ", " : "") << format_concept(inter->components[i], schema.names());
    }
    out << "})";
  } else if (const auto* comp = std::get_if<CompPattern>(&p)) {
    out << "comp(" << attr << ", " << comp->delta << ")";
  } else {
    const auto& bin = std::get<BinaryPattern>(p);
    out << "binary(" << attr << ", ";
    for (BinaryOp op : bin.ops) out << op_symbol(op);
    out << ")";
  }
  return out.str();
}

std::string format_tagged(const TaggedPattern& p, const AttributeSchema& schema) {
  return format_pattern(p.pattern, schema) + " @ " + format_view(p.view, schema);
}

ModuleSet parse_modules(std::string_view text) {
  ModuleSet m{false, false, false, false};
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item == "intra") m.intra = true;
    else if (item == "inter") m.inter = true;
    else if (item == "comp") m.comp = true;
    else if (item == "binary") m.binary = true;
    else if (item == "all") m = ModuleSet{};
    else if (!item.empty() && item != "none") throw PreconditionError("unknown module '" + std::string(item) + "'");
    start = end + 1;
  }
  return m;
}

std::string format_modules(const ModuleSet& m) {
  std::vector<std::string> names;
  if (m.intra) names.emplace_back("intra");
  if (m.inter) names.emplace_back("inter");
  if (m.comp) names.emplace_back("comp");
  if (m.binary) names.emplace_back("binary");
  if (names.empty()) return "none";
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ",") + n;
  return out;
}

void validate_config(const SolverConfig& config) {
  if (std::find(config.deltas.begin(), config.deltas.end(), 0) != config.deltas.end()) {
    throw PreconditionError("delta 0 is not a valid f_next step");
  }
}

ReasoningContext::ReasoningContext(const AttributeSchema& schema, SolverConfig config)
    : schema_(&schema), config_(std::move(config)) {
  validate_config(config_);
}

const std::vector<Concept>& ReasoningContext::pd(const Concept& J) const {
  static const std::vector<Concept> kNone;
  if (J.is_zero() || J.is_unit()) return kNone;
  return cache_.components(J);
}

std::vector<Concept> common_components(std::span<const Concept> a, std::span<const Concept> b) {
  std::vector<Concept> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Concept> component_difference(std::span<const Concept> a, std::span<const Concept> b) {
  std::vector<Concept> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

namespace {

void require_row(std::span<const Concept> row, std::size_t min_length) {
  if (row.size() < min_length) {
    throw PreconditionError("row has " + std::to_string(row.size()) + " panels, need at least " +
                            std::to_string(min_length));
  }
}

std::vector<Concept> row_sum_pd(std::span<const Concept> row, const ReasoningContext& ctx) {
  return ctx.pd(sum(row));
}

std::vector<Concept> row_intersection_pd(std::span<const Concept> row, const ReasoningContext& ctx) {
  return ctx.pd(intersect(row));
}

bool any_within(std::span<const Concept> components, Attribute a, const AttributeSchema& schema) {
  return std::any_of(components.begin(), components.end(),
                     [&](const Concept& I) { return schema.within_attribute(I, a); });
}

}  // namespace

PatternSet p_intra(std::span<const Concept> row, const ReasoningContext& ctx) {
  require_row(row, 2);
  const auto shared = common_components(row_sum_pd(row, ctx), row_intersection_pd(row, ctx));
  PatternSet out;
  for (Attribute a : kAllAttributes) {
    if (any_within(shared, a, ctx.schema())) out.insert(IntraPattern{a});
  }
  return out;
}

PatternSet p_inter(std::span<const Concept> row, const ReasoningContext& ctx) {
  require_row(row, 2);
  const auto fresh = component_difference(row_intersection_pd(row, ctx), row_sum_pd(row, ctx));
  PatternSet out;
  for (Attribute a : kAllAttributes) {
    std::vector<Concept> D;
    for (const Concept& I : fresh) {
      if (ctx.schema().within_attribute(I, a)) D.push_back(I);
    }
    if (!D.empty()) out.insert(InterPattern{a, std::move(D)});
  }
  return out;
}

PatternSet p_comp(std::span<const Concept> row, const ReasoningContext& ctx) {
  require_row(row, 2);
  const std::size_t k = row.size();
  PatternSet out;
  for (int delta : ctx.config().deltas) {
    std::vector<Concept> shared;
    for (std::size_t i = 0; i < k; ++i) {
      const Concept shifted = f_next_iterated(row[i], delta, k - 1 - i, ctx.schema());
      const auto& components = ctx.pd(shifted);
      shared = i == 0 ? components : common_components(shared, components);
      if (shared.empty()) break;
    }
    for (Attribute a : kAllAttributes) {
      if (any_within(shared, a, ctx.schema())) out.insert(CompPattern{a, delta});
    }
  }
  return out;
}

namespace {

// Every operator tuple of the given length, in lexicographic order.
std::vector<std::vector<BinaryOp>> op_tuples(std::span<const BinaryOp> ops, std::size_t length) {
  std::vector<std::vector<BinaryOp>> out{{}};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<std::vector<BinaryOp>> next;
    for (const auto& prefix : out) {
      for (BinaryOp op : ops) {
        next.push_back(prefix);
        next.back().push_back(op);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

PatternSet p_binary(std::span<const Concept> row, const ReasoningContext& ctx) {
  require_row(row, 3);
  PatternSet out;
  const auto tuples = op_tuples(ctx.config().binary_ops, row.size() - 2);
  for (Attribute a : {Attribute::kNum, Attribute::kColor, Attribute::kSize}) {
    std::vector<int> values;
    for (const Concept& J : row) {
      auto g = g_value(a, J, ctx.schema());
      if (!g) break;
      values.push_back(*g);
    }
    if (values.size() != row.size()) continue;
    for (const auto& ops : tuples) {
      std::optional<int> acc = values[0];
      for (std::size_t i = 0; i < ops.size() && acc; ++i) acc = apply_op(ops[i], *acc, values[i + 1]);
      if (acc && *acc == values.back()) out.insert(BinaryPattern{a, ops});
    }
  }
  return out;
}

PatternSet p_row(std::span<const Concept> row, const ReasoningContext& ctx) {
  const ModuleSet& m = ctx.config().modules;
  PatternSet out;
  if (m.intra) out.merge(p_intra(row, ctx));
  if (m.inter) out.merge(p_inter(row, ctx));
  if (m.comp) out.merge(p_comp(row, ctx));
  if (m.binary && row.size() >= 3) out.merge(p_binary(row, ctx));
  return out;
}

TaggedPatternSet p_all_row(const ConceptMatrix& M, std::size_t row_index, const ReasoningContext& ctx) {
  if (M.row(row_index).empty()) throw PreconditionError("row " + std::to_string(row_index + 1) + " is empty");
  TaggedPatternSet out;
  for (const ConceptMatrix& view : split_views(M, ctx.schema())) {
    for (const Pattern& p : p_row(view.row(row_index), ctx)) out.insert({p, view.view});
  }
  return out;
}

TaggedPatternSet intersect_patterns(const TaggedPatternSet& a, const TaggedPatternSet& b) {
  TaggedPatternSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::vector<std::size_t> SelectionReport::maximizers() const {
  std::vector<std::size_t> out;
  if (com_pattern.empty()) return out;
  const std::size_t best = *std::max_element(com_pattern.begin(), com_pattern.end());
  for (std::size_t i = 0; i < com_pattern.size(); ++i) {
    if (com_pattern[i] == best) out.push_back(i);
  }
  return out;
}

SelectionReport select_answer(const RpmInstance& instance, const ReasoningContext& ctx) {
  validate_instance(instance);
  const ConceptMatrix question = instance.question_matrix();
  const TaggedPatternSet p12 = intersect_patterns(p_all_row(question, 0, ctx), p_all_row(question, 1, ctx));

  SelectionReport report;
  report.instance_id = instance.id;
  report.row_patterns.assign(p12.begin(), p12.end());
  for (std::size_t i = 0; i < instance.answers.size(); ++i) {
    const TaggedPatternSet p3 = p_all_row(instance.with_candidate(i), 2, ctx);
    const TaggedPatternSet matched = intersect_patterns(p12, p3);
    report.com_pattern.push_back(matched.size());
    report.matched.emplace_back(matched.begin(), matched.end());
  }
  const auto best = report.maximizers();
  report.chosen_index = best.front();
  report.tie_size = best.size();
  return report;
}

Rational weighted_accuracy(std::span<const SelectionOutcome> outcomes) {
  if (outcomes.empty()) throw PreconditionError("weighted accuracy of an empty batch");
  Rational total(0);
  for (const SelectionOutcome& o : outcomes) {
    const auto best = o.report.maximizers();
    if (std::find(best.begin(), best.end(), o.ground_truth) != best.end()) {
      total += Rational(1, static_cast<unsigned long>(best.size()));
    }
  }
  total /= Rational(static_cast<unsigned long>(outcomes.size()));
  total.canonicalize();
  return total;
}

}  // namespace amr
