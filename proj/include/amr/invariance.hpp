#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "amr/concept.hpp"
#include "amr/panel.hpp"
#include "amr/polynomial.hpp"
#include "amr/schema.hpp"

namespace amr {

/// Attribute whose value set is shared by every panel of the row.
struct IntraPattern {
  Attribute attribute;
  friend auto operator<=>(const IntraPattern&, const IntraPattern&) = default;
};

/// Components of pd(J_∩) − pd(J_+) lying in ⟨A_attr⟩; sorted, nonempty.
struct InterPattern {
  Attribute attribute;
  std::vector<Concept> components;
  friend bool operator==(const InterPattern&, const InterPattern&) = default;
  friend std::strong_ordering operator<=>(const InterPattern& a, const InterPattern& b);
};

/// Attribute invariant after shifting J_i by f_next^{k-i}(·|delta).
struct CompPattern {
  Attribute attribute;
  int delta = 1;
  friend auto operator<=>(const CompPattern&, const CompPattern&) = default;
};

enum class BinaryOp : std::uint8_t { kAdd, kSub, kMul, kDiv };

char op_symbol(BinaryOp op);
std::optional<BinaryOp> parse_op(char symbol);
/// Integer evaluation; kDiv is defined only for exact division by nonzero.
std::optional<int> apply_op(BinaryOp op, int lhs, int rhs);

/// g(J_1) ⊘_1 ... ⊘_{k-2} g(J_{k-1}) = g(J_k), evaluated left to right.
struct BinaryPattern {
  Attribute attribute;
  std::vector<BinaryOp> ops;
  friend auto operator<=>(const BinaryPattern&, const BinaryPattern&) = default;
};

using Pattern = std::variant<IntraPattern, InterPattern, CompPattern, BinaryPattern>;

Attribute pattern_attribute(const Pattern& p);
std::string format_pattern(const Pattern& p, const AttributeSchema& schema);

struct TaggedPattern {
  Pattern pattern;
  ViewTag view;
  friend bool operator==(const TaggedPattern&, const TaggedPattern&) = default;
  friend std::strong_ordering operator<=>(const TaggedPattern& a, const TaggedPattern& b);
};

std::string format_tagged(const TaggedPattern& p, const AttributeSchema& schema);

using PatternSet = std::set<Pattern>;
using TaggedPatternSet = std::set<TaggedPattern>;

struct ModuleSet {
  bool intra = true;
  bool inter = true;
  bool comp = true;
  bool binary = true;
  friend bool operator==(const ModuleSet&, const ModuleSet&) = default;
};

/// Parses a comma-separated subset of {intra, inter, comp, binary}; "none"
/// and the empty string disable everything.
ModuleSet parse_modules(std::string_view text);
std::string format_modules(const ModuleSet& m);

struct SolverConfig {
  std::vector<int> deltas = {1, 2, -1, -2};
  std::vector<BinaryOp> binary_ops = {BinaryOp::kAdd, BinaryOp::kSub};
  ModuleSet modules;
  friend bool operator==(const SolverConfig&, const SolverConfig&) = default;
};

/// Throws PreconditionError on a zero delta.
void validate_config(const SolverConfig& config);

/// Schema, configuration and a shared decomposition memo. Safe to use from
/// several threads at once.
class ReasoningContext {
 public:
  ReasoningContext(const AttributeSchema& schema, SolverConfig config);

  const AttributeSchema& schema() const { return *schema_; }
  const SolverConfig& config() const { return config_; }
  /// pd(J); empty for the zero and unit ideals.
  const std::vector<Concept>& pd(const Concept& J) const;

 private:
  const AttributeSchema* schema_;
  SolverConfig config_;
  mutable DecompositionCache cache_;
};

/// Set intersection of two component lists (both sorted).
std::vector<Concept> common_components(std::span<const Concept> a, std::span<const Concept> b);
/// Set difference a − b of two component lists (both sorted).
std::vector<Concept> component_difference(std::span<const Concept> a, std::span<const Concept> b);

PatternSet p_intra(std::span<const Concept> row, const ReasoningContext& ctx);
PatternSet p_inter(std::span<const Concept> row, const ReasoningContext& ctx);
PatternSet p_comp(std::span<const Concept> row, const ReasoningContext& ctx);
PatternSet p_binary(std::span<const Concept> row, const ReasoningContext& ctx);
/// Union of the enabled modules.
PatternSet p_row(std::span<const Concept> row, const ReasoningContext& ctx);

/// Patterns of row `row_index` (0-based) of every view of M, tagged by view.
/// Requires that row to be nonempty.
TaggedPatternSet p_all_row(const ConceptMatrix& M, std::size_t row_index, const ReasoningContext& ctx);

TaggedPatternSet intersect_patterns(const TaggedPatternSet& a, const TaggedPatternSet& b);

struct SelectionReport {
  std::string instance_id;
  std::vector<std::size_t> com_pattern;
  std::size_t chosen_index = 0;
  std::size_t tie_size = 0;
  std::vector<TaggedPattern> row_patterns;  // P_{1,2}
  std::vector<std::vector<TaggedPattern>> matched;  // per candidate

  std::vector<std::size_t> maximizers() const;
  friend bool operator==(const SelectionReport&, const SelectionReport&) = default;
};

SelectionReport select_answer(const RpmInstance& instance, const ReasoningContext& ctx);

struct SelectionOutcome {
  SelectionReport report;
  std::size_t ground_truth = 0;
};

/// (1/N) Σ [ground truth among maximizers] / n_i. Requires a nonempty batch.
Rational weighted_accuracy(std::span<const SelectionOutcome> outcomes);

}  // namespace amr
