#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "amr/invariance.hpp"
#include "amr/panel.hpp"
#include "amr/schema.hpp"

namespace amr {

enum class RuleFamily : std::uint8_t { kConstant, kSetPermutation, kProgression, kArithmetic };
/// center: one entity filling the panel. two-entity: two half-width entities
/// with independent value draws. four-grid: 2x2 grid, all entities of a
/// panel identical.
enum class Configuration : std::uint8_t { kCenter, kTwoEntity, kFourGrid };

std::string_view family_label(RuleFamily f);
std::optional<RuleFamily> parse_family(std::string_view label);
std::string_view configuration_label(Configuration c);
std::optional<Configuration> parse_configuration(std::string_view label);

/// The module that recognizes a family: intra, inter, comp, binary.
std::string_view owning_module(RuleFamily f);

struct AttributeRule {
  RuleFamily family = RuleFamily::kConstant;
  /// Progression step.
  int delta = 1;
  /// Arithmetic operator; only kAdd and kSub are generated.
  BinaryOp op = BinaryOp::kAdd;

  friend bool operator==(const AttributeRule&, const AttributeRule&) = default;
};

/// Rules for type, color and size; number and position stay fixed by the
/// configuration. Instances always use the iraven-full schema.
struct SyntheticConfig {
  Configuration configuration = Configuration::kCenter;
  AttributeRule type;
  AttributeRule color;
  AttributeRule size;
  /// Resampling bound before GenerationError.
  std::size_t max_attempts = 10000;

  const AttributeRule& rule(Attribute a) const;
  AttributeRule& rule(Attribute a);

  friend bool operator==(const SyntheticConfig&, const SyntheticConfig&) = default;
};

/// `family` on one attribute drawn from `seed` (color or size for
/// arithmetic), constant elsewhere; delta from {1, 2, -1, -2}, op from {+, -}.
SyntheticConfig sample_family_config(RuleFamily family, Configuration configuration, std::uint64_t seed);

/// The attribute carrying the non-constant rule, if exactly one does.
std::optional<Attribute> target_attribute(const SyntheticConfig& config);

/// Three rows obeying the planted rules, plus 8 distinct candidates: the
/// correct panel at a random index and 7 distractors that each change one
/// attribute of one entity slot (at least 3 change the non-constant
/// attribute when there is one). Rows are resampled while an integer-level check finds a
/// relation (constant, same value set, cyclic progression by ±1/±2, + or -)
/// holding in rows 1 and 2 but not in row 3, or a relation recognized by a
/// module other than the planted one holding on a ruled attribute.
/// Deterministic in (config, seed). Throws PreconditionError for arithmetic
/// on type or a zero delta, GenerationError once max_attempts is exhausted.
RpmInstance generate_synthetic(const SyntheticConfig& config, std::uint64_t seed);

}  // namespace amr
