#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "amr/concept.hpp"
#include "amr/monomial.hpp"
#include "amr/text_format.hpp"

namespace amr {

enum class Attribute : std::uint8_t { kNum, kPos, kType, kColor, kSize };

inline constexpr std::array<Attribute, 5> kAllAttributes = {Attribute::kNum, Attribute::kPos, Attribute::kType,
                                                            Attribute::kColor, Attribute::kSize};

std::string_view attribute_label(Attribute a);
/// Accepts "num", "pos", "type", "color", "size" (and "number", "position").
std::optional<Attribute> parse_attribute(std::string_view label);

/// Declarative description of one attribute's alphabet.
struct AttributeSpec {
  Attribute attribute = Attribute::kNum;
  std::vector<std::string> labels;
  /// Disjoint cyclic sub-sequences over `labels`.
  std::vector<std::vector<std::string>> cycles;
  /// Absorbing variable that every uncycled variable maps to under f_next.
  std::optional<std::string> sink;

  friend bool operator==(const AttributeSpec&, const AttributeSpec&) = default;
};

/// Variable alphabet partitioned into the five attributes. Variables are
/// numbered attribute by attribute in the order num, pos, type, color, size,
/// and in label order within each attribute. Immutable once built.
class AttributeSchema {
 public:
  /// Validates and indexes `specs`; throws PreconditionError when an
  /// attribute is missing or repeated, labels collide, cycles overlap, or a
  /// variable is neither cycled, the sink, nor sink-mappable.
  static AttributeSchema build(std::string name, std::vector<AttributeSpec> specs);

  /// 69-variable alphabet with position and size sub-sequences split by width.
  static const AttributeSchema& iraven_full();
  /// Reduced alphabet of the running example; left/right are sink-mapped.
  static const AttributeSchema& running_example();
  /// "iraven-full" or "running-example".
  static const AttributeSchema& preset(std::string_view name);

  const std::string& name() const { return name_; }
  std::span<const AttributeSpec> specs() const { return specs_; }
  const VariableNames& names() const { return names_; }
  std::size_t size() const { return info_.size(); }

  Attribute attribute_of(VariableId v) const;
  std::span<const VariableId> variables(Attribute a) const;
  /// ⟨A_attr⟩.
  const Concept& attribute_concept(Attribute a) const;
  /// Every generator of J (nonzero) is divisible by a variable of `a`.
  bool within_attribute(const Concept& J, Attribute a) const;

  const std::string& label(VariableId v) const { return names_.label(v); }
  /// Resolves `label` as a variable of `a`; IngestionError names the attribute.
  VariableId resolve(Attribute a, std::string_view label) const;

  /// The variable `delta` steps along v's sub-sequence; sink-mapped variables
  /// and the sink go to the sink.
  VariableId shift(VariableId v, int delta) const;
  /// Position of v within its sub-sequence.
  std::optional<int> numeric_index(VariableId v) const;
  /// Index of v's sub-sequence within its attribute.
  std::optional<std::size_t> cycle_index(VariableId v) const;
  std::span<const VariableId> cycle(Attribute a, std::size_t index) const;

  /// Number variable for `count` entities (index count-1 of the num sequence).
  std::optional<VariableId> num_variable(std::size_t count) const;
  /// Entity count encoded by a number variable.
  std::size_t count_of(VariableId num_var) const;

 private:
  struct VariableInfo {
    Attribute attribute;
    std::optional<std::size_t> cycle;
    int index = 0;
  };

  std::string name_;
  std::vector<AttributeSpec> specs_;
  VariableNames names_;
  std::vector<VariableInfo> info_;
  std::array<std::vector<VariableId>, 5> variables_;
  std::array<std::vector<std::vector<VariableId>>, 5> cycles_;
  std::array<std::optional<VariableId>, 5> sinks_;
  std::array<Concept, 5> attribute_concepts_;
};

}  // namespace amr
