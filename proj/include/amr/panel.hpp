#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "amr/concept.hpp"
#include "amr/schema.hpp"

namespace amr {

struct PanelEntity {
  VariableId pos;
  VariableId type;
  VariableId color;
  VariableId size;

  friend auto operator<=>(const PanelEntity&, const PanelEntity&) = default;
};

/// One squarefree generator x_num(count)·pos·type·color·size per entity.
/// Throws EncodingError on an empty list, a repeated position, a variable of
/// the wrong attribute, or more entities than the num alphabet covers.
Concept encode_panel(std::span<const PanelEntity> entities, const AttributeSchema& schema);

/// Inverse of encode_panel. Throws EncodingError when a generator does not
/// carry exactly one variable of each attribute.
std::vector<PanelEntity> decode_panel(const Concept& J, const AttributeSchema& schema);

/// Replaces every variable by its delta-th successor in its sub-sequence
/// (sink-mapped variables go to the sink), then minimalizes.
Concept f_next(const Concept& J, int delta, const AttributeSchema& schema);
/// f_next applied `times` times; times == 0 is the identity.
Concept f_next_iterated(const Concept& J, int delta, std::size_t times, const AttributeSchema& schema);

/// |mingen(J)|.
std::size_t g_num(const Concept& J);
/// Index of the color variable shared by every generator, if any.
std::optional<int> g_color(const Concept& J, const AttributeSchema& schema);
/// Index within its sub-sequence of the size variable shared by every
/// generator, if any.
std::optional<int> g_size(const Concept& J, const AttributeSchema& schema);
/// g_num, g_color or g_size; absent for pos and type.
std::optional<int> g_value(Attribute a, const Concept& J, const AttributeSchema& schema);

/// The single variable of attribute `a` shared by every generator of J.
std::optional<VariableId> shared_variable(const Concept& J, Attribute a, const AttributeSchema& schema);

struct ViewTag {
  enum class Kind : std::uint8_t { kFull, kBar, kHat };
  Kind kind = Kind::kFull;
  /// Meaningful for kBar and kHat only.
  VariableId position;

  static ViewTag full() { return {}; }
  static ViewTag bar(VariableId p) { return {Kind::kBar, p}; }
  static ViewTag hat(VariableId p) { return {Kind::kHat, p}; }

  friend auto operator<=>(const ViewTag&, const ViewTag&) = default;
};

std::string format_view(const ViewTag& tag, const AttributeSchema& schema);

/// Panel concepts in row-major order (8 for a question, 9 with a candidate).
struct ConceptMatrix {
  std::vector<Concept> cells;
  ViewTag view;

  /// Cells of row `r` (0-based); the last row may be short.
  std::span<const Concept> row(std::size_t r) const;

  friend bool operator==(const ConceptMatrix&, const ConceptMatrix&) = default;
};

/// Positions p, in schema order, such that every cell has exactly one
/// generator divisible by p.
std::vector<VariableId> com_pos(const ConceptMatrix& M, const AttributeSchema& schema);

/// [Full, Bar(p1), Hat(p1), ..., Bar(pk), Hat(pk)] over com_pos(M). Derived
/// views carry number variables renormalized to the view's entity count. A
/// Hat view is dropped when any of its cells is empty, or when it equals a
/// Bar view or an earlier Hat view.
std::vector<ConceptMatrix> split_views(const ConceptMatrix& M, const AttributeSchema& schema);

/// Rewrites the number variable of every generator to x_num(|mingen|).
Concept renormalize_count(const Concept& J, const AttributeSchema& schema);

struct RpmInstance {
  std::string id;
  std::string schema_name;
  std::vector<Concept> question;
  std::vector<Concept> answers;
  std::optional<std::size_t> ground_truth;

  ConceptMatrix question_matrix() const { return {question, ViewTag::full()}; }
  /// The 9-cell matrix with answer `i` inserted.
  ConceptMatrix with_candidate(std::size_t i) const;

  friend bool operator==(const RpmInstance&, const RpmInstance&) = default;
};

/// Throws PreconditionError unless there are 8 question and 8 answer cells,
/// every cell basic, and ground_truth < 8 when present.
void validate_instance(const RpmInstance& instance);

}  // namespace amr
