#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "amr/concept.hpp"
#include "amr/invariance.hpp"
#include "amr/panel.hpp"

namespace amr {

// Inverse modules. Each takes the first two panels of a view's third row and
// returns what the pattern implies for the missing panel, or ⟨0⟩ when the
// pattern conflicts with that row.

/// For type, color and size the shared component must be a single variable:
/// panels whose entities mix values for the attribute conflict.
Concept inv_intra(Attribute a, std::span<const Concept> row3, const ReasoningContext& ctx);
Concept inv_inter(Attribute a, std::span<const Concept> components, std::span<const Concept> row3,
                  const ReasoningContext& ctx);
Concept inv_comp(Attribute a, int delta, std::span<const Concept> row3, const ReasoningContext& ctx);
/// For color and size the result lives in the sub-sequence of the first
/// panel's variable; panels on different sub-sequences give ⟨0⟩.
Concept inv_binary(Attribute a, std::span<const BinaryOp> ops, std::span<const Concept> row3,
                   const ReasoningContext& ctx);
/// Dispatches on the pattern kind.
Concept inverse(const Pattern& p, std::span<const Concept> row3, const ReasoningContext& ctx);

/// A uniform draw made while assembling an answer. An absent attribute
/// means a pick among the generators of a position's ideal.
struct RandomChoice {
  VariableId position;
  std::optional<Attribute> attribute;
  std::vector<Monomial> candidates;
  Monomial chosen;
  friend bool operator==(const RandomChoice&, const RandomChoice&) = default;
};

struct GeneratedAnswer {
  Concept ideal;
  std::vector<RandomChoice> random_choices;
  std::uint64_t seed = 0;
  friend bool operator==(const GeneratedAnswer&, const GeneratedAnswer&) = default;
};

/// Builds the missing panel of an 8-cell matrix from the patterns shared by
/// the first two rows of each Bar view. Draws with a single candidate are
/// not random and are not recorded. Throws GenerationError when the matrix
/// has no common position or too many for the num alphabet.
GeneratedAnswer generate_answer(const ConceptMatrix& M, const ReasoningContext& ctx, std::uint64_t seed);

struct EntityPair {
  Monomial first;
  Monomial second;
  friend bool operator==(const EntityPair&, const EntityPair&) = default;
};

struct SimilarityReport {
  std::vector<EntityPair> s1_pairs;
  std::vector<Monomial> s2_only;
  std::vector<Monomial> s3_only;
  Rational phi;
  friend bool operator==(const SimilarityReport&, const SimilarityReport&) = default;
};

/// Entities are paired by position variable; a pair scores 1/4 per equal
/// attribute among pos, type, color and size. Throws PreconditionError when
/// a generator lacks a position or two generators share one.
SimilarityReport similarity(const Concept& J, const Concept& J_prime, const AttributeSchema& schema);

}  // namespace amr
