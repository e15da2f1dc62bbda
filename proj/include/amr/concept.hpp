#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "amr/monomial.hpp"

namespace amr {

/// A monomial ideal, stored as its unique minimal generating set sorted
/// grevlex-descending. The zero ideal has no generators; the unit ideal is
/// generated by the monomial 1.
class Concept {
 public:
  /// The zero ideal.
  Concept() = default;
  /// Minimalizes `generators`; an empty list gives the zero ideal.
  explicit Concept(std::vector<Monomial> generators);

  static Concept zero() { return Concept(); }
  static Concept unit();
  static Concept principal(Monomial m);
  /// Simple concept generated by the given variables.
  static Concept of_variables(std::span<const VariableId> vars);

  std::span<const Monomial> mingen() const { return mingen_; }
  std::size_t size() const { return mingen_.size(); }

  bool is_zero() const { return mingen_.empty(); }
  bool is_unit() const { return mingen_.size() == 1 && mingen_.front().is_unit(); }
  /// Nonzero, proper and generated by squarefree monomials.
  bool is_basic() const;
  /// Generated by variables only.
  bool is_simple() const;
  /// Every generator is a pure power of one variable.
  bool is_pure_power_generated() const;
  /// Union of the supports of all generators, ascending.
  std::vector<VariableId> support() const;

  friend bool operator==(const Concept&, const Concept&) = default;
  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b);

  std::size_t hash() const;

 private:
  std::vector<Monomial> mingen_;
};

struct ConceptHash {
  std::size_t operator()(const Concept& c) const { return c.hash(); }
};

/// Removes every generator divisible by another and sorts canonically.
Concept minimalize(std::vector<Monomial> generators);

/// m is an instance of J.
bool member(const Monomial& m, const Concept& J);

Concept sum(const Concept& a, const Concept& b);
Concept product(const Concept& a, const Concept& b);
Concept intersect(const Concept& a, const Concept& b);
Concept sum(std::span<const Concept> concepts);
Concept intersect(std::span<const Concept> concepts);

/// outer ⊇ inner.
bool contains(const Concept& outer, const Concept& inner);

Concept radical(const Concept& J);

/// Irredundant decomposition into monomial primary components with pairwise
/// distinct radicals. Components are sorted canonically.
struct PrimaryDecomposition {
  Concept source;
  std::vector<Concept> components;
};

/// Which reducible generator the splitting recursion picks. The result does
/// not depend on this; the alternatives exist to test that.
enum class PivotRule {
  kGrevlexLargest,
  kGrevlexSmallest,
  kReverseVariables,
};

/// Throws PreconditionError for the zero and unit ideals.
PrimaryDecomposition primary_decompose(const Concept& J, PivotRule rule = PivotRule::kGrevlexLargest);

/// Primary decomposition of a squarefree J as its minimal primes, built one
/// generator at a time from minimal transversals of the supports. Agrees
/// with primary_decompose; throws PreconditionError unless J is squarefree,
/// proper and nonzero.
PrimaryDecomposition primary_decompose_squarefree(const Concept& J);

/// Thread-safe memo table for primary decompositions. Squarefree inputs take
/// the transversal route.
class DecompositionCache {
 public:
  const std::vector<Concept>& components(const Concept& J);
  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Concept, std::vector<Concept>, ConceptHash> table_;
};

}  // namespace amr
