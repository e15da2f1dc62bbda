#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "amr/concept.hpp"
#include "amr/polynomial.hpp"

namespace amr {

/// Result of multivariate division: p = sum(quotients[i] * basis[i]) + remainder.
struct Division {
  Polynomial remainder;
  std::vector<Polynomial> quotients;
};

/// Standard expression of p with respect to `basis`, under p's order. No
/// monomial of the remainder is divisible by an initial monomial of the basis.
Division reduce(const Polynomial& p, std::span<const Polynomial> basis);

/// S-pair of f and g; S(0, 0) = 0.
Polynomial s_pair(const Polynomial& f, const Polynomial& g);

struct GroebnerBasis {
  std::vector<Polynomial> elements;
  GrevlexOrder order;
};

struct BuchbergerOptions {
  /// Interreduce and normalize the output. When false, the output is the
  /// input followed by every nonzero S-pair remainder found.
  bool reduced = true;
  /// Upper bound on S-pair reductions; exceeding it raises an Error.
  std::size_t max_pair_reductions = 200000;
};

/// Buchberger's algorithm with a FIFO pair queue and the coprime-leading-
/// monomial skip.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const GrevlexOrder& order = {},
                         const BuchbergerOptions& options = {});

/// Every S-pair of two elements reduces to zero with respect to `basis`.
bool satisfies_buchberger_criterion(std::span<const Polynomial> basis);

/// Requires `basis` to be a Gröbner basis.
bool ideal_member(const Polynomial& p, const GroebnerBasis& basis);

/// Intersection via an auxiliary variable t ranked above every other
/// variable: a Gröbner basis of <t*g_i, (1-t)*h_j> is computed under the
/// block order eliminating t, and its t-free elements are kept. `auxiliary`
/// must not occur in either generating set.
GroebnerBasis ideal_intersect_elim(std::span<const Polynomial> first, std::span<const Polynomial> second,
                                   VariableId auxiliary, const GrevlexOrder& order = {});

/// Monomial ideal as polynomials (one per minimal generator).
std::vector<Polynomial> to_polynomials(const Concept& J, const GrevlexOrder& order = {});

/// Concept generated by the initial monomials of `polys`.
Concept initial_concept(std::span<const Polynomial> polys);

}  // namespace amr
