#pragma once

// Fixtures and independent oracles shared by the unit and acceptance tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "amr/concept.hpp"
#include "amr/error.hpp"
#include "amr/panel.hpp"
#include "amr/polynomial.hpp"
#include "amr/schema.hpp"
#include "amr/text_format.hpp"

namespace amr::testing {

inline PanelEntity entity(const AttributeSchema& s, const char* pos, const char* type, const char* color,
                          const char* size) {
  return {s.resolve(Attribute::kPos, pos), s.resolve(Attribute::kType, type), s.resolve(Attribute::kColor, color),
          s.resolve(Attribute::kSize, size)};
}

/// The 8-cell question matrix of the running example (two entities, left
/// and right, per panel).
inline ConceptMatrix running_example_matrix() {
  const auto& s = AttributeSchema::running_example();
  const std::vector<std::vector<PanelEntity>> panels = {
      {entity(s, "left", "square", "black", "avg"), entity(s, "right", "triangle", "gray", "avg")},
      {entity(s, "left", "pentagon", "gray", "avg"), entity(s, "right", "square", "gray", "avg")},
      {entity(s, "left", "circle", "white", "avg"), entity(s, "right", "pentagon", "gray", "avg")},
      {entity(s, "left", "pentagon", "white", "small"), entity(s, "right", "pentagon", "dgray", "small")},
      {entity(s, "left", "circle", "black", "small"), entity(s, "right", "hexagon", "dgray", "small")},
      {entity(s, "left", "square", "gray", "small"), entity(s, "right", "circle", "dgray", "small")},
      {entity(s, "left", "circle", "gray", "avg"), entity(s, "right", "pentagon", "gray", "large")},
      {entity(s, "left", "square", "white", "avg"), entity(s, "right", "hexagon", "gray", "large")},
  };
  ConceptMatrix m;
  for (const auto& p : panels) m.cells.push_back(encode_panel(p, s));
  return m;
}

/// Parses "<a*b, c>" over the running-example alphabet.
inline Concept running(const std::string& text) {
  VariableNames names = AttributeSchema::running_example().names();
  return parse_concept(text, names);
}

inline Monomial squarefree_of_mask(std::uint32_t mask) {
  std::vector<Monomial::Factor> factors;
  for (std::uint32_t v = 0; v < 32; ++v) {
    if (mask & (1u << v)) factors.push_back({VariableId{v}, 1});
  }
  return Monomial::from_factors(std::move(factors));
}

/// Random monomial ideal over variables 0..vars-1; exponents up to
/// max_exponent (1 gives a squarefree ideal).
inline Concept random_ideal(std::mt19937_64& rng, std::uint32_t vars, std::size_t max_gens,
                            std::uint32_t max_exponent) {
  std::uniform_int_distribution<std::size_t> gen_count(1, max_gens);
  std::uniform_int_distribution<std::uint32_t> exp(0, max_exponent);
  std::vector<Monomial> gens;
  const std::size_t n = gen_count(rng);
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<Monomial::Factor> factors;
    for (std::uint32_t v = 0; v < vars; ++v) {
      // Sparse supports keep decompositions interesting.
      if (rng() % 3 != 0) continue;
      if (const std::uint32_t e = exp(rng); e > 0) factors.push_back({VariableId{v}, e});
    }
    if (factors.empty()) factors.push_back({VariableId{static_cast<std::uint32_t>(rng() % vars)}, 1});
    gens.push_back(Monomial::from_factors(std::move(factors)));
  }
  return Concept(std::move(gens));
}

/// Membership by definition: some generator divides m. Kept separate from
/// the library's member() so the oracle stays independent of it.
inline bool divisible_by_some(const Monomial& m, const Concept& J) {
  for (const Monomial& g : J.mingen()) {
    bool divides = true;
    for (const auto& f : g.factors()) divides = divides && m.exponent(f.var) >= f.exponent;
    if (divides) return true;
  }
  return false;
}

/// Squarefree m lies in I*J iff its support splits into S and its
/// complement with x^S in I and the rest in J.
inline bool in_product_by_splitting(std::uint32_t mask, const Concept& I, const Concept& J) {
  for (std::uint32_t s = mask;; s = (s - 1) & mask) {
    if (divisible_by_some(squarefree_of_mask(s), I) && divisible_by_some(squarefree_of_mask(mask & ~s), J)) {
      return true;
    }
    if (s == 0) break;
  }
  return false;
}

/// Random polynomials in `vars` variables: 1..max_gens generators of 1..3
/// terms, total degree at most max_degree, small nonzero integer
/// coefficients.
inline std::vector<Polynomial> random_polynomials(std::mt19937_64& rng, std::uint32_t vars, std::size_t max_gens,
                                                  std::uint32_t max_degree) {
  std::vector<Polynomial> out;
  const std::size_t n = 1 + rng() % max_gens;
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<Term> terms;
    const std::size_t t = 1 + rng() % 3;
    for (std::size_t k = 0; k < t; ++k) {
      std::vector<Monomial::Factor> factors;
      std::uint32_t budget = static_cast<std::uint32_t>(rng() % (max_degree + 1));
      for (std::uint32_t v = 0; v < vars && budget > 0; ++v) {
        const std::uint32_t e = static_cast<std::uint32_t>(rng() % (budget + 1));
        if (e > 0) factors.push_back({VariableId{v}, e});
        budget -= e;
      }
      long c = static_cast<long>(rng() % 7) - 3;
      if (c == 0) c = 1;
      terms.push_back({Rational(c), Monomial::from_factors(std::move(factors))});
    }
    Polynomial p(std::move(terms));
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  if (out.empty()) out.push_back(Polynomial::from_monomial(Monomial::variable(VariableId{0})));
  return out;
}

}  // namespace amr::testing
