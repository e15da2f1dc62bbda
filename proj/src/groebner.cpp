#include "amr/groebner.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <utility>

#include "amr/error.hpp"

namespace amr {

Division reduce(const Polynomial& p, std::span<const Polynomial> basis) {
  const GrevlexOrder& order = p.order();
  Division out;
  out.quotients.assign(basis.size(), Polynomial({}, order));
  out.remainder = Polynomial({}, order);
  std::vector<Polynomial> converted;
  if (std::any_of(basis.begin(), basis.end(), [&](const Polynomial& b) { return !(b.order() == order); })) {
    for (const Polynomial& b : basis) converted.push_back(b.with_order(order));
    basis = converted;
  }
  Polynomial rest = p;
  while (!rest.is_zero()) {
    const Term lead = rest.leading_term();
    bool divided = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].is_zero() || !basis[i].initial_monomial().divides(lead.monomial)) continue;
      const Monomial factor = basis[i].initial_monomial().quotient_of(lead.monomial);
      const Rational coeff = lead.coefficient / basis[i].leading_coefficient();
      out.quotients[i] += Polynomial({Term{coeff, factor}}, order);
      rest -= basis[i].times(coeff, factor);
      divided = true;
      break;
    }
    if (!divided) {
      out.remainder += Polynomial({lead}, order);
      rest -= Polynomial({lead}, order);
    }
  }
  return out;
}

Polynomial s_pair(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() && g.is_zero()) return f;
  // gcd(f, 0) = f: the S-pair against zero degenerates to a multiple of f.
  if (g.is_zero()) return f.times(Rational(0), Monomial());
  if (f.is_zero()) return g.times(Rational(0), Monomial());
  const Monomial& in_f = f.initial_monomial();
  const Monomial& in_g = g.initial_monomial();
  const Monomial common = gcd(in_f, in_g);
  return f.times(g.leading_coefficient(), common.quotient_of(in_g)) -
         g.times(f.leading_coefficient(), common.quotient_of(in_f));
}

namespace {

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis) {
  // Drop elements whose initial monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  std::sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.order().greater(b.initial_monomial(), a.initial_monomial());
  });
  for (Polynomial& p : basis) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& q) {
      return q.initial_monomial().divides(p.initial_monomial());
    });
    if (!redundant) minimal.push_back(p.monic());
  }
  // Reduce tails against the other elements.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    Polynomial lead({minimal[i].leading_term()}, minimal[i].order());
    Polynomial tail = minimal[i] - lead;
    minimal[i] = (lead + reduce(tail, others).remainder).monic();
  }
  std::sort(minimal.begin(), minimal.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.order().greater(a.initial_monomial(), b.initial_monomial());
  });
  return minimal;
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> generators, const GrevlexOrder& order,
                         const BuchbergerOptions& options) {
  std::vector<Polynomial> basis;
  for (const Polynomial& g : generators) {
    Polynomial p = g.with_order(order);
    if (!p.is_zero()) basis.push_back(std::move(p));
  }
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::size_t reductions = 0;
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (gcd(basis[i].initial_monomial(), basis[j].initial_monomial()).is_unit()) continue;
    if (++reductions > options.max_pair_reductions) {
      throw Error("Buchberger iteration bound exceeded after " + std::to_string(options.max_pair_reductions) +
                  " S-pair reductions");
    }
    Polynomial r = reduce(s_pair(basis[i], basis[j]), basis).remainder;
    if (r.is_zero()) continue;
    const std::size_t k = basis.size();
    basis.push_back(std::move(r));
    for (std::size_t m = 0; m < k; ++m) pairs.emplace_back(m, k);
  }
  if (options.reduced && !basis.empty()) basis = interreduce(std::move(basis));
  return {std::move(basis), order};
}

bool satisfies_buchberger_criterion(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!reduce(s_pair(basis[i], basis[j]), basis).remainder.is_zero()) return false;
    }
  }
  return true;
}

bool ideal_member(const Polynomial& p, const GroebnerBasis& basis) {
  return reduce(p.with_order(basis.order), basis.elements).remainder.is_zero();
}

GroebnerBasis ideal_intersect_elim(std::span<const Polynomial> first, std::span<const Polynomial> second,
                                   VariableId auxiliary, const GrevlexOrder& order) {
  const GrevlexOrder elim = GrevlexOrder::eliminating({auxiliary}, order);
  const Polynomial t = Polynomial::from_monomial(Monomial::variable(auxiliary), elim);
  const Polynomial one_minus_t = Polynomial::constant(Rational(1), elim) - t;
  std::vector<Polynomial> gens;
  for (const Polynomial& g : first) {
    for (const auto& term : g.terms()) {
      if (term.monomial.has_variable(auxiliary)) throw PreconditionError("auxiliary variable occurs in input");
    }
    gens.push_back(t * g.with_order(elim));
  }
  for (const Polynomial& h : second) {
    for (const auto& term : h.terms()) {
      if (term.monomial.has_variable(auxiliary)) throw PreconditionError("auxiliary variable occurs in input");
    }
    gens.push_back(one_minus_t * h.with_order(elim));
  }
  GroebnerBasis extended = buchberger(gens, elim);
  std::vector<Polynomial> kept;
  for (const Polynomial& p : extended.elements) {
    // Under the block order a t-free initial monomial means p is t-free.
    if (!p.initial_monomial().has_variable(auxiliary)) kept.push_back(p.with_order(order));
  }
  return buchberger(kept, order);
}

std::vector<Polynomial> to_polynomials(const Concept& J, const GrevlexOrder& order) {
  std::vector<Polynomial> out;
  out.reserve(J.size());
  for (const Monomial& m : J.mingen()) out.push_back(Polynomial::from_monomial(m, order));
  return out;
}

Concept initial_concept(std::span<const Polynomial> polys) {
  std::vector<Monomial> gens;
  for (const Polynomial& p : polys) {
    if (!p.is_zero()) gens.push_back(p.initial_monomial());
  }
  return Concept(std::move(gens));
}

}  // namespace amr
