#pragma once

#include <gmpxx.h>

#include <compare>
#include <memory>
#include <span>
#include <vector>

#include "amr/monomial.hpp"

namespace amr {

using Rational = mpq_class;

/// Graded reverse-lexicographic order over a variable ranking. The default
/// ranking is registration order (x_0 > x_1 > ...). An optional elimination
/// block turns it into a block order: monomials are first compared by
/// grevlex on the block variables, then by grevlex on the rest, so any
/// monomial involving a block variable exceeds every monomial that does not.
class GrevlexOrder {
 public:
  GrevlexOrder() = default;
  /// ranking[0] is the largest variable. Variables not listed rank below all
  /// listed ones, in index order.
  explicit GrevlexOrder(std::vector<VariableId> ranking);

  /// Block order eliminating `block` ahead of `base`.
  static GrevlexOrder eliminating(std::vector<VariableId> block, const GrevlexOrder& base = {});

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool is_default() const { return impl_ == nullptr; }
  bool in_block(VariableId v) const;

  friend bool operator==(const GrevlexOrder& a, const GrevlexOrder& b);

  struct Impl;  // opaque

 private:
  std::shared_ptr<const Impl> impl_;
};

struct Term {
  Rational coefficient;
  Monomial monomial;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Polynomial with exact rational coefficients. Terms are kept sorted
/// strictly descending under the polynomial's order, with no zero
/// coefficients and no repeated monomials.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Term> terms, GrevlexOrder order = {});

  static Polynomial from_monomial(const Monomial& m, GrevlexOrder order = {});
  static Polynomial constant(const Rational& c, GrevlexOrder order = {});

  const std::vector<Term>& terms() const { return terms_; }
  const GrevlexOrder& order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  /// Requires !is_zero().
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& initial_monomial() const { return terms_.front().monomial; }
  const Rational& leading_coefficient() const { return terms_.front().coefficient; }

  /// Same polynomial, re-sorted under another order.
  Polynomial with_order(const GrevlexOrder& order) const;
  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;
  /// Every term's monomial, in term order.
  std::vector<Monomial> monomials() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  /// Multiplies every term by c·m.
  Polynomial times(const Rational& c, const Monomial& m) const;
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  void add_scaled(const Polynomial& other, const Rational& scale);

  std::vector<Term> terms_;
  GrevlexOrder order_;
};

}  // namespace amr
