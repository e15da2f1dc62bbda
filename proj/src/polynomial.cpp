#include "amr/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "amr/error.hpp"

namespace amr {

struct GrevlexOrder::Impl {
  std::unordered_map<std::uint32_t, std::uint32_t> rank;  // variable index -> rank
  std::vector<VariableId> ranking;
  std::vector<VariableId> block;
  std::shared_ptr<const Impl> base;  // set for block orders

  std::uint32_t rank_of(VariableId v) const {
    auto it = rank.find(v.index);
    // Unlisted variables follow the listed ones in index order.
    return it != rank.end() ? it->second : static_cast<std::uint32_t>(ranking.size()) + v.index;
  }
};

namespace {

// Grevlex on (rank, exponent) pairs sorted by rank.
std::strong_ordering grevlex_ranked(std::vector<std::pair<std::uint32_t, std::uint32_t>> a,
                                    std::vector<std::pair<std::uint32_t, std::uint32_t>> b) {
  std::uint32_t da = 0;
  std::uint32_t db = 0;
  for (auto& [r, e] : a) da += e;
  for (auto& [r, e] : b) db += e;
  if (auto c = da <=> db; c != 0) return c;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  auto i = static_cast<std::ptrdiff_t>(a.size()) - 1;
  auto j = static_cast<std::ptrdiff_t>(b.size()) - 1;
  while (i >= 0 || j >= 0) {
    std::uint32_t ea = 0;
    std::uint32_t eb = 0;
    if (j < 0 || (i >= 0 && a[i].first > b[j].first)) {
      ea = a[i--].second;
    } else if (i < 0 || b[j].first > a[i].first) {
      eb = b[j--].second;
    } else {
      ea = a[i--].second;
      eb = b[j--].second;
    }
    if (ea != eb) return eb <=> ea;
  }
  return std::strong_ordering::equal;
}

using Ranked = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

Ranked ranked(const Monomial& m, const GrevlexOrder::Impl* impl) {
  Ranked out;
  out.reserve(m.support_size());
  for (const auto& f : m.factors()) {
    out.emplace_back(impl == nullptr ? f.var.index : impl->rank_of(f.var), f.exponent);
  }
  return out;
}

}  // namespace

GrevlexOrder::GrevlexOrder(std::vector<VariableId> ranking) {
  auto impl = std::make_shared<Impl>();
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    if (!impl->rank.emplace(ranking[i].index, static_cast<std::uint32_t>(i)).second) {
      throw PreconditionError("variable ranking lists a variable twice");
    }
  }
  impl->ranking = std::move(ranking);
  impl_ = std::move(impl);
}

GrevlexOrder GrevlexOrder::eliminating(std::vector<VariableId> block, const GrevlexOrder& base) {
  GrevlexOrder order;
  auto impl = std::make_shared<Impl>();
  for (std::size_t i = 0; i < block.size(); ++i) {
    impl->rank.emplace(block[i].index, static_cast<std::uint32_t>(i));
  }
  impl->ranking = block;
  impl->block = std::move(block);
  impl->base = base.impl_;
  order.impl_ = std::move(impl);
  return order;
}

bool GrevlexOrder::in_block(VariableId v) const {
  return impl_ != nullptr && std::find(impl_->block.begin(), impl_->block.end(), v) != impl_->block.end();
}

std::strong_ordering GrevlexOrder::compare(const Monomial& a, const Monomial& b) const {
  if (impl_ == nullptr) return grevlex_compare(a, b);
  if (impl_->block.empty()) return grevlex_ranked(ranked(a, impl_.get()), ranked(b, impl_.get()));

  Ranked block_a;
  Ranked block_b;
  std::vector<Monomial::Factor> rest_a;
  std::vector<Monomial::Factor> rest_b;
  for (const auto& f : a.factors()) {
    if (in_block(f.var)) block_a.emplace_back(impl_->rank_of(f.var), f.exponent);
    else rest_a.push_back(f);
  }
  for (const auto& f : b.factors()) {
    if (in_block(f.var)) block_b.emplace_back(impl_->rank_of(f.var), f.exponent);
    else rest_b.push_back(f);
  }
  if (auto c = grevlex_ranked(std::move(block_a), std::move(block_b)); c != 0) return c;
  return grevlex_ranked(ranked(Monomial::from_factors(std::move(rest_a)), impl_->base.get()),
                        ranked(Monomial::from_factors(std::move(rest_b)), impl_->base.get()));
}

bool operator==(const GrevlexOrder& a, const GrevlexOrder& b) {
  if (a.impl_ == b.impl_) return true;
  if (a.impl_ == nullptr || b.impl_ == nullptr) return false;
  auto same_base = [&] {
    if (a.impl_->base == b.impl_->base) return true;
    if (!a.impl_->base || !b.impl_->base) return false;
    return a.impl_->base->ranking == b.impl_->base->ranking;
  };
  return a.impl_->ranking == b.impl_->ranking && a.impl_->block == b.impl_->block && same_base();
}

Polynomial::Polynomial(std::vector<Term> terms, GrevlexOrder order) : order_(std::move(order)) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& x, const Term& y) { return order_.greater(x.monomial, y.monomial); });
  for (Term& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coefficient += t.coefficient;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const Term& t) { return t.coefficient == 0; });
}

Polynomial Polynomial::from_monomial(const Monomial& m, GrevlexOrder order) {
  return Polynomial({Term{Rational(1), m}}, std::move(order));
}

Polynomial Polynomial::constant(const Rational& c, GrevlexOrder order) {
  return Polynomial({Term{c, Monomial()}}, std::move(order));
}

Polynomial Polynomial::with_order(const GrevlexOrder& order) const { return Polynomial(terms_, order); }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out = *this;
  const Rational lc = leading_coefficient();
  for (Term& t : out.terms_) t.coefficient /= lc;
  return out;
}

std::vector<Monomial> Polynomial::monomials() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back(t.monomial);
  return out;
}

void Polynomial::add_scaled(const Polynomial& other, const Rational& scale) {
  if (!(other.order_ == order_) && !other.is_zero() && !is_zero()) {
    throw PreconditionError("polynomials use different monomial orders");
  }
  if (is_zero()) order_ = other.order_;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    std::strong_ordering c = std::strong_ordering::equal;
    if (i == terms_.size()) c = std::strong_ordering::less;
    else if (j == other.terms_.size()) c = std::strong_ordering::greater;
    else c = order_.compare(terms_[i].monomial, other.terms_[j].monomial);
    if (c > 0) {
      merged.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      merged.push_back({other.terms_[j].coefficient * scale, other.terms_[j].monomial});
      ++j;
    } else {
      Rational coeff = terms_[i].coefficient + other.terms_[j].coefficient * scale;
      if (coeff != 0) merged.push_back({std::move(coeff), std::move(terms_[i].monomial)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  add_scaled(other, Rational(1));
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  add_scaled(other, Rational(-1));
  return *this;
}

Polynomial Polynomial::times(const Rational& c, const Monomial& m) const {
  Polynomial out;
  out.order_ = order_;
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the relative order of terms.
  for (const Term& t : terms_) out.terms_.push_back({t.coefficient * c, t.monomial * m});
  return out;
}

Polynomial Polynomial::operator-() const { return times(Rational(-1), Monomial()); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  out.order_ = a.order_;
  for (const Term& t : b.terms_) out += a.times(t.coefficient, t.monomial);
  return out;
}

}  // namespace amr
