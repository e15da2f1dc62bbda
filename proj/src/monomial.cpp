#include "amr/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace amr {

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.var < b.var; });
  Monomial m;
  for (const Factor& f : factors) {
    if (f.exponent == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().var == f.var) {
      m.factors_.back().exponent += f.exponent;
    } else {
      m.factors_.push_back(f);
    }
  }
  return m;
}

Monomial Monomial::variable(VariableId v, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.push_back({v, exponent});
  return m;
}

Monomial Monomial::product_of(std::initializer_list<VariableId> vars) {
  return product_of(std::span<const VariableId>(vars.begin(), vars.size()));
}

Monomial Monomial::product_of(std::span<const VariableId> vars) {
  std::vector<Factor> factors;
  factors.reserve(vars.size());
  for (VariableId v : vars) factors.push_back({v, 1});
  return from_factors(std::move(factors));
}

std::uint32_t Monomial::exponent(VariableId v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, VariableId x) { return f.var < x; });
  return (it != factors_.end() && it->var == v) ? it->exponent : 0;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const Factor& f : factors_) d += f.exponent;
  return d;
}

bool Monomial::is_squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return f.exponent == 1; });
}

std::vector<VariableId> Monomial::support() const {
  std::vector<VariableId> out;
  out.reserve(factors_.size());
  for (const Factor& f : factors_) out.push_back(f.var);
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (factors_.size() > other.factors_.size()) return false;
  auto it = other.factors_.begin();
  for (const Factor& f : factors_) {
    while (it != other.factors_.end() && it->var < f.var) ++it;
    if (it == other.factors_.end() || it->var != f.var || it->exponent < f.exponent) return false;
    ++it;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  assert(divides(other));
  Monomial q;
  auto mine = factors_.begin();
  for (const Factor& f : other.factors_) {
    while (mine != factors_.end() && mine->var < f.var) ++mine;
    std::uint32_t e = f.exponent;
    if (mine != factors_.end() && mine->var == f.var) e -= mine->exponent;
    if (e > 0) q.factors_.push_back({f.var, e});
  }
  return q;
}

Monomial Monomial::squarefree_part() const {
  Monomial m;
  m.factors_.reserve(factors_.size());
  for (const Factor& f : factors_) m.factors_.push_back({f.var, 1});
  return m;
}

namespace {

template <typename Combine>
Monomial merge(const std::vector<Monomial::Factor>& a, const std::vector<Monomial::Factor>& b,
               Combine combine) {
  std::vector<Monomial::Factor> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].var < b[j].var)) {
      out.push_back({a[i].var, combine(a[i].exponent, 0u)});
      ++i;
    } else if (i == a.size() || b[j].var < a[i].var) {
      out.push_back({b[j].var, combine(0u, b[j].exponent)});
      ++j;
    } else {
      out.push_back({a[i].var, combine(a[i].exponent, b[j].exponent)});
      ++i;
      ++j;
    }
  }
  std::erase_if(out, [](const Monomial::Factor& f) { return f.exponent == 0; });
  return Monomial::from_factors(std::move(out));
}

}  // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
  return merge(a.factors_, b.factors_, [](std::uint32_t x, std::uint32_t y) { return x + y; });
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  return merge(a.factors_, b.factors_, [](std::uint32_t x, std::uint32_t y) { return std::max(x, y); });
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  return merge(a.factors_, b.factors_, [](std::uint32_t x, std::uint32_t y) { return std::min(x, y); });
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const Factor& f : factors_) {
    h ^= (static_cast<std::size_t>(f.var.index) << 8 | f.exponent) + 0x9e3779b97f4a7c15ull + (h << 6) +
         (h >> 2);
  }
  return h;
}

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  auto fa = a.factors();
  auto fb = b.factors();
  auto i = static_cast<std::ptrdiff_t>(fa.size()) - 1;
  auto j = static_cast<std::ptrdiff_t>(fb.size()) - 1;
  while (i >= 0 || j >= 0) {
    std::uint32_t ea = 0;
    std::uint32_t eb = 0;
    if (j < 0 || (i >= 0 && fa[i].var > fb[j].var)) {
      ea = fa[i--].exponent;
    } else if (i < 0 || fb[j].var > fa[i].var) {
      eb = fb[j--].exponent;
    } else {
      ea = fa[i--].exponent;
      eb = fb[j--].exponent;
    }
    if (ea != eb) return eb <=> ea;  // smaller exponent at the last differing variable wins
  }
  return std::strong_ordering::equal;
}

}  // namespace amr
