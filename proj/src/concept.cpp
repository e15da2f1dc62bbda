#include "amr/concept.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "amr/error.hpp"

namespace amr {

namespace {

bool grevlex_greater(const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) > 0; }

}  // namespace

Concept::Concept(std::vector<Monomial> generators) {
  if (generators.empty()) return;
  std::sort(generators.begin(), generators.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return grevlex_greater(a, b);
  });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (Monomial& g : generators) {
    bool redundant = std::any_of(mingen_.begin(), mingen_.end(),
                                 [&](const Monomial& kept) { return kept.divides(g); });
    if (!redundant) mingen_.push_back(std::move(g));
  }
  std::sort(mingen_.begin(), mingen_.end(), grevlex_greater);
}

Concept Concept::unit() { return Concept(std::vector<Monomial>{Monomial()}); }

Concept Concept::principal(Monomial m) { return Concept(std::vector<Monomial>{std::move(m)}); }

Concept Concept::of_variables(std::span<const VariableId> vars) {
  std::vector<Monomial> gens;
  gens.reserve(vars.size());
  for (VariableId v : vars) gens.push_back(Monomial::variable(v));
  return Concept(std::move(gens));
}

bool Concept::is_basic() const {
  return !mingen_.empty() && !is_unit() && std::all_of(mingen_.begin(), mingen_.end(),
                                   [](const Monomial& m) { return m.is_squarefree(); });
}

bool Concept::is_simple() const {
  return !mingen_.empty() && std::all_of(mingen_.begin(), mingen_.end(),
                                         [](const Monomial& m) { return m.degree() == 1; });
}

bool Concept::is_pure_power_generated() const {
  return std::all_of(mingen_.begin(), mingen_.end(),
                     [](const Monomial& m) { return m.support_size() == 1; });
}

std::vector<VariableId> Concept::support() const {
  std::vector<VariableId> out;
  for (const Monomial& m : mingen_) {
    for (const auto& f : m.factors()) out.push_back(f.var);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::strong_ordering operator<=>(const Concept& a, const Concept& b) {
  const std::size_t n = std::min(a.mingen_.size(), b.mingen_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = grevlex_compare(a.mingen_[i], b.mingen_[i]); c != 0) return c;
  }
  return a.mingen_.size() <=> b.mingen_.size();
}

std::size_t Concept::hash() const {
  std::size_t h = mingen_.size();
  for (const Monomial& m : mingen_) h ^= m.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

Concept minimalize(std::vector<Monomial> generators) { return Concept(std::move(generators)); }

bool member(const Monomial& m, const Concept& J) {
  return std::any_of(J.mingen().begin(), J.mingen().end(), [&](const Monomial& g) { return g.divides(m); });
}

Concept sum(const Concept& a, const Concept& b) {
  std::vector<Monomial> gens(a.mingen().begin(), a.mingen().end());
  gens.insert(gens.end(), b.mingen().begin(), b.mingen().end());
  return Concept(std::move(gens));
}

Concept product(const Concept& a, const Concept& b) {
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const Monomial& g : a.mingen()) {
    for (const Monomial& h : b.mingen()) gens.push_back(g * h);
  }
  return Concept(std::move(gens));
}

Concept intersect(const Concept& a, const Concept& b) {
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const Monomial& g : a.mingen()) {
    for (const Monomial& h : b.mingen()) gens.push_back(lcm(g, h));
  }
  return Concept(std::move(gens));
}

Concept sum(std::span<const Concept> concepts) {
  std::vector<Monomial> gens;
  for (const Concept& c : concepts) gens.insert(gens.end(), c.mingen().begin(), c.mingen().end());
  return Concept(std::move(gens));
}

Concept intersect(std::span<const Concept> concepts) {
  if (concepts.empty()) return Concept::unit();
  Concept acc = concepts.front();
  for (std::size_t i = 1; i < concepts.size(); ++i) acc = intersect(acc, concepts[i]);
  return acc;
}

bool contains(const Concept& outer, const Concept& inner) {
  return std::all_of(inner.mingen().begin(), inner.mingen().end(),
                     [&](const Monomial& g) { return member(g, outer); });
}

Concept radical(const Concept& J) {
  std::vector<Monomial> gens;
  gens.reserve(J.size());
  for (const Monomial& g : J.mingen()) gens.push_back(g.squarefree_part());
  return Concept(std::move(gens));
}

namespace {

// Splits J into irreducible (pure-power generated) pieces. A branch whose
// ideal already contains a collected leaf only yields redundant leaves.
class IrreducibleSplitter {
 public:
  explicit IrreducibleSplitter(PivotRule rule) : rule_(rule) {}

  std::vector<Concept> run(const Concept& J) {
    leaves_.clear();
    split(J);
    // Keep only leaves that contain no other leaf.
    std::sort(leaves_.begin(), leaves_.end());
    leaves_.erase(std::unique(leaves_.begin(), leaves_.end()), leaves_.end());
    std::vector<Concept> minimal;
    for (std::size_t i = 0; i < leaves_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < leaves_.size() && !redundant; ++j) {
        redundant = i != j && contains(leaves_[i], leaves_[j]);
      }
      if (!redundant) minimal.push_back(leaves_[i]);
    }
    return minimal;
  }

 private:
  void split(const Concept& J) {
    for (const Concept& leaf : leaves_) {
      if (contains(J, leaf)) return;
    }
    const Monomial* pivot = choose_pivot(J);
    if (pivot == nullptr) {
      leaves_.push_back(J);
      return;
    }
    const auto factors = pivot->factors();
    const auto& cut = rule_ == PivotRule::kReverseVariables ? factors.back() : factors.front();
    Monomial power = Monomial::variable(cut.var, cut.exponent);
    Monomial rest = power.quotient_of(*pivot);

    std::vector<Monomial> others;
    others.reserve(J.size());
    for (const Monomial& g : J.mingen()) {
      if (&g != pivot) others.push_back(g);
    }
    std::vector<Monomial> left = others;
    left.push_back(std::move(power));
    others.push_back(std::move(rest));
    split(Concept(std::move(left)));
    split(Concept(std::move(others)));
  }

  const Monomial* choose_pivot(const Concept& J) const {
    const Monomial* chosen = nullptr;
    for (const Monomial& g : J.mingen()) {
      if (g.support_size() < 2) continue;
      // mingen is grevlex-descending: first reducible is the largest.
      if (chosen == nullptr || rule_ != PivotRule::kGrevlexLargest) chosen = &g;
      if (rule_ == PivotRule::kGrevlexLargest) break;
    }
    return chosen;
  }

  PivotRule rule_;
  std::vector<Concept> leaves_;
};

}  // namespace

PrimaryDecomposition primary_decompose(const Concept& J, PivotRule rule) {
  if (J.is_zero() || J.is_unit()) {
    throw PreconditionError("primary decomposition requires a proper nonzero monomial ideal");
  }
  std::vector<Concept> irreducible = IrreducibleSplitter(rule).run(J);

  // Merge components that share a radical.
  std::map<Concept, Concept> by_radical;
  for (Concept& q : irreducible) {
    Concept r = radical(q);
    auto it = by_radical.find(r);
    if (it == by_radical.end()) {
      by_radical.emplace(std::move(r), std::move(q));
    } else {
      it->second = intersect(it->second, q);
    }
  }
  std::vector<Concept> components;
  components.reserve(by_radical.size());
  for (auto& [r, q] : by_radical) components.push_back(std::move(q));
  std::sort(components.begin(), components.end());

  // No component is redundant: the leaves form the irredundant irreducible
  // decomposition, and an irreducible monomial ideal containing an
  // intersection of monomial ideals contains one of them.
  return {J, std::move(components)};
}

PrimaryDecomposition primary_decompose_squarefree(const Concept& J) {
  if (J.is_zero() || J.is_unit()) {
    throw PreconditionError("primary decomposition requires a proper nonzero monomial ideal");
  }
  if (!J.is_basic()) throw PreconditionError("transversal decomposition requires a squarefree ideal");

  // Each prime is a sorted variable list; the set stays an antichain.
  using Prime = std::vector<VariableId>;
  auto covers = [](const Prime& p, const Monomial& g) {
    return std::any_of(g.factors().begin(), g.factors().end(),
                       [&](const Monomial::Factor& f) { return std::binary_search(p.begin(), p.end(), f.var); });
  };
  auto subset = [](const Prime& a, const Prime& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); };

  std::vector<Prime> primes = {Prime{}};
  for (const Monomial& g : J.mingen()) {
    std::vector<Prime> kept;
    std::vector<Prime> grown;
    for (Prime& p : primes) {
      if (covers(p, g)) {
        kept.push_back(std::move(p));
        continue;
      }
      for (const auto& f : g.factors()) {
        Prime q = p;
        q.insert(std::upper_bound(q.begin(), q.end(), f.var), f.var);
        grown.push_back(std::move(q));
      }
    }
    // Kept primes are pairwise incomparable; a grown prime survives unless
    // it contains a kept prime or another grown one.
    std::sort(grown.begin(), grown.end());
    grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
    std::vector<Prime> next = kept;
    for (std::size_t i = 0; i < grown.size(); ++i) {
      const auto dominated = [&](const Prime& other) { return &other != &grown[i] && subset(other, grown[i]); };
      if (std::any_of(kept.begin(), kept.end(), dominated)) continue;
      if (std::any_of(grown.begin(), grown.end(), dominated)) continue;
      next.push_back(grown[i]);
    }
    primes = std::move(next);
  }

  std::vector<Concept> components;
  components.reserve(primes.size());
  for (const Prime& p : primes) components.push_back(Concept::of_variables(p));
  std::sort(components.begin(), components.end());
  return {J, std::move(components)};
}

const std::vector<Concept>& DecompositionCache::components(const Concept& J) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = table_.find(J); it != table_.end()) return it->second;
  }
  PrimaryDecomposition pd = J.is_basic() ? primary_decompose_squarefree(J) : primary_decompose(J);
  std::unique_lock lock(mutex_);
  auto [it, inserted] = table_.try_emplace(J, std::move(pd.components));
  return it->second;
}

std::size_t DecompositionCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void DecompositionCache::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
}

}  // namespace amr
