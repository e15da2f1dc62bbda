#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace amr {

/// Dense 0-based index of a ring variable. Lower index means larger variable
/// in the default ranking (x_0 > x_1 > ...).
struct VariableId {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(VariableId, VariableId) = default;
};

/// A monomial x^a stored sparsely as (variable, exponent) factors sorted by
/// variable index. Exponents are always positive; the empty monomial is 1.
class Monomial {
 public:
  struct Factor {
    VariableId var;
    std::uint32_t exponent = 1;

    friend constexpr auto operator<=>(const Factor&, const Factor&) = default;
  };

  Monomial() = default;

  /// Builds from arbitrary factors: repeated variables are merged, zero
  /// exponents dropped.
  static Monomial from_factors(std::vector<Factor> factors);
  static Monomial variable(VariableId v, std::uint32_t exponent = 1);
  /// Squarefree product of the listed variables.
  static Monomial product_of(std::initializer_list<VariableId> vars);
  static Monomial product_of(std::span<const VariableId> vars);

  std::span<const Factor> factors() const { return factors_; }
  std::uint32_t exponent(VariableId v) const;
  std::uint32_t degree() const;
  std::size_t support_size() const { return factors_.size(); }
  bool is_unit() const { return factors_.empty(); }
  bool is_squarefree() const;
  bool has_variable(VariableId v) const { return exponent(v) != 0; }
  std::vector<VariableId> support() const;

  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const;
  /// other / this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial squarefree_part() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const;

 private:
  std::vector<Factor> factors_;
};

/// Graded reverse-lexicographic comparison under the default ranking
/// x_0 > x_1 > ... : higher degree wins; on a degree tie, the monomial with
/// the smaller exponent at the highest-index differing variable is larger.
std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace amr
