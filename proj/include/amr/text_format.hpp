#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "amr/concept.hpp"
#include "amr/monomial.hpp"
#include "amr/polynomial.hpp"

namespace amr {

/// Bidirectional map between variable labels and ids. Labels may contain
/// letters, digits, '_', '#', '.', and balanced parenthesized groups such as
/// "(0.5,0.5,1.0)".
class VariableNames {
 public:
  VariableNames() = default;
  explicit VariableNames(std::vector<std::string> labels, bool frozen = true);

  /// Looks up a label; unknown labels are registered unless frozen.
  VariableId resolve(std::string_view label);
  std::optional<VariableId> find(std::string_view label) const;
  const std::string& label(VariableId v) const;
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::uint32_t> index_;
  bool frozen_ = false;
};

/// "x1^2*x2"; the unit monomial is "1".
std::string format_monomial(const Monomial& m, const VariableNames& names);
/// "<x1*x2, x3>"; zero ideal "<0>", unit ideal "<1>".
std::string format_concept(const Concept& J, const VariableNames& names);
/// "x1^2*x2 - 3/2*x3"; zero polynomial "0".
std::string format_polynomial(const Polynomial& p, const VariableNames& names);

Monomial parse_monomial(std::string_view text, VariableNames& names);
/// Comma-separated monomials, optionally wrapped in angle brackets.
Concept parse_concept(std::string_view text, VariableNames& names);
Polynomial parse_polynomial(std::string_view text, VariableNames& names, const GrevlexOrder& order = {});
/// Comma-separated polynomials, optionally wrapped in angle brackets.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, VariableNames& names,
                                              const GrevlexOrder& order = {});

}  // namespace amr
