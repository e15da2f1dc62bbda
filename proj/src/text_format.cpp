#include "amr/text_format.hpp"

#include <cctype>
#include <sstream>

#include "amr/error.hpp"

namespace amr {

VariableNames::VariableNames(std::vector<std::string> labels, bool frozen) : frozen_(frozen) {
  for (auto& l : labels) {
    if (!index_.emplace(l, static_cast<std::uint32_t>(labels_.size())).second) {
      throw PreconditionError("duplicate variable label '" + l + "'");
    }
    labels_.push_back(std::move(l));
  }
}

VariableId VariableNames::resolve(std::string_view label) {
  if (auto v = find(label)) return *v;
  if (frozen_) throw ParseError("unknown variable '" + std::string(label) + "'");
  const auto id = static_cast<std::uint32_t>(labels_.size());
  labels_.emplace_back(label);
  index_.emplace(labels_.back(), id);
  return VariableId{id};
}

std::optional<VariableId> VariableNames::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return VariableId{it->second};
}

const std::string& VariableNames::label(VariableId v) const {
  if (v.index >= labels_.size()) throw PreconditionError("variable id out of range");
  return labels_[v.index];
}

std::string format_monomial(const Monomial& m, const VariableNames& names) {
  if (m.is_unit()) return "1";
  std::string out;
  for (const auto& f : m.factors()) {
    if (!out.empty()) out += '*';
    out += names.label(f.var);
    if (f.exponent > 1) out += '^' + std::to_string(f.exponent);
  }
  return out;
}

std::string format_concept(const Concept& J, const VariableNames& names) {
  if (J.is_zero()) return "<0>";
  std::string out = "<";
  bool first = true;
  for (const Monomial& m : J.mingen()) {
    if (!first) out += ", ";
    out += format_monomial(m, names);
    first = false;
  }
  return out + ">";
}

std::string format_polynomial(const Polynomial& p, const VariableNames& names) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : p.terms()) {
    Rational c = t.coefficient;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    const bool unit_coeff = c == 1;
    if (!unit_coeff || t.monomial.is_unit()) out << c.get_str();
    if (!t.monomial.is_unit()) {
      if (!unit_coeff) out << '*';
      out << format_monomial(t.monomial, names);
    }
    first = false;
  }
  return out.str();
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string read_digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  static bool starts_label(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '#' || c == '(';
  }
  static bool continues_label(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#' || c == '.' || c == '(';
  }

  std::string read_label() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && continues_label(text_[pos_])) {
      if (text_[pos_] == '(') {
        int depth = 0;
        do {
          if (text_[pos_] == '(') ++depth;
          if (text_[pos_] == ')') --depth;
          ++pos_;
        } while (pos_ < text_.size() && depth > 0);
        if (depth != 0) fail("unbalanced parenthesis in variable label");
      } else {
        ++pos_;
      }
    }
    if (start == pos_) fail("expected a variable");
    return std::string(text_.substr(start, pos_ - start));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Parses factor ('*' factor)* into a coefficient and monomial.
Term parse_term(Cursor& cur, VariableNames& names) {
  Term term{Rational(1), Monomial()};
  std::vector<Monomial::Factor> factors;
  do {
    char c = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(cur.read_digits());
      if (cur.consume('/')) value /= Rational(cur.read_digits());
      term.coefficient *= value;
    } else if (Cursor::starts_label(c)) {
      VariableId v = names.resolve(cur.read_label());
      std::uint32_t e = 1;
      if (cur.consume('^')) e = static_cast<std::uint32_t>(std::stoul(cur.read_digits()));
      factors.push_back({v, e});
    } else {
      cur.fail("expected a coefficient or variable");
    }
  } while (cur.consume('*'));
  term.monomial = Monomial::from_factors(std::move(factors));
  return term;
}

std::vector<std::string_view> split_top_level(std::string_view text) {
  text = text.substr(text.find_first_not_of(" \t\n") == std::string_view::npos
                         ? text.size()
                         : text.find_first_not_of(" \t\n"));
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (!text.empty() && text.front() == '<') {
    if (text.back() != '>') throw ParseError("unterminated '<' in '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(text.substr(start));
  return parts;
}

}  // namespace

Monomial parse_monomial(std::string_view text, VariableNames& names) {
  Cursor cur(text);
  Term t = parse_term(cur, names);
  if (!cur.done()) cur.fail("trailing input");
  if (t.coefficient != 1) cur.fail("monomials carry no coefficient");
  return t.monomial;
}

Concept parse_concept(std::string_view text, VariableNames& names) {
  std::vector<Monomial> gens;
  for (std::string_view part : split_top_level(text)) {
    Cursor probe(part);
    if (probe.done()) continue;
    if (probe.peek() == '0') {
      probe.read_digits();
      if (probe.done()) continue;  // the zero generator contributes nothing
    }
    gens.push_back(parse_monomial(part, names));
  }
  return Concept(std::move(gens));
}

Polynomial parse_polynomial(std::string_view text, VariableNames& names, const GrevlexOrder& order) {
  Cursor cur(text);
  std::vector<Term> terms;
  bool negative = false;
  if (cur.consume('-')) negative = true;
  else cur.consume('+');
  while (true) {
    Term t = parse_term(cur, names);
    if (negative) t.coefficient = -t.coefficient;
    terms.push_back(std::move(t));
    if (cur.done()) break;
    if (cur.consume('+')) negative = false;
    else if (cur.consume('-')) negative = true;
    else cur.fail("expected '+' or '-'");
  }
  return Polynomial(std::move(terms), order);
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, VariableNames& names,
                                              const GrevlexOrder& order) {
  std::vector<Polynomial> out;
  for (std::string_view part : split_top_level(text)) {
    Cursor probe(part);
    if (probe.done()) continue;
    out.push_back(parse_polynomial(part, names, order));
  }
  return out;
}

}  // namespace amr
