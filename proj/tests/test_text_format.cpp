#include <gtest/gtest.h>

#include "amr/error.hpp"
#include "amr/text_format.hpp"

using namespace amr;

TEST(VariableNames, FrozenRejectsUnknownLabels) {
  VariableNames names({"x", "y"}, true);
  EXPECT_EQ(names.resolve("y").index, 1u);
  EXPECT_THROW(names.resolve("z"), ParseError);
  EXPECT_FALSE(names.find("z").has_value());
}

TEST(VariableNames, OpenRegistersOnFirstUse) {
  VariableNames names;
  EXPECT_EQ(names.resolve("b").index, 0u);
  EXPECT_EQ(names.resolve("a").index, 1u);
  EXPECT_EQ(names.resolve("b").index, 0u);
  EXPECT_EQ(names.size(), 2u);
}

TEST(TextFormat, MonomialRoundTrip) {
  VariableNames names({"x1", "x2", "x3"}, true);
  const Monomial m = parse_monomial("x2*x1^2*x1", names);
  EXPECT_EQ(format_monomial(m, names), "x1^3*x2");
  EXPECT_EQ(format_monomial(Monomial(), names), "1");
  EXPECT_EQ(parse_monomial("1", names), Monomial());
}

TEST(TextFormat, ConceptRoundTripAndSpecialIdeals) {
  VariableNames names({"x", "y", "z"}, true);
  const Concept J = parse_concept("<y*z, x, x*y>", names);
  EXPECT_EQ(format_concept(J, names), "<y*z, x>");
  EXPECT_EQ(parse_concept(format_concept(J, names), names), J);
  EXPECT_EQ(format_concept(Concept::zero(), names), "<0>");
  EXPECT_EQ(format_concept(Concept::unit(), names), "<1>");
  EXPECT_TRUE(parse_concept("<0>", names).is_zero());
  EXPECT_TRUE(parse_concept("<1>", names).is_unit());
}

TEST(TextFormat, TupleLabelsParseAsSingleVariables) {
  VariableNames names({"(0.5,0.5,1.0)", "#255"}, true);
  const Monomial m = parse_monomial("(0.5,0.5,1.0)*#255", names);
  EXPECT_EQ(m.support_size(), 2u);
  EXPECT_EQ(format_monomial(m, names), "(0.5,0.5,1.0)*#255");
}

TEST(TextFormat, PolynomialRoundTrip) {
  VariableNames names({"x", "y", "z"}, true);
  const Polynomial p = parse_polynomial("-3/2*z + x^2*y - y^3 + 0*x + 2", names);
  EXPECT_EQ(format_polynomial(p, names), "x^2*y - y^3 - 3/2*z + 2");
  EXPECT_EQ(parse_polynomial(format_polynomial(p, names), names), p);
  EXPECT_EQ(format_polynomial(Polynomial(), names), "0");
  EXPECT_EQ(parse_polynomial_list("<x - y, z>", names).size(), 2u);
}

TEST(TextFormat, MalformedInputRaisesParseError) {
  VariableNames names({"x", "y"}, true);
  EXPECT_THROW(parse_monomial("x^", names), ParseError);
  EXPECT_THROW(parse_concept("<x, y", names), ParseError);
  EXPECT_THROW(parse_polynomial("x + * y", names), ParseError);
  EXPECT_THROW(parse_monomial("x^-1", names), ParseError);
}
