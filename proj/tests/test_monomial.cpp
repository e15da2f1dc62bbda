#include <gtest/gtest.h>

#include "amr/monomial.hpp"

using namespace amr;

namespace {

Monomial m(std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> factors) {
  std::vector<Monomial::Factor> fs;
  for (auto [v, e] : factors) fs.push_back({VariableId{v}, e});
  return Monomial::from_factors(std::move(fs));
}

}  // namespace

TEST(Monomial, UnitHasDegreeZero) {
  Monomial one;
  EXPECT_TRUE(one.is_unit());
  EXPECT_EQ(one.degree(), 0u);
  EXPECT_TRUE(one.divides(m({{0, 2}})));
}

TEST(Monomial, FactorsAreCanonical) {
  EXPECT_EQ(m({{2, 1}, {0, 3}}), m({{0, 3}, {2, 1}}));
  EXPECT_EQ(m({{1, 0}, {0, 1}}), Monomial::variable(VariableId{0}));
  EXPECT_EQ(m({{0, 2}, {2, 1}}).degree(), 3u);
  EXPECT_EQ(m({{0, 2}, {2, 1}}).support_size(), 2u);
}

TEST(Monomial, DivisionAndQuotient) {
  const Monomial a = m({{0, 1}, {1, 2}});
  const Monomial b = m({{0, 2}, {1, 2}, {3, 1}});
  EXPECT_TRUE(a.divides(b));
  EXPECT_FALSE(b.divides(a));
  EXPECT_EQ(a.quotient_of(b), m({{0, 1}, {3, 1}}));
  EXPECT_EQ(a * a.quotient_of(b), b);
}

TEST(Monomial, LcmAndGcdTakeExponentwiseExtremes) {
  const Monomial a = m({{0, 3}, {1, 1}});
  const Monomial b = m({{1, 2}, {2, 1}});
  EXPECT_EQ(lcm(a, b), m({{0, 3}, {1, 2}, {2, 1}}));
  EXPECT_EQ(gcd(a, b), m({{1, 1}}));
  EXPECT_EQ(lcm(a, b) * gcd(a, b), a * b);
}

TEST(Monomial, SquarefreePart) {
  EXPECT_EQ(m({{0, 3}, {4, 2}}).squarefree_part(), m({{0, 1}, {4, 1}}));
  EXPECT_TRUE(m({{0, 1}, {4, 1}}).is_squarefree());
  EXPECT_FALSE(m({{0, 2}}).is_squarefree());
}

TEST(Monomial, GrevlexRanksDegreeFirst) {
  EXPECT_TRUE(grevlex_compare(m({{2, 2}}), m({{0, 1}})) > 0);
  EXPECT_TRUE(grevlex_compare(m({{0, 1}}), m({{1, 1}})) > 0);
  EXPECT_TRUE(grevlex_compare(m({{0, 1}}), m({{0, 1}})) == 0);
}

TEST(Monomial, GrevlexBreaksTiesOnLastVariable) {
  // The smaller exponent in the last differing variable ranks higher.
  EXPECT_TRUE(grevlex_compare(m({{0, 2}}), m({{0, 1}, {1, 1}})) > 0);
  EXPECT_TRUE(grevlex_compare(m({{1, 2}}), m({{0, 1}, {2, 1}})) > 0);
  EXPECT_TRUE(grevlex_compare(m({{0, 1}, {2, 1}}), m({{1, 2}})) < 0);
}

TEST(Monomial, HashAgreesWithEquality) {
  EXPECT_EQ(m({{0, 1}, {3, 2}}).hash(), m({{3, 2}, {0, 1}}).hash());
}
