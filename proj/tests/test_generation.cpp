#include <gtest/gtest.h>

#include "amr/error.hpp"
#include "amr/generation.hpp"
#include "support.hpp"

using namespace amr;
using amr::testing::running;
using amr::testing::running_example_matrix;

namespace {

const AttributeSchema& small() { return AttributeSchema::running_example(); }

}  // namespace

TEST(Generation, WorkedExampleAnswerForEverySeed) {
  SolverConfig config;
  config.deltas = {1, -1};
  ReasoningContext ctx(small(), config);
  const Concept expected = running("<two*left*pentagon*black*avg, two*right*circle*gray*large>");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const GeneratedAnswer g = generate_answer(running_example_matrix(), ctx, seed);
    EXPECT_EQ(g.ideal, expected);
    EXPECT_TRUE(g.random_choices.empty());
    EXPECT_EQ(g.seed, seed);
  }
}

TEST(Generation, DefaultDeltasAgree) {
  ReasoningContext ctx(small(), {});
  EXPECT_EQ(generate_answer(running_example_matrix(), ctx, 3).ideal,
            running("<two*left*pentagon*black*avg, two*right*circle*gray*large>"));
}

TEST(Generation, InverseModulesOnThirdRow) {
  ReasoningContext ctx(small(), {});
  const auto views = split_views(running_example_matrix(), small());
  const auto right = views[2].row(2);
  // Shapes run pentagon, hexagon, so one step further gives circle.
  EXPECT_EQ(inv_comp(Attribute::kType, 1, right, ctx), running("<circle>"));
  EXPECT_EQ(inv_intra(Attribute::kColor, right, ctx), running("<gray>"));
  EXPECT_TRUE(inv_intra(Attribute::kSize, views[0].row(2), ctx).is_zero());
}

TEST(Generation, NoCommonPositionIsAnError) {
  ReasoningContext ctx(small(), {});
  ConceptMatrix M = running_example_matrix();
  M.cells[4] = running("<one*dummy*square*black*avg>");
  EXPECT_THROW(generate_answer(M, ctx, 1), GenerationError);
}

TEST(Similarity, IdenticalPanelsScoreOne) {
  const Concept J = running("<two*left*pentagon*black*avg, two*right*circle*gray*large>");
  const auto r = similarity(J, J, small());
  EXPECT_EQ(r.phi, Rational(1));
  EXPECT_EQ(r.s1_pairs.size(), 2u);
  EXPECT_TRUE(r.s2_only.empty());
  EXPECT_TRUE(r.s3_only.empty());
}

TEST(Similarity, DisjointPositionsScoreZero) {
  const auto r = similarity(running("<one*left*pentagon*black*avg>"), running("<one*right*pentagon*black*avg>"),
                            small());
  EXPECT_EQ(r.phi, Rational(0));
  EXPECT_EQ(r.s2_only.size(), 1u);
  EXPECT_EQ(r.s3_only.size(), 1u);
}

TEST(Similarity, OnlyPositionSharedScoresAQuarter) {
  const auto r = similarity(running("<one*left*pentagon*black*avg>"), running("<one*left*circle*white*small>"),
                            small());
  EXPECT_EQ(r.phi, Rational(1, 4));
}

TEST(Similarity, RepeatedPositionIsRejected) {
  EXPECT_THROW(similarity(running("<left*square, left*circle>"), running("<left*square>"), small()),
               PreconditionError);
}
