#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>

#include "amr/error.hpp"
#include "amr/generation.hpp"
#include "amr/invariance.hpp"
#include "amr/io.hpp"
#include "support.hpp"

using namespace amr;
using amr::testing::running;
using amr::testing::running_example_matrix;

namespace {

const AttributeSchema& small() { return AttributeSchema::running_example(); }

std::vector<Concept> sorted(std::vector<Concept> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Concept> concepts(std::initializer_list<const char*> texts) {
  std::vector<Concept> out;
  for (const char* t : texts) out.push_back(running(t));
  return sorted(out);
}

SolverConfig unit_deltas() {
  SolverConfig c;
  c.deltas = {1, -1};
  return c;
}

RpmInstance running_instance() {
  return load_instance(std::filesystem::path(AMR_DATA_DIR) / "running_example.json", small());
}

}  // namespace

TEST(Example, DecompositionsOfFirstRow) {
  ReasoningContext ctx(small(), {});
  const ConceptMatrix M = running_example_matrix();
  const auto row = M.row(0);
  EXPECT_EQ(sorted(ctx.pd(sum(row))),
            concepts({"<two>", "<avg>", "<left, right>", "<white, gray, black>",
                      "<triangle, square, pentagon, circle>", "<left, gray>", "<square, circle, gray>",
                      "<square, white, gray>", "<circle, gray, black>", "<left, triangle, square, pentagon>",
                      "<right, square, pentagon, circle>", "<right, square, pentagon, white>",
                      "<right, pentagon, circle, black>", "<right, pentagon, white, black>",
                      "<triangle, square, pentagon, white>"}));
  EXPECT_EQ(sorted(ctx.pd(intersect(row))),
            concepts({"<two>", "<avg>", "<left, right>", "<gray>", "<triangle, square>", "<square, pentagon>",
                      "<pentagon, circle>", "<left, triangle>", "<left, square>", "<left, pentagon>",
                      "<right, square>", "<right, pentagon>", "<right, circle>", "<right, white>",
                      "<right, black>", "<triangle, black>", "<pentagon, white>"}));
}

TEST(Example, IntraPatternsOfFirstRow) {
  ReasoningContext ctx(small(), {});
  const PatternSet expected = {IntraPattern{Attribute::kNum}, IntraPattern{Attribute::kPos},
                               IntraPattern{Attribute::kSize}};
  EXPECT_EQ(p_intra(running_example_matrix().row(0), ctx), expected);
}

TEST(Example, InterPatternsOfSecondRow) {
  ReasoningContext ctx(small(), {});
  const PatternSet got = p_inter(running_example_matrix().row(1), ctx);
  const PatternSet expected = {
      InterPattern{Attribute::kColor, concepts({"<white, dgray>", "<gray, dgray>", "<dgray, black>"})},
      InterPattern{Attribute::kType, concepts({"<pentagon>", "<square, circle>", "<hexagon, circle>"})}};
  EXPECT_EQ(got, expected);
}

TEST(Example, CompPatternOfRightEntity) {
  SolverConfig config;
  config.deltas = {1};
  ReasoningContext ctx(small(), config);
  const auto views = split_views(running_example_matrix(), small());
  ASSERT_EQ(views.size(), 3u);
  const PatternSet expected = {CompPattern{Attribute::kType, 1}};
  EXPECT_EQ(p_comp(views[2].row(0), ctx), expected);
}

namespace {

bool has_binary_on(const PatternSet& ps, Attribute a) {
  return std::any_of(ps.begin(), ps.end(), [&](const Pattern& p) { return pattern_attribute(p) == a; });
}

}  // namespace

TEST(Example, NoCountPatternsInFirstTwoRows) {
  ReasoningContext ctx(small(), {});
  const ConceptMatrix M = running_example_matrix();
  // Every panel holds two entities: 2 + 2 and 2 - 2 both miss 2.
  EXPECT_FALSE(has_binary_on(p_binary(M.row(0), ctx), Attribute::kNum));
  EXPECT_FALSE(has_binary_on(p_binary(M.row(1), ctx), Attribute::kNum));
  EXPECT_TRUE(p_binary(M.row(0), ctx).empty());
  // Row 2 shares size index 0 in every panel, and 0 + 0 = 0 - 0 = 0.
  const PatternSet row2 = p_binary(M.row(1), ctx);
  EXPECT_EQ(row2, (PatternSet{BinaryPattern{Attribute::kSize, {BinaryOp::kAdd}},
                              BinaryPattern{Attribute::kSize, {BinaryOp::kSub}}}));
}

TEST(WorkedExample, ThirteenSharedPatternsWithUnitDeltas) {
  ReasoningContext ctx(small(), unit_deltas());
  const ConceptMatrix M = running_example_matrix();
  const auto p12 = intersect_patterns(p_all_row(M, 0, ctx), p_all_row(M, 1, ctx));
  std::vector<std::string> got;
  for (const auto& p : p12) got.push_back(format_tagged(p, small()));
  std::sort(got.begin(), got.end());
  std::vector<std::string> expected = {
      "intra(num) @ full",       "intra(num) @ bar(left)",  "intra(num) @ bar(right)",
      "intra(pos) @ full",       "intra(pos) @ bar(left)",  "intra(pos) @ bar(right)",
      "intra(color) @ bar(right)", "intra(size) @ full",    "intra(size) @ bar(left)",
      "intra(size) @ bar(right)", "inter(type, {<circle>, <pentagon>, <square>}) @ bar(left)",
      "inter(color, {<black>, <gray>, <white>}) @ bar(left)", "comp(type, 1) @ bar(right)"};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(got, expected);
}

TEST(WorkedExample, OnlyFullViewSizePatternConflictsInGeneration) {
  ReasoningContext ctx(small(), unit_deltas());
  const ConceptMatrix M = running_example_matrix();
  const auto p12 = intersect_patterns(p_all_row(M, 0, ctx), p_all_row(M, 1, ctx));
  const auto views = split_views(M, small());
  std::vector<std::string> conflicting;
  for (const auto& p : p12) {
    const auto view = std::find_if(views.begin(), views.end(), [&](const ConceptMatrix& v) { return v.view == p.view; });
    ASSERT_NE(view, views.end());
    if (inverse(p.pattern, view->row(2), ctx).is_zero()) conflicting.push_back(format_tagged(p, small()));
  }
  EXPECT_EQ(conflicting, std::vector<std::string>{"intra(size) @ full"});
}

TEST(WorkedExample, SelectionPicksTheCorrectAnswerUniquely) {
  const RpmInstance inst = running_instance();
  ReasoningContext ctx(small(), unit_deltas());
  const SelectionReport r = select_answer(inst, ctx);
  EXPECT_EQ(r.row_patterns.size(), 13u);
  EXPECT_EQ(r.com_pattern, (std::vector<std::size_t>{12, 12, 12, 13, 12, 11, 11, 12}));
  EXPECT_EQ(r.chosen_index, 3u);
  EXPECT_EQ(r.tie_size, 1u);
  EXPECT_EQ(r.matched[3].size(), 13u);

  ReasoningContext wide(small(), {});
  const SelectionReport w = select_answer(inst, wide);
  EXPECT_EQ(w.row_patterns.size(), 19u);
  EXPECT_EQ(w.chosen_index, 3u);
  EXPECT_EQ(w.tie_size, 1u);
}

TEST(Modules, DisablingEveryModuleLeavesAnEightWayTie) {
  SolverConfig config;
  config.modules = parse_modules("none");
  ReasoningContext ctx(small(), config);
  const SelectionReport r = select_answer(running_instance(), ctx);
  EXPECT_EQ(r.tie_size, 8u);
  EXPECT_EQ(r.chosen_index, 0u);
}

TEST(Modules, ParseAndFormat) {
  EXPECT_EQ(parse_modules("intra,comp"), (ModuleSet{true, false, true, false}));
  EXPECT_EQ(parse_modules("all"), ModuleSet{});
  EXPECT_EQ(format_modules(parse_modules("inter,binary")), "inter,binary");
  EXPECT_THROW(parse_modules("intra,bogus"), PreconditionError);
}

TEST(Config, ZeroDeltaIsRejected) {
  SolverConfig c;
  c.deltas = {1, 0};
  EXPECT_THROW(validate_config(c), PreconditionError);
}

TEST(BinaryOps, IntegerSemantics) {
  EXPECT_EQ(apply_op(BinaryOp::kAdd, 2, 3), 5);
  EXPECT_EQ(apply_op(BinaryOp::kSub, 2, 3), -1);
  EXPECT_EQ(apply_op(BinaryOp::kMul, 2, 3), 6);
  EXPECT_EQ(apply_op(BinaryOp::kDiv, 6, 3), 2);
  EXPECT_FALSE(apply_op(BinaryOp::kDiv, 7, 3).has_value());
  EXPECT_FALSE(apply_op(BinaryOp::kDiv, 7, 0).has_value());
  EXPECT_EQ(parse_op('-'), BinaryOp::kSub);
  EXPECT_FALSE(parse_op('%').has_value());
}

TEST(BinaryPatterns, CountProgressionIsAddition) {
  const auto& s = small();
  ReasoningContext ctx(s, {});
  const std::vector<Concept> row = {running("<one*left*square*black*avg>"), running("<one*left*square*black*avg>"),
                                    running("<two*left*square*black*avg, two*right*square*black*avg>")};
  const PatternSet got = p_binary(row, ctx);
  EXPECT_TRUE(got.count(BinaryPattern{Attribute::kNum, {BinaryOp::kAdd}}));
  EXPECT_FALSE(got.count(BinaryPattern{Attribute::kNum, {BinaryOp::kSub}}));
}

namespace {

SelectionOutcome outcome(std::vector<std::size_t> scores, std::size_t truth) {
  SelectionOutcome o;
  o.report.com_pattern = std::move(scores);
  o.ground_truth = truth;
  return o;
}

}  // namespace

TEST(WeightedAccuracy, AllCorrectIsOne) {
  const std::vector<SelectionOutcome> batch = {outcome({1, 5, 2, 0, 0, 0, 0, 0}, 1),
                                               outcome({9, 5, 2, 0, 0, 0, 0, 0}, 0)};
  EXPECT_EQ(weighted_accuracy(batch), Rational(1));
}

TEST(WeightedAccuracy, EightWayTieScoresOneEighth) {
  const std::vector<SelectionOutcome> batch = {outcome(std::vector<std::size_t>(8, 4), 6)};
  EXPECT_EQ(weighted_accuracy(batch), Rational(1, 8));
}

TEST(WeightedAccuracy, MixedBatch) {
  const std::vector<SelectionOutcome> batch = {outcome({3, 3, 0, 0, 0, 0, 0, 0}, 1),
                                               outcome({3, 1, 0, 0, 0, 0, 0, 0}, 1),
                                               outcome({1, 3, 0, 0, 0, 0, 0, 0}, 1)};
  // (1/2 + 0 + 1) / 3.
  EXPECT_EQ(weighted_accuracy(batch), Rational(1, 2));
  EXPECT_THROW(weighted_accuracy(std::span<const SelectionOutcome>{}), PreconditionError);
}
