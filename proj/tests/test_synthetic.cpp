#include <gtest/gtest.h>

#include <set>

#include "amr/error.hpp"
#include "amr/invariance.hpp"
#include "amr/synthetic.hpp"

using namespace amr;

namespace {

const AttributeSchema& full() { return AttributeSchema::iraven_full(); }

/// Value of attribute `a` in slot `slot` of a panel, by position order.
VariableId value(const Concept& panel, Attribute a, std::size_t slot) {
  auto ents = decode_panel(panel, full());
  std::sort(ents.begin(), ents.end());
  const PanelEntity& e = ents.at(slot);
  switch (a) {
    case Attribute::kType: return e.type;
    case Attribute::kColor: return e.color;
    case Attribute::kSize: return e.size;
    default: return e.pos;
  }
}

constexpr RuleFamily kFamilies[] = {RuleFamily::kConstant, RuleFamily::kSetPermutation, RuleFamily::kProgression,
                                    RuleFamily::kArithmetic};
constexpr Configuration kConfigs[] = {Configuration::kCenter, Configuration::kTwoEntity, Configuration::kFourGrid};

}  // namespace

TEST(Synthetic, LabelsRoundTrip) {
  for (RuleFamily f : kFamilies) EXPECT_EQ(parse_family(family_label(f)), f);
  for (Configuration c : kConfigs) EXPECT_EQ(parse_configuration(configuration_label(c)), c);
  EXPECT_EQ(owning_module(RuleFamily::kProgression), "comp");
  EXPECT_FALSE(parse_family("fractal").has_value());
}

TEST(Synthetic, DeterministicInSeed) {
  const SyntheticConfig c = sample_family_config(RuleFamily::kProgression, Configuration::kTwoEntity, 4);
  EXPECT_EQ(generate_synthetic(c, 4), generate_synthetic(c, 4));
  EXPECT_NE(generate_synthetic(c, 4), generate_synthetic(c, 5));
}

TEST(Synthetic, RejectsUnsupportedRules) {
  SyntheticConfig c;
  c.type.family = RuleFamily::kArithmetic;
  EXPECT_THROW(generate_synthetic(c, 1), PreconditionError);
  SyntheticConfig z;
  z.color.family = RuleFamily::kProgression;
  z.color.delta = 0;
  EXPECT_THROW(generate_synthetic(z, 1), PreconditionError);
}

TEST(Synthetic, ProgressionRowsStepByDelta) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SyntheticConfig c = sample_family_config(RuleFamily::kProgression, Configuration::kCenter, seed);
    const Attribute a = *target_attribute(c);
    const int delta = c.rule(a).delta;
    const RpmInstance inst = generate_synthetic(c, seed);
    const ConceptMatrix M = inst.with_candidate(*inst.ground_truth);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t i = 0; i + 1 < 3; ++i) {
        EXPECT_EQ(full().shift(value(M.cells[3 * r + i], a, 0), delta), value(M.cells[3 * r + i + 1], a, 0));
      }
    }
  }
}

TEST(Synthetic, SetPermutationIsRecoveredByInterModule) {
  ReasoningContext ctx(full(), {});
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const SyntheticConfig c = sample_family_config(RuleFamily::kSetPermutation, Configuration::kCenter, seed);
    const Attribute a = *target_attribute(c);
    const RpmInstance inst = generate_synthetic(c, seed);
    const ConceptMatrix M = inst.with_candidate(*inst.ground_truth);
    for (std::size_t r = 0; r < 3; ++r) {
      const PatternSet ps = p_inter(M.row(r), ctx);
      const bool found = std::any_of(ps.begin(), ps.end(), [&](const Pattern& p) {
        return std::holds_alternative<InterPattern>(p) && pattern_attribute(p) == a;
      });
      EXPECT_TRUE(found) << "seed " << seed << " row " << r;
    }
  }
}

TEST(Synthetic, CandidatesAreDistinctAndDistractorsChangeOneSlot) {
  for (RuleFamily f : kFamilies) {
    for (Configuration cfg : kConfigs) {
      const std::uint64_t seed = 17;
      const SyntheticConfig c = sample_family_config(f, cfg, seed);
      const RpmInstance inst = generate_synthetic(c, seed);
      ASSERT_TRUE(inst.ground_truth.has_value());
      validate_instance(inst);
      EXPECT_EQ(std::set<Concept>(inst.answers.begin(), inst.answers.end()).size(), 8u);
      const auto truth = decode_panel(inst.answers[*inst.ground_truth], full());
      std::size_t on_target = 0;
      for (std::size_t i = 0; i < 8; ++i) {
        if (i == *inst.ground_truth) continue;
        const auto other = decode_panel(inst.answers[i], full());
        ASSERT_EQ(other.size(), truth.size());
        EXPECT_EQ(inst.answers[i].size(), inst.answers[*inst.ground_truth].size());
        if (const auto t = target_attribute(c)) {
          bool differs = false;
          for (std::size_t s = 0; s < truth.size(); ++s) {
            differs = differs || value(inst.answers[i], *t, s) != value(inst.answers[*inst.ground_truth], *t, s);
          }
          on_target += differs ? 1 : 0;
        }
      }
      if (target_attribute(c)) {
        EXPECT_GE(on_target, 3u) << family_label(f) << "/" << configuration_label(cfg);
      }
    }
  }
}

TEST(Synthetic, PlantedPatternIsSharedByFirstTwoRows) {
  ReasoningContext ctx(full(), {});
  for (RuleFamily f : kFamilies) {
    const std::uint64_t seed = 23;
    const SyntheticConfig c = sample_family_config(f, Configuration::kCenter, seed);
    const RpmInstance inst = generate_synthetic(c, seed);
    const ConceptMatrix Q = inst.question_matrix();
    const TaggedPatternSet p12 = intersect_patterns(p_all_row(Q, 0, ctx), p_all_row(Q, 1, ctx));
    const Attribute a = target_attribute(c).value_or(Attribute::kType);
    const std::string owner(owning_module(f));
    const bool found = std::any_of(p12.begin(), p12.end(), [&](const TaggedPattern& p) {
      if (pattern_attribute(p.pattern) != a) return false;
      switch (p.pattern.index()) {
        case 0: return owner == "intra";
        case 1: return owner == "inter";
        case 2: return owner == "comp";
        default: return owner == "binary";
      }
    });
    EXPECT_TRUE(found) << family_label(f);
  }
}
