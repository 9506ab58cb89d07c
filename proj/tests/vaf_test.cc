// Copyright 2026 The argagree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "argagree/vaf.h"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "argagree/agreement.h"
#include "argagree/dynamics.h"
#include "argagree/error.h"
#include "argagree/synth.h"
#include "gtest/gtest.h"
#include "support/fixtures.h"

namespace argagree {
namespace {

using ::argagree::testing::Af;
using ::argagree::testing::ThreeAgentValueScenario;
using ::argagree::testing::Valuation;
using ::argagree::testing::ValuesOf;

constexpr SimilarityKind kH = SimilarityKind::kHamming;

std::string ErrorCode(auto&& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.code();
  }
  return "none";
}

ValueFramework Build(ArgFramework af, std::vector<PreferenceRelation> prefs) {
  const std::vector<std::string> args = af.arguments();
  return ValueFramework(std::move(af), ValuesOf(args), Valuation(args),
                        std::move(prefs));
}

TEST(ValueFrameworkTest, RejectsInvalidInput) {
  const std::vector<std::string> ab = {"a", "b"};
  EXPECT_EQ(ErrorCode([] { Build(Af({"a"}, {{"a", "a"}}), {{}}); }),
            "vaf.self_attack");
  EXPECT_EQ(ErrorCode([] { Build(Af({"a"}), {}); }), "vaf.no_agents");
  EXPECT_EQ(
      ErrorCode([&] { ValueFramework(Af(ab), {"a_v"}, {{"a", "a_v"}}, {{}}); }),
      "vaf.valuation_incomplete");
  EXPECT_EQ(ErrorCode([&] {
              ValueFramework(Af(ab), {"a_v"}, {{"a", "a_v"}, {"b", "z"}}, {{}});
            }),
            "vaf.valuation_unknown_value");
  EXPECT_EQ(ErrorCode([] { Build(Af({"a", "b"}), {{{"a_v", "a_v"}}}); }),
            "vaf.preference_reflexive");
  EXPECT_EQ(ErrorCode([] {
              Build(Af({"a", "b"}), {{{"a_v", "b_v"}, {"b_v", "a_v"}}});
            }),
            "vaf.preference_symmetric");
  EXPECT_EQ(ErrorCode([] {
              Build(Af({"a", "b", "c"}), {{{"a_v", "b_v"}, {"b_v", "c_v"}}});
            }),
            "vaf.preference_not_transitive");
  EXPECT_EQ(ErrorCode([] { Build(Af({"a"}), {{{"a_v", "q"}}}); }),
            "vaf.preference_unknown_value");
  EXPECT_EQ(ErrorCode([] { ValueFramework(Af({"a"}), {}, {}, {{}}); }),
            "vaf.no_values");
}

TEST(ValueFrameworkTest, SharedValuesAreAllowed) {
  const ValueFramework vaf(Af({"a", "b"}, {{"a", "b"}}), {"v"},
                           {{"a", "v"}, {"b", "v"}}, {{}});
  EXPECT_EQ(vaf.ValueOf("b"), "v");
}

TEST(SubjectiveFrameworkTest, FiltersDefeatedAttacks) {
  const ValueFramework& vaf = ThreeAgentValueScenario().vaf;
  EXPECT_EQ(SubjectiveFramework(vaf, 0).attacks(),
            (std::vector<Attack>{{"a", "b"}, {"c", "b"}, {"d", "c"}}));
  EXPECT_EQ(SubjectiveFramework(vaf, 2).attacks(),
            (std::vector<Attack>{{"a", "b"}, {"b", "a"}, {"c", "b"}}));
  EXPECT_EQ(ErrorCode([&] { SubjectiveFramework(vaf, 3); }),
            "vaf.agent_out_of_range");
  const ValueFramework plain = Build(testing::ChainAf(), {{}});
  EXPECT_EQ(SubjectiveFramework(plain, 0), testing::ChainAf());
}

TEST(ProfileTest, PerAgentExtensions) {
  const AgreementProfile profile =
      ToAgreementProfile(ThreeAgentValueScenario());
  ASSERT_EQ(profile.agents.size(), 3u);
  EXPECT_EQ(profile.agents[0], (ExtensionSet{{"a", "d"}}));
  EXPECT_EQ(profile.agents[1], (ExtensionSet{{"b", "d"}}));
  EXPECT_EQ(profile.agents[2], (ExtensionSet{{"a", "c", "d"}}));
  const AgreementProfile opposed =
      ToAgreementProfile(testing::OpposedValueScenario());
  EXPECT_EQ(opposed.agents[0], (ExtensionSet{{"a", "c"}}));
  EXPECT_EQ(opposed.agents[1], (ExtensionSet{{"b"}}));
}

TEST(ProfileTest, AgentsWithoutPreferencesShareExtensions) {
  const ValueScenario scn{Build(testing::TwoRivalAttackers(), {{}, {}}),
                          {"a", "b"},
                          SemanticsKind::kPreferred};
  const AgreementProfile profile = ToAgreementProfile(scn);
  for (const ExtensionSet& ext : profile.agents) {
    EXPECT_EQ(ext, Enumerate(testing::TwoRivalAttackers(),
                             SemanticsKind::kPreferred));
  }
}

TEST(ValueDegreeTest, ThreeAgentScenario) {
  const ValueScenario scn = ThreeAgentValueScenario();
  EXPECT_EQ(ValueDegree(scn, DegreeKind::kMin, kH), Degree(1, 2));
  EXPECT_EQ(ValueDegree(scn, DegreeKind::kMean, kH), Degree(3, 4));
  EXPECT_EQ(ValueDegree(scn, DegreeKind::kMedian, kH), Degree(3, 4));
  for (DegreeKind kind : kAllDegreeKinds) {
    EXPECT_EQ(ValueDegree(scn, kind, kH),
              DegreeOfAgreement(ToAgreementProfile(scn), kind, kH));
  }
}

TEST(ValueDegreeTest, OpposedScenarioAndSingleAgent) {
  for (DegreeKind kind : kAllDegreeKinds) {
    EXPECT_EQ(ValueDegree(testing::OpposedValueScenario(), kind, kH),
              Degree(1, 2));
  }
  const ValueScenario single{testing::ChainValueFramework(),
                             {"a", "b", "c"},
                             SemanticsKind::kGrounded};
  const ValueScenario one_agent{
      ValueFramework(single.vaf.af(), single.vaf.values(),
                     single.vaf.valuation(), {single.vaf.preferences()[0]}),
      single.topic, single.sem};
  for (DegreeKind kind : kAllDegreeKinds) {
    EXPECT_EQ(ValueDegree(one_agent, kind, kH), Degree::One());
  }
}

TEST(ValueSatisfactionTest, MatrixOfThreeAgentScenario) {
  const ValueScenario scn = ThreeAgentValueScenario();
  const Degree expected[3][3] = {{Degree(1, 1), Degree(1, 2), Degree(3, 4)},
                                 {Degree(1, 2), Degree(1, 1), Degree(1, 4)},
                                 {Degree(3, 4), Degree(1, 4), Degree(1, 1)}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(ValueTwoAgentSatisfaction(scn, i, j, kH), expected[i][j])
          << i << "," << j;
    }
  }
  EXPECT_EQ(ErrorCode([&] { ValueTwoAgentSatisfaction(scn, 0, 5, kH); }),
            "vaf.agent_out_of_range");
}

TEST(StripValueTest, RemovesEveryPairMentioningValue) {
  const ValueFramework stripped =
      StripValue(ThreeAgentValueScenario().vaf, "b_v");
  EXPECT_EQ(stripped.preferences(),
            (std::vector<PreferenceRelation>{{}, {}, {{"c_v", "d_v"}}}));
  EXPECT_EQ(stripped.af(), ThreeAgentValueScenario().vaf.af());
  EXPECT_EQ(stripped.values(), ThreeAgentValueScenario().vaf.values());
  EXPECT_EQ(StripValue(ThreeAgentValueScenario().vaf, "d_v").preferences()[2],
            PreferenceRelation{});
  EXPECT_EQ(StripValue(testing::ChainValueFramework(), "c_v"),
            testing::ChainValueFramework());
  EXPECT_EQ(ErrorCode([] { StripValue(testing::ChainValueFramework(), "z"); }),
            "vaf.unknown_value");
}

TEST(ValueImpactTest, StrippingSecondValue) {
  const ValueScenario scn = ThreeAgentValueScenario();
  EXPECT_EQ(ValueImpact(scn, "b_v", DegreeKind::kMin, kH), Rational(-1, 4));
  EXPECT_EQ(ValueImpact(scn, "b_v", DegreeKind::kMedian, kH), Rational(-1, 4));
  EXPECT_EQ(ValueImpact(scn, "b_v", DegreeKind::kMean, kH), Rational(-1, 6));
  const ValueScenario stripped{StripValue(scn.vaf, "b_v"), scn.topic, scn.sem};
  EXPECT_EQ(ValueDegree(stripped, DegreeKind::kMin, kH), Degree(3, 4));
  EXPECT_EQ(ValueDegree(stripped, DegreeKind::kMean, kH), Degree(11, 12));
  EXPECT_EQ(ValueDegree(stripped, DegreeKind::kMedian, kH), Degree::One());
  EXPECT_EQ(ValueAgreementDelta(scn, stripped, DegreeKind::kMin, kH),
            Degree(1, 4));
}

TEST(ValueImpactTest, UnreferencedValueHasNoImpact) {
  const ValueScenario scn{testing::ChainValueFramework(),
                          {"a", "b", "c"},
                          SemanticsKind::kPreferred};
  for (DegreeKind kind : kAllDegreeKinds) {
    EXPECT_EQ(ValueImpact(scn, "c_v", kind, kH), Rational(0));
  }
  EXPECT_EQ(ValueSatisfactionImpact(scn, "c_v", 0, 1, kH), Rational(0));
}

TEST(ValueImpactTest, SatisfactionImpactStripsBothAgents) {
  const ValueScenario scn = ThreeAgentValueScenario();
  // Without b_v both first agents share the unfiltered framework.
  EXPECT_EQ(ValueSatisfactionImpact(scn, "b_v", 0, 1, kH), Rational(-1, 2));
}

TEST(ValueExpansionTest, ChainExpansions) {
  const ValueFramework initial = testing::ChainValueFramework();
  const ValueFramework consistent = testing::ChainValueExpansion(
      {{{"a_v", "b_v"}}, {{"b_v", "a_v"}, {"d_v", "a_v"}}});
  // Transitive closure of the second agent's relation a_v > b_v, c_v > a_v.
  const ValueFramework inconsistent = testing::ChainValueExpansion(
      {{{"a_v", "b_v"}}, {{"a_v", "b_v"}, {"c_v", "a_v"}, {"c_v", "b_v"}}});
  EXPECT_TRUE(IsValueNormalExpansion(initial, consistent));
  EXPECT_FALSE(IsValueNormalExpansion(initial, initial));
  EXPECT_EQ(DiagnoseValueExpansion(initial, initial, true),
            ExpansionFailure::kIdentical);
  EXPECT_FALSE(IsValueNormalExpansion(initial, inconsistent));
  EXPECT_EQ(DiagnoseValueExpansion(initial, inconsistent, true),
            ExpansionFailure::kPreferencesRemoved);

  const ArgSet topic{"a", "b"};
  const SemanticsKind sem = SemanticsKind::kPreferred;
  const ValueScenario base{initial, topic, sem};
  EXPECT_FALSE(IsValueNormalExpansion(
      base, ValueScenario{inconsistent, {"a", "b", "d"}, sem}));
  EXPECT_EQ(DiagnoseValueNormalExpansion(
                base, ValueScenario{consistent, {"a", "b", "c"}, sem}),
            ExpansionFailure::kTopicAddsOld);
  EXPECT_TRUE(IsValueNormalExpansion(
      base, ValueScenario{consistent, {"a", "b", "d"}, sem}));
  EXPECT_FALSE(IsValueNormalExpansion(base, base));
  EXPECT_EQ(
      DiagnoseValueNormalExpansion(
          base,
          ValueScenario{consistent, {"a", "b", "d"}, SemanticsKind::kStage}),
      ExpansionFailure::kSemanticsChanged);
}

TEST(ValueExpansionTest, PreferenceBetweenOldValues) {
  const ValueFramework initial = testing::ChainValueFramework();
  const ValueFramework extra = testing::ChainValueExpansion(
      {{{"a_v", "b_v"}, {"a_v", "c_v"}}, {{"b_v", "a_v"}}});
  EXPECT_EQ(DiagnoseValueExpansion(initial, extra, true),
            ExpansionFailure::kPreferenceBetweenOld);
  EXPECT_EQ(DiagnoseValueExpansion(initial, extra, false),
            ExpansionFailure::kNone);
}

TEST(ValueDeltaTest, OpposedPair) {
  const ValueScenario before = testing::OpposedValueScenario();
  const ValueScenario after = testing::OpposedValueExpansion();
  EXPECT_TRUE(IsValueNormalExpansion(before, after));
  for (DegreeKind kind : kAllDegreeKinds) {
    EXPECT_EQ(ValueDegree(after, kind, kH), Degree::One());
    EXPECT_EQ(ValueAgreementDelta(before, after, kind, kH), Degree(1, 2));
    EXPECT_EQ(ValueAgreementDelta(before, before, kind, kH), Degree::Zero());
  }
}

struct GeneratedPair {
  ValueScenario before;
  ValueScenario after;
};

GeneratedPair GeneratePair(std::uint64_t seed, SemanticsKind sem) {
  std::mt19937_64 rng(seed);
  GenConfig cfg;
  cfg.seed = seed;
  cfg.agents = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
  const std::size_t added =
      std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  ValueScenario before = GenerateInitialScenario(cfg, n, sem);
  ValueScenario after = GenerateExpansion(cfg, before, added, false);
  return {std::move(before), std::move(after)};
}

bool CmHoldsFor(const ArgFramework& before, const ArgFramework& after,
                const ArgSet& e) {
  return CmCondition(before, after, e);
}

TEST(ValuePropertyTest, SubjectiveFrameworksOnlyRemoveAttacks) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const GeneratedPair pair = GeneratePair(seed, SemanticsKind::kNaive);
    for (std::size_t i = 0; i < pair.before.vaf.agent_count(); ++i) {
      const ArgFramework sub = SubjectiveFramework(pair.before.vaf, i);
      for (const Attack& at : sub.attacks()) {
        EXPECT_TRUE(pair.before.vaf.af().HasAttack(at.from, at.to));
      }
      EXPECT_EQ(sub.arguments(), pair.before.vaf.af().arguments());
    }
  }
}

TEST(ValuePropertyTest, SubjectivePairsAreNormalExpansions) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const GeneratedPair pair = GeneratePair(seed, SemanticsKind::kNaive);
    ASSERT_TRUE(IsValueNormalExpansion(pair.before, pair.after));
    for (std::size_t i = 0; i < pair.before.vaf.agent_count(); ++i) {
      EXPECT_TRUE(IsNormalExpansion(SubjectiveFramework(pair.before.vaf, i),
                                    SubjectiveFramework(pair.after.vaf, i)))
          << "seed " << seed << " agent " << i;
    }
  }
}

TEST(ValuePropertyTest, StrippedRelationsStayValid) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const GeneratedPair pair = GeneratePair(seed, SemanticsKind::kNaive);
    for (const std::string& v : pair.after.vaf.values()) {
      const ValueFramework stripped = StripValue(pair.after.vaf, v);
      for (const PreferenceRelation& rel : stripped.preferences()) {
        EXPECT_NO_THROW(ValidatePreferenceRelation(rel, stripped.values()));
        for (const auto& [u, w] : rel) {
          EXPECT_NE(u, v);
          EXPECT_NE(w, v);
        }
      }
    }
  }
}

TEST(ValuePropertyTest, NaiveCoveringExtensionsKeepFullAgreement) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const GeneratedPair pair = GeneratePair(seed, SemanticsKind::kNaive);
    bool all_agents = true;
    for (std::size_t i = 0; i < pair.before.vaf.agent_count(); ++i) {
      const ArgFramework sub_before = SubjectiveFramework(pair.before.vaf, i);
      const ArgFramework sub_after = SubjectiveFramework(pair.after.vaf, i);
      const ExtensionSet ext = Enumerate(sub_before, SemanticsKind::kNaive);
      all_agents = all_agents &&
                   std::any_of(ext.begin(), ext.end(), [&](const ArgSet& e) {
                     return pair.before.topic.IsSubsetOf(e) &&
                            CmHoldsFor(sub_before, sub_after, e);
                   });
    }
    if (!all_agents) continue;
    ++checked;
    for (DegreeKind kind : kAllDegreeKinds) {
      EXPECT_EQ(ValueDegree(pair.before, kind, kH), Degree::One());
      EXPECT_EQ(ValueDegree(pair.after, kind, kH), Degree::One());
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(ValuePropertyTest, DeltaUpperBoundHolds) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const GeneratedPair pair = GeneratePair(seed, SemanticsKind::kNaive);
    const AgreementProfile before_profile = ToAgreementProfile(pair.before);
    bool conditions = true;
    for (std::size_t i = 0; i < pair.before.vaf.agent_count(); ++i) {
      const ArgFramework sub_before = SubjectiveFramework(pair.before.vaf, i);
      const ArgFramework sub_after = SubjectiveFramework(pair.after.vaf, i);
      for (const ArgSet& e : before_profile.agents[i]) {
        conditions = conditions && CmHoldsFor(sub_before, sub_after, e);
      }
    }
    const Degree before = ValueDegree(pair.before, DegreeKind::kMin, kH);
    const Degree after = ValueDegree(pair.after, DegreeKind::kMin, kH);
    EXPECT_GE(before, MinAgreementLowerBound(pair.before.topic.size()));
    if (!conditions || after > before) continue;
    ++checked;
    const ArgSet core =
        Intersection(pair.before.topic, MaxCommonCore(before_profile.agents));
    EXPECT_LE(
        ValueAgreementDelta(pair.before, pair.after, DegreeKind::kMin, kH),
        DeltaUpperBound(pair.before.topic, pair.after.topic.size(),
                        core.size()))
        << "seed " << seed;
  }
  EXPECT_GT(checked, 0);
}

}  // namespace
}  // namespace argagree
