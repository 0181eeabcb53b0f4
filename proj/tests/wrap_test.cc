// Copyright 2026 The Authors.
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

#include "powereq/wrap.h"

#include <algorithm>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "powereq/fixtures.h"
#include "powereq/power.h"
#include "powereq/solver.h"
#include "test_util.h"

namespace powereq {
namespace {

constexpr int a = 0, b = 1, c = 2;
constexpr int kEdge = 0;
const Variable x{0};

PowerEquation EdgeTo(PowerElement e) { return Relation<PowerElement>(kEdge, {x, std::move(e)}); }

std::set<PowerEquation> AsSet(const std::vector<PowerEquation>& eqs) {
  return {eqs.begin(), eqs.end()};
}

AlgebraicSet Neighbours(const FiniteStructure& s, int v) {
  return SolveEquation(s, Relation<int>(kEdge, {x, v}), 1);
}

// Checks every invariant the trace promises for `system`.
void ExpectCoherentTrace(const FiniteStructure& s, const PowerSystem& system,
                         const WrapResult& result) {
  const WrapTrace& t = result.trace;
  Classifier classifier(s, system.variables.size());

  std::set<AlgebraicSet> profile_sets;
  for (std::size_t l = 0; l < t.horizon.end() + t.horizon.period; ++l) {
    for (const Equation& eq : ProjectToBase(system, l).equations) {
      profile_sets.insert(classifier.Solutions(eq));
    }
  }
  std::multiset<AlgebraicSet> step_sets;
  for (const MEntry& e : t.m) step_sets.insert(e.cls.solutions);
  ASSERT_EQ(std::set<AlgebraicSet>(step_sets.begin(), step_sets.end()), profile_sets);
  ASSERT_EQ(step_sets.size(), profile_sets.size());
  ASSERT_EQ(t.steps.size(), t.m.size());

  for (const WrapStep& step : t.steps) {
    const MEntry& entry = t.m[step.m_index];
    ASSERT_EQ(classifier.Solutions(entry.representative), entry.cls.solutions);
    const PowerEquation source = Materialize(system, entry.source.source);
    ASSERT_TRUE(std::find(t.s0.begin(), t.s0.end(), source) != t.s0.end());
    for (std::size_t l = 0; l < 3 * t.horizon.end() + 2; ++l) {
      ASSERT_NE(step.in_class.At(l), step.outside.At(l));
      const Equation projected = ProjectEquation(step.equation, l);
      if (step.in_class.At(l)) {
        ASSERT_EQ(classifier.Solutions(projected), entry.cls.solutions) << l;
      } else {
        ASSERT_EQ(projected, ProjectEquation(source, l)) << l;
      }
    }
  }
}

TEST(ComputeMTest, K3Staircase) {
  const FiniteStructure k3 = fixtures::K3();
  const std::vector<MEntry> m = ComputeM(k3, fixtures::WrapExampleSystem());
  std::set<Equation> reps;
  for (const MEntry& e : m) reps.insert(e.representative);
  EXPECT_EQ(reps, (std::set<Equation>{Relation<int>(kEdge, {x, a}), Relation<int>(kEdge, {x, b}),
                                      Relation<int>(kEdge, {x, c})}));
}

TEST(ComputeMTest, SingleEquation) {
  const FiniteStructure k3 = fixtures::K3();
  const std::vector<MEntry> m =
      ComputeM(k3, {{"x"}, {EdgeTo(PowerElement::Constant(a))}, {}});
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].representative, Relation<int>(kEdge, {x, a}));
}

TEST(ComputeMTest, OneLetterGenerator) {
  const FiniteStructure k3 = fixtures::K3();
  const PowerSystem system{
      {"x"}, {}, {Relation<Staircase>(kEdge, {x, Staircase{{b}, PowerElement::Constant(a)}})}};
  std::set<AlgebraicSet> sets;
  for (const MEntry& e : ComputeM(k3, system)) sets.insert(e.cls.solutions);
  EXPECT_EQ(sets, (std::set{Neighbours(k3, a), Neighbours(k3, b)}));
}

TEST(BuildS0Test, K3StaircaseUsesMemberThree) {
  const FiniteStructure k3 = fixtures::K3();
  const PowerSystem system = fixtures::WrapExampleSystem();
  const std::vector<MEntry> m = ComputeM(k3, system);
  EXPECT_EQ(BuildS0(system, m), (std::vector{EdgeTo(PowerElement({b, c}, {a}))}));
  std::set<SourcePair> k;
  for (const MEntry& e : m) k.insert(e.source);
  const SourceRef m3 = SourceRef::FamilyMember(0, 3);
  EXPECT_EQ(k, (std::set<SourcePair>{{0, m3}, {1, m3}, {2, m3}}));
}

TEST(BuildS0Test, SingleEquation) {
  const FiniteStructure k3 = fixtures::K3();
  const PowerSystem system{{"x"}, {EdgeTo(PowerElement({b}, {a}))}, {}};
  EXPECT_EQ(BuildS0(system, ComputeM(k3, system)), system.equations);
}

TEST(BuildS0Test, TwoTemplatesNeedTwoSources) {
  const FiniteStructure k3 = fixtures::K3();
  const PowerSystem system{
      {"x"},
      {EdgeTo(PowerElement::Constant(a)), Equality<PowerElement>(x, PowerElement::Constant(b))},
      {}};
  EXPECT_EQ(BuildS0(system, ComputeM(k3, system)).size(), 2u);
}

TEST(WrapTest, K3StaircaseMatchesTheHandComputedSystem) {
  const FiniteStructure k3 = fixtures::K3();
  const PowerSystem system = fixtures::WrapExampleSystem();
  const WrapResult result = Wrap(k3, system);
  EXPECT_TRUE(result.verified);
  EXPECT_TRUE(result.bound_ok);
  EXPECT_EQ(result.trace.m.size(), 3u);
  EXPECT_EQ(result.s_prime.equations.size(), 4u);
  EXPECT_EQ(AsSet(result.s_prime.equations), AsSet(fixtures::WrapExampleExpected().equations));
  EXPECT_TRUE(VerifyWrap(k3, system, fixtures::WrapExampleExpected()).passed);
  ExpectCoherentTrace(k3, system, result);
}

TEST(WrapTest, SingleEquationIsItsOwnWrap) {
  const FiniteStructure k3 = fixtures::K3();
  const PowerSystem system{{"x"}, {EdgeTo(PowerElement::Constant(a))}, {}};
  const WrapResult result = Wrap(k3, system);
  EXPECT_EQ(result.s_prime.equations, system.equations);
  EXPECT_TRUE(result.verified);
}

TEST(WrapTest, EmptySystem) {
  const WrapResult result = Wrap(fixtures::K3(), PowerSystem{{"x"}, {}, {}});
  EXPECT_TRUE(result.s_prime.equations.empty());
  EXPECT_TRUE(result.verified);
  EXPECT_TRUE(result.bound_ok);
}

TEST(VerifyWrapTest, FirstStepAloneFailsAtCoordinatesZeroAndOne) {
  const FiniteStructure k3 = fixtures::K3();
  const PowerSystem system = fixtures::WrapExampleSystem();
  const PowerSystem s0{{"x"}, BuildS0(system, ComputeM(k3, system)), {}};
  const WrapVerification report = VerifyWrap(k3, system, s0);
  ASSERT_FALSE(report.passed);
  EXPECT_EQ(report.mismatches.front().coordinate, 0u);
  // At coordinate 1 the family needs E(x,a) and E(x,c), i.e. {b}; S0
  // alone gives E(x,c), i.e. {a,b}.
  const auto at1 = std::find_if(report.mismatches.begin(), report.mismatches.end(),
                                [](const CoordinateMismatch& m) { return m.coordinate == 1; });
  ASSERT_NE(at1, report.mismatches.end());
  AlgebraicSet only_b(3, 1);
  only_b.Insert(b);
  EXPECT_EQ(at1->original, only_b);
  EXPECT_EQ(at1->wrapped, Neighbours(k3, c));
}

TEST(VerifyWrapTest, Reflexive) {
  const FiniteStructure k3 = fixtures::K3();
  EXPECT_TRUE(VerifyWrap(k3, fixtures::WrapExampleSystem(), fixtures::WrapExampleSystem()).passed);
  EXPECT_THROW(VerifyWrap(k3, fixtures::WrapExampleSystem(), PowerSystem{{"y", "z"}, {}, {}}),
               std::invalid_argument);
}

TEST(BoundCheckTest, TwoElementStructuresStayWithinEight) {
  const FiniteStructure ch2 = fixtures::Chain2();
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const PowerSystem system = testing::RandomStaircaseSystem(rng, ch2, 1);
    const WrapResult result = Wrap(ch2, system);
    EXPECT_LE(result.s_prime.equations.size(), 8u);
    EXPECT_TRUE(result.bound_ok);
  }
}

// Every one-variable edge family with short generator and tail over a few
// small structures.
TEST(WrapSoundnessTest, ExhaustiveShortFamilies) {
  struct Case {
    FiniteStructure structure;
    int relation;
  };
  const Case cases[] = {{fixtures::K3(), 0}, {fixtures::Chain2(), 0}, {fixtures::P4(), 0},
                        {fixtures::FreeMatroid3(), 1}};
  for (const Case& cs : cases) {
    const int k = std::min(cs.structure.size(), 3);
    std::vector<std::vector<int>> words;
    for (int v = 0; v < k; ++v) words.push_back({v});
    for (int v = 0; v < k; ++v) {
      for (int w = 0; w < k; ++w) words.push_back({v, w});
    }
    std::vector<std::vector<int>> prefixes = {{}};
    for (int v = 0; v < k; ++v) prefixes.push_back({v});
    for (const auto& generator : words) {
      for (const auto& prefix : prefixes) {
        for (const auto& cycle : words) {
          const Staircase stair{generator, PowerElement(prefix, cycle)};
          const PowerSystem system{{"x"}, {}, {Relation<Staircase>(cs.relation, {x, stair})}};
          const WrapResult result = Wrap(cs.structure, system);
          ASSERT_TRUE(result.verified);
          ASSERT_TRUE(result.bound_ok);
          ASSERT_TRUE(PowerEquivalent(cs.structure, system, result.s_prime));
        }
      }
    }
  }
}

class WrapPropertyTest : public ::testing::Test {
 protected:
  std::mt19937 rng_{8675309};
};

TEST_F(WrapPropertyTest, RandomSystemsAreSoundAndCoherent) {
  for (int trial = 0; trial < 100; ++trial) {
    const int k = std::uniform_int_distribution<int>(1, 3)(rng_);
    const int n = std::uniform_int_distribution<int>(1, 2)(rng_);
    const FiniteStructure s = testing::RandomStructure(rng_, k);
    const PowerSystem system = testing::RandomStaircaseSystem(rng_, s, n);
    const WrapResult result = Wrap(s, system);
    ASSERT_TRUE(result.verified) << trial;
    ASSERT_TRUE(result.bound_ok) << trial;
    ASSERT_LE(result.s_prime.equations.size(), 2 * result.trace.m.size());
    ExpectCoherentTrace(s, system, result);

    for (int p = 0; p < 5; ++p) {
      const auto point = testing::RandomPoint(rng_, k, n);
      ASSERT_EQ(Satisfies(s, system, point), Satisfies(s, result.s_prime, point));
    }
  }
}

TEST_F(WrapPropertyTest, WrappingIsIdempotentUpToEquivalence) {
  for (int trial = 0; trial < 50; ++trial) {
    const FiniteStructure s = testing::RandomStructure(rng_, 3);
    const PowerSystem system = testing::RandomStaircaseSystem(rng_, s, 1);
    const PowerSystem once = Wrap(s, system).s_prime;
    const PowerSystem twice = Wrap(s, once).s_prime;
    ASSERT_TRUE(VerifyWrap(s, once, twice).passed);
    ASSERT_LE(twice.equations.size(), once.equations.size());
  }
}

}  // namespace
}  // namespace powereq
