/*
Copyright 2026 The submodk Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <gtest/gtest.h>

#include "error.hpp"
#include "families.hpp"
#include "partition_opt.hpp"
#include "pps.hpp"
#include "random_instances.hpp"
#include "support/reference.hpp"

namespace submodk {
namespace {

bool is_two_level(const PrincipalSequence& seq, int n) {
  return seq.length() == 2 && seq.partitions[0] == Partition::whole(n) && seq.partitions[1] == Partition::singletons(n);
}

std::shared_ptr<const SetFunction> two_disjoint_edges() {
  return std::make_shared<GraphCutFn>(4, std::vector<WeightedEdge>{{0, 1, Rational(1)}, {2, 3, Rational(1)}});
}

// Checks the sequence against its definition using only the reference enumerator.
void expect_valid_by_reference(const SetFunction& f, const PrincipalSequence& seq, const std::string& name) {
  const int n = f.ground_set().size();
  ASSERT_GE(seq.length(), 1) << name;
  EXPECT_EQ(seq.partitions.front(), Partition::whole(n)) << name;
  EXPECT_EQ(seq.partitions.back(), Partition::singletons(n)) << name;
  EXPECT_LE(seq.length(), n) << name;
  auto value = [&](const Partition& p) {
    Rational v;
    for (Subset b : p.blocks()) v += f.evaluate(b);
    return v;
  };
  for (std::size_t j = 0; j + 1 < seq.partitions.size(); ++j) {
    const auto& p = seq.partitions[j];
    const auto& q = seq.partitions[j + 1];
    EXPECT_LT(p.size(), q.size()) << name;
    EXPECT_TRUE(refined_part(p, q).has_value()) << name;
    const Rational& b = seq.breakpoints[j];
    EXPECT_EQ(b, (value(q) - value(p)) / Rational(q.size() - p.size())) << name;
    const auto min = reference::g_minimum(f, b);
    EXPECT_EQ(value(p) - b * Rational(p.size()), min.value) << name;
    EXPECT_EQ(value(q) - b * Rational(q.size()), min.value) << name;
    if (j > 0) EXPECT_LE(seq.breakpoints[j - 1], b) << name;
  }
}

TEST(PpsTest, MonoTight3) {
  const ValueOracle oracle(std::make_shared<MonoTight3Fn>());
  const auto seq = compute_pps(oracle);
  EXPECT_TRUE(is_two_level(seq, 3));
  ASSERT_EQ(seq.breakpoints.size(), 1U);
  EXPECT_EQ(seq.breakpoints[0], Rational(1, 2));
  EXPECT_TRUE(verify_pps(oracle, seq).all_pass());
}

TEST(PpsTest, DigraphHyperIsTwoLevel) {
  const ValueOracle oracle(std::make_shared<DigraphHyperFn>(5, Rational(10)));
  const auto seq = compute_pps(oracle);
  EXPECT_TRUE(is_two_level(seq, 5));
  EXPECT_EQ(seq.breakpoints.size(), 1U);
}

TEST(PpsTest, ZeroFunction) {
  const ValueOracle oracle(std::make_shared<LambdaFn>(4, [](Subset) { return Rational(0); }));
  const auto seq = compute_pps(oracle);
  EXPECT_TRUE(is_two_level(seq, 4));
  ASSERT_EQ(seq.breakpoints.size(), 1U);
  EXPECT_EQ(seq.breakpoints[0], Rational(0));
  EXPECT_TRUE(verify_pps(oracle, seq).all_pass());
}

TEST(PpsTest, SingleElement) {
  const ValueOracle oracle(std::make_shared<LambdaFn>(1, [](Subset s) { return Rational(s.size()); }));
  const auto seq = compute_pps(oracle);
  EXPECT_EQ(seq.length(), 1);
  EXPECT_TRUE(seq.breakpoints.empty());
  EXPECT_TRUE(verify_pps(oracle, seq).all_pass());
}

TEST(RepairTest, LeavesValidChainsAlone) {
  const ValueOracle oracle(std::make_shared<MonoTight3Fn>());
  const auto seq = compute_pps(oracle);
  EXPECT_EQ(repair_chain(oracle, seq), seq);
  const ValueOracle cut(random_instance(RandomFamily::kGraphCut, 6, 7, 0));
  const auto seq2 = compute_pps(cut);
  EXPECT_EQ(repair_chain(cut, seq2), seq2);
}

TEST(RepairTest, SplitsSimultaneousRefinement) {
  const ValueOracle oracle(two_disjoint_edges());
  const Partition pairs(4, {Subset::of({0, 1}), Subset::of({2, 3})});
  PrincipalSequence broken{{Partition::whole(4), pairs, Partition::singletons(4)}, {Rational(0), Rational(2)}};
  EXPECT_FALSE(refined_part(pairs, Partition::singletons(4)).has_value());

  const auto fixed = repair_chain(oracle, broken);
  ASSERT_EQ(fixed.length(), 4);
  EXPECT_EQ(fixed.partitions[2], Partition(4, {Subset::of({0}), Subset::of({1}), Subset::of({2, 3})}));
  EXPECT_EQ(fixed.breakpoints, (std::vector<Rational>{Rational(0), Rational(2), Rational(2)}));
  const auto report = verify_pps(oracle, fixed);
  EXPECT_TRUE(report.all_pass());
  EXPECT_FALSE(report.strictly_increasing);
  expect_valid_by_reference(*two_disjoint_edges(), fixed, "two_edges");

  EXPECT_EQ(compute_pps(oracle), fixed);
}

TEST(RepairTest, RejectsNonSubmodularTies) {
  // At b = 10 the partition {{a,c},{b,d}} beats both intermediate candidates.
  const ValueOracle oracle(std::make_shared<LambdaFn>(4, [](Subset s) {
    if (s.empty()) return Rational(0);
    if (s == Subset::of({0, 1}) || s == Subset::of({2, 3})) return Rational(0);
    if (s == Subset::of({0, 2}) || s == Subset::of({1, 3})) return Rational(-10);
    return Rational(5);
  }));
  const Partition pairs(4, {Subset::of({0, 1}), Subset::of({2, 3})});
  PrincipalSequence broken{{Partition::whole(4), pairs, Partition::singletons(4)}, {Rational(-5), Rational(10)}};
  EXPECT_THROW(repair_chain(oracle, broken), Error);
}

TEST(VerifyTest, DetectsSwappedBreakpoints) {
  const ValueOracle oracle(random_instance(RandomFamily::kGraphCut, 6, 7, 0));
  auto seq = compute_pps(oracle);
  ASSERT_GE(seq.breakpoints.size(), 2U);
  ASSERT_NE(seq.breakpoints[0], seq.breakpoints[1]);
  std::swap(seq.breakpoints[0], seq.breakpoints[1]);
  const auto report = verify_pps(oracle, seq);
  EXPECT_FALSE(report.condition("C3").pass);
  EXPECT_FALSE(report.condition("C3").witness.empty());
  EXPECT_FALSE(report.all_pass());
}

TEST(VerifyTest, DetectsNonMinimizingMiddle) {
  const ValueOracle oracle(random_instance(RandomFamily::kGraphCut, 6, 7, 0));
  auto seq = compute_pps(oracle);
  ASSERT_GE(seq.length(), 3);
  const Partition& prev = seq.partitions[0];
  const Partition& next = seq.partitions[2];
  // Another partition between the neighbours in the refinement order, or
  // anything with the same block count otherwise.
  std::optional<Partition> replacement;
  PartitionEnumerator it(6, seq.partitions[1].size());
  while (auto p = it.next()) {
    if (*p != seq.partitions[1] && g_value(oracle, *p, seq.breakpoints[0]) != g_value(oracle, prev, seq.breakpoints[0])) {
      if (!replacement || (refines(*p, prev) && refines(next, *p))) replacement = *p;
    }
  }
  ASSERT_TRUE(replacement);
  seq.partitions[1] = *replacement;
  const auto report = verify_pps(oracle, seq);
  EXPECT_FALSE(report.condition("C4").pass);
  EXPECT_FALSE(report.condition("C5").pass);
}

TEST(VerifyTest, DetectsWrongEnds) {
  const ValueOracle oracle(std::make_shared<MonoTight3Fn>());
  PrincipalSequence seq{{Partition(3, {Subset::of({0}), Subset::of({1, 2})}), Partition::singletons(3)}, {Rational(1)}};
  EXPECT_FALSE(verify_pps(oracle, seq).condition("C1").pass);
}

TEST(TwoLevelTest, DocumentedExamples) {
  EXPECT_TRUE(check_two_level_condition(ValueOracle(std::make_shared<MonoTightNFn>(5))));
  EXPECT_TRUE(check_two_level_condition(ValueOracle(std::make_shared<DigraphHyperFn>(5, Rational(10)))));
  EXPECT_FALSE(check_two_level_condition(
      ValueOracle(std::make_shared<LambdaFn>(5, [](Subset s) { return Rational(s.size()); }))));
  EXPECT_THROW(check_two_level_condition(
                   ValueOracle(std::make_shared<LambdaFn>(13, [](Subset s) { return Rational(s.size()); }))),
               Error);
}

TEST(TwoLevelTest, ConditionForcesTwoLevelSequence) {
  std::vector<std::shared_ptr<const SetFunction>> fns;
  for (const auto& inst : reference::shipped_instances()) fns.push_back(inst.function);
  for (std::uint64_t i = 0; i < 30; ++i) fns.push_back(random_instance(RandomFamily::kHypergraphCut, 5, 8, i));
  int forced = 0;
  for (const auto& fn : fns) {
    const ValueOracle oracle(fn);
    if (!check_two_level_condition(oracle)) continue;
    ++forced;
    EXPECT_TRUE(is_two_level(compute_pps(oracle), oracle.n()));
  }
  EXPECT_GE(forced, 3);
}

TEST(PpsPropertyTest, ShippedInstancesSatisfyEveryCondition) {
  for (const auto& inst : reference::shipped_instances()) {
    const ValueOracle oracle(inst.function);
    const PartitionLandscape landscape(oracle);
    const auto seq = compute_pps(oracle, landscape);
    const auto report = verify_pps(oracle, landscape, seq, 3);
    for (const auto& c : report.conditions) EXPECT_TRUE(c.pass) << inst.name << " " << c.name << " " << c.witness;
    if (inst.function->ground_set().size() <= 7) expect_valid_by_reference(*inst.function, seq, inst.name);
    EXPECT_EQ(compute_pps(oracle, landscape), seq) << inst.name;  // deterministic
  }
}

TEST(PpsPropertyTest, RandomInstancesSatisfyEveryCondition) {
  for (auto family : {RandomFamily::kGraphCut, RandomFamily::kHypergraphCut, RandomFamily::kGraphCoverage,
                      RandomFamily::kPartitionMatroid, RandomFamily::kGraphicMatroid}) {
    for (std::uint64_t i = 0; i < 15; ++i) {
      const int n = 3 + static_cast<int>(i % 4);
      const auto fn = random_instance(family, n, 77, i);
      const ValueOracle oracle(fn);
      const auto seq = compute_pps(oracle);
      EXPECT_TRUE(verify_pps(oracle, seq).all_pass()) << to_string(family) << " #" << i;
      expect_valid_by_reference(*fn, seq, to_string(family));
    }
  }
}

}  // namespace
}  // namespace submodk
