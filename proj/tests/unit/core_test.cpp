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

#include <cstdlib>
#include <random>
#include <thread>

#include "error.hpp"
#include "families.hpp"
#include "oracle.hpp"
#include "partition.hpp"
#include "rational.hpp"
#include "support/reference.hpp"

namespace submodk {
namespace {

const Rational kEps = default_epsilon();

std::shared_ptr<const SetFunction> unit_path() {
  return std::make_shared<GraphCutFn>(3, std::vector<WeightedEdge>{{0, 1, Rational(1)}, {1, 2, Rational(1)}});
}

std::shared_ptr<const SetFunction> cardinality(int n) {
  return std::make_shared<LambdaFn>(n, [](Subset s) { return Rational(s.size()); }, "cardinality");
}

std::shared_ptr<const SetFunction> zero(int n) {
  return std::make_shared<LambdaFn>(n, [](Subset) { return Rational(0); }, "zero");
}

// ---- Rational ----------------------------------------------------------------

TEST(RationalTest, CanonicalForm) {
  const Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ(Rational(4, 2).fraction(), "2/1");
}

TEST(RationalTest, ExactArithmetic) {
  const Rational third(1, 3);
  EXPECT_EQ(third + third + third, Rational(1));
  EXPECT_EQ(Rational(3, 4) * Rational(8, 9), Rational(2, 3));
  EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(abs(Rational(-5, 7)), Rational(5, 7));
}

TEST(RationalTest, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(1, 0), Error);
  EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(RationalTest, Parse) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-3/6"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("0.125"), Rational(1, 8));
  EXPECT_EQ(Rational::parse("1e-6"), Rational(1, 1000000));
  EXPECT_EQ(Rational::parse("2.5E3"), Rational(2500));
  EXPECT_THROW(Rational::parse("abc"), Error);
  EXPECT_THROW(Rational::parse("1/0"), Error);
}

TEST(RationalTest, DecimalRendering) {
  EXPECT_EQ(Rational(6, 5).decimal(12), "1.2");
  EXPECT_EQ(Rational(1, 3).decimal(12), "0.333333333333");
  EXPECT_EQ(Rational(44, 3).decimal(12), "14.6666666667");
}

TEST(RationalTest, BigValuesStayExact) {
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1000000);
  EXPECT_EQ((big + Rational(1)) - big, Rational(1));
}

// ---- GroundSet / Subset ---------------------------------------------------------

TEST(GroundSetTest, LabelsAndFormatting) {
  const GroundSet gs(3);
  EXPECT_EQ(gs.label(0), "a");
  EXPECT_EQ(gs.format(Subset::of({0, 2})), "{a,c}");
  EXPECT_EQ(gs.format(Subset{}), "{}");
  EXPECT_EQ(GroundSet(27).label(26), "v26");
  EXPECT_TRUE(gs.contains(Subset::of({0, 1, 2})));
  EXPECT_FALSE(gs.contains(Subset::of({3})));
}

TEST(GroundSetTest, BruteForceCapHonorsEnvironment) {
  EXPECT_EQ(brute_force_cap(), kBruteForceCap);
  ::setenv("SUBMOD_N_CAP", "6", 1);
  EXPECT_EQ(brute_force_cap(), 6);
  EXPECT_THROW(require_within_cap(7, "test"), Error);
  ::setenv("SUBMOD_N_CAP", "40", 1);
  EXPECT_EQ(brute_force_cap(), kBruteForceCap);  // never raised
  ::unsetenv("SUBMOD_N_CAP");
  EXPECT_NO_THROW(require_within_cap(13, "test"));
  EXPECT_THROW(require_within_cap(14, "test"), Error);
}

// ---- Partition ---------------------------------------------------------------

TEST(PartitionTest, CanonicalOrderAndValidation) {
  const Partition p(3, {Subset::of({1, 2}), Subset::of({0})});
  EXPECT_EQ(p.blocks().front(), Subset::of({0}));
  EXPECT_EQ(p.format(GroundSet(3)), "{{a},{b,c}}");
  EXPECT_EQ(p.rgs(), (std::vector<int>{0, 1, 1}));
  EXPECT_EQ(Partition::from_rgs(std::vector<int>{0, 1, 1}), p);
  EXPECT_THROW(Partition(3, {Subset::of({0, 1})}), Error);                       // does not cover
  EXPECT_THROW(Partition(3, {Subset::of({0, 1}), Subset::of({1, 2})}), Error);   // overlap
  EXPECT_THROW(Partition(3, {Subset::of({0, 1, 2}), Subset{}}), Error);          // empty block
  EXPECT_THROW(Partition(3, {Subset::of({0, 1, 2, 3})}), Error);                 // outside ground set
}

TEST(PartitionTest, SingletonAndTrivial) {
  const GroundSet gs3(3);
  EXPECT_EQ(singleton_partition(gs3).format(gs3), "{{a},{b},{c}}");
  EXPECT_EQ(trivial_partition(gs3).format(gs3), "{{a,b,c}}");
  const GroundSet gs1(1);
  EXPECT_EQ(singleton_partition(gs1), trivial_partition(gs1));
  EXPECT_EQ(singleton_partition(GroundSet(5)).size(), 5);
}

TEST(PartitionTest, Refines) {
  EXPECT_TRUE(refines(Partition::singletons(3), Partition::whole(3)));
  EXPECT_FALSE(refines(Partition(3, {Subset::of({0, 1}), Subset::of({2})}),
                       Partition(3, {Subset::of({0}), Subset::of({1, 2})})));
  EXPECT_TRUE(refines(Partition(4, {Subset::of({0}), Subset::of({1}), Subset::of({2, 3})}),
                      Partition(4, {Subset::of({0, 1}), Subset::of({2, 3})})));
  EXPECT_TRUE(refines(Partition::whole(3), Partition::whole(3)));
  EXPECT_THROW(refines(Partition::whole(3), Partition::whole(4)), Error);
}

TEST(PartitionTest, RefinedPart) {
  EXPECT_EQ(refined_part(Partition::whole(4), Partition::singletons(4)), Subset::full(4));
  const Partition pairs(4, {Subset::of({0, 1}), Subset::of({2, 3})});
  EXPECT_EQ(refined_part(pairs, Partition::singletons(4)), std::nullopt);
  EXPECT_EQ(refined_part(pairs, Partition(4, {Subset::of({0}), Subset::of({1}), Subset::of({2, 3})})),
            Subset::of({0, 1}));
  EXPECT_THROW(refined_part(pairs, pairs), Error);
  EXPECT_THROW(refined_part(Partition::singletons(4), pairs), Error);
}

TEST(PartitionTest, RefinedPartAgreesWithDefinitionOnAllPairs) {
  const int n = 5;
  std::vector<Partition> all;
  for (const auto& blocks : reference::all_partitions(n)) {
    std::vector<Subset> s;
    for (auto b : blocks) s.push_back(Subset{b});
    all.emplace_back(n, s);
  }
  for (const auto& p : all) {
    for (const auto& q : all) {
      if (q == p || !refines(q, p)) continue;
      int split = 0;
      Subset last;
      for (Subset b : p.blocks()) {
        if (!q.has_block(b)) {
          ++split;
          last = b;
        }
      }
      const auto got = refined_part(p, q);
      if (split == 1) {
        EXPECT_EQ(got, last);
      } else {
        EXPECT_GE(split, 2);
        EXPECT_EQ(got, std::nullopt);
      }
    }
  }
}

// ---- ValueOracle -------------------------------------------------------------

TEST(OracleTest, PartitionValueExamples) {
  const ValueOracle mono(std::make_shared<MonoTight3Fn>());
  EXPECT_EQ(partition_value(mono, Partition(3, {Subset::of({0}), Subset::of({1, 2})})), Rational(3) + Rational(2) * kEps);
  const ValueOracle z(zero(4));
  EXPECT_EQ(partition_value(z, Partition(4, {Subset::of({0, 3}), Subset::of({1, 2})})), Rational(0));
  const ValueOracle path(unit_path());
  EXPECT_EQ(partition_value(path, Partition::singletons(3)), Rational(4));
  EXPECT_THROW(partition_value(path, Partition::singletons(4)), Error);
}

TEST(OracleTest, GValueExamples) {
  const ValueOracle mono(std::make_shared<MonoTight3Fn>());
  EXPECT_EQ(g_value(mono, Partition::whole(3), Rational(1, 2)), Rational(3, 2) + Rational(2) * kEps);
  const Partition p(3, {Subset::of({0}), Subset::of({1, 2})});
  EXPECT_EQ(g_value(mono, p, Rational(0)), partition_value(mono, p));
  const ValueOracle card(cardinality(4));
  EXPECT_EQ(g_value(card, Partition::singletons(4), Rational(1)), Rational(0));
}

TEST(OracleTest, GValueIsAffineInB) {
  std::mt19937_64 rng(5);
  for (const auto& inst : reference::shipped_instances()) {
    if (inst.function->ground_set().size() > 8) continue;
    const ValueOracle oracle(inst.function);
    const auto all = reference::all_partitions(oracle.n());
    for (int t = 0; t < 20; ++t) {
      const auto& blocks = all[rng() % all.size()];
      std::vector<Subset> s;
      for (auto b : blocks) s.push_back(Subset{b});
      const Partition p(oracle.n(), s);
      const Rational b1(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7) + 1);
      Rational b2 = b1 + Rational(static_cast<long>(rng() % 9) + 1, 3);
      EXPECT_EQ((g_value(oracle, p, b1) - g_value(oracle, p, b2)) / (b1 - b2), Rational(-p.size())) << inst.name;
    }
  }
}

TEST(OracleTest, MergingTwoBlocksNeverIncreasesValue) {
  for (const auto& inst : reference::shipped_instances()) {
    const int n = inst.function->ground_set().size();
    if (n > 7) continue;
    const ValueOracle oracle(inst.function);
    for (const auto& blocks : reference::all_partitions(n)) {
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
          EXPECT_LE(oracle.eval(Subset{blocks[i] | blocks[j]}), oracle.eval(Subset{blocks[i]}) + oracle.eval(Subset{blocks[j]}))
              << inst.name;
        }
      }
    }
  }
}

TEST(OracleTest, MemoIsDeterministicAndBounded) {
  const ValueOracle oracle(std::make_shared<DigraphHyperFn>(6, Rational(3)));
  std::mt19937_64 rng(9);
  for (int t = 0; t < 1000; ++t) {
    const Subset s{static_cast<std::uint32_t>(rng() % 64)};
    EXPECT_EQ(oracle.eval(s), oracle.eval(s));
  }
  const auto stats = oracle.stats();
  EXPECT_LE(stats.distinct_evaluations, 64U);
  EXPECT_EQ(stats.total_calls, 2000U);
  EXPECT_THROW(oracle.eval(Subset::of({6})), Error);
}

TEST(OracleTest, ConcurrentReadersKeepExactStats) {
  const ValueOracle oracle(std::make_shared<GraphCoverageFn>(
      10, std::vector<WeightedEdge>{{0, 1, Rational(1)}, {2, 3, Rational(2)}, {4, 9, Rational(1, 3)}}));
  constexpr int kThreads = 4;
  constexpr std::uint32_t kPerThread = 1024;
  {
    std::vector<std::jthread> workers;
    for (int t = 0; t < kThreads; ++t) {
      workers.emplace_back([&] {
        for (std::uint32_t m = 0; m < kPerThread; ++m) (void)oracle.eval(Subset{m});
      });
    }
  }
  const auto stats = oracle.stats();
  EXPECT_EQ(stats.total_calls, kThreads * kPerThread);
  EXPECT_EQ(stats.distinct_evaluations, kPerThread);
}

TEST(OracleTest, TableMatchesEvaluate) {
  const auto fn = std::make_shared<MonoTightNFn>(5);
  const ValueOracle oracle(fn);
  const auto table = oracle.table();
  ASSERT_EQ(table.size(), 32U);
  for (std::uint32_t m = 0; m < 32; ++m) EXPECT_EQ(table[m], fn->evaluate(Subset{m}));
}

}  // namespace
}  // namespace submodk
