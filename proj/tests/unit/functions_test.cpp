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
#include "properties.hpp"
#include "random_instances.hpp"
#include "support/reference.hpp"

namespace submodk {
namespace {

const Rational kEps = default_epsilon();

TEST(FamiliesTest, GraphCutMatchesEdgeCount) {
  const std::vector<WeightedEdge> edges{{0, 1, Rational(1)}, {1, 2, Rational(1)}};
  const GraphCutFn cut(3, edges);
  EXPECT_EQ(cut.evaluate(Subset::of({1})), Rational(2));
  for (int seed = 0; seed < 10; ++seed) {
    const auto fn = random_instance(RandomFamily::kGraphCut, 7, 100, static_cast<std::uint64_t>(seed));
    const auto& g = dynamic_cast<const GraphCutFn&>(*fn);
    for (std::uint32_t s = 0; s < 128; ++s) {
      EXPECT_EQ(g.evaluate(Subset{s}), reference::cut_weight(g.edges(), s));
      EXPECT_EQ(g.evaluate(Subset{s}), g.evaluate(Subset{127U & ~s}));
    }
    EXPECT_EQ(g.evaluate(Subset::full(7)), Rational(0));
  }
}

TEST(FamiliesTest, CoverageCountsTouchedEdges) {
  const std::vector<WeightedEdge> edges{{0, 1, Rational(1)}, {1, 2, Rational(1)}};
  const GraphCoverageFn cov(3, edges);
  EXPECT_EQ(cov.evaluate(Subset::of({0})), Rational(1));
  EXPECT_EQ(cov.evaluate(Subset::of({1})), Rational(2));
  EXPECT_EQ(cov.evaluate(Subset::of({1, 2})), Rational(2));
  EXPECT_EQ(cov.evaluate(Subset::full(3)), Rational(2));
}

TEST(FamiliesTest, HypergraphCut) {
  const HypergraphCutFn h(4, {{Subset::of({0, 1, 2}), Rational(3)}, {Subset::of({2, 3}), Rational(1, 2)}});
  EXPECT_EQ(h.evaluate(Subset::of({0})), Rational(3));
  EXPECT_EQ(h.evaluate(Subset::of({2})), Rational(7, 2));
  EXPECT_EQ(h.evaluate(Subset::of({0, 1, 2})), Rational(1, 2));
  EXPECT_EQ(h.evaluate(Subset::full(4)), Rational(0));
}

TEST(FamiliesTest, MatroidRanks) {
  const PartitionMatroidRankFn pm(4, {Subset::of({0, 2}), Subset::of({1, 3})});
  EXPECT_EQ(pm.evaluate(Subset::of({0, 2})), Rational(1));
  EXPECT_EQ(pm.evaluate(Subset::of({0, 1})), Rational(2));
  EXPECT_EQ(pm.evaluate(Subset{}), Rational(0));
  EXPECT_THROW(PartitionMatroidRankFn(4, {Subset::of({0, 1})}), Error);

  // Triangle plus a parallel edge: rank counts a spanning forest.
  const GraphicMatroidRankFn gm(3, {{0, 1}, {1, 2}, {0, 2}, {0, 1}});
  EXPECT_EQ(gm.ground_set().size(), 4);
  EXPECT_EQ(gm.ground_set().label(0), "v0");
  EXPECT_EQ(gm.evaluate(Subset::of({0, 3})), Rational(1));
  EXPECT_EQ(gm.evaluate(Subset::of({0, 1, 2})), Rational(2));
  EXPECT_EQ(gm.evaluate(Subset::full(4)), Rational(2));
}

TEST(FamiliesTest, MonoTight3Table) {
  const MonoTight3Fn f(kEps);
  EXPECT_EQ(f.evaluate(Subset{}), Rational(0));
  EXPECT_EQ(f.evaluate(Subset::of({0})), Rational(1));
  EXPECT_EQ(f.evaluate(Subset::of({1})), Rational(1) + kEps);
  EXPECT_EQ(f.evaluate(Subset::of({2})), Rational(1) + kEps);
  EXPECT_EQ(f.evaluate(Subset::of({0, 1})), Rational(3, 2) + kEps);
  EXPECT_EQ(f.evaluate(Subset::of({0, 2})), Rational(3, 2) + kEps);
  EXPECT_EQ(f.evaluate(Subset::of({1, 2})), Rational(2) + Rational(2) * kEps);
  EXPECT_EQ(f.evaluate(Subset::full(3)), Rational(2) + Rational(2) * kEps);
}

TEST(FamiliesTest, MonoTightNSpotValues) {
  for (int n : {5, 7, 9}) {
    const MonoTightNFn f(n, kEps);
    EXPECT_EQ(f.upper().size(), (n - 1) / 2);
    EXPECT_EQ(f.evaluate(f.upper()), Rational(n + 1, 4));
    EXPECT_EQ(f.evaluate(f.lower()), Rational(n + 1, 2));
    EXPECT_EQ(f.evaluate(Subset::singleton(0)), Rational(1));
    EXPECT_EQ(f.evaluate(Subset::singleton(n - 1)), Rational(1) + kEps);
    EXPECT_EQ(f.ground_set().label(0), "v1");
  }
  EXPECT_EQ(MonoTightNFn(5).evaluate(MonoTightNFn(5).lower()), Rational(3));
  EXPECT_THROW(MonoTightNFn(6), Error);
  EXPECT_THROW(MonoTightNFn(3), Error);
}

TEST(FamiliesTest, MonoTightNHasAtMostOneHeavyPart) {
  for (int n : {5, 7}) {
    const MonoTightNFn f(n);
    for (const auto& blocks : reference::all_partitions(n)) {
      int heavy = 0;
      for (auto b : blocks) {
        if (f.uncapped(Subset{b}) >= f.cap()) ++heavy;
      }
      EXPECT_LE(heavy, 1);
    }
  }
}

TEST(FamiliesTest, PosiTight3Table) {
  const PosiTight3Fn f(kEps);
  EXPECT_EQ(f.evaluate(Subset::of({0})), Rational(1));
  EXPECT_EQ(f.evaluate(Subset::of({1})), Rational(1));
  EXPECT_EQ(f.evaluate(Subset::of({2})), Rational(1) + kEps);
  EXPECT_EQ(f.evaluate(Subset::of({0, 1})), Rational(1) + kEps);
  EXPECT_EQ(f.evaluate(Subset::of({1, 2})), Rational(2));
  EXPECT_EQ(f.evaluate(Subset::of({0, 2})), Rational(2));
  EXPECT_EQ(f.evaluate(Subset::full(3)), Rational(1) + kEps);
}

TEST(FamiliesTest, DigraphHyperSpotValues) {
  const Rational a(10);
  const DigraphHyperFn f4(4, a);
  EXPECT_EQ(f4.evaluate(Subset::of({0})), Rational(0));
  for (int n : {4, 6, 8}) {
    const DigraphHyperFn f(n, a);
    EXPECT_EQ(f.evaluate(Subset::full(n)), Rational(0));
    EXPECT_EQ(f.evaluate(Subset::full(n) - Subset::singleton(0)), a * Rational(n - 1));
    for (int i = 1; i < n; ++i) EXPECT_EQ(f.evaluate(Subset::singleton(i)), Rational(1) + a);
  }
}

TEST(FamiliesTest, ExplicitTableAndSums) {
  EXPECT_THROW(ExplicitTableFn(2, {Rational(0), Rational(1)}), Error);
  const auto cut = std::make_shared<GraphCutFn>(2, std::vector<WeightedEdge>{{0, 1, Rational(1)}});
  const auto cov = std::make_shared<GraphCoverageFn>(2, std::vector<WeightedEdge>{{0, 1, Rational(1)}});
  const WeightedSumFn sum({{Rational(2), cut}, {Rational(1, 2), cov}});
  EXPECT_EQ(sum.evaluate(Subset::of({0})), Rational(5, 2));
  EXPECT_EQ(sum.evaluate(Subset::full(2)), Rational(1, 2));
}

TEST(FamiliesTest, RejectsBadParameters) {
  EXPECT_THROW(GraphCutFn(3, {{0, 3, Rational(1)}}), Error);
  EXPECT_THROW(GraphCutFn(3, {{0, 1, Rational(-1)}}), Error);
  EXPECT_THROW(MonoTight3Fn(Rational(0)), Error);
  EXPECT_THROW(DigraphHyperFn(2), Error);
  EXPECT_THROW(DigraphHyperFn(4, Rational(-1)), Error);
}

// ---- property checkers --------------------------------------------------------

TEST(PropertiesTest, DocumentedExamples) {
  const ValueOracle mono(std::make_shared<MonoTight3Fn>());
  EXPECT_TRUE(check_submodular(mono));
  EXPECT_TRUE(check_monotone(mono));

  const ValueOracle supermodular(
      std::make_shared<LambdaFn>(4, [](Subset s) { return Rational(s.size() * s.size()); }));
  const auto bad = check_submodular(supermodular);
  EXPECT_FALSE(bad);
  ASSERT_TRUE(bad.witness);
  const auto [a, b] = *bad.witness;
  EXPECT_LT(supermodular.eval(a) + supermodular.eval(b), supermodular.eval(a & b) + supermodular.eval(a | b));

  EXPECT_TRUE(check_submodular(ValueOracle(std::make_shared<DigraphHyperFn>(5, Rational(3)))));

  const ValueOracle posi(std::make_shared<PosiTight3Fn>());
  EXPECT_TRUE(check_posimodular(posi));
  EXPECT_FALSE(check_monotone(posi));
  EXPECT_FALSE(check_symmetric(posi));

  const ValueOracle cov(std::make_shared<GraphCoverageFn>(
      3, std::vector<WeightedEdge>{{0, 1, Rational(1)}, {1, 2, Rational(1)}}));
  EXPECT_TRUE(check_monotone(cov));
  const auto sym = check_symmetric(cov);
  EXPECT_FALSE(sym);
  ASSERT_TRUE(sym.witness);
  // f(empty) = 0 differs from f(V) = 2, the lexicographically first pair.
  EXPECT_EQ(sym.witness->first, Subset{});
  EXPECT_EQ(sym.witness->second, Subset::full(3));
}

TEST(PropertiesTest, WitnessIsLexicographicallyFirst) {
  // f(S) = 1 on nonempty sets except f({c}) = 3: monotone fails first at ({c}, {a,c}).
  const ValueOracle oracle(std::make_shared<LambdaFn>(3, [](Subset s) {
    if (s.empty()) return Rational(0);
    return s == Subset::of({2}) ? Rational(3) : Rational(1);
  }));
  const auto r = check_monotone(oracle);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.witness->first, Subset::of({2}));
  EXPECT_EQ(r.witness->second, Subset::of({0, 2}));
}

TEST(PropertiesTest, DigraphHyperFailsEveryClassWithWitness) {
  for (int n : {4, 5, 7}) {
    for (const Rational& a : {Rational(2), Rational(10), default_arc_weight()}) {
      const ValueOracle oracle(std::make_shared<DigraphHyperFn>(n, a));
      EXPECT_TRUE(check_submodular(oracle));
      for (auto p : {FunctionProperty::kMonotone, FunctionProperty::kSymmetric, FunctionProperty::kPosimodular}) {
        const auto r = check_property(oracle, p);
        EXPECT_FALSE(r) << to_string(p);
        EXPECT_TRUE(r.witness.has_value());
      }
    }
  }
}

TEST(PropertiesTest, ShippedInstancesCarryTheirClass) {
  for (const auto& inst : reference::shipped_instances()) {
    const ValueOracle oracle(inst.function);
    EXPECT_TRUE(check_submodular(oracle)) << inst.name;
    switch (inst.declared) {
      case FunctionClass::kMonotone:
        EXPECT_TRUE(check_monotone(oracle)) << inst.name;
        EXPECT_TRUE(check_posimodular(oracle)) << inst.name;
        break;
      case FunctionClass::kSymmetric:
        EXPECT_TRUE(check_symmetric(oracle)) << inst.name;
        EXPECT_TRUE(check_posimodular(oracle)) << inst.name;
        break;
      case FunctionClass::kPosimodular:
        EXPECT_TRUE(check_posimodular(oracle)) << inst.name;
        break;
      case FunctionClass::kGeneral:
        break;
    }
  }
}

TEST(PropertiesTest, RandomFamiliesHaveTheirClasses) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    const ValueOracle cut(random_instance(RandomFamily::kGraphCut, 7, 3, i));
    EXPECT_TRUE(check_submodular(cut));
    EXPECT_TRUE(check_symmetric(cut));
    const ValueOracle hyper(random_instance(RandomFamily::kHypergraphCut, 7, 3, i));
    EXPECT_TRUE(check_submodular(hyper));
    EXPECT_TRUE(check_symmetric(hyper));
    for (auto fam : {RandomFamily::kGraphCoverage, RandomFamily::kPartitionMatroid, RandomFamily::kGraphicMatroid}) {
      const ValueOracle mono(random_instance(fam, 7, 3, i));
      EXPECT_TRUE(check_submodular(mono)) << to_string(fam);
      EXPECT_TRUE(check_monotone(mono)) << to_string(fam);
      EXPECT_TRUE(check_posimodular(mono)) << to_string(fam);
    }
    const ValueOracle mix(random_coverage_cut_mix(7, 3, i));
    EXPECT_TRUE(check_submodular(mix));
    EXPECT_TRUE(check_posimodular(mix));
  }
}

TEST(PropertiesTest, CapEnforced) {
  const ValueOracle big(std::make_shared<LambdaFn>(13, [](Subset s) { return Rational(s.size()); }));
  EXPECT_THROW(check_submodular(big), Error);
}

}  // namespace
}  // namespace submodk
