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

#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "oracle.hpp"

namespace submodk {

/// Default infinitesimal for the constructed tight instances.
Rational default_epsilon();  // 1/1000000
/// Default arc weight for DigraphHyperFn.
Rational default_arc_weight();  // 1000000

struct WeightedEdge {
  int u = 0;
  int v = 0;
  Rational weight;
};

struct WeightedHyperedge {
  Subset vertices;
  Rational weight;
};

/// Weighted undirected graph cut: f(S) = w(delta(S)).
class GraphCutFn final : public SetFunction {
 public:
  GraphCutFn(int n, std::vector<WeightedEdge> edges);

  const GroundSet& ground_set() const override { return gs_; }
  Rational evaluate(Subset s) const override;
  std::string_view family() const override { return "graph_cut"; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }

 private:
  GroundSet gs_;
  std::vector<WeightedEdge> edges_;
};

/// Weighted hypergraph cut: total weight of hyperedges with vertices on both
/// sides of S.
class HypergraphCutFn final : public SetFunction {
 public:
  HypergraphCutFn(int n, std::vector<WeightedHyperedge> hyperedges);

  const GroundSet& ground_set() const override { return gs_; }
  Rational evaluate(Subset s) const override;
  std::string_view family() const override { return "hypergraph_cut"; }
  const std::vector<WeightedHyperedge>& hyperedges() const { return hyperedges_; }

 private:
  GroundSet gs_;
  std::vector<WeightedHyperedge> hyperedges_;
};

/// Graph coverage: f(S) = w(E[S]) + w(delta(S)), the weight of edges with at
/// least one endpoint in S.
class GraphCoverageFn final : public SetFunction {
 public:
  GraphCoverageFn(int n, std::vector<WeightedEdge> edges);

  const GroundSet& ground_set() const override { return gs_; }
  Rational evaluate(Subset s) const override;
  std::string_view family() const override { return "graph_coverage"; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }

 private:
  GroundSet gs_;
  std::vector<WeightedEdge> edges_;
};

/// Rank of the partition matroid with the given base blocks: the number of
/// base blocks that S meets.
class PartitionMatroidRankFn final : public SetFunction {
 public:
  PartitionMatroidRankFn(int n, std::vector<Subset> base_blocks);

  const GroundSet& ground_set() const override { return gs_; }
  Rational evaluate(Subset s) const override;
  std::string_view family() const override { return "partition_matroid"; }
  const std::vector<Subset>& base_blocks() const { return base_blocks_; }

 private:
  GroundSet gs_;
  std::vector<Subset> base_blocks_;
};

/// Rank of the graphic matroid of a multigraph. The ground set is the edge
/// set; f(S) = #vertices - #components of (vertices, S).
class GraphicMatroidRankFn final : public SetFunction {
 public:
  GraphicMatroidRankFn(int vertex_count, std::vector<std::pair<int, int>> edges);

  const GroundSet& ground_set() const override { return gs_; }
  Rational evaluate(Subset s) const override;
  std::string_view family() const override { return "graphic_matroid"; }
  int vertex_count() const { return vertex_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  GroundSet gs_;
  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
};

/// Monotone three-element instance on which the principal-sequence algorithm
/// is off by a factor approaching 6/5 for k = 2.
class MonoTight3Fn final : public SetFunction {
 public:
  explicit MonoTight3Fn(Rational epsilon = default_epsilon());

  const GroundSet& ground_set() const override { return gs_; }
  Rational evaluate(Subset s) const override;
  std::string_view family() const override { return "mono_tight3"; }
  const Rational& epsilon() const { return eps_; }

 private:
  GroundSet gs_;
  Rational eps_;
};

/// Monotone family on odd n >= 5 with ratio approaching 4/3 - 4/(3n+3).
///
/// U holds the first (n-1)/2 elements, D the remaining (n+1)/2.
/// f(S) = min{ g(S & U) + (1+eps)|S & D|, (n+1)/2 } with g(T) = 1/2 + |T|/2
/// for nonempty T and g(empty) = 0.
class MonoTightNFn final : public SetFunction {
 public:
  MonoTightNFn(int n, Rational epsilon = default_epsilon());

  const GroundSet& ground_set() const override { return gs_; }
  Rational evaluate(Subset s) const override;
  std::string_view family() const override { return "mono_tight_n"; }
  const Rational& epsilon() const { return eps_; }

  Subset upper() const { return u_; }
  Subset lower() const { return d_; }
  /// Uncapped value g(S & U) + (1+eps)|S & D|.
  Rational uncapped(Subset s) const;
  /// The cap (n+1)/2.
  Rational cap() const;

 private:
  GroundSet gs_;
  Rational eps_;
  Subset u_;
  Subset d_;
};

/// Posimodular (neither monotone nor symmetric) three-element instance with
/// ratio approaching 3/2 for k = 2.
class PosiTight3Fn final : public SetFunction {
 public:
  explicit PosiTight3Fn(Rational epsilon = default_epsilon());

  const GroundSet& ground_set() const override { return gs_; }
  Rational evaluate(Subset s) const override;
  std::string_view family() const override { return "posi_tight3"; }
  const Rational& epsilon() const { return eps_; }

 private:
  GroundSet gs_;
  Rational eps_;
};

/// Star digraph v0 -> v_i plus one hyperedge {v1, ..., v_{n-1}}:
/// f(S) = a * d_in(S) + d_H(S). Element 0 is v0.
class DigraphHyperFn final : public SetFunction {
 public:
  DigraphHyperFn(int n, Rational arc_weight = default_arc_weight());

  const GroundSet& ground_set() const override { return gs_; }
  Rational evaluate(Subset s) const override;
  std::string_view family() const override { return "digraph_hyper"; }
  const Rational& arc_weight() const { return a_; }

 private:
  GroundSet gs_;
  Rational a_;
};

/// All 2^n values listed explicitly, indexed by mask.
class ExplicitTableFn final : public SetFunction {
 public:
  ExplicitTableFn(int n, std::vector<Rational> values);
  ExplicitTableFn(GroundSet gs, std::vector<Rational> values);

  const GroundSet& ground_set() const override { return gs_; }
  Rational evaluate(Subset s) const override;
  std::string_view family() const override { return "explicit_table"; }
  const std::vector<Rational>& values() const { return values_; }

 private:
  GroundSet gs_;
  std::vector<Rational> values_;
};

/// Nonnegative combination sum_i c_i f_i of functions on one ground set.
class WeightedSumFn final : public SetFunction {
 public:
  using Term = std::pair<Rational, std::shared_ptr<const SetFunction>>;

  explicit WeightedSumFn(std::vector<Term> terms);

  const GroundSet& ground_set() const override { return gs_; }
  Rational evaluate(Subset s) const override;
  std::string_view family() const override { return "weighted_sum"; }
  const std::vector<Term>& terms() const { return terms_; }

 private:
  GroundSet gs_;
  std::vector<Term> terms_;
};

/// Arbitrary callable; intended for tests and ad-hoc experiments.
class LambdaFn final : public SetFunction {
 public:
  LambdaFn(int n, std::function<Rational(Subset)> fn, std::string family = "lambda");

  const GroundSet& ground_set() const override { return gs_; }
  Rational evaluate(Subset s) const override { return fn_(s); }
  std::string_view family() const override { return family_; }

 private:
  GroundSet gs_;
  std::function<Rational(Subset)> fn_;
  std::string family_;
};

/// Convenience: wrap a freshly built family in an oracle.
template <typename Fn, typename... Args>
std::unique_ptr<ValueOracle> make_oracle(Args&&... args) {
  return std::make_unique<ValueOracle>(std::make_shared<const Fn>(std::forward<Args>(args)...));
}

}  // namespace submodk
