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

#include "families.hpp"

#include <numeric>
#include <string>

#include "error.hpp"

namespace submodk {

namespace {

void check_vertex(int v, int n, const char* family) {
  if (v < 0 || v >= n) {
    fail(ErrorCode::kInvalidArgument, std::string(family) + ": vertex " + std::to_string(v) + " out of range");
  }
}

void check_weight(const Rational& w, const char* family) {
  if (w.sign() < 0) fail(ErrorCode::kInvalidArgument, std::string(family) + ": negative weight " + w.str());
}

void check_positive(const Rational& r, const char* what) {
  if (r.sign() <= 0) fail(ErrorCode::kInvalidArgument, std::string(what) + " must be positive, got " + r.str());
}

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

}  // namespace

Rational default_epsilon() { return Rational(1, 1000000); }
Rational default_arc_weight() { return Rational(1000000); }

// ---------------------------------------------------------------------------

GraphCutFn::GraphCutFn(int n, std::vector<WeightedEdge> edges) : gs_(n), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    check_vertex(e.u, n, "graph_cut");
    check_vertex(e.v, n, "graph_cut");
    check_weight(e.weight, "graph_cut");
  }
}

Rational GraphCutFn::evaluate(Subset s) const {
  Rational total;
  for (const auto& e : edges_) {
    if (s.contains(e.u) != s.contains(e.v)) total += e.weight;
  }
  return total;
}

HypergraphCutFn::HypergraphCutFn(int n, std::vector<WeightedHyperedge> hyperedges)
    : gs_(n), hyperedges_(std::move(hyperedges)) {
  for (const auto& h : hyperedges_) {
    if (!gs_.contains(h.vertices)) fail(ErrorCode::kInvalidArgument, "hypergraph_cut: hyperedge outside the ground set");
    check_weight(h.weight, "hypergraph_cut");
  }
}

Rational HypergraphCutFn::evaluate(Subset s) const {
  Rational total;
  for (const auto& h : hyperedges_) {
    if (h.vertices.intersects(s) && !h.vertices.is_subset_of(s)) total += h.weight;
  }
  return total;
}

GraphCoverageFn::GraphCoverageFn(int n, std::vector<WeightedEdge> edges) : gs_(n), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    check_vertex(e.u, n, "graph_coverage");
    check_vertex(e.v, n, "graph_coverage");
    check_weight(e.weight, "graph_coverage");
  }
}

Rational GraphCoverageFn::evaluate(Subset s) const {
  Rational total;
  for (const auto& e : edges_) {
    if (s.contains(e.u) || s.contains(e.v)) total += e.weight;
  }
  return total;
}

PartitionMatroidRankFn::PartitionMatroidRankFn(int n, std::vector<Subset> base_blocks)
    : gs_(n), base_blocks_(std::move(base_blocks)) {
  // Validates that the base blocks form a partition of the ground set.
  const Partition check(n, base_blocks_);
  (void)check;
}

Rational PartitionMatroidRankFn::evaluate(Subset s) const {
  long hit = 0;
  for (Subset b : base_blocks_) hit += b.intersects(s) ? 1 : 0;
  return Rational(hit);
}

GraphicMatroidRankFn::GraphicMatroidRankFn(int vertex_count, std::vector<std::pair<int, int>> edges)
    : gs_(static_cast<int>(edges.size()), indexed_labels(static_cast<int>(edges.size()), 0)),
      vertex_count_(vertex_count),
      edges_(std::move(edges)) {
  if (vertex_count < 1) fail(ErrorCode::kInvalidArgument, "graphic_matroid: need at least one vertex");
  for (const auto& [u, v] : edges_) {
    check_vertex(u, vertex_count, "graphic_matroid");
    check_vertex(v, vertex_count, "graphic_matroid");
  }
}

Rational GraphicMatroidRankFn::evaluate(Subset s) const {
  // rank = #vertices - #components = number of successful unions.
  UnionFind uf(vertex_count_);
  long rank = 0;
  for (int e : s.elements()) {
    const auto& [u, v] = edges_[static_cast<std::size_t>(e)];
    if (uf.unite(u, v)) ++rank;
  }
  return Rational(rank);
}

// ---------------------------------------------------------------------------

MonoTight3Fn::MonoTight3Fn(Rational epsilon) : gs_(3), eps_(std::move(epsilon)) {
  check_positive(eps_, "mono_tight3: epsilon");
}

Rational MonoTight3Fn::evaluate(Subset s) const {
  const Rational one(1);
  switch (s.mask) {
    case 0b000: return Rational(0);
    case 0b001: return one;                              // {a}
    case 0b010:                                          // {b}
    case 0b100: return one + eps_;                       // {c}
    case 0b011:                                          // {a,b}
    case 0b101: return Rational(3, 2) + eps_;            // {a,c}
    case 0b110:                                          // {b,c}
    case 0b111: return Rational(2) + Rational(2) * eps_; // V
    default: fail(ErrorCode::kInvalidArgument, "mono_tight3: subset out of range");
  }
}

MonoTightNFn::MonoTightNFn(int n, Rational epsilon) : gs_(n, indexed_labels(n, 1)), eps_(std::move(epsilon)) {
  if (n < 5 || n % 2 == 0) fail(ErrorCode::kInvalidArgument, "mono_tight_n: n must be odd and at least 5");
  check_positive(eps_, "mono_tight_n: epsilon");
  const int u_size = (n - 1) / 2;
  u_ = Subset::full(u_size);
  d_ = Subset::full(n) - u_;
}

Rational MonoTightNFn::uncapped(Subset s) const {
  const int in_u = (s & u_).size();
  const int in_d = (s & d_).size();
  Rational g = in_u == 0 ? Rational(0) : Rational(1, 2) + Rational(in_u, 2);
  return g + (Rational(1) + eps_) * Rational(in_d);
}

Rational MonoTightNFn::cap() const { return Rational(gs_.size() + 1, 2); }

Rational MonoTightNFn::evaluate(Subset s) const { return std::min(uncapped(s), cap()); }

PosiTight3Fn::PosiTight3Fn(Rational epsilon) : gs_(3), eps_(std::move(epsilon)) {
  check_positive(eps_, "posi_tight3: epsilon");
}

Rational PosiTight3Fn::evaluate(Subset s) const {
  const Rational one(1);
  switch (s.mask) {
    case 0b000: return Rational(0);
    case 0b001:                            // {a}
    case 0b010: return one;                // {b}
    case 0b100: return one + eps_;         // {c}
    case 0b011: return one + eps_;         // {a,b}
    case 0b110:                            // {b,c}
    case 0b101: return Rational(2);        // {a,c}
    case 0b111: return one + eps_;         // V
    default: fail(ErrorCode::kInvalidArgument, "posi_tight3: subset out of range");
  }
}

DigraphHyperFn::DigraphHyperFn(int n, Rational arc_weight) : gs_(n, indexed_labels(n, 0)), a_(std::move(arc_weight)) {
  if (n < 3) fail(ErrorCode::kInvalidArgument, "digraph_hyper: n must be at least 3");
  check_positive(a_, "digraph_hyper: a");
}

Rational DigraphHyperFn::evaluate(Subset s) const {
  // Arcs v0 -> v_i enter S exactly when v0 is outside S and v_i inside.
  const Subset leaves = gs_.all() - Subset::singleton(0);
  const long in_degree = s.contains(0) ? 0 : (s & leaves).size();
  const bool hyperedge_cut = leaves.intersects(s) && !leaves.is_subset_of(s);
  return a_ * Rational(in_degree) + Rational(hyperedge_cut ? 1 : 0);
}

// ---------------------------------------------------------------------------

ExplicitTableFn::ExplicitTableFn(int n, std::vector<Rational> values) : ExplicitTableFn(GroundSet(n), std::move(values)) {}

ExplicitTableFn::ExplicitTableFn(GroundSet gs, std::vector<Rational> values) : gs_(std::move(gs)), values_(std::move(values)) {
  if (gs_.size() > kMaxTableSize) fail(ErrorCode::kCapExceeded, "explicit_table: n too large");
  if (values_.size() != (std::size_t{1} << gs_.size())) {
    fail(ErrorCode::kInvalidArgument, "explicit_table: expected " + std::to_string(std::size_t{1} << gs_.size()) +
                                          " values, got " + std::to_string(values_.size()));
  }
}

Rational ExplicitTableFn::evaluate(Subset s) const { return values_.at(s.mask); }

WeightedSumFn::WeightedSumFn(std::vector<Term> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) fail(ErrorCode::kInvalidArgument, "weighted_sum: no terms");
  gs_ = terms_.front().second->ground_set();
  for (const auto& [c, fn] : terms_) {
    check_weight(c, "weighted_sum");
    if (fn->ground_set().size() != gs_.size()) fail(ErrorCode::kInvalidArgument, "weighted_sum: ground sets differ");
  }
}

Rational WeightedSumFn::evaluate(Subset s) const {
  Rational total;
  for (const auto& [c, fn] : terms_) total += c * fn->evaluate(s);
  return total;
}

LambdaFn::LambdaFn(int n, std::function<Rational(Subset)> fn, std::string family)
    : gs_(n), fn_(std::move(fn)), family_(std::move(family)) {}

}  // namespace submodk
