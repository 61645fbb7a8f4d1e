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

#include "random_instances.hpp"

#include <algorithm>
#include <limits>

#include "error.hpp"
#include "families.hpp"

namespace submodk {

namespace {

std::vector<WeightedEdge> random_edges(InstanceRng& rng, int n) {
  std::vector<WeightedEdge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.coin()) edges.push_back(WeightedEdge{u, v, rng.weight()});
    }
  }
  if (edges.empty() && n >= 2) {
    const int u = rng.uniform(0, n - 2);
    edges.push_back(WeightedEdge{u, rng.uniform(u + 1, n - 1), rng.weight()});
  }
  return edges;
}

Subset random_subset_of_size(InstanceRng& rng, int n, int size) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  Subset out;
  // Partial Fisher-Yates.
  for (int i = 0; i < size; ++i) {
    const int j = rng.uniform(i, n - 1);
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    out = out | Subset::singleton(pool[static_cast<std::size_t>(i)]);
  }
  return out;
}

void require_n(int n, int lo) {
  if (n < lo || n > kMaxGroundSet) {
    fail(ErrorCode::kInvalidArgument,
         "random instance size must lie in [" + std::to_string(lo) + ", " + std::to_string(kMaxGroundSet) + "]");
  }
}

}  // namespace

std::string to_string(RandomFamily f) {
  switch (f) {
    case RandomFamily::kGraphCut: return "graph_cut";
    case RandomFamily::kHypergraphCut: return "hypergraph_cut";
    case RandomFamily::kGraphCoverage: return "graph_coverage";
    case RandomFamily::kPartitionMatroid: return "partition_matroid";
    case RandomFamily::kGraphicMatroid: return "graphic_matroid";
  }
  return "graph_cut";
}

RandomFamily parse_random_family(std::string_view name) {
  for (auto f : {RandomFamily::kGraphCut, RandomFamily::kHypergraphCut, RandomFamily::kGraphCoverage,
                 RandomFamily::kPartitionMatroid, RandomFamily::kGraphicMatroid}) {
    if (to_string(f) == name) return f;
  }
  fail(ErrorCode::kInvalidArgument, "unknown random family '" + std::string(name) + "'");
}

InstanceRng::InstanceRng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  engine_.seed(seq);
}

int InstanceRng::uniform(int lo, int hi) {
  if (hi < lo) fail(ErrorCode::kInternal, "empty range in uniform draw");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

Rational InstanceRng::weight() {
  const int p = uniform(1, 6);
  const int q = uniform(1, 3);
  return Rational(p, q);
}

std::shared_ptr<const SetFunction> random_instance(RandomFamily family, int n, std::uint64_t seed,
                                                   std::uint64_t index) {
  InstanceRng rng(seed, index);
  switch (family) {
    case RandomFamily::kGraphCut:
      require_n(n, 2);
      return std::make_shared<GraphCutFn>(n, random_edges(rng, n));
    case RandomFamily::kGraphCoverage:
      require_n(n, 2);
      return std::make_shared<GraphCoverageFn>(n, random_edges(rng, n));
    case RandomFamily::kHypergraphCut: {
      require_n(n, 2);
      std::vector<WeightedHyperedge> hyperedges;
      const int count = rng.uniform(1, n + 2);
      for (int e = 0; e < count; ++e) {
        const int size = rng.uniform(2, n);
        hyperedges.push_back(WeightedHyperedge{random_subset_of_size(rng, n, size), rng.weight()});
      }
      return std::make_shared<HypergraphCutFn>(n, std::move(hyperedges));
    }
    case RandomFamily::kPartitionMatroid: {
      require_n(n, 1);
      const int parts = rng.uniform(1, n);
      std::vector<Subset> blocks(static_cast<std::size_t>(parts));
      for (int v = 0; v < n; ++v) {
        auto& b = blocks[static_cast<std::size_t>(rng.uniform(0, parts - 1))];
        b = b | Subset::singleton(v);
      }
      std::erase_if(blocks, [](Subset b) { return b.empty(); });
      return std::make_shared<PartitionMatroidRankFn>(n, std::move(blocks));
    }
    case RandomFamily::kGraphicMatroid: {
      require_n(n, 1);
      const int vertices = rng.uniform(2, std::max(2, n));
      std::vector<std::pair<int, int>> edges;
      for (int e = 0; e < n; ++e) {
        const int u = rng.uniform(0, vertices - 1);
        int v = rng.uniform(0, vertices - 2);
        if (v >= u) ++v;
        edges.emplace_back(std::min(u, v), std::max(u, v));
      }
      return std::make_shared<GraphicMatroidRankFn>(vertices, std::move(edges));
    }
  }
  fail(ErrorCode::kInternal, "unhandled random family");
}

std::shared_ptr<const SetFunction> random_coverage_cut_mix(int n, std::uint64_t seed, std::uint64_t index) {
  require_n(n, 2);
  InstanceRng rng(seed, index);
  const auto edges = random_edges(rng, n);
  auto coverage = std::make_shared<GraphCoverageFn>(n, edges);
  auto cut = std::make_shared<GraphCutFn>(n, random_edges(rng, n));
  std::vector<WeightedSumFn::Term> terms;
  terms.emplace_back(rng.weight(), std::move(coverage));
  terms.emplace_back(rng.weight(), std::move(cut));
  return std::make_shared<WeightedSumFn>(std::move(terms));
}

}  // namespace submodk
