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

#include "kpartition.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"

namespace submodk {

namespace {

void require_k(int k, int n) {
  if (k < 2 || k > n) {
    fail(ErrorCode::kInvalidArgument, "k must lie in [2, " + std::to_string(n) + "], got " + std::to_string(k));
  }
}

/// Index (0-based) of the chain partition with exactly k blocks, or -1.
int exact_position(const PrincipalSequence& sequence, int k) {
  for (int j = 0; j < sequence.length(); ++j) {
    if (sequence.partitions[static_cast<std::size_t>(j)].size() == k) return j;
  }
  return -1;
}

/// Index (0-based) of P_i, the first chain partition with more than k blocks.
int split_position(const PrincipalSequence& sequence, int k) {
  for (int j = 1; j < sequence.length(); ++j) {
    const auto& prev = sequence.partitions[static_cast<std::size_t>(j - 1)];
    const auto& cur = sequence.partitions[static_cast<std::size_t>(j)];
    if (prev.size() < k && k < cur.size()) return j;
  }
  fail(ErrorCode::kInternal, "no chain position brackets k = " + std::to_string(k));
}

}  // namespace

std::string to_string(FunctionClass c) {
  switch (c) {
    case FunctionClass::kMonotone: return "monotone";
    case FunctionClass::kSymmetric: return "symmetric";
    case FunctionClass::kPosimodular: return "posimodular";
    case FunctionClass::kGeneral: return "general";
  }
  return "general";
}

FunctionClass parse_function_class(std::string_view name) {
  if (name == "monotone") return FunctionClass::kMonotone;
  if (name == "symmetric") return FunctionClass::kSymmetric;
  if (name == "posimodular") return FunctionClass::kPosimodular;
  if (name == "general") return FunctionClass::kGeneral;
  fail(ErrorCode::kInvalidArgument, "unknown function class '" + std::string(name) + "'");
}

std::optional<Rational> theorem_bound(FunctionClass c, int n) {
  switch (c) {
    case FunctionClass::kMonotone: return Rational(4, 3) - Rational(4, 9L * n + 3);
    case FunctionClass::kSymmetric: return Rational(2) - Rational(2, n);
    case FunctionClass::kPosimodular: return Rational(2) - Rational(2, n + 1L);
    case FunctionClass::kGeneral: return std::nullopt;
  }
  return std::nullopt;
}

KPartitionRun algorithm1(const ValueOracle& oracle, int k) {
  require_k(k, oracle.n());
  return algorithm1(oracle, compute_pps(oracle), k);
}

KPartitionRun algorithm1(const ValueOracle& oracle, const PrincipalSequence& sequence, int k) {
  require_k(k, oracle.n());
  KPartitionRun run;
  run.k = k;
  run.sequence = sequence;

  if (const int j = exact_position(sequence, k); j >= 0) {
    run.exact_hit = true;
    run.exact_index = j + 1;
    run.result = sequence.partitions[static_cast<std::size_t>(j)];
    run.value = partition_value(oracle, run.result);
    return run;
  }

  const int i = split_position(sequence, k);
  const Partition& coarse = sequence.partitions[static_cast<std::size_t>(i - 1)];
  const Partition& fine = sequence.partitions[static_cast<std::size_t>(i)];
  const auto refined = refined_part(coarse, fine);
  if (!refined) fail(ErrorCode::kInternal, "chain step refines more than one part");

  std::vector<Subset> pieces;
  for (Subset b : fine.blocks()) {
    if (b.is_subset_of(*refined)) pieces.push_back(b);
  }
  std::vector<Rational> piece_values;
  for (Subset b : pieces) piece_values.push_back(oracle.eval(b));
  std::vector<std::size_t> order(pieces.size());
  std::iota(order.begin(), order.end(), 0);
  // Pieces arrive in canonical order, so a stable sort breaks ties canonically.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return piece_values[a] < piece_values[b]; });

  SplitDiagnostics diag;
  diag.index = i + 1;
  diag.coarse_blocks = coarse.size();
  diag.fine_blocks = fine.size();
  diag.refined = *refined;
  for (std::size_t idx : order) diag.sorted_pieces.push_back(pieces[idx]);
  diag.a_gap = k - coarse.size();
  diag.b_gap = fine.size() - k;

  std::vector<Subset> blocks;
  for (Subset b : coarse.blocks()) {
    if (b != *refined) blocks.push_back(b);
  }
  const auto keep = static_cast<std::size_t>(diag.a_gap);
  Subset rest;
  for (std::size_t t = 0; t < diag.sorted_pieces.size(); ++t) {
    if (t < keep) {
      blocks.push_back(diag.sorted_pieces[t]);
    } else {
      rest = rest | diag.sorted_pieces[t];
    }
  }
  blocks.push_back(rest);

  run.result = Partition(oracle.n(), std::move(blocks));
  if (run.result.size() != k) fail(ErrorCode::kInternal, "split step produced the wrong number of parts");
  run.value = partition_value(oracle, run.result);
  run.split = std::move(diag);
  return run;
}

BaselineResult cheapest_singleton(const ValueOracle& oracle, int k) {
  const int n = oracle.n();
  require_k(k, n);
  std::vector<Rational> single;
  for (int v = 0; v < n; ++v) single.push_back(oracle.eval(Subset::singleton(v)));
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return single[static_cast<std::size_t>(a)] < single[static_cast<std::size_t>(b)]; });

  std::vector<Subset> blocks;
  Subset rest = oracle.ground_set().all();
  for (int t = 0; t < k - 1; ++t) {
    const Subset s = Subset::singleton(order[static_cast<std::size_t>(t)]);
    blocks.push_back(s);
    rest = rest - s;
  }
  blocks.push_back(rest);
  Partition p(n, std::move(blocks));
  Rational value = partition_value(oracle, p);
  return BaselineResult{std::move(p), std::move(value)};
}

BaselineResult greedy_splitting(const ValueOracle& oracle, int k) {
  const int n = oracle.n();
  require_k(k, n);
  require_within_cap(n, "greedy_splitting");
  Partition current = Partition::whole(n);
  for (int step = 1; step < k; ++step) {
    std::optional<Rational> best_cost;
    Subset best_block;
    Subset best_side;
    for (Subset block : current.blocks()) {
      if (block.size() < 2) continue;
      const Subset anchor = Subset::singleton(block.min_element());
      const std::uint32_t free = (block - anchor).mask;
      const Rational whole = oracle.eval(block);
      // Submasks of `free` in ascending order.
      for (std::uint32_t s = 0;; s = (s - free) & free) {
        const Subset side = anchor | Subset{s};
        if (side != block) {
          const Rational cost = oracle.eval(side) + oracle.eval(block - side) - whole;
          if (!best_cost || cost < *best_cost) {
            best_cost = cost;
            best_block = block;
            best_side = side;
          }
        }
        if (s == free) break;
      }
    }
    std::vector<Subset> blocks;
    for (Subset b : current.blocks()) {
      if (b != best_block) blocks.push_back(b);
    }
    blocks.push_back(best_side);
    blocks.push_back(best_block - best_side);
    current = Partition(n, std::move(blocks));
  }
  Rational value = partition_value(oracle, current);
  return BaselineResult{std::move(current), std::move(value)};
}

LowerBoundReport assert_lemma_lower_bounds(const ValueOracle& oracle, int k, const PrincipalSequence& sequence,
                                           const Rational& opt_value) {
  require_k(k, oracle.n());
  if (exact_position(sequence, k) >= 0) {
    fail(ErrorCode::kPrecondition, "lower bounds need a chain with no partition of exactly k blocks");
  }
  const int i = split_position(sequence, k);
  const Partition& coarse = sequence.partitions[static_cast<std::size_t>(i - 1)];
  const Partition& fine = sequence.partitions[static_cast<std::size_t>(i)];
  const Rational f_coarse = partition_value(oracle, coarse);
  const Rational f_fine = partition_value(oracle, fine);
  const Rational span(fine.size() - coarse.size());

  LowerBoundReport out;
  out.chain_index = i + 1;
  out.interpolated = (Rational(fine.size() - k) * f_coarse + Rational(k - coarse.size()) * f_fine) / span;
  out.coarse_value = f_coarse;
  out.opt_value = opt_value;
  out.bound_i = opt_value >= out.interpolated;
  out.bound_ii = opt_value >= out.coarse_value;
  return out;
}

ExactKReport assert_exact_k_optimality(const ValueOracle& oracle, int k, const PrincipalSequence& sequence) {
  const PartitionLandscape landscape(oracle);
  return assert_exact_k_optimality(oracle, landscape, k, sequence);
}

ExactKReport assert_exact_k_optimality(const ValueOracle& oracle, const PartitionLandscape& landscape, int k,
                                       const PrincipalSequence& sequence) {
  require_k(k, oracle.n());
  const int j = exact_position(sequence, k);
  if (j < 0) fail(ErrorCode::kPrecondition, "no chain partition has exactly k = " + std::to_string(k) + " blocks");
  ExactKReport out;
  out.chain_index = j + 1;
  out.chain_value = partition_value(oracle, sequence.partitions[static_cast<std::size_t>(j)]);
  out.opt_value = optimal_k_partition(landscape, k).value;
  out.pass = out.chain_value == out.opt_value;
  return out;
}

RatioReport make_ratio_report(std::string algorithm, FunctionClass cls, int n, int k, Partition alg_partition,
                              Rational alg_value, const OptimalKPartition& opt) {
  RatioReport out;
  out.algorithm = std::move(algorithm);
  out.function_class = cls;
  out.n = n;
  out.k = k;
  out.alg_partition = std::move(alg_partition);
  out.alg_value = std::move(alg_value);
  out.opt_partition = opt.partition;
  out.opt_value = opt.value;
  out.bound = theorem_bound(cls, n);
  if (out.opt_value.is_zero()) {
    if (out.alg_value.is_zero()) {
      out.ratio = Rational(1);
    } else {
      out.ratio = std::nullopt;
      out.bound_ok = false;
      return out;
    }
  } else {
    out.ratio = out.alg_value / out.opt_value;
  }
  out.bound_ok = !out.bound || *out.ratio <= *out.bound;
  return out;
}

RatioReport ratio_report(const ValueOracle& oracle, int k, FunctionClass cls) {
  require_k(k, oracle.n());
  const PartitionLandscape landscape(oracle);
  return ratio_report(oracle, landscape, compute_pps(oracle, landscape), k, cls);
}

RatioReport ratio_report(const ValueOracle& oracle, const PartitionLandscape& landscape,
                         const PrincipalSequence& sequence, int k, FunctionClass cls) {
  const KPartitionRun run = algorithm1(oracle, sequence, k);
  const OptimalKPartition opt = optimal_k_partition(landscape, k);
  RatioReport out = make_ratio_report("pps", cls, oracle.n(), k, run.result, run.value, opt);
  if (run.split && opt.value.sign() > 0) {
    const auto& coarse = sequence.partitions[static_cast<std::size_t>(run.split->index - 2)];
    out.c = partition_value(oracle, coarse) / opt.value;
  }
  return out;
}

}  // namespace submodk
