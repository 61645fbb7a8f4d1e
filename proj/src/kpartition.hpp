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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oracle.hpp"
#include "partition.hpp"
#include "partition_opt.hpp"
#include "pps.hpp"
#include "rational.hpp"

namespace submodk {

/// Declared class of a submodular function; selects the approximation bound.
enum class FunctionClass { kMonotone, kSymmetric, kPosimodular, kGeneral };

std::string to_string(FunctionClass c);
/// "monotone" | "symmetric" | "posimodular" | "general".
FunctionClass parse_function_class(std::string_view name);

/// Guarantee of the principal-sequence algorithm for the class on an n-element
/// ground set: 4/3 - 4/(9n+3), 2 - 2/n, 2 - 2/(n+1), or none.
std::optional<Rational> theorem_bound(FunctionClass c, int n);

/// Details of the split step, present when no chain partition has k blocks.
struct SplitDiagnostics {
  /// Position of P_i in the chain (1-based, so P_{i-1} is at index - 1).
  int index = 0;
  int coarse_blocks = 0;  // |P_{i-1}|
  int fine_blocks = 0;    // |P_i|
  Subset refined;         // S
  /// Blocks of P_i inside S, ascending by f (ties: canonical order).
  std::vector<Subset> sorted_pieces;
  int a_gap = 0;  // k - |P_{i-1}|
  int b_gap = 0;  // |P_i| - k
};

struct KPartitionRun {
  int k = 0;
  Partition result;
  Rational value;
  bool exact_hit = false;
  /// 1-based chain position of the k-block partition when exact_hit.
  int exact_index = 0;
  std::optional<SplitDiagnostics> split;
  PrincipalSequence sequence;
};

/// Principal-sequence k-partition: return the chain partition with k blocks
/// if there is one; otherwise take the last chain partition with fewer than k
/// blocks, split its refined part S into the k - |P_{i-1}| cheapest pieces of
/// P_i plus the union of the remaining pieces.
KPartitionRun algorithm1(const ValueOracle& oracle, int k);
KPartitionRun algorithm1(const ValueOracle& oracle, const PrincipalSequence& sequence, int k);

struct BaselineResult {
  Partition partition;
  Rational value;
};

/// k-1 cheapest singletons plus the rest (ties by element index).
BaselineResult cheapest_singleton(const ValueOracle& oracle, int k);

/// Starting from {V}, k-1 times apply the 2-split of some block that raises
/// the objective least (ties: first block in canonical order, then the
/// smallest mask for the side containing the block's minimum element).
BaselineResult greedy_splitting(const ValueOracle& oracle, int k);

struct LowerBoundReport {
  int chain_index = 0;   // i
  Rational interpolated;  // bound (i)
  Rational coarse_value;  // bound (ii), f(P_{i-1})
  Rational opt_value;
  bool bound_i = false;
  bool bound_ii = false;

  bool pass() const { return bound_i && bound_ii; }
};

/// Checks opt >= ((|P_i|-k) f(P_{i-1}) + (k-|P_{i-1}|) f(P_i)) / (|P_i|-|P_{i-1}|)
/// and opt >= f(P_{i-1}). Throws Error(kPrecondition) if some chain partition
/// has exactly k blocks.
LowerBoundReport assert_lemma_lower_bounds(const ValueOracle& oracle, int k, const PrincipalSequence& sequence,
                                           const Rational& opt_value);

struct ExactKReport {
  int chain_index = 0;
  Rational chain_value;
  Rational opt_value;
  bool pass = false;
};

/// Checks that the chain partition with k blocks is an optimal k-partition.
/// Throws Error(kPrecondition) when no chain partition has k blocks.
ExactKReport assert_exact_k_optimality(const ValueOracle& oracle, int k, const PrincipalSequence& sequence);
ExactKReport assert_exact_k_optimality(const ValueOracle& oracle, const PartitionLandscape& landscape, int k,
                                       const PrincipalSequence& sequence);

struct RatioReport {
  std::string algorithm;
  FunctionClass function_class = FunctionClass::kGeneral;
  int n = 0;
  int k = 0;
  Partition alg_partition;
  Rational alg_value;
  Partition opt_partition;
  Rational opt_value;
  /// alg / opt; nullopt encodes +infinity (opt = 0 < alg).
  std::optional<Rational> ratio;
  std::optional<Rational> bound;
  bool bound_ok = true;
  /// f(P_{i-1}) / f(P*) for split runs with opt > 0.
  std::optional<Rational> c;
};

/// Ratio of an algorithm value against the brute-force optimum.
RatioReport make_ratio_report(std::string algorithm, FunctionClass cls, int n, int k, Partition alg_partition,
                              Rational alg_value, const OptimalKPartition& opt);

/// Runs algorithm1 and the brute-force optimum and compares them against the
/// class bound.
RatioReport ratio_report(const ValueOracle& oracle, int k, FunctionClass cls);
RatioReport ratio_report(const ValueOracle& oracle, const PartitionLandscape& landscape,
                         const PrincipalSequence& sequence, int k, FunctionClass cls);

}  // namespace submodk
