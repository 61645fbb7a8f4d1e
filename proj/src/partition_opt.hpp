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

#include <cstdint>
#include <optional>
#include <vector>

#include "oracle.hpp"
#include "partition.hpp"
#include "rational.hpp"

namespace submodk {

/// Streams every partition of {0..n-1} (or only those with exactly k blocks)
/// exactly once, in lexicographic order of restricted growth strings.
/// Memory is O(n).
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(int n, std::optional<int> k = std::nullopt);

  /// Next partition, or nullopt once the stream is exhausted.
  std::optional<Partition> next();

 private:
  bool advance();
  int blocks_used() const;

  int n_;
  int max_label_;
  std::optional<int> k_;
  std::vector<int> rgs_;
  bool started_ = false;
  bool done_ = false;
};

/// Result of minimizing g_f(b) = min_P f(P) - b|P| over all partitions.
struct GMinResult {
  Rational value;
  std::uint64_t minimizers_found = 0;
  /// Minimizer with the most blocks (ties: first in canonical order).
  Partition finest;
  /// Minimizer with the fewest blocks (ties: first in canonical order).
  Partition coarsest;
};

/// Exhaustive summary of f over all partitions, grouped by block count.
///
/// Since b|P| is constant among partitions with the same block count, the
/// minimum of f(P) - b|P| at any b is attained by a per-block-count optimum.
/// One enumeration therefore answers every minimize_g() query and every
/// optimal k-partition query exactly.
class PartitionLandscape {
 public:
  struct Level {
    /// min f(P) over partitions with exactly m blocks.
    Rational value;
    /// First such minimizer in canonical order.
    Partition first_minimizer;
    /// How many m-block partitions attain `value`.
    std::uint64_t minimizer_count = 0;
  };

  /// Enumerates all Bell(n) partitions; throws Error(kCapExceeded) past the cap.
  explicit PartitionLandscape(const ValueOracle& oracle);

  int n() const { return static_cast<int>(levels_.size()); }
  /// m in [1, n].
  const Level& level(int m) const;

  GMinResult minimize_g(const Rational& b) const;

  /// Number of partitions examined (Bell(n)).
  std::uint64_t partitions_examined() const { return examined_; }

 private:
  std::vector<Level> levels_;
  std::uint64_t examined_ = 0;
};

struct OptimalKPartition {
  Partition partition;
  Rational value;
};

/// Lazily enumerates the partition landscape of `oracle`.
GMinResult minimize_g(const ValueOracle& oracle, const Rational& b);

/// Exact optimal k-partition (ties: first in canonical order). Requires
/// 2 <= k <= n <= cap.
OptimalKPartition brute_force_optimal_k_partition(const ValueOracle& oracle, int k);
OptimalKPartition optimal_k_partition(const PartitionLandscape& landscape, int k);

}  // namespace submodk
