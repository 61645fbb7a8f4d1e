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

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ground_set.hpp"

namespace submodk {

/// Partition of {0, ..., n-1} into nonempty, pairwise disjoint blocks.
///
/// Blocks are kept sorted by their minimum element, so two partitions are
/// equal iff their block vectors are equal. Partitions are totally ordered by
/// their restricted growth strings, which is also the order in which
/// enumerate_partitions() yields them.
class Partition {
 public:
  Partition() = default;
  /// Validates and canonicalizes; throws Error(kInvalidPartition).
  Partition(int n, std::vector<Subset> blocks);

  static Partition singletons(int n);
  static Partition whole(int n);
  /// Builds the partition whose element i lies in block rgs[i]. The string
  /// must be a restricted growth string (rgs[0] == 0, rgs[i] <= max prefix + 1).
  static Partition from_rgs(std::span<const int> rgs);

  int ground_size() const { return n_; }
  /// Number of blocks, |P|.
  int size() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Subset>& blocks() const { return blocks_; }

  bool has_block(Subset s) const;
  /// Index of the block containing v.
  int block_of(int v) const;
  std::vector<int> rgs() const;

  /// "{{a},{b,c}}".
  std::string format(const GroundSet& gs) const;

  friend bool operator==(const Partition& a, const Partition& b) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  int n_ = 0;
  std::vector<Subset> blocks_;
};

Partition singleton_partition(const GroundSet& gs);
Partition trivial_partition(const GroundSet& gs);

/// True iff every block of q lies inside some block of p (q == p included).
/// Throws Error(kInvalidArgument) on mismatched ground sets.
bool refines(const Partition& q, const Partition& p);

/// The single block of p that q refines, or nullopt when q splits more than
/// one block of p. Requires q != p and refines(q, p); throws
/// Error(kPrecondition) otherwise.
std::optional<Subset> refined_part(const Partition& p, const Partition& q);

}  // namespace submodk
