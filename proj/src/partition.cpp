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

#include "partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "error.hpp"

namespace submodk {

// ---------------------------------------------------------------------------
// GroundSet / Subset

int brute_force_cap() {
  int cap = kBruteForceCap;
  if (const char* env = std::getenv("SUBMOD_N_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v < cap) cap = static_cast<int>(v);
  }
  return cap;
}

void require_within_cap(int n, int limit, const char* what) {
  if (n > limit) {
    fail(ErrorCode::kCapExceeded, std::string(what) + ": ground set of size " + std::to_string(n) +
                                      " exceeds the exhaustive-search cap of " + std::to_string(limit));
  }
}

void require_within_cap(int n, const char* what) { require_within_cap(n, brute_force_cap(), what); }

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  for (std::uint32_t m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::vector<std::string> default_labels(int n) {
  if (n <= 26) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
    return out;
  }
  return indexed_labels(n, 0);
}

std::vector<std::string> indexed_labels(int n, int first) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("v" + std::to_string(first + i));
  return out;
}

GroundSet::GroundSet(int n) : GroundSet(n, default_labels(n)) {}

GroundSet::GroundSet(int n, std::vector<std::string> labels) : n_(n), labels_(std::move(labels)) {
  if (n < 1 || n > kMaxGroundSet) {
    fail(ErrorCode::kInvalidArgument, "ground set size must be in [1, " + std::to_string(kMaxGroundSet) + "], got " +
                                          std::to_string(n));
  }
  if (static_cast<int>(labels_.size()) != n) fail(ErrorCode::kInvalidArgument, "label count does not match n");
}

std::string GroundSet::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (int v : s.elements()) {
    if (!first) out += ',';
    out += v < n_ ? label(v) : "?" + std::to_string(v);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(int n, std::vector<Subset> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 1 || n > kMaxGroundSet) fail(ErrorCode::kInvalidPartition, "invalid ground set size");
  const Subset all = Subset::full(n);
  Subset seen;
  for (Subset b : blocks_) {
    if (b.empty()) fail(ErrorCode::kInvalidPartition, "partition has an empty block");
    if (!b.is_subset_of(all)) fail(ErrorCode::kInvalidPartition, "block lies outside the ground set");
    if (b.intersects(seen)) fail(ErrorCode::kInvalidPartition, "partition blocks overlap");
    seen = seen | b;
  }
  if (seen != all) fail(ErrorCode::kInvalidPartition, "partition blocks do not cover the ground set");
  std::sort(blocks_.begin(), blocks_.end(),
            [](Subset a, Subset b) { return a.min_element() < b.min_element(); });
}

Partition Partition::singletons(int n) {
  std::vector<Subset> blocks;
  for (int v = 0; v < n; ++v) blocks.push_back(Subset::singleton(v));
  return Partition(n, std::move(blocks));
}

Partition Partition::whole(int n) { return Partition(n, {Subset::full(n)}); }

Partition Partition::from_rgs(std::span<const int> rgs) {
  const int n = static_cast<int>(rgs.size());
  std::vector<Subset> blocks;
  for (int i = 0; i < n; ++i) {
    const int b = rgs[static_cast<std::size_t>(i)];
    if (b < 0 || b > static_cast<int>(blocks.size())) {
      fail(ErrorCode::kInvalidPartition, "not a restricted growth string");
    }
    if (b == static_cast<int>(blocks.size())) blocks.emplace_back();
    blocks[static_cast<std::size_t>(b)].mask |= Subset::singleton(i).mask;
  }
  return Partition(n, std::move(blocks));
}

bool Partition::has_block(Subset s) const { return std::find(blocks_.begin(), blocks_.end(), s) != blocks_.end(); }

int Partition::block_of(int v) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].contains(v)) return static_cast<int>(i);
  }
  fail(ErrorCode::kInvalidArgument, "element " + std::to_string(v) + " is not in the ground set");
}

std::vector<int> Partition::rgs() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (int v : blocks_[i].elements()) out[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  return out;
}

std::string Partition::format(const GroundSet& gs) const {
  std::string out = "{";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) out += ',';
    out += gs.format(blocks_[i]);
  }
  return out + "}";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  const auto ra = a.rgs();
  const auto rb = b.rgs();
  return std::lexicographical_compare_three_way(ra.begin(), ra.end(), rb.begin(), rb.end());
}

Partition singleton_partition(const GroundSet& gs) { return Partition::singletons(gs.size()); }
Partition trivial_partition(const GroundSet& gs) { return Partition::whole(gs.size()); }

bool refines(const Partition& q, const Partition& p) {
  if (q.ground_size() != p.ground_size()) fail(ErrorCode::kInvalidArgument, "partitions of different ground sets");
  for (Subset qb : q.blocks()) {
    const Subset host = p.blocks()[static_cast<std::size_t>(p.block_of(qb.min_element()))];
    if (!qb.is_subset_of(host)) return false;
  }
  return true;
}

std::optional<Subset> refined_part(const Partition& p, const Partition& q) {
  if (q == p || !refines(q, p)) {
    fail(ErrorCode::kPrecondition, "refined_part requires a partition that strictly refines its argument");
  }
  std::optional<Subset> split;
  for (Subset pb : p.blocks()) {
    if (q.has_block(pb)) continue;
    if (split) return std::nullopt;
    split = pb;
  }
  // q refines p, so every block of q not in p is a proper subset of the one
  // split block.
  return split;
}

}  // namespace submodk
