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

#include "partition_opt.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <variant>

#include "error.hpp"

namespace submodk {

// ---------------------------------------------------------------------------
// PartitionEnumerator

PartitionEnumerator::PartitionEnumerator(int n, std::optional<int> k) : n_(n), k_(k) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "enumerate_partitions: n must be positive");
  require_within_cap(n, "enumerate_partitions");
  if (k && (*k < 1 || *k > n)) {
    fail(ErrorCode::kInvalidArgument, "enumerate_partitions: k must lie in [1, " + std::to_string(n) + "]");
  }
  max_label_ = k ? *k - 1 : n - 1;
  rgs_.assign(static_cast<std::size_t>(n), 0);
}

int PartitionEnumerator::blocks_used() const { return *std::max_element(rgs_.begin(), rgs_.end()) + 1; }

bool PartitionEnumerator::advance() {
  for (int i = n_ - 1; i >= 1; --i) {
    const int prefix_max = *std::max_element(rgs_.begin(), rgs_.begin() + i);
    auto& digit = rgs_[static_cast<std::size_t>(i)];
    if (digit <= prefix_max && digit < max_label_) {
      ++digit;
      std::fill(rgs_.begin() + i + 1, rgs_.end(), 0);
      return true;
    }
  }
  return false;
}

std::optional<Partition> PartitionEnumerator::next() {
  if (done_) return std::nullopt;
  if (started_ && !advance()) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  while (k_ && blocks_used() != *k_) {
    if (!advance()) {
      done_ = true;
      return std::nullopt;
    }
  }
  return Partition::from_rgs(rgs_);
}

// ---------------------------------------------------------------------------
// PartitionLandscape

namespace {

template <typename T>
struct LevelScan {
  bool seen = false;
  T best{};
  std::uint64_t count = 0;
  std::vector<Subset> first;
};

template <typename T>
class LandscapeSearch {
 public:
  LandscapeSearch(const std::vector<T>& values, int n) : values_(values), n_(n), levels_(static_cast<std::size_t>(n)) {}

  void run() {
    blocks_[0] = Subset::singleton(0);
    recurse(1, 1);
  }

  std::vector<LevelScan<T>>& levels() { return levels_; }
  std::uint64_t examined() const { return examined_; }

 private:
  void recurse(int element, int used) {
    if (element == n_) {
      leaf(used);
      return;
    }
    const std::uint32_t bit = std::uint32_t{1} << element;
    for (int b = 0; b < used; ++b) {
      blocks_[static_cast<std::size_t>(b)].mask |= bit;
      recurse(element + 1, used);
      blocks_[static_cast<std::size_t>(b)].mask &= ~bit;
    }
    blocks_[static_cast<std::size_t>(used)] = Subset{bit};
    recurse(element + 1, used + 1);
    blocks_[static_cast<std::size_t>(used)] = Subset{};
  }

  void leaf(int used) {
    ++examined_;
    sum_ = values_[blocks_[0].mask];
    for (int b = 1; b < used; ++b) sum_ += values_[blocks_[static_cast<std::size_t>(b)].mask];
    auto& level = levels_[static_cast<std::size_t>(used - 1)];
    if (!level.seen || sum_ < level.best) {
      level.seen = true;
      level.best = sum_;
      level.count = 1;
      level.first.assign(blocks_.begin(), blocks_.begin() + used);
    } else if (sum_ == level.best) {
      ++level.count;
    }
  }

  const std::vector<T>& values_;
  int n_;
  std::vector<LevelScan<T>> levels_;
  std::array<Subset, kBruteForceCap> blocks_{};
  T sum_{};
  std::uint64_t examined_ = 0;
};

}  // namespace

PartitionLandscape::PartitionLandscape(const ValueOracle& oracle) {
  const int n = oracle.n();
  require_within_cap(n, "partition search");
  const ScaledTable scaled = ScaledTable::from(oracle.table(), n);
  std::visit(
      [&](const auto& values) {
        using T = typename std::decay_t<decltype(values)>::value_type;
        LandscapeSearch<T> search(values, n);
        search.run();
        examined_ = search.examined();
        for (auto& scan : search.levels()) {
          levels_.push_back(Level{scaled.unscale(scan.best), Partition(n, std::move(scan.first)), scan.count});
        }
      },
      scaled.values);
}

const PartitionLandscape::Level& PartitionLandscape::level(int m) const {
  if (m < 1 || m > n()) fail(ErrorCode::kInvalidArgument, "block count " + std::to_string(m) + " out of range");
  return levels_[static_cast<std::size_t>(m - 1)];
}

GMinResult PartitionLandscape::minimize_g(const Rational& b) const {
  std::optional<Rational> best;
  int finest = 0;
  int coarsest = 0;
  std::uint64_t found = 0;
  for (int m = 1; m <= n(); ++m) {
    const Rational g = level(m).value - b * Rational(m);
    if (!best || g < *best) {
      best = g;
      coarsest = finest = m;
      found = level(m).minimizer_count;
    } else if (g == *best) {
      finest = m;
      found += level(m).minimizer_count;
    }
  }
  return GMinResult{*best, found, level(finest).first_minimizer, level(coarsest).first_minimizer};
}

GMinResult minimize_g(const ValueOracle& oracle, const Rational& b) { return PartitionLandscape(oracle).minimize_g(b); }

OptimalKPartition optimal_k_partition(const PartitionLandscape& landscape, int k) {
  if (k < 2 || k > landscape.n()) {
    fail(ErrorCode::kInvalidArgument, "k must lie in [2, " + std::to_string(landscape.n()) + "], got " + std::to_string(k));
  }
  const auto& level = landscape.level(k);
  return OptimalKPartition{level.first_minimizer, level.value};
}

OptimalKPartition brute_force_optimal_k_partition(const ValueOracle& oracle, int k) {
  if (k < 2 || k > oracle.n()) {
    fail(ErrorCode::kInvalidArgument, "k must lie in [2, " + std::to_string(oracle.n()) + "], got " + std::to_string(k));
  }
  return optimal_k_partition(PartitionLandscape(oracle), k);
}

}  // namespace submodk
