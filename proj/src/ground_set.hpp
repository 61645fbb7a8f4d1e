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

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace submodk {

/// Largest ground set any oracle accepts. Exhaustive code paths are further
/// limited by brute_force_cap().
inline constexpr int kMaxGroundSet = 30;

/// Hard cap on n for partition enumeration (Bell(13) is about 2.8e7).
inline constexpr int kBruteForceCap = 13;

/// Effective brute-force cap: kBruteForceCap, lowered (never raised) by the
/// SUBMOD_N_CAP environment variable.
int brute_force_cap();

/// Throws Error(kCapExceeded) when n exceeds `limit` (or brute_force_cap()).
void require_within_cap(int n, const char* what);
void require_within_cap(int n, int limit, const char* what);

/// Subset of a ground set as a bit mask; bit i set means element i is present.
struct Subset {
  std::uint32_t mask = 0;

  static constexpr Subset singleton(int v) { return Subset{std::uint32_t{1} << v}; }
  static constexpr Subset full(int n) { return Subset{n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1)}; }
  static constexpr Subset of(std::initializer_list<int> elements) {
    Subset s;
    for (int v : elements) s.mask |= std::uint32_t{1} << v;
    return s;
  }

  constexpr bool empty() const { return mask == 0; }
  constexpr int size() const { return std::popcount(mask); }
  constexpr bool contains(int v) const { return (mask >> v) & 1U; }
  /// Smallest element; undefined for the empty set.
  constexpr int min_element() const { return std::countr_zero(mask); }
  constexpr bool is_subset_of(Subset o) const { return (mask & ~o.mask) == 0; }
  constexpr bool intersects(Subset o) const { return (mask & o.mask) != 0; }

  std::vector<int> elements() const;

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset{a.mask | b.mask}; }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset{a.mask & b.mask}; }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset{a.mask & ~b.mask}; }
  friend constexpr bool operator==(Subset a, Subset b) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) = default;
};

/// Ground set V = {0, ..., n-1} with display labels.
class GroundSet {
 public:
  GroundSet() = default;
  /// Labels default to a, b, c, ... for n <= 26 and v0, v1, ... beyond.
  explicit GroundSet(int n);
  GroundSet(int n, std::vector<std::string> labels);

  int size() const { return n_; }
  Subset all() const { return Subset::full(n_); }
  bool contains(Subset s) const { return s.is_subset_of(all()); }
  const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// "{a,b}" using the element labels.
  std::string format(Subset s) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  int n_ = 0;
  std::vector<std::string> labels_;
};

std::vector<std::string> default_labels(int n);
/// v0, v1, ... or v1, v2, ... depending on `first`.
std::vector<std::string> indexed_labels(int n, int first);

}  // namespace submodk
