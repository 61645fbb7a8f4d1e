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
#include <memory>
#include <random>
#include <string>
#include <string_view>

#include "oracle.hpp"

namespace submodk {

enum class RandomFamily { kGraphCut, kHypergraphCut, kGraphCoverage, kPartitionMatroid, kGraphicMatroid };

std::string to_string(RandomFamily f);
RandomFamily parse_random_family(std::string_view name);

/// Platform-independent generator: mt19937_64 seeded through seed_seq from
/// (seed, index), with rejection-sampled bounded draws.
class InstanceRng {
 public:
  InstanceRng(std::uint64_t seed, std::uint64_t index);

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  bool coin() { return uniform(0, 1) == 1; }
  /// p/q with p in 1..6 and q in 1..3.
  Rational weight();

 private:
  std::mt19937_64 engine_;
};

/// Instance number `index` of a seeded stream. Weights are small positive
/// rationals; graphs always have at least one edge. For graphic matroids the
/// ground set is the edge set, so `n` is the edge count.
std::shared_ptr<const SetFunction> random_instance(RandomFamily family, int n, std::uint64_t seed,
                                                   std::uint64_t index);

/// Positive combination c1 * coverage + c2 * cut over two random graphs: a
/// posimodular function that is neither monotone nor symmetric in general.
std::shared_ptr<const SetFunction> random_coverage_cut_mix(int n, std::uint64_t seed, std::uint64_t index);

}  // namespace submodk
