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
#include <vector>

#include "json.hpp"
#include "rational.hpp"

namespace submodk {

/// One expected-vs-observed line of the worked-example table.
struct ReproduceCheck {
  std::string case_name;
  std::string quantity;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct ReproduceOptions {
  /// all | mono3 | monoN | posi3 | omega | matroid-footnote
  std::string which = "all";
  std::optional<int> n;  // monoN (default 9) and omega (default 8)
  std::optional<int> k;  // omega (default 3) and matroid-footnote (default 4)
  std::optional<Rational> epsilon;
  std::optional<Rational> arc_weight;
};

/// The worked examples:
///   mono3             three-element monotone instance at k = 2 (ratio near 6/5)
///   monoN             odd-n monotone family at k = (n+1)/2
///   posi3             three-element posimodular instance at k = 2 (ratio near 3/2)
///   omega             digraph-plus-hyperedge instance with ratio growing like n/k
///   matroid-footnote  partition matroid where the singleton baseline pays 2k-1
std::vector<ReproduceCheck> reproduce(const ReproduceOptions& options);

bool all_pass(const std::vector<ReproduceCheck>& checks);
std::string reproduce_table(const std::vector<ReproduceCheck>& checks);
nlohmann::json reproduce_json(const std::vector<ReproduceCheck>& checks);

}  // namespace submodk
