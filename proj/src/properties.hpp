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
#include <utility>

#include "oracle.hpp"

namespace submodk {

/// Largest n the exhaustive property checkers accept (4^12 pairs).
inline constexpr int kPropertyCheckCap = 12;

enum class FunctionProperty { kSubmodular, kMonotone, kSymmetric, kPosimodular };

std::string to_string(FunctionProperty p);

/// Outcome of an exhaustive property check. On failure `witness` holds the
/// lexicographically first violating (A, B) by mask; for symmetry B = V - A.
struct PropertyCheck {
  FunctionProperty property;
  bool holds = true;
  std::optional<std::pair<Subset, Subset>> witness;

  explicit operator bool() const { return holds; }
};

PropertyCheck check_submodular(const ValueOracle& oracle);
PropertyCheck check_monotone(const ValueOracle& oracle);
PropertyCheck check_symmetric(const ValueOracle& oracle);
PropertyCheck check_posimodular(const ValueOracle& oracle);
PropertyCheck check_property(const ValueOracle& oracle, FunctionProperty p);

}  // namespace submodk
