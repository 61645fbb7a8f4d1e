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

#include "properties.hpp"

#include <cstdint>
#include <variant>

#include "error.hpp"

namespace submodk {

namespace {

template <typename Violates>
PropertyCheck scan_pairs(const ValueOracle& oracle, FunctionProperty property, Violates violates) {
  require_within_cap(oracle.n(), std::min(kPropertyCheckCap, brute_force_cap()), "property check");
  // Sums of at most two entries are compared.
  const ScaledTable scaled = ScaledTable::from(oracle.table(), 2);
  const std::uint32_t count = std::uint32_t{1} << oracle.n();
  PropertyCheck out{property, true, std::nullopt};
  std::visit(
      [&](const auto& f) {
        for (std::uint32_t a = 0; a < count; ++a) {
          for (std::uint32_t b = 0; b < count; ++b) {
            if (violates(f, a, b)) {
              out.holds = false;
              out.witness = std::make_pair(Subset{a}, Subset{b});
              return;
            }
          }
        }
      },
      scaled.values);
  return out;
}

}  // namespace

std::string to_string(FunctionProperty p) {
  switch (p) {
    case FunctionProperty::kSubmodular: return "submodular";
    case FunctionProperty::kMonotone: return "monotone";
    case FunctionProperty::kSymmetric: return "symmetric";
    case FunctionProperty::kPosimodular: return "posimodular";
  }
  return "unknown";
}

PropertyCheck check_submodular(const ValueOracle& oracle) {
  return scan_pairs(oracle, FunctionProperty::kSubmodular, [](const auto& f, std::uint32_t a, std::uint32_t b) {
    return f[a] + f[b] < f[a & b] + f[a | b];
  });
}

PropertyCheck check_monotone(const ValueOracle& oracle) {
  return scan_pairs(oracle, FunctionProperty::kMonotone, [](const auto& f, std::uint32_t a, std::uint32_t b) {
    return (a & ~b) == 0 && f[a] > f[b];
  });
}

PropertyCheck check_symmetric(const ValueOracle& oracle) {
  require_within_cap(oracle.n(), std::min(kPropertyCheckCap, brute_force_cap()), "property check");
  const std::uint32_t all = oracle.ground_set().all().mask;
  for (std::uint32_t a = 0; a <= all; ++a) {
    if (oracle.eval(Subset{a}) != oracle.eval(Subset{all & ~a})) {
      return PropertyCheck{FunctionProperty::kSymmetric, false, std::make_pair(Subset{a}, Subset{all & ~a})};
    }
  }
  return PropertyCheck{FunctionProperty::kSymmetric, true, std::nullopt};
}

PropertyCheck check_posimodular(const ValueOracle& oracle) {
  return scan_pairs(oracle, FunctionProperty::kPosimodular, [](const auto& f, std::uint32_t a, std::uint32_t b) {
    return f[a] + f[b] < f[a & ~b] + f[b & ~a];
  });
}

PropertyCheck check_property(const ValueOracle& oracle, FunctionProperty p) {
  switch (p) {
    case FunctionProperty::kSubmodular: return check_submodular(oracle);
    case FunctionProperty::kMonotone: return check_monotone(oracle);
    case FunctionProperty::kSymmetric: return check_symmetric(oracle);
    case FunctionProperty::kPosimodular: return check_posimodular(oracle);
  }
  fail(ErrorCode::kInvalidArgument, "unknown property");
}

}  // namespace submodk
