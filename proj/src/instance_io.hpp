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

// Instance files (format_version 1)
//
//   {
//     "format_version": 1,
//     "id": "optional instance name",
//     "family": "graph_cut",
//     "n": 4,
//     "labels": ["a", "b", "c", "d"],          (optional)
//     "params": { ... }
//   }
//
// Rationals are [numerator, denominator] pairs; each entry is a JSON integer
// or, when it does not fit in 64 bits, a decimal string. Family parameters:
//
//   graph_cut, graph_coverage  "edges": [[u, v, [p, q]], ...]
//   hypergraph_cut             "hyperedges": [{"vertices": [..], "weight": [p, q]}, ...]
//   partition_matroid          "blocks": [[0, 1], [2, 3], ...]
//   graphic_matroid            "vertices": m, "edges": [[u, v], ...]   (n = #edges)
//   mono_tight3, posi_tight3   "epsilon": [p, q]
//   mono_tight_n               "epsilon": [p, q]                        (n odd, >= 5)
//   digraph_hyper              "a": [p, q]
//   explicit_table             "values": [[p, q], ...]                  (2^n entries by mask)

#include <memory>
#include <string>
#include <string_view>

#include "json.hpp"
#include "oracle.hpp"

namespace submodk {

inline constexpr int kInstanceFormatVersion = 1;

struct LoadedInstance {
  std::string id;
  std::shared_ptr<const SetFunction> function;
};

struct LoadOptions {
  /// Reject functions that fail check_submodular (only when n <= 12).
  bool validate = true;
};

/// Throws Error(kParse) on malformed documents or failed validation.
LoadedInstance parse_instance(const nlohmann::json& doc, const LoadOptions& options = {});
LoadedInstance read_instance(std::string_view text, const LoadOptions& options = {});
LoadedInstance load_instance_file(const std::string& path, const LoadOptions& options = {});

/// Serializes any family; weighted sums and lambdas become explicit tables.
nlohmann::json instance_to_json(const SetFunction& fn, const std::string& id = "");
/// Pretty-printed document with a trailing newline; byte-stable.
std::string write_instance(const SetFunction& fn, const std::string& id = "");

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

/// Same function under different element labels.
class LabeledFn final : public SetFunction {
 public:
  LabeledFn(std::shared_ptr<const SetFunction> inner, std::vector<std::string> labels);

  const GroundSet& ground_set() const override { return gs_; }
  Rational evaluate(Subset s) const override { return inner_->evaluate(s); }
  std::string_view family() const override { return inner_->family(); }
  const SetFunction& inner() const { return *inner_; }

 private:
  std::shared_ptr<const SetFunction> inner_;
  GroundSet gs_;
};

}  // namespace submodk
