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
#include <mutex>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ground_set.hpp"
#include "partition.hpp"
#include "rational.hpp"

namespace submodk {

/// A set function f: 2^V -> Q. Implementations are immutable and must be
/// deterministic; ValueOracle adds memoization and query accounting.
class SetFunction {
 public:
  virtual ~SetFunction() = default;

  virtual const GroundSet& ground_set() const = 0;
  virtual Rational evaluate(Subset s) const = 0;
  /// Family tag, e.g. "graph_cut".
  virtual std::string_view family() const = 0;
};

struct OracleStats {
  std::uint64_t distinct_evaluations = 0;
  std::uint64_t total_calls = 0;
};

/// Largest n for which ValueOracle::table() materializes all 2^n values.
inline constexpr int kMaxTableSize = 20;

/// Memoizing evaluation oracle over a SetFunction.
///
/// Safe for concurrent callers: the memo table is guarded by a mutex and the
/// function itself is evaluated outside the lock, so distinct_evaluations is
/// exactly the number of distinct subsets ever queried.
class ValueOracle {
 public:
  explicit ValueOracle(std::shared_ptr<const SetFunction> fn);

  ValueOracle(const ValueOracle&) = delete;
  ValueOracle& operator=(const ValueOracle&) = delete;

  const GroundSet& ground_set() const { return fn_->ground_set(); }
  int n() const { return fn_->ground_set().size(); }
  const SetFunction& function() const { return *fn_; }
  std::shared_ptr<const SetFunction> function_ptr() const { return fn_; }

  /// f(s); throws Error(kInvalidArgument) when s leaves the ground set.
  Rational eval(Subset s) const;
  Rational operator()(Subset s) const { return eval(s); }

  /// All 2^n values indexed by mask.
  std::vector<Rational> table() const;

  OracleStats stats() const;

 private:
  std::shared_ptr<const SetFunction> fn_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::uint32_t, Rational> memo_;
  mutable std::uint64_t calls_ = 0;
};

/// f(P) = sum of f over the blocks of p.
Rational partition_value(const ValueOracle& oracle, const Partition& p);

/// f(P) - b |P|.
Rational g_value(const ValueOracle& oracle, const Partition& p, const Rational& b);

/// Integer image of a value table: value[mask] * scale, where scale is the
/// least common multiple of all denominators. Comparisons between sums of
/// table entries are exact on the integer image, and the int64 form is used
/// whenever every entry (times the largest possible block count) fits.
struct ScaledTable {
  mpz_class scale;
  std::variant<std::vector<std::int64_t>, std::vector<mpz_class>> values;

  static ScaledTable from(const std::vector<Rational>& table, int max_terms);

  /// Unscaled value of an integer produced by summing table entries.
  Rational unscale(std::int64_t v) const { return Rational(mpz_class(static_cast<long>(v)), scale); }
  Rational unscale(const mpz_class& v) const { return Rational(v, scale); }
};

}  // namespace submodk
