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

#include "oracle.hpp"

#include <string>

#include "error.hpp"

namespace submodk {

ValueOracle::ValueOracle(std::shared_ptr<const SetFunction> fn) : fn_(std::move(fn)) {
  if (!fn_) fail(ErrorCode::kInvalidArgument, "null set function");
}

Rational ValueOracle::eval(Subset s) const {
  if (!ground_set().contains(s)) {
    fail(ErrorCode::kInvalidArgument, "subset mask " + std::to_string(s.mask) + " lies outside the ground set");
  }
  {
    std::lock_guard lock(mu_);
    ++calls_;
    if (auto it = memo_.find(s.mask); it != memo_.end()) return it->second;
  }
  Rational value = fn_->evaluate(s);
  std::lock_guard lock(mu_);
  return memo_.try_emplace(s.mask, std::move(value)).first->second;
}

std::vector<Rational> ValueOracle::table() const {
  if (n() > kMaxTableSize) {
    fail(ErrorCode::kCapExceeded, "value table requested for n = " + std::to_string(n()));
  }
  const std::uint32_t count = std::uint32_t{1} << n();
  std::vector<Rational> out;
  out.reserve(count);
  for (std::uint32_t m = 0; m < count; ++m) out.push_back(eval(Subset{m}));
  return out;
}

OracleStats ValueOracle::stats() const {
  std::lock_guard lock(mu_);
  return OracleStats{memo_.size(), calls_};
}

Rational partition_value(const ValueOracle& oracle, const Partition& p) {
  if (p.ground_size() != oracle.n()) fail(ErrorCode::kInvalidPartition, "partition does not match the oracle's ground set");
  Rational total;
  for (Subset b : p.blocks()) total += oracle.eval(b);
  return total;
}

Rational g_value(const ValueOracle& oracle, const Partition& p, const Rational& b) {
  return partition_value(oracle, p) - b * Rational(p.size());
}

ScaledTable ScaledTable::from(const std::vector<Rational>& table, int max_terms) {
  ScaledTable out;
  out.scale = 1;
  for (const auto& r : table) {
    mpz_class den = r.denominator();
    mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<mpz_class> big;
  big.reserve(table.size());
  mpz_class max_abs = 0;
  for (const auto& r : table) {
    mpz_class v = r.numerator() * (out.scale / r.denominator());
    if (abs(v) > max_abs) max_abs = abs(v);
    big.push_back(std::move(v));
  }
  // Leave headroom so any sum of up to max_terms entries stays in range.
  const mpz_class limit = mpz_class(1) << 62;
  if (max_abs * std::max(1, max_terms) < limit) {
    std::vector<std::int64_t> small;
    small.reserve(big.size());
    for (const auto& v : big) small.push_back(v.get_si());
    out.values = std::move(small);
  } else {
    out.values = std::move(big);
  }
  return out;
}

}  // namespace submodk
