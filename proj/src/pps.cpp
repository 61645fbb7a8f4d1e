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

#include "pps.hpp"

#include <algorithm>

#include "error.hpp"
#include "properties.hpp"

namespace submodk {

namespace {

Rational crossing(const ValueOracle& oracle, const Partition& coarse, const Partition& fine) {
  return (partition_value(oracle, fine) - partition_value(oracle, coarse)) / Rational(fine.size() - coarse.size());
}

class ParametricSearch {
 public:
  ParametricSearch(const ValueOracle& oracle, const PartitionLandscape& landscape)
      : oracle_(oracle), landscape_(landscape) {}

  PrincipalSequence run() {
    const int n = oracle_.n();
    const Partition whole = Partition::whole(n);
    const Partition singles = Partition::singletons(n);
    out_.partitions.push_back(whole);
    if (n > 1) {
      refine(whole, singles);
      out_.partitions.push_back(singles);
    }
    return std::move(out_);
  }

 private:
  void refine(const Partition& coarse, const Partition& fine) {
    const Rational b = crossing(oracle_, coarse, fine);
    const GMinResult best = landscape_.minimize_g(b);
    const Rational at_pair = g_value(oracle_, coarse, b);
    if (best.value > at_pair) fail(ErrorCode::kInternal, "partition search returned a non-minimum");
    if (best.value == at_pair) {
      out_.breakpoints.push_back(b);
      return;
    }
    const Partition& mid = best.finest;
    if (!(coarse.size() < mid.size() && mid.size() < fine.size())) {
      fail(ErrorCode::kInternal, "parametric search: minimizer at b = " + b.str() +
                                     " is not strictly between its neighbours (is the function submodular?)");
    }
    refine(coarse, mid);
    out_.partitions.push_back(mid);
    refine(mid, fine);
  }

  const ValueOracle& oracle_;
  const PartitionLandscape& landscape_;
  PrincipalSequence out_;
};

std::string join_partition(const ValueOracle& oracle, const Partition& p) { return p.format(oracle.ground_set()); }

}  // namespace

PrincipalSequence compute_pps(const ValueOracle& oracle) {
  const PartitionLandscape landscape(oracle);
  return compute_pps(oracle, landscape);
}

PrincipalSequence compute_pps(const ValueOracle& oracle, const PartitionLandscape& landscape) {
  if (landscape.n() != oracle.n()) fail(ErrorCode::kInvalidArgument, "landscape does not match the oracle");
  return repair_chain(oracle, landscape, ParametricSearch(oracle, landscape).run());
}

PrincipalSequence repair_chain(const ValueOracle& oracle, PrincipalSequence sequence) {
  const PartitionLandscape landscape(oracle);
  return repair_chain(oracle, landscape, std::move(sequence));
}

PrincipalSequence repair_chain(const ValueOracle& oracle, const PartitionLandscape& landscape,
                               PrincipalSequence sequence) {
  auto& parts = sequence.partitions;
  auto& bps = sequence.breakpoints;
  if (parts.empty() || bps.size() + 1 != parts.size()) {
    fail(ErrorCode::kInvalidArgument, "repair_chain: malformed sequence");
  }
  std::size_t j = 0;
  while (j + 1 < parts.size()) {
    const Partition& coarse = parts[j];
    const Partition& fine = parts[j + 1];
    if (fine == coarse || !refines(fine, coarse)) {
      fail(ErrorCode::kInternal, "repair_chain: " + join_partition(oracle, fine) + " does not strictly refine " +
                                     join_partition(oracle, coarse));
    }
    if (refined_part(coarse, fine)) {
      ++j;
      continue;
    }
    // First block of the coarse partition that the fine one splits.
    Subset split;
    for (Subset block : coarse.blocks()) {
      if (!fine.has_block(block)) {
        split = block;
        break;
      }
    }
    std::vector<Subset> inside;
    std::vector<Subset> outside;
    for (Subset block : fine.blocks()) (block.is_subset_of(split) ? inside : outside).push_back(block);

    std::vector<Subset> q1_blocks;
    for (Subset block : coarse.blocks()) {
      if (block != split) q1_blocks.push_back(block);
    }
    q1_blocks.insert(q1_blocks.end(), inside.begin(), inside.end());
    std::vector<Subset> q2_blocks = outside;
    q2_blocks.push_back(split);
    const Partition q1(oracle.n(), std::move(q1_blocks));
    const Partition q2(oracle.n(), std::move(q2_blocks));

    const Rational b = bps[j];
    const Rational target = landscape.minimize_g(b).value;
    Partition chosen;
    if (g_value(oracle, q1, b) == target) {
      chosen = q1;
    } else if (g_value(oracle, q2, b) == target) {
      chosen = q2;
    } else {
      fail(ErrorCode::kInternal, "repair_chain: neither candidate attains g(" + b.str() +
                                     ") (is the function submodular?)");
    }
    parts.insert(parts.begin() + static_cast<std::ptrdiff_t>(j) + 1, std::move(chosen));
    bps.insert(bps.begin() + static_cast<std::ptrdiff_t>(j), b);
    // Re-examine the pair (coarse, chosen) from the same position.
  }
  return sequence;
}

bool PpsVerification::all_pass() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.pass; });
}

const ConditionReport& PpsVerification::condition(const std::string& name) const {
  for (const auto& c : conditions) {
    if (c.name == name) return c;
  }
  fail(ErrorCode::kInvalidArgument, "no condition named " + name);
}

PpsVerification verify_pps(const ValueOracle& oracle, const PrincipalSequence& sequence, int interior_samples) {
  const PartitionLandscape landscape(oracle);
  return verify_pps(oracle, landscape, sequence, interior_samples);
}

PpsVerification verify_pps(const ValueOracle& oracle, const PartitionLandscape& landscape,
                           const PrincipalSequence& sequence, int interior_samples) {
  PpsVerification out;
  ConditionReport c1{"C1", true, ""};
  ConditionReport c2{"C2", true, ""};
  ConditionReport c3{"C3", true, ""};
  ConditionReport c4{"C4", true, ""};
  ConditionReport c5{"C5", true, ""};
  ConditionReport shape{"chain", true, ""};

  const auto& parts = sequence.partitions;
  const auto& bps = sequence.breakpoints;
  const int n = oracle.n();
  const int r = sequence.length();
  auto fmt = [&](const Partition& p) { return join_partition(oracle, p); };

  bool well_formed = true;
  for (const auto& p : parts) well_formed = well_formed && p.ground_size() == n;
  if (r == 0 || !well_formed || static_cast<int>(bps.size()) != r - 1) {
    for (auto* c : {&c1, &c2, &c3, &c4, &c5, &shape}) {
      c->pass = false;
      c->witness = "malformed sequence";
    }
    out.conditions = {c1, c2, c3, c4, c5, shape};
    out.strictly_increasing = false;
    return out;
  }

  if (parts.front() != Partition::whole(n)) {
    c1 = {"C1", false, "first partition is " + fmt(parts.front())};
  } else if (parts.back() != Partition::singletons(n)) {
    c1 = {"C1", false, "last partition is " + fmt(parts.back())};
  }

  for (int j = 0; j + 1 < r && c2.pass; ++j) {
    const auto& coarse = parts[static_cast<std::size_t>(j)];
    const auto& fine = parts[static_cast<std::size_t>(j + 1)];
    if (fine == coarse || !refines(fine, coarse)) {
      c2 = {"C2", false, "P" + std::to_string(j + 2) + " does not strictly refine P" + std::to_string(j + 1)};
    } else if (!refined_part(coarse, fine)) {
      c2 = {"C2", false, "P" + std::to_string(j + 2) + " refines more than one part of P" + std::to_string(j + 1)};
    }
  }

  for (std::size_t j = 0; j + 1 < bps.size(); ++j) {
    if (bps[j] > bps[j + 1]) {
      if (c3.pass) {
        c3 = {"C3", false, "b" + std::to_string(j + 1) + " = " + bps[j].str() + " > b" + std::to_string(j + 2) + " = " +
                               bps[j + 1].str()};
      }
    }
    if (bps[j] >= bps[j + 1]) out.strictly_increasing = false;
  }

  for (int j = 0; j + 1 < r && c4.pass; ++j) {
    const Rational& b = bps[static_cast<std::size_t>(j)];
    const Rational lo = g_value(oracle, parts[static_cast<std::size_t>(j)], b);
    const Rational hi = g_value(oracle, parts[static_cast<std::size_t>(j + 1)], b);
    const Rational best = landscape.minimize_g(b).value;
    if (lo != best || hi != best) {
      c4 = {"C4", false, "at b" + std::to_string(j + 1) + " = " + b.str() + ": g(P" + std::to_string(j + 1) + ") = " +
                             lo.str() + ", g(P" + std::to_string(j + 2) + ") = " + hi.str() + ", g = " + best.str()};
    }
  }

  // C5: sample every segment against its designated partition.
  auto probe = [&](const Partition& designated, const Rational& b, const std::string& where) {
    if (!c5.pass) return;
    const Rational got = g_value(oracle, designated, b);
    const Rational best = landscape.minimize_g(b).value;
    if (got != best) c5 = {"C5", false, where + ": g at b = " + b.str() + " is " + best.str() + ", designated gives " + got.str()};
  };
  const int extra = std::max(0, interior_samples);
  if (bps.empty()) {
    for (long t = -1 - extra; t <= 1 + extra; ++t) probe(parts.front(), Rational(t), "single segment");
  } else {
    const Rational& first = bps.front();
    const Rational& last = bps.back();
    probe(parts.front(), first, "segment 0");
    for (long t = 1; t <= 1 + extra; ++t) probe(parts.front(), first - Rational(t), "segment 0");
    for (std::size_t j = 0; j + 1 < bps.size(); ++j) {
      const auto& designated = parts[j + 1];
      const Rational& lo = bps[j];
      const Rational& hi = bps[j + 1];
      const std::string where = "segment " + std::to_string(j + 1);
      probe(designated, lo, where);
      probe(designated, hi, where);
      probe(designated, (lo + hi) / Rational(2), where);
      for (long t = 1; t <= extra; ++t) probe(designated, lo + (hi - lo) * Rational(t, extra + 2), where);
    }
    probe(parts.back(), last, "last segment");
    for (long t = 1; t <= 1 + extra; ++t) probe(parts.back(), last + Rational(t), "last segment");
  }

  if (r > n) shape = {"chain", false, "sequence has " + std::to_string(r) + " partitions for n = " + std::to_string(n)};
  for (int j = 0; j + 1 < r && shape.pass; ++j) {
    if (parts[static_cast<std::size_t>(j + 1)].size() <= parts[static_cast<std::size_t>(j)].size()) {
      shape = {"chain", false, "block counts do not increase at position " + std::to_string(j + 1)};
    }
  }

  out.conditions = {c1, c2, c3, c4, c5, shape};
  return out;
}

bool check_two_level_condition(const ValueOracle& oracle) {
  require_within_cap(oracle.n(), std::min(kPropertyCheckCap, brute_force_cap()), "two-level condition");
  const PartitionLandscape landscape(oracle);
  return check_two_level_condition(oracle, landscape);
}

bool check_two_level_condition(const ValueOracle& oracle, const PartitionLandscape& landscape) {
  const int n = oracle.n();
  require_within_cap(n, std::min(kPropertyCheckCap, brute_force_cap()), "two-level condition");
  if (n <= 2) return true;
  const Rational whole = oracle.eval(oracle.ground_set().all());
  const Rational reference = (landscape.level(n).value - whole) / Rational(n - 1);
  // For a fixed block count the left side is smallest at the cheapest
  // partition, so checking the per-count minimum covers every P.
  for (int m = 2; m < n; ++m) {
    if ((landscape.level(m).value - whole) / Rational(m - 1) <= reference) return false;
  }
  return true;
}

}  // namespace submodk
