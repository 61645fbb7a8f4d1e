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

#include <string>
#include <vector>

#include "oracle.hpp"
#include "partition.hpp"
#include "partition_opt.hpp"
#include "rational.hpp"

namespace submodk {

/// Chain of partitions P_1 = {V}, ..., P_r = singletons with critical values
/// b_1 <= ... <= b_{r-1}; P_j and P_{j+1} both minimize f(P) - b|P| at b_j.
struct PrincipalSequence {
  std::vector<Partition> partitions;
  std::vector<Rational> breakpoints;

  int length() const { return static_cast<int>(partitions.size()); }
  friend bool operator==(const PrincipalSequence&, const PrincipalSequence&) = default;
};

/// Principal partition sequence by exact parametric divide and conquer over
/// the partition landscape, followed by repair_chain().
///
/// Starting from the pair ({V}, singletons), each pair (coarse, fine) is
/// probed at the value b where their g-lines cross. If nothing beats them
/// there, b is a breakpoint; otherwise the finest minimizer at b is inserted
/// and both halves are searched. Throws Error(kInternal) when the input
/// breaks the lattice structure a submodular function guarantees.
PrincipalSequence compute_pps(const ValueOracle& oracle);
PrincipalSequence compute_pps(const ValueOracle& oracle, const PartitionLandscape& landscape);

/// Inserts intermediate partitions until every step refines exactly one part.
/// Inserted partitions share the breakpoint of the pair they split.
PrincipalSequence repair_chain(const ValueOracle& oracle, PrincipalSequence sequence);
PrincipalSequence repair_chain(const ValueOracle& oracle, const PartitionLandscape& landscape,
                               PrincipalSequence sequence);

struct ConditionReport {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct PpsVerification {
  /// C1..C5 followed by the chain shape check (block counts, r <= n).
  std::vector<ConditionReport> conditions;
  /// Informational: b_1 < ... < b_{r-1} with no repeated values.
  bool strictly_increasing = true;

  bool all_pass() const;
  const ConditionReport& condition(const std::string& name) const;
};

/// Checks C1-C4 exactly; C5 at b_1 - 1, b_{r-1} + 1, every breakpoint, every
/// segment midpoint and `interior_samples` extra points per segment.
PpsVerification verify_pps(const ValueOracle& oracle, const PrincipalSequence& sequence, int interior_samples = 3);
PpsVerification verify_pps(const ValueOracle& oracle, const PartitionLandscape& landscape,
                           const PrincipalSequence& sequence, int interior_samples = 3);

/// True iff (f(P) - f(V)) / (|P| - 1) > (f(Q) - f(V)) / (n - 1) for every
/// partition P other than {V} and the singletons Q. When it holds the
/// principal sequence is exactly ({V}, Q).
bool check_two_level_condition(const ValueOracle& oracle);
bool check_two_level_condition(const ValueOracle& oracle, const PartitionLandscape& landscape);

}  // namespace submodk
