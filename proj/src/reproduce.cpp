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

#include "reproduce.hpp"

#include <algorithm>
#include <sstream>

#include "error.hpp"
#include "families.hpp"
#include "kpartition.hpp"
#include "partition_opt.hpp"
#include "pps.hpp"

namespace submodk {

namespace {

std::string show(const Rational& r) { return r.is_integer() ? r.str() : r.str() + " (~" + r.decimal(12) + ")"; }

class CaseLog {
 public:
  CaseLog(std::string name, std::vector<ReproduceCheck>& out) : name_(std::move(name)), out_(out) {}

  void flag(std::string quantity, std::string expected, std::string observed, bool pass) {
    out_.push_back(ReproduceCheck{name_, std::move(quantity), std::move(expected), std::move(observed), pass});
  }
  void equal(std::string quantity, const Rational& expected, const Rational& observed) {
    flag(std::move(quantity), show(expected), show(observed), expected == observed);
  }
  void at_least(std::string quantity, const Rational& lower, const Rational& observed) {
    flag(std::move(quantity), ">= " + show(lower), show(observed), observed >= lower);
  }
  void at_most(std::string quantity, const Rational& upper, const Rational& observed) {
    flag(std::move(quantity), "<= " + show(upper), show(observed), observed <= upper);
  }
  void near(std::string quantity, const Rational& target, const Rational& tolerance, const Rational& observed) {
    flag(std::move(quantity), show(target) + " +- " + tolerance.decimal(3), show(observed),
         abs(observed - target) <= tolerance);
  }
  void same_partition(std::string quantity, const GroundSet& gs, const Partition& expected, const Partition& observed) {
    flag(std::move(quantity), expected.format(gs), observed.format(gs), expected == observed);
  }
  void verified(const ValueOracle& oracle, const PartitionLandscape& landscape, const PrincipalSequence& seq) {
    const auto report = verify_pps(oracle, landscape, seq);
    std::string failed;
    for (const auto& c : report.conditions) {
      if (!c.pass) failed += (failed.empty() ? "" : ",") + c.name;
    }
    flag("sequence conditions", "all PASS", failed.empty() ? "all PASS" : "FAIL " + failed, report.all_pass());
  }
  void two_level(const ValueOracle& oracle, const PartitionLandscape& landscape, const PrincipalSequence& seq) {
    const int n = oracle.n();
    const bool cond = check_two_level_condition(oracle, landscape);
    flag("two-level inequality (all partitions)", "holds", cond ? "holds" : "violated", cond);
    const bool forced = seq.length() == 2 && seq.partitions[0] == Partition::whole(n) &&
                        seq.partitions[1] == Partition::singletons(n);
    flag("principal sequence", "{V}, singletons", std::to_string(seq.length()) + " partitions" +
         (forced ? " ({V}, singletons)" : ""), forced);
  }

 private:
  std::string name_;
  std::vector<ReproduceCheck>& out_;
};

const Rational kTolerance(1, 100000);

void mono3(const ReproduceOptions& o, std::vector<ReproduceCheck>& out) {
  CaseLog log("mono3", out);
  const Rational eps = o.epsilon.value_or(default_epsilon());
  const ValueOracle oracle(std::make_shared<MonoTight3Fn>(eps));
  const PartitionLandscape landscape(oracle);
  const auto seq = compute_pps(oracle, landscape);
  const auto& gs = oracle.ground_set();
  log.flag("sequence length", "2", std::to_string(seq.length()), seq.length() == 2);
  if (seq.breakpoints.size() == 1) log.equal("breakpoint b1", Rational(1, 2), seq.breakpoints[0]);
  log.verified(oracle, landscape, seq);

  const auto run = algorithm1(oracle, seq, 2);
  log.same_partition("algorithm partition", gs, Partition(3, {Subset::of({0}), Subset::of({1, 2})}), run.result);
  log.equal("algorithm value", Rational(3) + Rational(2) * eps, run.value);
  const auto opt = optimal_k_partition(landscape, 2);
  log.equal("optimum value", Rational(5, 2) + Rational(2) * eps, opt.value);
  const Rational ratio = run.value / opt.value;
  const Rational bound = *theorem_bound(FunctionClass::kMonotone, 3);
  log.equal("class bound", Rational(6, 5), bound);
  log.near("ratio", Rational(6, 5), kTolerance, ratio);
  log.at_most("ratio vs bound", bound, ratio);
}

void mono_n(const ReproduceOptions& o, std::vector<ReproduceCheck>& out) {
  const int n = o.n.value_or(9);
  CaseLog log("monoN(n=" + std::to_string(n) + ")", out);
  const Rational eps = o.epsilon.value_or(default_epsilon());
  auto fn = std::make_shared<MonoTightNFn>(n, eps);
  const ValueOracle oracle(fn);
  const PartitionLandscape landscape(oracle);
  const auto seq = compute_pps(oracle, landscape);
  const auto& gs = oracle.ground_set();
  const int k = (n + 1) / 2;

  log.two_level(oracle, landscape, seq);
  log.verified(oracle, landscape, seq);

  std::uint64_t offending = 0;
  PartitionEnumerator it(n);
  while (auto p = it.next()) {
    int heavy = 0;
    for (Subset b : p->blocks()) {
      if (fn->uncapped(b) >= fn->cap()) ++heavy;
    }
    if (heavy > 1) ++offending;
  }
  log.flag("partitions with two heavy parts", "0", std::to_string(offending), offending == 0);

  const auto run = algorithm1(oracle, seq, k);
  std::vector<Subset> expected_blocks;
  for (int v : fn->upper().elements()) expected_blocks.push_back(Subset::singleton(v));
  expected_blocks.push_back(fn->lower());
  log.same_partition("algorithm partition", gs, Partition(n, expected_blocks), run.result);
  log.equal("algorithm value", Rational(n), run.value);

  const int first_lower = fn->lower().min_element();
  std::vector<Subset> comparison{fn->upper() | Subset::singleton(first_lower)};
  for (int v : fn->lower().elements()) {
    if (v != first_lower) comparison.push_back(Subset::singleton(v));
  }
  const Rational comparison_value = partition_value(oracle, Partition(n, comparison));
  log.equal("comparison partition value", Rational(3 * n + 3, 4) + Rational(n + 1, 2) * eps, comparison_value);

  const auto opt = optimal_k_partition(landscape, k);
  log.at_most("optimum value", comparison_value, opt.value);
  const Rational ratio = run.value / opt.value;
  log.at_least("ratio", Rational(4, 3) - Rational(4, 3L * n + 3) - kTolerance, ratio);
  log.at_most("ratio vs bound", *theorem_bound(FunctionClass::kMonotone, n), ratio);
}

void posi3(const ReproduceOptions& o, std::vector<ReproduceCheck>& out) {
  CaseLog log("posi3", out);
  const Rational eps = o.epsilon.value_or(default_epsilon());
  const ValueOracle oracle(std::make_shared<PosiTight3Fn>(eps));
  const PartitionLandscape landscape(oracle);
  const auto seq = compute_pps(oracle, landscape);
  const auto& gs = oracle.ground_set();
  log.flag("sequence length", "2", std::to_string(seq.length()), seq.length() == 2);
  if (seq.breakpoints.size() == 1) log.equal("breakpoint b1", Rational(1), seq.breakpoints[0]);
  log.verified(oracle, landscape, seq);

  const auto run = algorithm1(oracle, seq, 2);
  log.same_partition("algorithm partition", gs, Partition(3, {Subset::of({0}), Subset::of({1, 2})}), run.result);
  log.equal("algorithm value", Rational(3), run.value);
  const auto opt = optimal_k_partition(landscape, 2);
  log.equal("optimum value", Rational(2) + Rational(2) * eps, opt.value);
  const Rational ratio = run.value / opt.value;
  const Rational bound = *theorem_bound(FunctionClass::kPosimodular, 3);
  log.equal("class bound", Rational(3, 2), bound);
  log.near("ratio", Rational(3, 2), kTolerance, ratio);
  log.at_most("ratio vs bound", bound, ratio);
}

void omega(const ReproduceOptions& o, std::vector<ReproduceCheck>& out) {
  const int n = o.n.value_or(8);
  const int k = o.k.value_or(3);
  CaseLog log("omega(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")", out);
  const Rational a = o.arc_weight.value_or(default_arc_weight());
  const ValueOracle oracle(std::make_shared<DigraphHyperFn>(n, a));
  const PartitionLandscape landscape(oracle);
  const auto seq = compute_pps(oracle, landscape);
  log.two_level(oracle, landscape, seq);
  log.verified(oracle, landscape, seq);

  const auto run = algorithm1(oracle, seq, k);
  const bool has_root = run.result.has_block(Subset::singleton(0));
  log.flag("result contains {" + oracle.ground_set().label(0) + "}", "yes", has_root ? "yes" : "no", has_root);
  log.at_least("algorithm value", a * Rational(n - 1), run.value);
  const auto opt = optimal_k_partition(landscape, k);
  log.at_most("optimum value", (Rational(1) + a) * Rational(k - 1) + Rational(1), opt.value);
  if (opt.value.is_zero()) {
    log.flag("ratio", "finite", "optimum is 0", false);
    return;
  }
  log.at_least("ratio", a * Rational(n - 1) / ((Rational(1) + a) * Rational(k - 1) + Rational(1)), run.value / opt.value);
}

void matroid_footnote(const ReproduceOptions& o, std::vector<ReproduceCheck>& out) {
  const int k = o.k.value_or(4);
  CaseLog log("matroid-footnote(k=" + std::to_string(k) + ")", out);
  if (k < 2) fail(ErrorCode::kInvalidArgument, "matroid-footnote needs k >= 2");
  const int n = 2 * k;
  std::vector<Subset> blocks;
  // Elements 0..k-1 take one member of every block, so index-order tie
  // breaking picks singletons from distinct blocks.
  for (int i = 0; i < k; ++i) blocks.push_back(Subset::of({i, i + k}));
  const ValueOracle oracle(std::make_shared<PartitionMatroidRankFn>(n, blocks));
  const auto baseline = cheapest_singleton(oracle, k);
  log.equal("singleton baseline value", Rational(2 * k - 1), baseline.value);
  const auto opt = brute_force_optimal_k_partition(oracle, k);
  log.equal("optimum value", Rational(k), opt.value);
  log.equal("block partition value", Rational(k), partition_value(oracle, Partition(n, blocks)));
}

}  // namespace

std::vector<ReproduceCheck> reproduce(const ReproduceOptions& options) {
  static const std::vector<std::string> kCases{"mono3", "monoN", "posi3", "omega", "matroid-footnote"};
  const std::string& which = options.which;
  if (which != "all" && std::find(kCases.begin(), kCases.end(), which) == kCases.end()) {
    fail(ErrorCode::kInvalidArgument, "unknown case '" + which + "'");
  }
  std::vector<ReproduceCheck> out;
  auto wanted = [&](const char* name) { return which == "all" || which == name; };
  if (wanted("mono3")) mono3(options, out);
  if (wanted("monoN")) mono_n(options, out);
  if (wanted("posi3")) posi3(options, out);
  if (wanted("omega")) omega(options, out);
  if (wanted("matroid-footnote")) matroid_footnote(options, out);
  return out;
}

bool all_pass(const std::vector<ReproduceCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const ReproduceCheck& c) { return c.pass; });
}

std::string reproduce_table(const std::vector<ReproduceCheck>& checks) {
  std::size_t w_case = 4, w_qty = 8, w_exp = 8, w_obs = 8;
  for (const auto& c : checks) {
    w_case = std::max(w_case, c.case_name.size());
    w_qty = std::max(w_qty, c.quantity.size());
    w_exp = std::max(w_exp, c.expected.size());
    w_obs = std::max(w_obs, c.observed.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - std::min(w, s.size()), ' '); };
  std::ostringstream out;
  out << pad("case", w_case) << "  " << pad("quantity", w_qty) << "  " << pad("expected", w_exp) << "  "
      << pad("observed", w_obs) << "  result\n";
  for (const auto& c : checks) {
    out << pad(c.case_name, w_case) << "  " << pad(c.quantity, w_qty) << "  " << pad(c.expected, w_exp) << "  "
        << pad(c.observed, w_obs) << "  " << (c.pass ? "PASS" : "FAIL") << "\n";
  }
  const auto passed = std::count_if(checks.begin(), checks.end(), [](const ReproduceCheck& c) { return c.pass; });
  out << passed << "/" << checks.size() << " checks passed\n";
  return out.str();
}

nlohmann::json reproduce_json(const std::vector<ReproduceCheck>& checks) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : checks) {
    rows.push_back({{"case", c.case_name}, {"quantity", c.quantity}, {"expected", c.expected}, {"observed", c.observed},
                    {"pass", c.pass}});
  }
  return {{"checks", std::move(rows)}, {"all_pass", all_pass(checks)}};
}

}  // namespace submodk
