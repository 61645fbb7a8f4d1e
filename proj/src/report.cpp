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

#include "report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <sstream>
#include <thread>

#include "error.hpp"

namespace submodk {

using nlohmann::json;

namespace {

std::string fraction_or_empty(const std::optional<Rational>& r) { return r ? r->fraction() : std::string(); }
std::string decimal_or_empty(const std::optional<Rational>& r) { return r ? r->decimal(12) : std::string(); }

// Instance ids come from file names and user input; quote when needed.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json rational_or_null(const std::optional<Rational>& r) { return r ? rational_to_json(*r) : json(nullptr); }

std::optional<Rational> row_bound(const std::string& algorithm, FunctionClass cls, int n, int k) {
  if (algorithm == "pps") return theorem_bound(cls, n);
  if (algorithm == "singleton" && cls == FunctionClass::kMonotone) return Rational(2) - Rational(1, k);
  return std::nullopt;
}

}  // namespace

json partition_to_json(const Partition& p, const GroundSet& gs) {
  json blocks = json::array();
  for (Subset b : p.blocks()) {
    json block = json::array();
    for (int v : b.elements()) block.push_back(gs.label(v));
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::string csv_line(const ReportRow& row) {
  std::ostringstream out;
  out << csv_field(row.instance_id) << ',' << row.n << ',' << row.k << ',' << csv_field(row.algorithm) << ','
      << row.value.fraction() << ',' << row.value.decimal(12) << ',' << fraction_or_empty(row.opt) << ','
      << decimal_or_empty(row.opt) << ',';
  if (row.ratio_infinite) {
    out << "inf,inf,";
  } else {
    out << fraction_or_empty(row.ratio) << ',' << decimal_or_empty(row.ratio) << ',';
  }
  out << fraction_or_empty(row.bound) << ',' << decimal_or_empty(row.bound) << ',';
  if (row.bound_ok) out << (*row.bound_ok ? "true" : "false");
  out << ',' << row.oracle_eval_count << ',';
  if (row.wall_time) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", *row.wall_time);
    out << buf;
  }
  return out.str();
}

std::string rows_to_csv(const std::vector<ReportRow>& rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& row : rows) out += csv_line(row) + "\n";
  return out;
}

json rows_to_json(const std::vector<ReportRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json r;
    r["instance_id"] = row.instance_id;
    r["n"] = row.n;
    r["k"] = row.k;
    r["algorithm"] = row.algorithm;
    r["partition"] = row.partition_text;
    r["value"] = rational_to_json(row.value);
    r["value_dec"] = row.value.decimal(12);
    r["opt"] = rational_or_null(row.opt);
    if (row.ratio_infinite) {
      r["ratio"] = "inf";
    } else {
      r["ratio"] = rational_or_null(row.ratio);
    }
    r["bound"] = rational_or_null(row.bound);
    r["bound_ok"] = row.bound_ok ? json(*row.bound_ok) : json(nullptr);
    r["oracle_eval_count"] = row.oracle_eval_count;
    r["wall_time"] = row.wall_time ? json(*row.wall_time) : json(nullptr);
    out.push_back(std::move(r));
  }
  return out;
}

FunctionClass detect_class(const ValueOracle& oracle) {
  if (oracle.n() > kPropertyCheckCap) return FunctionClass::kGeneral;
  if (!check_submodular(oracle)) return FunctionClass::kGeneral;
  if (check_monotone(oracle)) return FunctionClass::kMonotone;
  if (check_symmetric(oracle)) return FunctionClass::kSymmetric;
  if (check_posimodular(oracle)) return FunctionClass::kPosimodular;
  return FunctionClass::kGeneral;
}

std::vector<ReportRow> solve_instance(const LoadedInstance& instance, const SolveOptions& options) {
  const auto& gs = instance.function->ground_set();
  const int n = gs.size();
  if (options.k < 2 || options.k > n) {
    fail(ErrorCode::kInvalidArgument, "k must lie in [2, " + std::to_string(n) + "], got " + std::to_string(options.k));
  }
  for (const auto& a : options.algorithms) {
    if (a != "pps" && a != "greedy" && a != "singleton") fail(ErrorCode::kInvalidArgument, "unknown algorithm '" + a + "'");
  }

  std::optional<OptimalKPartition> opt;
  FunctionClass cls = FunctionClass::kGeneral;
  if (options.brute_force) {
    const ValueOracle reference(instance.function);
    opt = brute_force_optimal_k_partition(reference, options.k);
    cls = options.function_class ? *options.function_class : detect_class(reference);
  }

  std::vector<ReportRow> rows;
  for (const auto& algorithm : options.algorithms) {
    const ValueOracle oracle(instance.function);
    const auto start = std::chrono::steady_clock::now();
    ReportRow row;
    row.instance_id = instance.id;
    row.n = n;
    row.k = options.k;
    row.algorithm = algorithm;
    if (algorithm == "pps") {
      auto run = algorithm1(oracle, options.k);
      row.partition = std::move(run.result);
      row.value = std::move(run.value);
    } else {
      auto res = algorithm == "greedy" ? greedy_splitting(oracle, options.k) : cheapest_singleton(oracle, options.k);
      row.partition = std::move(res.partition);
      row.value = std::move(res.value);
    }
    const auto stop = std::chrono::steady_clock::now();
    row.partition_text = row.partition.format(gs);
    row.oracle_eval_count = oracle.stats().distinct_evaluations;
    if (options.timing) row.wall_time = std::chrono::duration<double>(stop - start).count();

    if (opt) {
      row.opt = opt->value;
      row.bound = row_bound(algorithm, cls, n, options.k);
      if (opt->value.is_zero()) {
        if (row.value.is_zero()) {
          row.ratio = Rational(1);
        } else {
          row.ratio_infinite = true;
          row.bound_ok = false;
        }
      } else {
        row.ratio = row.value / opt->value;
      }
      if (!row.ratio_infinite && row.bound) row.bound_ok = *row.ratio <= *row.bound;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ReportRow> solve_instances(const std::vector<LoadedInstance>& instances, const SolveOptions& options) {
  std::vector<std::vector<ReportRow>> per_instance(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      try {
        per_instance[i] = solve_instance(instances[i], options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(instances.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::vector<ReportRow> rows;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    for (auto& row : per_instance[i]) rows.push_back(std::move(row));
  }
  return rows;
}

PpsReport build_pps_report(const ValueOracle& oracle) {
  PpsReport report;
  const PartitionLandscape landscape(oracle);
  report.sequence = compute_pps(oracle, landscape);
  report.verification = verify_pps(oracle, landscape, report.sequence);
  for (const auto& p : report.sequence.partitions) report.values.push_back(partition_value(oracle, p));
  return report;
}

std::string pps_report_text(const ValueOracle& oracle, const std::string& id, const PpsReport& report) {
  const auto& gs = oracle.ground_set();
  std::ostringstream out;
  out << "instance: " << (id.empty() ? "-" : id) << "  family: " << oracle.function().family() << "  n: " << gs.size()
      << "\n";
  out << "principal sequence (" << report.sequence.length() << " partitions)\n";
  for (int j = 0; j < report.sequence.length(); ++j) {
    const auto idx = static_cast<std::size_t>(j);
    out << "  P" << j + 1 << " = " << report.sequence.partitions[idx].format(gs) << "  f = " << report.values[idx]
        << "  (" << report.values[idx].decimal(12) << ")\n";
    if (idx < report.sequence.breakpoints.size()) {
      const auto& b = report.sequence.breakpoints[idx];
      out << "  b" << j + 1 << " = " << b << "  (" << b.decimal(12) << ")\n";
    }
  }
  out << "verification\n";
  for (const auto& c : report.verification.conditions) {
    out << "  " << c.name << ' ' << (c.pass ? "PASS" : "FAIL");
    if (!c.pass && !c.witness.empty()) out << "  " << c.witness;
    out << "\n";
  }
  out << "  breakpoints strictly increasing: " << (report.verification.strictly_increasing ? "yes" : "no") << "\n";
  return out.str();
}

json pps_report_json(const ValueOracle& oracle, const std::string& id, const PpsReport& report) {
  const auto& gs = oracle.ground_set();
  json out;
  out["id"] = id;
  out["family"] = std::string(oracle.function().family());
  out["n"] = gs.size();
  json parts = json::array();
  for (std::size_t j = 0; j < report.sequence.partitions.size(); ++j) {
    parts.push_back(json{{"blocks", partition_to_json(report.sequence.partitions[j], gs)},
                         {"value", rational_to_json(report.values[j])},
                         {"value_dec", report.values[j].decimal(12)}});
  }
  out["partitions"] = std::move(parts);
  json bps = json::array();
  for (const auto& b : report.sequence.breakpoints) bps.push_back(json{{"value", rational_to_json(b)}, {"value_dec", b.decimal(12)}});
  out["breakpoints"] = std::move(bps);
  json conds = json::array();
  for (const auto& c : report.verification.conditions) {
    conds.push_back(json{{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  }
  out["verification"] = json{{"conditions", std::move(conds)},
                             {"strictly_increasing", report.verification.strictly_increasing},
                             {"all_pass", report.verification.all_pass()}};
  return out;
}

ClassReport build_class_report(const ValueOracle& oracle) {
  require_within_cap(oracle.n(), kPropertyCheckCap, "property checks");
  ClassReport report;
  for (auto p : {FunctionProperty::kSubmodular, FunctionProperty::kMonotone, FunctionProperty::kSymmetric,
                 FunctionProperty::kPosimodular}) {
    report.checks.push_back(check_property(oracle, p));
  }
  return report;
}

std::string class_report_text(const ValueOracle& oracle, const std::string& id, const ClassReport& report) {
  const auto& gs = oracle.ground_set();
  std::ostringstream out;
  out << "instance: " << (id.empty() ? "-" : id) << "  family: " << oracle.function().family() << "  n: " << gs.size()
      << "\n";
  for (const auto& c : report.checks) {
    out << "  " << to_string(c.property) << ' ' << (c.holds ? "PASS" : "FAIL");
    if (c.witness) out << "  A = " << gs.format(c.witness->first) << "  B = " << gs.format(c.witness->second);
    out << "\n";
  }
  return out.str();
}

json class_report_json(const ValueOracle& oracle, const std::string& id, const ClassReport& report) {
  const auto& gs = oracle.ground_set();
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry{{"property", to_string(c.property)}, {"pass", c.holds}};
    if (c.witness) {
      entry["witness"] = json{{"A", gs.format(c.witness->first)}, {"B", gs.format(c.witness->second)}};
    }
    checks.push_back(std::move(entry));
  }
  return json{{"id", id}, {"family", std::string(oracle.function().family())}, {"n", gs.size()}, {"checks", std::move(checks)}};
}

}  // namespace submodk
