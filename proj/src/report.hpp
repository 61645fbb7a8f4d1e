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
#include <optional>
#include <string>
#include <vector>

#include "instance_io.hpp"
#include "json.hpp"
#include "kpartition.hpp"
#include "pps.hpp"
#include "properties.hpp"

namespace submodk {

/// One algorithm run on one instance. CSV columns, in order:
///
///   instance_id,n,k,algorithm,value,value_dec,opt,opt_dec,ratio,ratio_dec,
///   bound,bound_dec,bound_ok,oracle_eval_count,wall_time
///
/// Rationals appear twice: as "num/den" and as a 12-significant-digit
/// decimal. Columns without a value are left empty; an infinite ratio is
/// written as "inf". wall_time (seconds) is filled only when timing is on.
struct ReportRow {
  std::string instance_id;
  int n = 0;
  int k = 0;
  std::string algorithm;
  Partition partition;
  /// partition rendered with the instance labels, e.g. "{{a},{b,c}}".
  std::string partition_text;
  Rational value;
  std::optional<Rational> opt;
  std::optional<Rational> ratio;
  bool ratio_infinite = false;
  std::optional<Rational> bound;
  std::optional<bool> bound_ok;
  std::uint64_t oracle_eval_count = 0;
  std::optional<double> wall_time;
};

inline constexpr const char* kCsvHeader =
    "instance_id,n,k,algorithm,value,value_dec,opt,opt_dec,ratio,ratio_dec,bound,bound_dec,bound_ok,"
    "oracle_eval_count,wall_time";

std::string csv_line(const ReportRow& row);
std::string rows_to_csv(const std::vector<ReportRow>& rows);
nlohmann::json rows_to_json(const std::vector<ReportRow>& rows);

/// Strongest class the checkers confirm (monotone, then symmetric, then
/// posimodular); general when none holds or n exceeds the checker cap.
FunctionClass detect_class(const ValueOracle& oracle);

struct SolveOptions {
  int k = 2;
  /// Any of "pps", "greedy", "singleton", in output order.
  std::vector<std::string> algorithms{"pps", "greedy", "singleton"};
  bool brute_force = false;
  /// Class used for the bound column; detected when unset.
  std::optional<FunctionClass> function_class;
  bool timing = false;
};

/// Runs every requested algorithm on a fresh oracle (so the evaluation count
/// is per algorithm) and, with brute_force, fills opt/ratio/bound columns.
/// Bounds: pps uses the class guarantee; singleton uses 2 - 1/k on monotone
/// functions; greedy has none.
std::vector<ReportRow> solve_instance(const LoadedInstance& instance, const SolveOptions& options);

/// Solves several instances concurrently; rows come back in input order.
std::vector<ReportRow> solve_instances(const std::vector<LoadedInstance>& instances, const SolveOptions& options);

struct PpsReport {
  PrincipalSequence sequence;
  PpsVerification verification;
  std::vector<Rational> values;
};

PpsReport build_pps_report(const ValueOracle& oracle);
std::string pps_report_text(const ValueOracle& oracle, const std::string& id, const PpsReport& report);
nlohmann::json pps_report_json(const ValueOracle& oracle, const std::string& id, const PpsReport& report);

struct ClassReport {
  std::vector<PropertyCheck> checks;  // submodular, monotone, symmetric, posimodular
};

ClassReport build_class_report(const ValueOracle& oracle);
std::string class_report_text(const ValueOracle& oracle, const std::string& id, const ClassReport& report);
nlohmann::json class_report_json(const ValueOracle& oracle, const std::string& id, const ClassReport& report);

nlohmann::json partition_to_json(const Partition& p, const GroundSet& gs);

}  // namespace submodk
