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

#include "submodk/submodk.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "error.hpp"
#include "families.hpp"
#include "instance_io.hpp"
#include "kpartition.hpp"
#include "partition_opt.hpp"
#include "pps.hpp"
#include "properties.hpp"
#include "random_instances.hpp"
#include "report.hpp"
#include "reproduce.hpp"

struct submodk_oracle {
  submodk::LoadedInstance instance;
  std::unique_ptr<submodk::ValueOracle> oracle;
  std::string family;
};

struct submodk_sequence {
  submodk::PrincipalSequence sequence;
  int n = 0;
};

namespace {

using namespace submodk;

thread_local std::string last_error;

submodk_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return SUBMODK_INVALID_ARGUMENT;
    case ErrorCode::kInvalidPartition: return SUBMODK_INVALID_PARTITION;
    case ErrorCode::kCapExceeded: return SUBMODK_CAP_EXCEEDED;
    case ErrorCode::kParse: return SUBMODK_PARSE_ERROR;
    case ErrorCode::kPrecondition: return SUBMODK_PRECONDITION;
    case ErrorCode::kVerification: return SUBMODK_VERIFICATION;
    case ErrorCode::kInternal: return SUBMODK_INTERNAL;
  }
  return SUBMODK_INTERNAL;
}

template <typename F>
submodk_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return SUBMODK_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SUBMODK_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SUBMODK_INTERNAL;
  }
}

void require(bool cond, const char* what) {
  if (!cond) fail(ErrorCode::kInvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

submodk_oracle* wrap(LoadedInstance instance) {
  auto handle = std::make_unique<submodk_oracle>();
  handle->family = std::string(instance.function->family());
  handle->oracle = std::make_unique<ValueOracle>(instance.function);
  handle->instance = std::move(instance);
  return handle.release();
}

void write_rgs(const Partition& p, int* rgs) {
  const auto r = p.rgs();
  for (std::size_t i = 0; i < r.size(); ++i) rgs[i] = r[i];
}

std::vector<std::string> split_csv(const char* list) {
  std::vector<std::string> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

extern "C" {

const char* submodk_version(void) { return "1.0.0"; }

const char* submodk_last_error(void) { return last_error.c_str(); }

const char* submodk_status_name(submodk_status status) {
  switch (status) {
    case SUBMODK_OK: return "ok";
    case SUBMODK_INVALID_ARGUMENT: return "invalid argument";
    case SUBMODK_INVALID_PARTITION: return "invalid partition";
    case SUBMODK_CAP_EXCEEDED: return "size cap exceeded";
    case SUBMODK_PARSE_ERROR: return "parse error";
    case SUBMODK_PRECONDITION: return "precondition violated";
    case SUBMODK_VERIFICATION: return "verification failed";
    case SUBMODK_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void submodk_string_free(char* s) { std::free(s); }

submodk_status submodk_oracle_from_json(const char* json, int validate, submodk_oracle** out) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "null argument");
    *out = wrap(read_instance(json, LoadOptions{validate != 0}));
  });
}

submodk_status submodk_oracle_from_file(const char* path, int validate, submodk_oracle** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = wrap(load_instance_file(path, LoadOptions{validate != 0}));
  });
}

submodk_status submodk_oracle_from_table(int n, const int64_t* num, const int64_t* den, int validate,
                                         submodk_oracle** out) {
  return guarded([&] {
    require(num != nullptr && den != nullptr && out != nullptr, "null argument");
    require(n >= 1 && n <= kMaxTableSize, "table size out of range");
    std::vector<Rational> values;
    for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
      values.emplace_back(mpz_class(std::to_string(num[m])), mpz_class(std::to_string(den[m])));
    }
    LoadedInstance inst;
    inst.function = std::make_shared<ExplicitTableFn>(n, std::move(values));
    if (validate != 0 && n <= kPropertyCheckCap) {
      const ValueOracle probe(inst.function);
      if (!check_submodular(probe)) fail(ErrorCode::kParse, "table is not submodular");
    }
    *out = wrap(std::move(inst));
  });
}

submodk_status submodk_oracle_random(const char* family, int n, uint64_t seed, uint64_t index, submodk_oracle** out) {
  return guarded([&] {
    require(family != nullptr && out != nullptr, "null argument");
    LoadedInstance inst;
    inst.function = random_instance(parse_random_family(family), n, seed, index);
    inst.id = std::string(family) + "_n" + std::to_string(n) + "_s" + std::to_string(seed) + "_" + std::to_string(index);
    *out = wrap(std::move(inst));
  });
}

void submodk_oracle_free(submodk_oracle* oracle) { delete oracle; }

int submodk_oracle_size(const submodk_oracle* oracle) { return oracle ? oracle->oracle->n() : 0; }

const char* submodk_oracle_id(const submodk_oracle* oracle) { return oracle ? oracle->instance.id.c_str() : ""; }

submodk_status submodk_oracle_set_id(submodk_oracle* oracle, const char* id) {
  return guarded([&] {
    require(oracle != nullptr && id != nullptr, "null argument");
    oracle->instance.id = id;
  });
}

const char* submodk_oracle_family(const submodk_oracle* oracle) { return oracle ? oracle->family.c_str() : ""; }

const char* submodk_oracle_label(const submodk_oracle* oracle, int i) {
  if (oracle == nullptr || i < 0 || i >= oracle->oracle->n()) return nullptr;
  return oracle->oracle->ground_set().label(i).c_str();
}

submodk_status submodk_oracle_eval(const submodk_oracle* oracle, uint32_t mask, char** value) {
  return guarded([&] {
    require(oracle != nullptr && value != nullptr, "null argument");
    *value = dup_string(oracle->oracle->eval(Subset{mask}).str());
  });
}

submodk_status submodk_oracle_stats(const submodk_oracle* oracle, uint64_t* distinct_evaluations,
                                    uint64_t* total_calls) {
  return guarded([&] {
    require(oracle != nullptr, "null argument");
    const auto s = oracle->oracle->stats();
    if (distinct_evaluations) *distinct_evaluations = s.distinct_evaluations;
    if (total_calls) *total_calls = s.total_calls;
  });
}

submodk_status submodk_oracle_to_json(const submodk_oracle* oracle, char** json) {
  return guarded([&] {
    require(oracle != nullptr && json != nullptr, "null argument");
    *json = dup_string(write_instance(*oracle->instance.function, oracle->instance.id));
  });
}

submodk_status submodk_check_property(const submodk_oracle* oracle, submodk_property property, int* holds,
                                      uint32_t* witness_a, uint32_t* witness_b) {
  return guarded([&] {
    require(oracle != nullptr && holds != nullptr, "null argument");
    require(property >= SUBMODK_SUBMODULAR && property <= SUBMODK_POSIMODULAR, "unknown property");
    require_within_cap(oracle->oracle->n(), kPropertyCheckCap, "property checks");
    const auto check = check_property(*oracle->oracle, static_cast<FunctionProperty>(property));
    *holds = check.holds ? 1 : 0;
    if (check.witness) {
      if (witness_a) *witness_a = check.witness->first.mask;
      if (witness_b) *witness_b = check.witness->second.mask;
    }
  });
}

submodk_status submodk_pps_compute(const submodk_oracle* oracle, submodk_sequence** out) {
  return guarded([&] {
    require(oracle != nullptr && out != nullptr, "null argument");
    auto seq = std::make_unique<submodk_sequence>();
    seq->sequence = compute_pps(*oracle->oracle);
    seq->n = oracle->oracle->n();
    *out = seq.release();
  });
}

void submodk_sequence_free(submodk_sequence* sequence) { delete sequence; }

int submodk_sequence_length(const submodk_sequence* sequence) { return sequence ? sequence->sequence.length() : 0; }

submodk_status submodk_sequence_partition(const submodk_sequence* sequence, int index, int* rgs) {
  return guarded([&] {
    require(sequence != nullptr && rgs != nullptr, "null argument");
    require(index >= 0 && index < sequence->sequence.length(), "partition index out of range");
    write_rgs(sequence->sequence.partitions[static_cast<std::size_t>(index)], rgs);
  });
}

submodk_status submodk_sequence_breakpoint(const submodk_sequence* sequence, int index, char** value) {
  return guarded([&] {
    require(sequence != nullptr && value != nullptr, "null argument");
    require(index >= 0 && index < static_cast<int>(sequence->sequence.breakpoints.size()),
            "breakpoint index out of range");
    *value = dup_string(sequence->sequence.breakpoints[static_cast<std::size_t>(index)].str());
  });
}

submodk_status submodk_sequence_verify(const submodk_oracle* oracle, const submodk_sequence* sequence, int* all_pass) {
  return guarded([&] {
    require(oracle != nullptr && sequence != nullptr && all_pass != nullptr, "null argument");
    require(sequence->n == oracle->oracle->n(), "sequence and oracle sizes differ");
    *all_pass = verify_pps(*oracle->oracle, sequence->sequence).all_pass() ? 1 : 0;
  });
}

submodk_status submodk_kpartition(const submodk_oracle* oracle, int k, const char* algorithm, int* rgs, char** value) {
  return guarded([&] {
    require(oracle != nullptr && algorithm != nullptr, "null argument");
    const std::string which = algorithm;
    Partition p;
    Rational v;
    if (which == "pps") {
      auto run = algorithm1(*oracle->oracle, k);
      p = std::move(run.result);
      v = std::move(run.value);
    } else if (which == "greedy" || which == "singleton") {
      auto res = which == "greedy" ? greedy_splitting(*oracle->oracle, k) : cheapest_singleton(*oracle->oracle, k);
      p = std::move(res.partition);
      v = std::move(res.value);
    } else {
      fail(ErrorCode::kInvalidArgument, "unknown algorithm '" + which + "'");
    }
    if (rgs) write_rgs(p, rgs);
    if (value) *value = dup_string(v.str());
  });
}

submodk_status submodk_optimal_kpartition(const submodk_oracle* oracle, int k, int* rgs, char** value) {
  return guarded([&] {
    require(oracle != nullptr, "null argument");
    const auto opt = brute_force_optimal_k_partition(*oracle->oracle, k);
    if (rgs) write_rgs(opt.partition, rgs);
    if (value) *value = dup_string(opt.value.str());
  });
}

submodk_status submodk_class_bound(const char* function_class, int n, char** value) {
  return guarded([&] {
    require(function_class != nullptr && value != nullptr, "null argument");
    require(n >= 1, "n must be positive");
    const auto bound = theorem_bound(parse_function_class(function_class), n);
    *value = bound ? dup_string(bound->str()) : nullptr;
  });
}

submodk_status submodk_report_pps(const submodk_oracle* oracle, int json, char** text, int* all_pass) {
  return guarded([&] {
    require(oracle != nullptr && text != nullptr, "null argument");
    const auto report = build_pps_report(*oracle->oracle);
    const auto& id = oracle->instance.id;
    *text = dup_string(json ? pps_report_json(*oracle->oracle, id, report).dump(2) + "\n"
                            : pps_report_text(*oracle->oracle, id, report));
    if (all_pass) *all_pass = report.verification.all_pass() ? 1 : 0;
  });
}

submodk_status submodk_report_properties(const submodk_oracle* oracle, int json, char** text) {
  return guarded([&] {
    require(oracle != nullptr && text != nullptr, "null argument");
    const auto report = build_class_report(*oracle->oracle);
    const auto& id = oracle->instance.id;
    *text = dup_string(json ? class_report_json(*oracle->oracle, id, report).dump(2) + "\n"
                            : class_report_text(*oracle->oracle, id, report));
  });
}

submodk_status submodk_report_solve(const submodk_oracle* const* oracles, size_t count,
                                    const submodk_solve_options* options, char** text, int* violations) {
  return guarded([&] {
    require(oracles != nullptr && options != nullptr && text != nullptr, "null argument");
    SolveOptions opts;
    opts.k = options->k;
    if (options->algorithms != nullptr) opts.algorithms = split_csv(options->algorithms);
    require(!opts.algorithms.empty(), "no algorithms requested");
    opts.brute_force = options->brute_force != 0;
    if (options->function_class != nullptr && std::string(options->function_class) != "auto") {
      opts.function_class = parse_function_class(options->function_class);
    }
    opts.timing = options->timing != 0;

    std::vector<LoadedInstance> instances;
    for (std::size_t i = 0; i < count; ++i) {
      require(oracles[i] != nullptr, "null oracle");
      instances.push_back(oracles[i]->instance);
    }
    const auto rows = solve_instances(instances, opts);
    int bad = 0;
    for (const auto& row : rows) {
      if (row.bound_ok && !*row.bound_ok) ++bad;
    }
    *text = dup_string(options->json ? rows_to_json(rows).dump(2) + "\n" : rows_to_csv(rows));
    if (violations) *violations = bad;
  });
}

submodk_status submodk_report_reproduce(const submodk_reproduce_options* options, char** text, int* all_pass) {
  return guarded([&] {
    require(options != nullptr && text != nullptr, "null argument");
    ReproduceOptions opts;
    if (options->which != nullptr) opts.which = options->which;
    if (options->n != 0) opts.n = options->n;
    if (options->k != 0) opts.k = options->k;
    if (options->epsilon != nullptr) opts.epsilon = Rational::parse(options->epsilon);
    if (options->arc_weight != nullptr) opts.arc_weight = Rational::parse(options->arc_weight);
    const auto checks = reproduce(opts);
    *text = dup_string(options->json ? reproduce_json(checks).dump(2) + "\n" : reproduce_table(checks));
    if (all_pass) *all_pass = submodk::all_pass(checks) ? 1 : 0;
  });
}

}  // extern "C"
