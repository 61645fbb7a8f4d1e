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

// submodk command-line driver.
//
// Exit codes: 0 success, 1 a reported check failed, 2 usage or input error,
// 3 internal verification failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "submodk/submodk.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;

struct OracleDeleter {
  void operator()(submodk_oracle* o) const { submodk_oracle_free(o); }
};
using OracleHandle = std::unique_ptr<submodk_oracle, OracleDeleter>;

struct StringDeleter {
  void operator()(char* s) const { submodk_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

class CliFailure {
 public:
  CliFailure(int exit_code, std::string message) : exit_code_(exit_code), message_(std::move(message)) {}
  int exit_code() const { return exit_code_; }
  const std::string& message() const { return message_; }

 private:
  int exit_code_;
  std::string message_;
};

void check(submodk_status status) {
  if (status == SUBMODK_OK) return;
  const int code = (status == SUBMODK_VERIFICATION || status == SUBMODK_INTERNAL) ? kExitVerification : kExitUsage;
  throw CliFailure(code, std::string(submodk_status_name(status)) + ": " + submodk_last_error());
}

OracleHandle load(const std::string& path, bool validate) {
  submodk_oracle* raw = nullptr;
  check(submodk_oracle_from_file(path.c_str(), validate ? 1 : 0, &raw));
  return OracleHandle(raw);
}

struct Flags {
  std::vector<std::string> instances;
  bool json = false;
  bool no_validate = false;

  int k = 2;
  std::string algorithms = "pps,greedy,singleton";
  bool brute_force = false;
  std::string function_class = "auto";
  bool timing = false;

  std::string which = "all";
  int n = 0;
  int case_k = 0;
  std::string epsilon;
  std::string arc_weight;

  std::string family;
  int random_n = 8;
  std::uint64_t seed = 0;
  int count = 1;
  std::string out_dir = ".";
};

int run_pps(const Flags& f) {
  const auto oracle = load(f.instances.front(), !f.no_validate);
  char* raw = nullptr;
  int all_pass = 0;
  check(submodk_report_pps(oracle.get(), f.json ? 1 : 0, &raw, &all_pass));
  const OwnedString text(raw);
  std::cout << text.get();
  return all_pass ? kExitOk : kExitVerification;
}

int run_solve(const Flags& f) {
  std::vector<OracleHandle> owned;
  std::vector<const submodk_oracle*> oracles;
  for (const auto& path : f.instances) {
    owned.push_back(load(path, !f.no_validate));
    oracles.push_back(owned.back().get());
  }
  submodk_solve_options options{};
  options.k = f.k;
  options.algorithms = f.algorithms.c_str();
  options.brute_force = f.brute_force ? 1 : 0;
  options.function_class = f.function_class.c_str();
  options.timing = f.timing ? 1 : 0;
  options.json = f.json ? 1 : 0;
  char* raw = nullptr;
  int violations = 0;
  check(submodk_report_solve(oracles.data(), oracles.size(), &options, &raw, &violations));
  const OwnedString text(raw);
  std::cout << text.get();
  if (violations > 0) {
    std::cerr << violations << " row(s) exceed their approximation bound\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int run_reproduce(const Flags& f) {
  submodk_reproduce_options options{};
  options.which = f.which.c_str();
  options.n = f.n;
  options.k = f.case_k;
  options.epsilon = f.epsilon.empty() ? nullptr : f.epsilon.c_str();
  options.arc_weight = f.arc_weight.empty() ? nullptr : f.arc_weight.c_str();
  options.json = f.json ? 1 : 0;
  char* raw = nullptr;
  int all_pass = 0;
  check(submodk_report_reproduce(&options, &raw, &all_pass));
  const OwnedString text(raw);
  std::cout << text.get();
  return all_pass ? kExitOk : kExitCheckFailed;
}

int run_random(const Flags& f) {
  if (f.count < 1) throw CliFailure(kExitUsage, "--count must be at least 1");
  std::error_code ec;
  std::filesystem::create_directories(f.out_dir, ec);
  if (ec) throw CliFailure(kExitUsage, "cannot create '" + f.out_dir + "': " + ec.message());
  for (int i = 0; i < f.count; ++i) {
    submodk_oracle* raw = nullptr;
    check(submodk_oracle_random(f.family.c_str(), f.random_n, f.seed, static_cast<std::uint64_t>(i), &raw));
    const OracleHandle oracle(raw);
    char* doc = nullptr;
    check(submodk_oracle_to_json(oracle.get(), &doc));
    const OwnedString text(doc);
    const auto path = std::filesystem::path(f.out_dir) / (std::string(submodk_oracle_id(oracle.get())) + ".json");
    std::ofstream out(path, std::ios::binary);
    out << text.get();
    if (!out) throw CliFailure(kExitUsage, "cannot write '" + path.string() + "'");
    std::cout << path.string() << "\n";
  }
  return kExitOk;
}

int run_verify(const Flags& f) {
  const auto oracle = load(f.instances.front(), false);
  char* raw = nullptr;
  check(submodk_report_properties(oracle.get(), f.json ? 1 : 0, &raw));
  const OwnedString text(raw);
  std::cout << text.get();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submodular k-partition via the principal partition sequence"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(submodk_version()));
  Flags f;

  auto* pps = app.add_subcommand("pps", "Compute and verify the principal sequence of an instance");
  pps->add_option("instance", f.instances, "Instance file")->required()->expected(1)->check(CLI::ExistingFile);
  pps->add_flag("--json", f.json, "Print JSON");
  pps->add_flag("--no-validate", f.no_validate, "Skip the submodularity check on load");

  auto* solve = app.add_subcommand("solve", "Run k-partition algorithms and print CSV rows");
  solve->add_option("instances", f.instances, "Instance files")->required()->check(CLI::ExistingFile);
  solve->add_option("-k,--k", f.k, "Number of parts")->required();
  solve->add_option("--algorithms", f.algorithms, "Comma separated: pps,greedy,singleton")->capture_default_str();
  solve->add_flag("--brute-force", f.brute_force, "Fill opt, ratio and bound columns");
  solve->add_option("--class", f.function_class, "monotone|symmetric|posimodular|general|auto")
      ->check(CLI::IsMember({"monotone", "symmetric", "posimodular", "general", "auto"}))
      ->capture_default_str();
  solve->add_flag("--timing", f.timing, "Fill the wall_time column");
  solve->add_flag("--json", f.json, "Print JSON instead of CSV");
  solve->add_flag("--no-validate", f.no_validate, "Skip the submodularity check on load");

  auto* reproduce = app.add_subcommand("reproduce", "Check the worked examples");
  reproduce->add_option("--case", f.which, "all|mono3|monoN|posi3|omega|matroid-footnote")
      ->check(CLI::IsMember({"all", "mono3", "monoN", "posi3", "omega", "matroid-footnote"}))
      ->capture_default_str();
  reproduce->add_option("--n", f.n, "Ground set size for monoN and omega");
  reproduce->add_option("-k,--k", f.case_k, "k for omega and matroid-footnote");
  reproduce->add_option("--eps", f.epsilon, "epsilon, e.g. 1/1000000");
  reproduce->add_option("--a", f.arc_weight, "arc weight for omega, e.g. 1000000");
  reproduce->add_flag("--json", f.json, "Print JSON");

  auto* random = app.add_subcommand("random", "Write seeded random instance files");
  random->add_option("--family", f.family, "Instance family")
      ->required()
      ->check(CLI::IsMember({"graph_cut", "hypergraph_cut", "graph_coverage", "partition_matroid", "graphic_matroid"}));
  random->add_option("--n", f.random_n, "Ground set size")->capture_default_str();
  random->add_option("--seed", f.seed, "Seed")->capture_default_str();
  random->add_option("--count", f.count, "Number of instances")->capture_default_str();
  random->add_option("--out-dir", f.out_dir, "Output directory")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Report submodular/monotone/symmetric/posimodular checks");
  verify->add_option("instance", f.instances, "Instance file")->required()->expected(1)->check(CLI::ExistingFile);
  verify->add_flag("--json", f.json, "Print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*pps) return run_pps(f);
    if (*solve) return run_solve(f);
    if (*reproduce) return run_reproduce(f);
    if (*random) return run_random(f);
    if (*verify) return run_verify(f);
  } catch (const CliFailure& e) {
    std::cerr << "error: " << e.message() << "\n";
    return e.exit_code();
  }
  return kExitUsage;
}
