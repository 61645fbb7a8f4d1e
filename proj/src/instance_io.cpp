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

#include "instance_io.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"
#include "families.hpp"
#include "properties.hpp"

namespace submodk {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& what) { fail(ErrorCode::kParse, "instance: " + what); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return obj.at(key);
}

int int_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number_integer()) parse_error(std::string("field '") + key + "' must be an integer");
  const auto x = v.get<long long>();
  if (x < -1000000 || x > 1000000) parse_error(std::string("field '") + key + "' out of range");
  return static_cast<int>(x);
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()), 10);
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()), 10);
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>()).numerator();
    } catch (const Error&) {
      parse_error("bad integer string '" + j.get<std::string>() + "'");
    }
  }
  parse_error("expected an integer, got " + j.dump());
}

json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(static_cast<long long>(z.get_si()));
  return json(z.get_str());
}

Subset subset_from_json(const json& j, int n) {
  if (!j.is_array()) parse_error("expected an array of vertices, got " + j.dump());
  Subset s;
  for (const auto& v : j) {
    if (!v.is_number_integer()) parse_error("vertex ids must be integers");
    const auto x = v.get<long long>();
    if (x < 0 || x >= n) parse_error("vertex " + std::to_string(x) + " out of range");
    s = s | Subset::singleton(static_cast<int>(x));
  }
  return s;
}

json subset_to_json(Subset s) { return json(s.elements()); }

std::vector<WeightedEdge> edges_from_json(const json& params, int n) {
  std::vector<WeightedEdge> edges;
  const json& list = field(params, "edges");
  if (!list.is_array()) parse_error("'edges' must be an array");
  for (const auto& e : list) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      parse_error("edge entries are [u, v, [p, q]], got " + e.dump());
    }
    const auto u = e[0].get<long long>();
    const auto v = e[1].get<long long>();
    if (u < 0 || u >= n || v < 0 || v >= n) parse_error("edge endpoint out of range in " + e.dump());
    edges.push_back(WeightedEdge{static_cast<int>(u), static_cast<int>(v), rational_from_json(e[2])});
  }
  return edges;
}

json edges_to_json(const std::vector<WeightedEdge>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back(json::array({e.u, e.v, rational_to_json(e.weight)}));
  return out;
}

std::shared_ptr<const SetFunction> build_family(const std::string& family, const json& doc, const json& params) {
  auto n_field = [&]() {
    const int n = int_field(doc, "n");
    if (n < 1 || n > kMaxGroundSet) parse_error("n must lie in [1, " + std::to_string(kMaxGroundSet) + "]");
    return n;
  };
  auto fixed_three = [&]() {
    if (doc.contains("n") && int_field(doc, "n") != 3) parse_error(family + " is defined on exactly 3 elements");
  };
  auto epsilon = [&]() { return params.contains("epsilon") ? rational_from_json(params.at("epsilon")) : default_epsilon(); };

  if (family == "graph_cut") {
    const int n = n_field();
    return std::make_shared<GraphCutFn>(n, edges_from_json(params, n));
  }
  if (family == "graph_coverage") {
    const int n = n_field();
    return std::make_shared<GraphCoverageFn>(n, edges_from_json(params, n));
  }
  if (family == "hypergraph_cut") {
    const int n = n_field();
    std::vector<WeightedHyperedge> hyperedges;
    const json& list = field(params, "hyperedges");
    if (!list.is_array()) parse_error("'hyperedges' must be an array");
    for (const auto& h : list) {
      hyperedges.push_back(WeightedHyperedge{subset_from_json(field(h, "vertices"), n), rational_from_json(field(h, "weight"))});
    }
    return std::make_shared<HypergraphCutFn>(n, std::move(hyperedges));
  }
  if (family == "partition_matroid") {
    const int n = n_field();
    std::vector<Subset> blocks;
    const json& list = field(params, "blocks");
    if (!list.is_array()) parse_error("'blocks' must be an array");
    for (const auto& b : list) blocks.push_back(subset_from_json(b, n));
    return std::make_shared<PartitionMatroidRankFn>(n, std::move(blocks));
  }
  if (family == "graphic_matroid") {
    const int vertices = int_field(params, "vertices");
    std::vector<std::pair<int, int>> edges;
    const json& list = field(params, "edges");
    if (!list.is_array()) parse_error("'edges' must be an array");
    for (const auto& e : list) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        parse_error("graphic_matroid edges are [u, v], got " + e.dump());
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    if (doc.contains("n") && int_field(doc, "n") != static_cast<int>(edges.size())) {
      parse_error("graphic_matroid: n must equal the number of edges");
    }
    return std::make_shared<GraphicMatroidRankFn>(vertices, std::move(edges));
  }
  if (family == "mono_tight3") {
    fixed_three();
    return std::make_shared<MonoTight3Fn>(epsilon());
  }
  if (family == "posi_tight3") {
    fixed_three();
    return std::make_shared<PosiTight3Fn>(epsilon());
  }
  if (family == "mono_tight_n") return std::make_shared<MonoTightNFn>(n_field(), epsilon());
  if (family == "digraph_hyper") {
    const Rational a = params.contains("a") ? rational_from_json(params.at("a")) : default_arc_weight();
    return std::make_shared<DigraphHyperFn>(n_field(), a);
  }
  if (family == "explicit_table") {
    const int n = n_field();
    if (n > kMaxTableSize) parse_error("explicit_table: n too large");
    const json& list = field(params, "values");
    if (!list.is_array()) parse_error("'values' must be an array");
    std::vector<Rational> values;
    for (const auto& v : list) values.push_back(rational_from_json(v));
    return std::make_shared<ExplicitTableFn>(n, std::move(values));
  }
  parse_error("unknown family '" + family + "'");
}

}  // namespace

LabeledFn::LabeledFn(std::shared_ptr<const SetFunction> inner, std::vector<std::string> labels)
    : inner_(std::move(inner)), gs_(inner_->ground_set().size(), std::move(labels)) {}

json rational_to_json(const Rational& r) {
  return json::array({integer_to_json(r.numerator()), integer_to_json(r.denominator())});
}

Rational rational_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) parse_error("rationals are [numerator, denominator] pairs, got " + j.dump());
  const mpz_class den = integer_from_json(j[1]);
  if (den == 0) parse_error("zero denominator in " + j.dump());
  return Rational(integer_from_json(j[0]), den);
}

LoadedInstance parse_instance(const json& doc, const LoadOptions& options) {
  if (!doc.is_object()) parse_error("document must be a JSON object");
  const int version = int_field(doc, "format_version");
  if (version != kInstanceFormatVersion) parse_error("unsupported format_version " + std::to_string(version));
  const json& family_field = field(doc, "family");
  if (!family_field.is_string()) parse_error("'family' must be a string");
  const std::string family = family_field.get<std::string>();
  static const json kEmpty = json::object();
  const json& params = doc.contains("params") ? doc.at("params") : kEmpty;
  if (!params.is_object()) parse_error("'params' must be an object");

  LoadedInstance out;
  if (doc.contains("id")) {
    if (!doc.at("id").is_string()) parse_error("'id' must be a string");
    out.id = doc.at("id").get<std::string>();
  }
  try {
    out.function = build_family(family, doc, params);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) throw;
    parse_error(e.what());
  } catch (const json::exception& e) {
    parse_error(e.what());
  }

  if (doc.contains("labels")) {
    const json& labels = doc.at("labels");
    if (!labels.is_array()) parse_error("'labels' must be an array of strings");
    std::vector<std::string> names;
    for (const auto& l : labels) {
      if (!l.is_string()) parse_error("'labels' must be an array of strings");
      names.push_back(l.get<std::string>());
    }
    if (static_cast<int>(names.size()) != out.function->ground_set().size()) parse_error("label count does not match n");
    if (names != out.function->ground_set().labels()) out.function = std::make_shared<LabeledFn>(out.function, std::move(names));
  }

  if (options.validate && out.function->ground_set().size() <= kPropertyCheckCap) {
    const ValueOracle oracle(out.function);
    const auto check = check_submodular(oracle);
    if (!check) {
      const auto& gs = oracle.ground_set();
      parse_error("function is not submodular: A = " + gs.format(check.witness->first) +
                  ", B = " + gs.format(check.witness->second));
    }
  }
  return out;
}

LoadedInstance read_instance(std::string_view text, const LoadOptions& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
  return parse_instance(doc, options);
}

LoadedInstance load_instance_file(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kParse, "cannot open instance file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  LoadedInstance out = read_instance(buffer.str(), options);
  if (out.id.empty()) {
    const auto slash = path.find_last_of('/');
    std::string stem = slash == std::string::npos ? path : path.substr(slash + 1);
    if (const auto dot = stem.rfind('.'); dot != std::string::npos && dot > 0) stem.resize(dot);
    out.id = stem;
  }
  return out;
}

json instance_to_json(const SetFunction& fn_in, const std::string& id) {
  const SetFunction* fn = &fn_in;
  std::optional<std::vector<std::string>> labels;
  if (const auto* labeled = dynamic_cast<const LabeledFn*>(fn)) {
    labels = labeled->ground_set().labels();
    fn = &labeled->inner();
  }

  json doc;
  doc["format_version"] = kInstanceFormatVersion;
  if (!id.empty()) doc["id"] = id;
  doc["n"] = fn->ground_set().size();
  json params = json::object();

  if (const auto* g = dynamic_cast<const GraphCutFn*>(fn)) {
    params["edges"] = edges_to_json(g->edges());
  } else if (const auto* c = dynamic_cast<const GraphCoverageFn*>(fn)) {
    params["edges"] = edges_to_json(c->edges());
  } else if (const auto* h = dynamic_cast<const HypergraphCutFn*>(fn)) {
    json list = json::array();
    for (const auto& e : h->hyperedges()) {
      list.push_back(json{{"vertices", subset_to_json(e.vertices)}, {"weight", rational_to_json(e.weight)}});
    }
    params["hyperedges"] = std::move(list);
  } else if (const auto* pm = dynamic_cast<const PartitionMatroidRankFn*>(fn)) {
    json list = json::array();
    for (Subset b : pm->base_blocks()) list.push_back(subset_to_json(b));
    params["blocks"] = std::move(list);
  } else if (const auto* gm = dynamic_cast<const GraphicMatroidRankFn*>(fn)) {
    params["vertices"] = gm->vertex_count();
    json list = json::array();
    for (const auto& [u, v] : gm->edges()) list.push_back(json::array({u, v}));
    params["edges"] = std::move(list);
  } else if (const auto* m3 = dynamic_cast<const MonoTight3Fn*>(fn)) {
    params["epsilon"] = rational_to_json(m3->epsilon());
  } else if (const auto* p3 = dynamic_cast<const PosiTight3Fn*>(fn)) {
    params["epsilon"] = rational_to_json(p3->epsilon());
  } else if (const auto* mn = dynamic_cast<const MonoTightNFn*>(fn)) {
    params["epsilon"] = rational_to_json(mn->epsilon());
  } else if (const auto* dh = dynamic_cast<const DigraphHyperFn*>(fn)) {
    params["a"] = rational_to_json(dh->arc_weight());
  } else {
    // Anything else (explicit tables, sums, lambdas) is stored by value.
    const int n = fn->ground_set().size();
    if (n > kMaxTableSize) fail(ErrorCode::kCapExceeded, "cannot serialize a table for n = " + std::to_string(n));
    json list = json::array();
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) list.push_back(rational_to_json(fn->evaluate(Subset{m})));
    params["values"] = std::move(list);
    doc["family"] = "explicit_table";
    doc["params"] = std::move(params);
    if (!labels && fn->ground_set().labels() != default_labels(n)) labels = fn->ground_set().labels();
    if (labels) doc["labels"] = *labels;
    return doc;
  }
  doc["family"] = std::string(fn->family());
  doc["params"] = std::move(params);
  if (labels) doc["labels"] = *labels;
  return doc;
}

std::string write_instance(const SetFunction& fn, const std::string& id) { return instance_to_json(fn, id).dump(2) + "\n"; }

}  // namespace submodk
