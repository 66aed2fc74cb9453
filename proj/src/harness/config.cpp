/*
 *   Copyright 2026 The renyi-extract Authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
 */

#include "renyi/harness/config.hpp"

#include <algorithm>
#include <cmath>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <set>

#include "renyi/hashfam/universality.hpp"

namespace renyi::harness {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      throw ConfigError(where + ": unknown field '" + key + "'");
    }
  }
}

const json& require(const json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(where + ": missing field '" + key + "'");
  return *it;
}

std::uint64_t as_uint(const json& j, const std::string& where) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
    throw ConfigError(where + ": expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

std::uint32_t as_u32(const json& j, const std::string& where) {
  const std::uint64_t v = as_uint(j, where);
  if (v > std::numeric_limits<std::uint32_t>::max()) throw ConfigError(where + ": value too large");
  return static_cast<std::uint32_t>(v);
}

double as_double(const json& j, const std::string& where) {
  if (!j.is_number()) throw ConfigError(where + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(where + ": expected a finite number");
  return v;
}

template <typename T, typename F>
std::vector<T> as_array(const json& j, const std::string& where, F&& each) {
  if (!j.is_array()) throw ConfigError(where + ": expected an array");
  std::vector<T> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(each(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

FamilySpec parse_family(const json& j) {
  reject_unknown(j, "family", {"kind", "q", "n", "k", "m"});
  FamilySpec f;
  if (auto it = j.find("kind"); it != j.end()) {
    if (!it->is_string()) throw ConfigError("family.kind: expected a string");
    try {
      f.kind = hashfam::family_kind_from_string(it->get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("family.kind: ") + e.what());
    }
  }
  f.q = as_u32(require(j, "family", "q"), "family.q");
  f.n = as_u32(require(j, "family", "n"), "family.n");
  f.k = as_u32(require(j, "family", "k"), "family.k");
  f.m = as_u32(require(j, "family", "m"), "family.m");
  return f;
}

SourceSpec parse_source(const json& j) {
  reject_unknown(j, "source", {"preset", "size", "p", "r", "element", "probs", "support", "side_channel"});
  SourceSpec s;
  const bool has_probs = j.contains("probs");
  if (auto it = j.find("preset"); it != j.end()) {
    if (!it->is_string()) throw ConfigError("source.preset: expected a string");
    s.preset = it->get<std::string>();
  } else {
    s.preset = has_probs ? "explicit" : "";
  }
  static const std::set<std::string> presets = {"uniform", "point-mass", "two-spike", "geometric", "explicit"};
  if (!presets.contains(s.preset)) throw ConfigError("source.preset: unknown preset '" + s.preset + "'");

  auto allow_only = [&](std::initializer_list<const char*> keys) {
    for (const char* key : {"size", "p", "r", "element", "probs", "support"}) {
      const bool allowed = std::any_of(keys.begin(), keys.end(), [&](const char* k) { return std::string(k) == key; });
      if (!allowed && j.contains(key)) {
        throw ConfigError("source: field '" + std::string(key) + "' does not apply to preset '" + s.preset + "'");
      }
    }
  };
  if (s.preset == "uniform") {
    allow_only({"size"});
    if (j.contains("size")) s.size = as_uint(j["size"], "source.size");
  } else if (s.preset == "point-mass") {
    allow_only({"element"});
    s.element = j.contains("element") ? as_uint(j["element"], "source.element") : 0;
  } else if (s.preset == "two-spike") {
    allow_only({"p"});
    s.p = as_double(require(j, "source", "p"), "source.p");
  } else if (s.preset == "geometric") {
    allow_only({"r", "size"});
    s.r = as_double(require(j, "source", "r"), "source.r");
    s.size = as_uint(require(j, "source", "size"), "source.size");
  } else {
    allow_only({"probs", "support"});
    s.probs = as_array<double>(require(j, "source", "probs"), "source.probs", as_double);
    if (j.contains("support")) {
      s.support = as_array<std::uint64_t>(j["support"], "source.support", as_uint);
      if (s.support.size() != s.probs.size()) throw ConfigError("source.support: length differs from source.probs");
    }
  }
  if (j.contains("side_channel")) {
    s.side_channel = as_array<std::vector<double>>(j["side_channel"], "source.side_channel",
                                                  [](const json& row, const std::string& where) {
                                                    return as_array<double>(row, where, as_double);
                                                  });
  }
  return s;
}

BucketSpec parse_bucket(const json& j) {
  reject_unknown(j, "bucket", {"ks", "ms", "subset_sizes", "mode", "samples"});
  BucketSpec b;
  b.ks = as_array<std::uint32_t>(require(j, "bucket", "ks"), "bucket.ks", as_u32);
  b.ms = as_array<std::uint32_t>(require(j, "bucket", "ms"), "bucket.ms", as_u32);
  b.subset_sizes = as_array<std::size_t>(require(j, "bucket", "subset_sizes"), "bucket.subset_sizes", as_uint);
  if (auto it = j.find("mode"); it != j.end()) {
    if (!it->is_string()) throw ConfigError("bucket.mode: expected a string");
    b.mode = it->get<std::string>();
    if (b.mode != "auto" && b.mode != "exact" && b.mode != "sampled") {
      throw ConfigError("bucket.mode: expected auto, exact or sampled");
    }
  }
  if (j.contains("samples")) b.samples = as_uint(j["samples"], "bucket.samples");
  if (b.samples == 0) throw ConfigError("bucket.samples: must be positive");
  for (auto a : b.subset_sizes) {
    if (a == 0) throw ConfigError("bucket.subset_sizes: sizes must be positive");
  }
  return b;
}

std::vector<Alpha> parse_alphas(const json& j, const std::string& where) {
  return as_array<Alpha>(j, where, [](const json& a, const std::string& w) {
    try {
      return alpha_from_json(a);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(w + ": " + e.what());
    }
  });
}

}  // namespace

bool ExperimentConfig::wants(const std::string& group) const {
  return std::find(bounds.begin(), bounds.end(), group) != bounds.end();
}

json alpha_to_json(const Alpha& a) {
  if (a.is_infinity()) return "inf";
  return a.value();
}

Alpha alpha_from_json(const json& j) {
  if (j.is_string()) return Alpha::parse(j.get<std::string>());
  if (j.is_number()) return Alpha::from_real(j.get<double>());
  throw std::invalid_argument("expected a number or \"inf\"");
}

ExperimentConfig parse_config(const json& doc) {
  reject_unknown(doc, "config", {"schema_version", "family", "source", "alphas", "epsilons", "bounds", "budget",
                                 "rng_seed", "bucket", "sweep", "output"});
  ExperimentConfig c;
  if (doc.contains("schema_version") && as_uint(doc["schema_version"], "schema_version") != kConfigSchemaVersion) {
    throw ConfigError("schema_version: unsupported version");
  }
  c.family = parse_family(require(doc, "config", "family"));
  c.source = parse_source(require(doc, "config", "source"));
  if (doc.contains("alphas")) c.alphas = parse_alphas(doc["alphas"], "alphas");
  if (doc.contains("epsilons")) {
    c.epsilons = as_array<double>(doc["epsilons"], "epsilons", as_double);
    for (double e : c.epsilons) {
      if (e <= 0.0) throw ConfigError("epsilons: values must be positive");
    }
  }
  if (doc.contains("bounds")) {
    c.bounds = as_array<std::string>(doc["bounds"], "bounds", [](const json& b, const std::string& w) {
      if (!b.is_string()) throw ConfigError(w + ": expected a string");
      const auto name = b.get<std::string>();
      if (std::find(kBoundGroups.begin(), kBoundGroups.end(), name) == kBoundGroups.end()) {
        throw ConfigError(w + ": unknown bound group '" + name + "'");
      }
      return name;
    });
  }
  if (doc.contains("budget")) {
    c.budget = as_uint(doc["budget"], "budget");
    if (*c.budget == 0) throw ConfigError("budget: must be positive");
  }
  if (doc.contains("rng_seed")) c.rng_seed = as_uint(doc["rng_seed"], "rng_seed");
  if (doc.contains("bucket")) c.bucket = parse_bucket(doc["bucket"]);
  if (doc.contains("sweep")) {
    const json& s = doc["sweep"];
    reject_unknown(s, "sweep", {"alphas", "ms"});
    SweepSpec sw;
    sw.alphas = parse_alphas(require(s, "sweep", "alphas"), "sweep.alphas");
    sw.ms = as_array<std::uint32_t>(require(s, "sweep", "ms"), "sweep.ms", as_u32);
    for (const auto& a : sw.alphas) {
      if (a.is_one()) throw ConfigError("sweep.alphas: order 1 has no bound to compare against");
    }
    c.sweep = std::move(sw);
  }
  if (doc.contains("output")) {
    const json& o = doc["output"];
    reject_unknown(o, "output", {"report", "csv"});
    auto str = [](const json& v, const char* w) {
      if (!v.is_string()) throw ConfigError(std::string(w) + ": expected a string");
      return v.get<std::string>();
    };
    if (o.contains("report")) c.output.report = str(o["report"], "output.report");
    if (o.contains("csv")) c.output.csv = str(o["csv"], "output.csv");
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(doc);
}

json config_to_json(const ExperimentConfig& c) {
  json j;
  j["schema_version"] = kConfigSchemaVersion;
  j["family"] = {{"kind", std::string(hashfam::to_string(c.family.kind))},
                 {"q", c.family.q},
                 {"n", c.family.n},
                 {"k", c.family.k},
                 {"m", c.family.m}};
  json s;
  s["preset"] = c.source.preset;
  if (c.source.size) s["size"] = *c.source.size;
  if (c.source.p) s["p"] = *c.source.p;
  if (c.source.r) s["r"] = *c.source.r;
  if (c.source.element) s["element"] = *c.source.element;
  if (!c.source.probs.empty()) s["probs"] = c.source.probs;
  if (!c.source.support.empty()) s["support"] = c.source.support;
  if (c.source.side_channel) s["side_channel"] = *c.source.side_channel;
  j["source"] = s;
  j["alphas"] = json::array();
  for (const auto& a : c.alphas) j["alphas"].push_back(alpha_to_json(a));
  j["epsilons"] = c.epsilons;
  j["bounds"] = c.bounds;
  if (c.budget) j["budget"] = *c.budget;
  j["rng_seed"] = c.rng_seed;
  if (c.bucket) {
    j["bucket"] = {{"ks", c.bucket->ks},
                   {"ms", c.bucket->ms},
                   {"subset_sizes", c.bucket->subset_sizes},
                   {"mode", c.bucket->mode},
                   {"samples", c.bucket->samples}};
  }
  if (c.sweep) {
    json a = json::array();
    for (const auto& x : c.sweep->alphas) a.push_back(alpha_to_json(x));
    j["sweep"] = {{"alphas", a}, {"ms", c.sweep->ms}};
  }
  return j;
}

std::uint64_t resolve_budget(std::optional<std::uint64_t> flag, const ExperimentConfig& config) {
  if (flag) return *flag;
  if (config.budget) return *config.budget;
  if (const char* env = std::getenv(kBudgetEnvVar); env != nullptr && *env != '\0') {
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || end == env || *end != '\0' || v == 0 || env[0] == '-') {
      throw ConfigError(std::string(kBudgetEnvVar) + ": expected a positive integer");
    }
    return v;
  }
  return hashfam::kDefaultBudget;
}

hashfam::HashFamily build_family(const FamilySpec& spec) { return build_family(spec, spec.k, spec.m); }

hashfam::HashFamily build_family(const FamilySpec& spec, std::uint32_t k, std::uint32_t m) {
  try {
    return hashfam::HashFamily::make(spec.kind, hashfam::Field::create(spec.q, spec.n), k, m);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("family: ") + e.what());
  }
}

extractor::Source build_source(const SourceSpec& spec, const hashfam::Field& field) {
  try {
    auto make = [&]() -> extractor::Source {
      if (spec.preset == "uniform") return extractor::uniform_source(field, spec.size.value_or(field.order()));
      if (spec.preset == "point-mass") return extractor::point_mass_source(field, spec.element.value_or(0));
      if (spec.preset == "two-spike") return extractor::two_spike_source(field, *spec.p);
      if (spec.preset == "geometric") return extractor::geometric_source(field, *spec.r, *spec.size);
      if (!spec.support.empty()) return extractor::explicit_source(field, spec.support, spec.probs);
      return extractor::explicit_source(field, spec.probs);
    };
    extractor::Source source = make();
    if (spec.side_channel) {
      const auto& rows = *spec.side_channel;
      if (rows.size() != source.size()) {
        throw ConfigError("source.side_channel: needs one row per support element");
      }
      extractor::SideChannel side;
      side.outcomes = rows.empty() ? 0 : rows.front().size();
      if (side.outcomes == 0) throw ConfigError("source.side_channel: rows must be non-empty");
      for (const auto& row : rows) {
        if (row.size() != side.outcomes) throw ConfigError("source.side_channel: rows differ in length");
        side.table.insert(side.table.end(), row.begin(), row.end());
      }
      source = source.with_side_channel(std::move(side));
    }
    return source;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("source: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw ConfigError(std::string("source: ") + e.what());
  }
}

}  // namespace renyi::harness
