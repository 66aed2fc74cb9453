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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "renyi/extractor/source.hpp"
#include "renyi/hashfam/hash_family.hpp"
#include "renyi/infomeasure/alpha.hpp"

namespace renyi::harness {

using info::Alpha;

/// Raised for malformed or out-of-range experiment configurations.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kConfigSchemaVersion = 1;
inline constexpr const char* kBudgetEnvVar = "RENYI_EXTRACT_BUDGET";

struct FamilySpec {
  hashfam::FamilyKind kind = hashfam::FamilyKind::polynomial;
  std::uint32_t q = 2;
  std::uint32_t n = 1;
  std::uint32_t k = 2;
  std::uint32_t m = 1;
};

struct SourceSpec {
  /// uniform | point-mass | two-spike | geometric | explicit
  std::string preset = "uniform";
  std::optional<std::size_t> size;       // uniform, geometric
  std::optional<double> p;               // two-spike
  std::optional<double> r;               // geometric
  std::optional<std::uint64_t> element;  // point-mass
  std::vector<double> probs;             // explicit
  std::vector<std::uint64_t> support;    // explicit, optional element indices
  std::optional<std::vector<std::vector<double>>> side_channel;
};

struct BucketSpec {
  std::vector<std::uint32_t> ks;
  std::vector<std::uint32_t> ms;
  std::vector<std::size_t> subset_sizes;
  std::string mode = "auto";  // auto | exact | sampled
  std::uint64_t samples = 1000;
};

struct SweepSpec {
  std::vector<Alpha> alphas;
  std::vector<std::uint32_t> ms;
};

struct OutputSpec {
  std::optional<std::string> report;
  std::optional<std::string> csv;
};

/// Bound groups evaluated by `verify`.
inline const std::vector<std::string> kBoundGroups = {"real-alpha", "above-k", "infty-relation", "thresholds",
                                                      "baselines"};

struct ExperimentConfig {
  FamilySpec family;
  SourceSpec source;
  std::vector<Alpha> alphas;
  std::vector<double> epsilons;
  std::vector<std::string> bounds = kBoundGroups;
  std::optional<std::uint64_t> budget;
  std::uint64_t rng_seed = 0;
  std::optional<BucketSpec> bucket;
  std::optional<SweepSpec> sweep;
  OutputSpec output;

  bool wants(const std::string& group) const;
};

/// Strict parse: unknown keys, wrong types and out-of-range values raise
/// ConfigError.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig load_config(const std::string& path);

/// Canonical JSON form of a config (used as the report's config echo).
nlohmann::json config_to_json(const ExperimentConfig& config);

/// Flag, then config, then RENYI_EXTRACT_BUDGET, then the library default.
std::uint64_t resolve_budget(std::optional<std::uint64_t> flag, const ExperimentConfig& config);

hashfam::HashFamily build_family(const FamilySpec& spec);
hashfam::HashFamily build_family(const FamilySpec& spec, std::uint32_t k, std::uint32_t m);
extractor::Source build_source(const SourceSpec& spec, const hashfam::Field& field);

nlohmann::json alpha_to_json(const Alpha& a);
Alpha alpha_from_json(const nlohmann::json& j);

}  // namespace renyi::harness
