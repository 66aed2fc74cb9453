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
#include <string>
#include <vector>

#include <json.hpp>

#include "renyi/bounds/bounds.hpp"
#include "renyi/extractor/extraction.hpp"
#include "renyi/harness/config.hpp"
#include "renyi/hashfam/universality.hpp"

namespace renyi::harness {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolName = "renyi-extract";

/// Printed units. Reports and CSV files always use base q.
enum class Units { base_q, bits };

Units units_from_string(const std::string& name);

struct EntropyRow {
  Alpha alpha = Alpha::one();
  double entropy = 0.0;                   // H_a(X)
  std::optional<double> given_side;       // H_a(X|Z), finite a with a side channel
};

struct BucketRow {
  std::uint32_t k = 2;
  std::uint32_t m = 1;
  std::size_t subset_size = 1;
  std::string mode;  // exact | sampled
  double empirical = 0.0;
  double stderr_mean = 0.0;
  std::uint64_t seeds_used = 0;
  double bound = 0.0;
  bool satisfied = true;
};

struct SweepRow {
  Alpha alpha = Alpha::one();
  std::uint32_t m = 1;
  double entropy = 0.0;
  std::string measure;  // joint | conditional
  double empirical = 0.0;
  double bound = 0.0;
  bool satisfied = true;
};

struct VerifyReport {
  nlohmann::json config;
  std::string family;
  std::uint32_t q = 2;
  std::uint64_t budget = 0;
  hashfam::KStarVerdict certification;
  std::vector<EntropyRow> entropies;
  std::vector<extractor::DivergenceRow> divergences;
  std::vector<extractor::DivergenceRow> side_divergences;
  std::vector<bounds::BoundReport> bounds;
  std::vector<BucketRow> buckets;
  std::optional<double> wall_clock_seconds;

  bool certified() const { return certification.k_star_universal(); }
  bool all_satisfied() const;
};

/// Deterministic JSON. Infinite values are written as the string "inf",
/// NaN as null.
nlohmann::json to_json(const VerifyReport& report);
nlohmann::json number_to_json(double v);

std::string summary_text(const VerifyReport& report, Units units);

/// %.12g, with "inf" / "-inf" / "nan".
std::string csv_number(double v);
std::string bucket_csv(const std::vector<BucketRow>& rows);
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace renyi::harness
