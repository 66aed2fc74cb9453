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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "renyi/harness/config.hpp"
#include "renyi/harness/report.hpp"

namespace renyi::harness {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,  // a bound failed or certification failed
  kExitUsage = 2,      // bad flags or config
  kExitRuntime = 3,    // budget exceeded or other runtime failure
};

struct RunOptions {
  std::uint64_t budget = hashfam::kDefaultBudget;
  unsigned workers = 1;
  bool timing = false;
};

/// Certify, extract, and evaluate every selected bound. Stops after
/// certification when the family is not k*-universal.
VerifyReport run_verify(const ExperimentConfig& config, const RunOptions& options);

/// Expected largest bucket over the config's (k, m, |A|) grid. Subsets are
/// the first |A| field elements.
std::vector<BucketRow> run_bucket(const ExperimentConfig& config, const RunOptions& options);

/// One row per (alpha, m) of the sweep grid, alpha-major within each m.
/// Orders up to k compare the joint divergence with the real-alpha bound,
/// larger orders the conditional divergence with the above-k bound.
/// Throws ConfigError when some m gives a family that is not k*-universal.
std::vector<SweepRow> run_sweep(const ExperimentConfig& config, const RunOptions& options);

/// Evaluates one named bound or regime threshold from command-line style
/// arguments. Missing arguments raise ConfigError.
struct BoundQuery {
  std::string name;
  std::optional<std::uint32_t> q, k, l;
  std::optional<double> m, entropy, epsilon, subset_size, y;
  std::optional<Alpha> alpha;
};
/// Returns (label, value) lines in base-q units.
std::vector<std::pair<std::string, double>> evaluate_bound_query(const BoundQuery& query);

/// Full command-line entry point.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace renyi::harness
