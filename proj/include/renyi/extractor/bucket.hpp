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
#include <span>
#include <variant>

#include "renyi/hashfam/hash_family.hpp"
#include "renyi/hashfam/universality.hpp"

namespace renyi::extractor {

struct ExactMode {};

struct SampledMode {
  std::uint64_t seeds = 1000;
  std::uint64_t rng_seed = 0;
};

using BucketMode = std::variant<ExactMode, SampledMode>;

struct BucketEstimate {
  double mean = 0.0;
  /// Standard error of the mean; 0 in exact mode.
  double stderr_mean = 0.0;
  std::uint64_t seeds_used = 0;
  bool exact = true;
  std::uint64_t rng_seed = 0;
};

/// E_S[max_u |{x in subset : h(S, x) = u}|].
///
/// Exact mode averages over every seed and throws BudgetExceeded when
/// seed_space_size * |subset| exceeds `budget`. Sampled mode draws seeds
/// uniformly with replacement from a std::mt19937_64 seeded with rng_seed.
BucketEstimate expected_max_bucket(const hashfam::HashFamily& family, std::span<const std::uint32_t> subset,
                                   const BucketMode& mode, std::uint64_t budget = hashfam::kDefaultBudget);

}  // namespace renyi::extractor
