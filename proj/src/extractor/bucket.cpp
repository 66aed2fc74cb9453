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

#include "renyi/extractor/bucket.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "renyi/infomeasure/numeric.hpp"

namespace renyi::extractor {

namespace {

std::uint32_t max_bucket(const hashfam::HashFamily& family, std::uint64_t seed, std::span<const std::uint32_t> subset,
                         std::vector<std::uint32_t>& counts) {
  std::fill(counts.begin(), counts.end(), 0);
  std::uint32_t best = 0;
  for (std::uint32_t x : subset) best = std::max(best, ++counts[family.evaluate_index(seed, x)]);
  return best;
}

}  // namespace

BucketEstimate expected_max_bucket(const hashfam::HashFamily& family, std::span<const std::uint32_t> subset,
                                   const BucketMode& mode, std::uint64_t budget) {
  if (subset.empty()) throw std::invalid_argument("bucket subset is empty");
  for (std::uint32_t x : subset) {
    if (x >= family.domain_size()) throw std::invalid_argument("bucket subset element outside the field");
  }
  std::vector<std::uint32_t> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("bucket subset has repeated elements");
  }
  std::vector<std::uint32_t> counts(family.output_size());
  BucketEstimate est;

  if (std::holds_alternative<ExactMode>(mode)) {
    const hashfam::u128 cost = static_cast<hashfam::u128>(family.seed_space_size()) * subset.size();
    if (cost > budget) {
      throw hashfam::BudgetExceeded("exact bucket enumeration needs " +
                                    std::to_string(static_cast<std::uint64_t>(std::min<hashfam::u128>(
                                        cost, ~std::uint64_t{0}))) +
                                    " hash evaluations, budget is " + std::to_string(budget));
    }
    // Integer total, so the mean is the exact ratio rounded once.
    hashfam::u128 total = 0;
    for (std::uint64_t s = 0; s < family.seed_space_size(); ++s) total += max_bucket(family, s, subset, counts);
    est.mean = static_cast<double>(total) / static_cast<double>(family.seed_space_size());
    est.seeds_used = family.seed_space_size();
    est.exact = true;
    return est;
  }

  const auto& sampled = std::get<SampledMode>(mode);
  if (sampled.seeds < 2) throw std::invalid_argument("sampled mode needs at least 2 seeds");
  const hashfam::u128 cost = static_cast<hashfam::u128>(sampled.seeds) * subset.size();
  if (cost > budget) throw hashfam::BudgetExceeded("sampled bucket estimate exceeds the budget");
  std::mt19937_64 rng(sampled.rng_seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, family.seed_space_size() - 1);
  info::CompensatedSum sum, sum_sq;
  for (std::uint64_t i = 0; i < sampled.seeds; ++i) {
    const double v = max_bucket(family, pick(rng), subset, counts);
    sum.add(v);
    sum_sq.add(v * v);
  }
  const double n = static_cast<double>(sampled.seeds);
  const double mean = sum.value() / n;
  const double var = std::max(0.0, (sum_sq.value() - n * mean * mean) / (n - 1.0));
  est.mean = mean;
  est.stderr_mean = std::sqrt(var / n);
  est.seeds_used = sampled.seeds;
  est.exact = false;
  est.rng_seed = sampled.rng_seed;
  return est;
}

}  // namespace renyi::extractor
