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

#include "renyi/hashfam/universality.hpp"

#include <limits>

namespace renyi::hashfam {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  u128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

// favorable / total <= q^{-e}  <=>  favorable * q^e <= total
bool within_threshold(const CollisionRatio& r, std::uint64_t q, std::uint64_t e) {
  if (r.favorable == 0) return true;
  u128 scaled = r.favorable;
  for (std::uint64_t i = 0; i < e; ++i) {
    scaled *= q;
    if (scaled > r.total) return false;
  }
  return scaled <= r.total;
}

std::string threshold_string(std::uint64_t q, std::uint64_t e) {
  if (e == 0) return "1";
  return "1/" + std::to_string(q) + "^" + std::to_string(e);
}

}  // namespace

bool KStarVerdict::k_star_universal() const {
  for (const auto& r : orders) {
    if (!r.universal) return false;
  }
  return !orders.empty();
}

std::optional<std::uint32_t> KStarVerdict::first_failure() const {
  for (const auto& r : orders) {
    if (!r.universal) return r.order;
  }
  return std::nullopt;
}

std::uint64_t universality_cost(const HashFamily& family, std::uint32_t l) {
  const std::uint64_t tuples = binomial(family.domain_size(), l);
  const u128 cost = static_cast<u128>(family.seed_space_size()) * (tuples + family.domain_size());
  return cost > kSaturated ? kSaturated : static_cast<std::uint64_t>(cost);
}

UniversalityResult verify_universality(const HashFamily& family, std::uint32_t l, std::uint64_t budget) {
  if (l < 2) throw std::invalid_argument("universality order l must be >= 2");
  const std::uint32_t domain = family.domain_size();
  if (l > domain) throw std::invalid_argument("universality order exceeds the domain size");
  const std::uint64_t cost = universality_cost(family, l);
  if (cost > budget) {
    throw BudgetExceeded("universality check for l=" + std::to_string(l) + " needs " + std::to_string(cost) +
                         " work units, budget is " + std::to_string(budget));
  }

  // All l-subsets of the domain in lexicographic order, flattened.
  std::vector<std::uint32_t> combos;
  std::vector<std::uint32_t> c(l);
  for (std::uint32_t i = 0; i < l; ++i) c[i] = i;
  while (true) {
    combos.insert(combos.end(), c.begin(), c.end());
    std::uint32_t i = l;
    while (i-- > 0) {
      if (c[i] < domain - l + i) break;
    }
    if (i == static_cast<std::uint32_t>(-1)) break;
    ++c[i];
    for (std::uint32_t j = i + 1; j < l; ++j) c[j] = c[j - 1] + 1;
  }
  const std::size_t num_combos = combos.size() / l;

  std::vector<std::uint64_t> counts(num_combos, 0);
  std::vector<std::uint32_t> values(domain);
  const std::uint64_t seeds = family.seed_space_size();
  for (std::uint64_t s = 0; s < seeds; ++s) {
    for (std::uint32_t x = 0; x < domain; ++x) values[x] = family.evaluate_index(s, x);
    for (std::size_t t = 0; t < num_combos; ++t) {
      const std::uint32_t* tuple = &combos[t * l];
      const std::uint32_t first = values[tuple[0]];
      bool all_equal = true;
      for (std::uint32_t j = 1; j < l && all_equal; ++j) all_equal = values[tuple[j]] == first;
      counts[t] += all_equal ? 1 : 0;
    }
  }

  std::size_t best = 0;
  for (std::size_t t = 1; t < num_combos; ++t) {
    if (counts[t] > counts[best]) best = t;
  }

  UniversalityResult result;
  result.order = l;
  result.max_collision = CollisionRatio{counts[best], seeds};
  result.witness.assign(combos.begin() + static_cast<std::ptrdiff_t>(best * l),
                        combos.begin() + static_cast<std::ptrdiff_t>((best + 1) * l));
  const std::uint64_t exponent = std::uint64_t{family.m()} * (l - 1);
  result.universal = within_threshold(result.max_collision, family.q(), exponent);
  result.threshold = threshold_string(family.q(), exponent);
  return result;
}

KStarVerdict certify_k_star(const HashFamily& family, std::uint64_t budget) {
  KStarVerdict verdict;
  for (std::uint32_t l = 2; l <= family.k(); ++l) verdict.orders.push_back(verify_universality(family, l, budget));
  return verdict;
}

}  // namespace renyi::hashfam
