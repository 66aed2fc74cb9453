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

#include "renyi/hashfam/hash_family.hpp"

namespace renyi::hashfam {

/// Default cap on work units (hash evaluations or tuple checks).
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact probability favorable / total.
struct CollisionRatio {
  std::uint64_t favorable = 0;
  std::uint64_t total = 1;

  double value() const { return static_cast<double>(favorable) / static_cast<double>(total); }
  std::string to_string() const { return std::to_string(favorable) + "/" + std::to_string(total); }
  friend bool operator==(const CollisionRatio& a, const CollisionRatio& b) {
    return static_cast<u128>(a.favorable) * b.total ==
           static_cast<u128>(b.favorable) * a.total;
  }
};

struct UniversalityResult {
  std::uint32_t order = 2;              // l
  CollisionRatio max_collision;         // max over distinct l-tuples
  std::vector<std::uint32_t> witness;   // an l-tuple attaining the max
  bool universal = false;               // max_collision <= q^{-m(l-1)}

  /// Threshold q^{-m(l-1)} as "1/q^{m(l-1)}".
  std::string threshold;
};

struct KStarVerdict {
  std::vector<UniversalityResult> orders;  // l = 2..k
  bool k_star_universal() const;
  std::optional<std::uint32_t> first_failure() const;
};

/// Number of work units verify_universality would spend for order `l`.
std::uint64_t universality_cost(const HashFamily& family, std::uint32_t l);

/// Exact max over distinct l-tuples of Pr_S[h(S,x_1) = ... = h(S,x_l)],
/// by enumeration of every seed. Throws BudgetExceeded when
/// seeds * C(|X|, l) exceeds `budget`.
UniversalityResult verify_universality(const HashFamily& family, std::uint32_t l,
                                       std::uint64_t budget = kDefaultBudget);

/// Runs verify_universality for l = 2..k.
KStarVerdict certify_k_star(const HashFamily& family, std::uint64_t budget = kDefaultBudget);

}  // namespace renyi::hashfam
