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

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "renyi/hashfam/universality.hpp"

using namespace renyi::hashfam;

namespace {

// Max collision count over ordered tuples of distinct inputs, by recursion.
std::uint64_t brute_max_collisions(const HashFamily& h, std::uint32_t l) {
  std::uint64_t best = 0;
  std::vector<std::uint32_t> tuple;
  std::function<void()> rec = [&]() {
    if (tuple.size() == l) {
      std::uint64_t c = 0;
      for (std::uint64_t s = 0; s < h.seed_space_size(); ++s) {
        bool eq = true;
        for (std::size_t i = 1; i < l; ++i) eq = eq && h.evaluate_index(s, tuple[i]) == h.evaluate_index(s, tuple[0]);
        c += eq ? 1 : 0;
      }
      best = std::max(best, c);
      return;
    }
    for (std::uint32_t x = tuple.empty() ? 0 : tuple.back() + 1; x < h.domain_size(); ++x) {
      tuple.push_back(x);
      rec();
      tuple.pop_back();
    }
  };
  rec();
  return best;
}

}  // namespace

TEST(Universality, PairwiseGf4) {
  const auto h = HashFamily::polynomial(Field::create(2, 2), 2, 1);
  const auto r = verify_universality(h, 2);
  EXPECT_EQ(r.max_collision, (CollisionRatio{1, 2}));
  EXPECT_TRUE(r.universal);
  EXPECT_EQ(r.threshold, "1/2^1");
  EXPECT_EQ(r.witness.size(), 2u);
}

TEST(Universality, PairwiseFamilyAtOrderThree) {
  // m = 1: collision 1/4 meets 2^{-2} exactly.
  EXPECT_TRUE(verify_universality(HashFamily::polynomial(Field::create(2, 2), 2, 1), 3).universal);
  struct Case {
    std::uint32_t q, n, m;
    CollisionRatio expected;
    std::string threshold;
  };
  for (const auto& c : {Case{2, 2, 2, {1, 4}, "1/2^4"}, Case{2, 3, 2, {1, 8}, "1/2^4"}, Case{3, 2, 1, {1, 3}, "1/3^2"}}) {
    const auto h = HashFamily::polynomial(Field::create(c.q, c.n), 2, c.m);
    const auto r = verify_universality(h, 3);
    EXPECT_EQ(r.max_collision, c.expected) << h.describe();
    EXPECT_FALSE(r.universal) << h.describe();
    EXPECT_EQ(r.threshold, c.threshold);
  }
}

TEST(Universality, MatchesBruteForce) {
  for (std::uint32_t k = 2; k <= 3; ++k) {
    for (std::uint32_t m = 1; m <= 2; ++m) {
      const auto h = HashFamily::polynomial(Field::create(2, 3), k, m);
      for (std::uint32_t l = 2; l <= 3; ++l) {
        const auto r = verify_universality(h, l);
        EXPECT_EQ(r.max_collision.favorable, brute_max_collisions(h, l)) << h.describe() << " l=" << l;
        EXPECT_EQ(r.max_collision.total, h.seed_space_size());
      }
    }
  }
}

TEST(Universality, WitnessAttainsMaximum) {
  const auto h = HashFamily::polynomial(Field::create(2, 3), 2, 2);
  const auto r = verify_universality(h, 3);
  std::set<std::uint32_t> distinct(r.witness.begin(), r.witness.end());
  ASSERT_EQ(distinct.size(), 3u);
  std::uint64_t c = 0;
  for (std::uint64_t s = 0; s < h.seed_space_size(); ++s) {
    const auto u = h.evaluate_index(s, r.witness[0]);
    c += (h.evaluate_index(s, r.witness[1]) == u && h.evaluate_index(s, r.witness[2]) == u) ? 1 : 0;
  }
  EXPECT_EQ(c, r.max_collision.favorable);
}

TEST(Universality, FullTableHitsThresholdExactly) {
  const auto h = HashFamily::full_table(Field::create(2, 2), 3, 1);
  for (std::uint32_t l = 2; l <= 3; ++l) {
    const auto r = verify_universality(h, l);
    EXPECT_EQ(r.max_collision, (CollisionRatio{1, 1ull << (l - 1)}));
    EXPECT_TRUE(r.universal);
  }
}

TEST(Universality, CertifyKStar) {
  const auto h = HashFamily::polynomial(Field::create(2, 3), 3, 2);
  const auto v = certify_k_star(h);
  ASSERT_EQ(v.orders.size(), 2u);
  EXPECT_TRUE(v.k_star_universal());
  EXPECT_FALSE(v.first_failure().has_value());

  const auto c = certify_k_star(HashFamily::constant(Field::create(2, 3), 3, 1));
  EXPECT_FALSE(c.k_star_universal());
  EXPECT_EQ(c.first_failure(), 2u);
  EXPECT_EQ(c.orders[0].max_collision, (CollisionRatio{1, 1}));
}

TEST(Universality, BudgetAndArguments) {
  const auto h = HashFamily::polynomial(Field::create(2, 4), 3, 1);
  EXPECT_EQ(universality_cost(h, 2), 4096u * (120u + 16u));
  EXPECT_THROW(verify_universality(h, 2, 1000), BudgetExceeded);
  EXPECT_THROW(verify_universality(h, 1), std::invalid_argument);
  EXPECT_THROW(verify_universality(HashFamily::polynomial(Field::create(2, 1), 3, 1), 3), std::invalid_argument);
}

TEST(CollisionRatio, ComparesByValue) {
  EXPECT_EQ((CollisionRatio{2, 8}), (CollisionRatio{1, 4}));
  EXPECT_NE((CollisionRatio{1, 3}), (CollisionRatio{1, 4}));
  EXPECT_EQ((CollisionRatio{3, 4}).to_string(), "3/4");
  EXPECT_DOUBLE_EQ((CollisionRatio{3, 4}).value(), 0.75);
}
