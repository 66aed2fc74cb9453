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

#include <cstdlib>

#include "renyi/harness/config.hpp"
#include "renyi/hashfam/universality.hpp"

using namespace renyi::harness;
using nlohmann::json;

namespace {

json base() {
  return json::parse(R"({
    "family": {"kind": "polynomial", "q": 2, "n": 3, "k": 2, "m": 1},
    "source": {"preset": "uniform"}
  })");
}

class EnvGuard {
 public:
  explicit EnvGuard(const char* value) {
    if (value) {
      setenv(kBudgetEnvVar, value, 1);
    } else {
      unsetenv(kBudgetEnvVar);
    }
  }
  ~EnvGuard() { unsetenv(kBudgetEnvVar); }
};

}  // namespace

TEST(Config, MinimalDefaults) {
  const auto c = parse_config(base());
  EXPECT_EQ(c.family.q, 2u);
  EXPECT_EQ(c.family.kind, renyi::hashfam::FamilyKind::polynomial);
  EXPECT_EQ(c.source.preset, "uniform");
  EXPECT_TRUE(c.alphas.empty());
  EXPECT_EQ(c.bounds, kBoundGroups);
  EXPECT_FALSE(c.budget.has_value());
  EXPECT_FALSE(c.bucket.has_value());
}

TEST(Config, UnknownFieldsAreErrors) {
  for (const char* path : {"/extra", "/family/extra", "/source/extra"}) {
    auto doc = base();
    doc[json::json_pointer(path)] = 1;
    EXPECT_THROW(parse_config(doc), ConfigError) << path;
  }
  auto doc = base();
  doc["bucket"] = json::parse(R"({"ks":[2],"ms":[1],"subset_sizes":[2],"sampels":3})");
  EXPECT_THROW(parse_config(doc), ConfigError);
  EXPECT_THROW(load_config(std::string(RENYI_TEST_DATA) + "/unknown_field.json"), ConfigError);
}

TEST(Config, TypeAndRangeErrors) {
  auto bad = [](const char* ptr, json value) {
    auto doc = base();
    doc[json::json_pointer(ptr)] = std::move(value);
    return doc;
  };
  EXPECT_THROW(parse_config(bad("/family/q", "2")), ConfigError);
  EXPECT_THROW(parse_config(bad("/family/q", -2)), ConfigError);
  EXPECT_THROW(parse_config(bad("/family/q", 2.5)), ConfigError);
  EXPECT_THROW(parse_config(bad("/family/kind", "linear")), ConfigError);
  EXPECT_THROW(parse_config(bad("/alphas", json::array({0.5}))), ConfigError);
  EXPECT_THROW(parse_config(bad("/alphas", json::array({"two"}))), ConfigError);
  EXPECT_THROW(parse_config(bad("/epsilons", json::array({0.0}))), ConfigError);
  EXPECT_THROW(parse_config(bad("/bounds", json::array({"lhl"}))), ConfigError);
  EXPECT_THROW(parse_config(bad("/budget", 0)), ConfigError);
  EXPECT_THROW(parse_config(bad("/schema_version", 2)), ConfigError);
  auto missing = base();
  missing["family"].erase("m");
  EXPECT_THROW(parse_config(missing), ConfigError);
  EXPECT_THROW(parse_config(json::array()), ConfigError);
}

TEST(Config, SourcePresets) {
  auto doc = base();
  doc["source"] = json::parse(R"({"preset": "two-spike", "p": 0.75})");
  EXPECT_EQ(*parse_config(doc).source.p, 0.75);
  doc["source"] = json::parse(R"({"preset": "two-spike", "r": 0.75})");
  EXPECT_THROW(parse_config(doc), ConfigError);
  doc["source"] = json::parse(R"({"preset": "geometric", "r": 0.5})");
  EXPECT_THROW(parse_config(doc), ConfigError);
  doc["source"] = json::parse(R"({"probs": [0.5, 0.5], "support": [3, 5]})");
  const auto c = parse_config(doc);
  EXPECT_EQ(c.source.preset, "explicit");
  EXPECT_EQ(c.source.support, (std::vector<std::uint64_t>{3, 5}));
  doc["source"] = json::parse(R"({"probs": [0.5, 0.5], "support": [3]})");
  EXPECT_THROW(parse_config(doc), ConfigError);
  doc["source"] = json::parse(R"({"preset": "zipf"})");
  EXPECT_THROW(parse_config(doc), ConfigError);
}

TEST(Config, BuildSourceValidatesAgainstTheField) {
  auto doc = base();
  doc["source"] = json::parse(R"({"probs": [0.5, 0.6]})");
  const auto c = parse_config(doc);
  const auto family = build_family(c.family);
  EXPECT_THROW(build_source(c.source, family.field()), ConfigError);

  doc["source"] = json::parse(R"({"preset": "uniform", "size": 9})");
  EXPECT_THROW(build_source(parse_config(doc).source, family.field()), ConfigError);

  doc["source"] = json::parse(R"({"preset": "two-spike", "p": 0.5, "side_channel": [[1, 0], [0.5]]})");
  EXPECT_THROW(build_source(parse_config(doc).source, family.field()), ConfigError);
  doc["source"] = json::parse(R"({"preset": "two-spike", "p": 0.5, "side_channel": [[1, 0], [0.5, 0.5]]})");
  const auto src = build_source(parse_config(doc).source, family.field());
  EXPECT_TRUE(src.has_side_channel());

  doc["family"]["m"] = 4;
  EXPECT_THROW(build_family(parse_config(doc).family), ConfigError);
}

TEST(Config, AlphaForms) {
  auto doc = base();
  doc["alphas"] = json::parse(R"([1, 1.5, "inf", "2"])");
  const auto c = parse_config(doc);
  ASSERT_EQ(c.alphas.size(), 4u);
  EXPECT_TRUE(c.alphas[0].is_one());
  EXPECT_TRUE(c.alphas[2].is_infinity());
  EXPECT_EQ(c.alphas[3].value(), 2.0);
  EXPECT_EQ(alpha_to_json(c.alphas[2]), "inf");
}

TEST(Config, RoundTripsThroughJson) {
  const auto c = load_config(std::string(RENYI_TEST_DATA) + "/verify_side.json");
  const auto again = parse_config(config_to_json(c));
  EXPECT_EQ(config_to_json(again), config_to_json(c));
}

TEST(Config, BudgetPrecedence) {
  auto doc = base();
  {
    EnvGuard env(nullptr);
    EXPECT_EQ(resolve_budget(std::nullopt, parse_config(doc)), renyi::hashfam::kDefaultBudget);
  }
  {
    EnvGuard env("12345");
    EXPECT_EQ(resolve_budget(std::nullopt, parse_config(doc)), 12345u);
    doc["budget"] = 999;
    EXPECT_EQ(resolve_budget(std::nullopt, parse_config(doc)), 999u);
    EXPECT_EQ(resolve_budget(77, parse_config(doc)), 77u);
  }
  {
    EnvGuard env("lots");
    EXPECT_THROW(resolve_budget(std::nullopt, parse_config(base())), ConfigError);
  }
}
