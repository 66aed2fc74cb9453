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
#include <string>
#include <vector>

#include "renyi/extractor/source.hpp"
#include "renyi/hashfam/hash_family.hpp"
#include "renyi/hashfam/universality.hpp"
#include "renyi/infomeasure/alpha.hpp"
#include "renyi/infomeasure/pmf.hpp"

namespace renyi::extractor {

using hashfam::BudgetExceeded;
using hashfam::HashFamily;
using info::Alpha;

struct ExtractOptions {
  std::uint64_t budget = hashfam::kDefaultBudget;  // hash evaluations
  unsigned workers = 1;
};

/// Exact joint law of (h(S, X), S[, Z]) for uniform S.
class ExtractionResult {
 public:
  ExtractionResult(info::JointPmf joint, std::uint32_t q, std::uint32_t m, std::uint32_t k, std::string family,
                   info::Pmf source_pmf, std::optional<info::JointPmf> source_side);

  /// Axes (u, s) or (u, s, z); u is the packed q-ary output.
  const info::JointPmf& joint() const { return joint_; }
  bool has_side_channel() const { return joint_.rank() == 3; }
  /// (u, s) joint, with side information summed out when present.
  info::JointPmf output_seed_joint() const;

  std::uint32_t q() const { return q_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t k() const { return k_; }
  const std::string& family() const { return family_; }

  /// H_a(X) of the source.
  double source_entropy(Alpha alpha) const;
  /// H_a(X|Z) for finite a; requires a side channel.
  double source_conditional_entropy(Alpha alpha) const;

 private:
  info::JointPmf joint_;
  std::uint32_t q_;
  std::uint32_t m_;
  std::uint32_t k_;
  std::string family_;
  info::Pmf source_pmf_;
  std::optional<info::JointPmf> source_side_;
};

/// Number of hash evaluations extract_joint performs.
std::uint64_t extraction_cost(const HashFamily& family, const Source& source);

/// P(u, s) = P_S(s) sum_{x : h(s,x) = u} P_X(x), and with side channel
/// P(u, s, z) = P_S(s) sum_x 1{h(s,x) = u} P_X(x) P_{Z|X}(z|x).
///
/// Seeds are split into `workers` contiguous ranges; each seed's column is
/// written by one worker only, so results do not depend on the worker
/// count. Throws BudgetExceeded or std::invalid_argument.
ExtractionResult extract_joint(const HashFamily& family, const Source& source, const ExtractOptions& options = {});

struct DivergenceRow {
  Alpha alpha = Alpha::one();
  double joint = 0.0;        // D_a(P_{U,S[,Z]} || uniform x P_{S[,Z]})
  double conditional = 0.0;  // sum_s P_S(s) D_a(P_{U|S=s} || uniform)
  double tv = 0.0;           // TV(P_{U,S[,Z]}, uniform x P_{S[,Z]})
  double kl = 0.0;           // D_1 of the same pair
};

/// Empirical divergences of the stored joint from uniform-output x its own
/// seed (and side) marginal.
std::vector<DivergenceRow> empirical_divergences(const ExtractionResult& result, const std::vector<Alpha>& alphas);

/// Same table for an arbitrary output-first joint.
std::vector<DivergenceRow> divergence_table(const info::JointPmf& joint, const std::vector<Alpha>& alphas);

}  // namespace renyi::extractor
