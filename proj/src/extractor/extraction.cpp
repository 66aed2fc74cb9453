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

#include "renyi/extractor/extraction.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <utility>

#include "renyi/infomeasure/measures.hpp"

namespace renyi::extractor {

ExtractionResult::ExtractionResult(info::JointPmf joint, std::uint32_t q, std::uint32_t m, std::uint32_t k,
                                   std::string family, info::Pmf source_pmf,
                                   std::optional<info::JointPmf> source_side)
    : joint_(std::move(joint)),
      q_(q),
      m_(m),
      k_(k),
      family_(std::move(family)),
      source_pmf_(std::move(source_pmf)),
      source_side_(std::move(source_side)) {}

info::JointPmf ExtractionResult::output_seed_joint() const {
  if (joint_.rank() == 2) return joint_;
  return joint_.sum_out(2);
}

double ExtractionResult::source_entropy(Alpha alpha) const { return info::renyi_entropy(source_pmf_, alpha); }

double ExtractionResult::source_conditional_entropy(Alpha alpha) const {
  if (!source_side_) throw std::logic_error("extraction has no side channel");
  return info::conditional_renyi_entropy(*source_side_, alpha);
}

std::uint64_t extraction_cost(const HashFamily& family, const Source& source) {
  const hashfam::u128 cost = static_cast<hashfam::u128>(family.seed_space_size()) * source.size();
  return cost > ~std::uint64_t{0} ? ~std::uint64_t{0} : static_cast<std::uint64_t>(cost);
}

ExtractionResult extract_joint(const HashFamily& family, const Source& source, const ExtractOptions& options) {
  const std::uint64_t cost = extraction_cost(family, source);
  if (cost > options.budget) {
    throw BudgetExceeded("extraction needs " + std::to_string(cost) + " hash evaluations, budget is " +
                         std::to_string(options.budget));
  }
  std::vector<std::uint32_t> xs;
  xs.reserve(source.size());
  for (const auto& e : source.support()) xs.push_back(family.field().index_of(e));

  const std::size_t outputs = family.output_size();
  const std::size_t seeds = family.seed_space_size();
  const std::size_t sides = source.has_side_channel() ? source.side_channel()->outcomes : 1;
  const double seed_mass = 1.0 / static_cast<double>(seeds);
  const auto probs = source.pmf().probs();
  const SideChannel* side = source.has_side_channel() ? &*source.side_channel() : nullptr;

  std::vector<double> joint(outputs * seeds * sides, 0.0);

  auto fill = [&](std::size_t seed_begin, std::size_t seed_end) {
    std::vector<double> column(outputs * sides);
    for (std::size_t s = seed_begin; s < seed_end; ++s) {
      std::fill(column.begin(), column.end(), 0.0);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const std::uint32_t u = family.evaluate_index(s, xs[i]);
        if (side == nullptr) {
          column[u] += probs[i];
        } else {
          for (std::size_t z = 0; z < sides; ++z) column[u * sides + z] += probs[i] * side->at(i, z);
        }
      }
      for (std::size_t u = 0; u < outputs; ++u) {
        for (std::size_t z = 0; z < sides; ++z) joint[(u * seeds + s) * sides + z] = column[u * sides + z] * seed_mass;
      }
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, seeds);
  if (workers == 1) {
    fill(0, seeds);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (seeds + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(seeds, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(fill, begin, end);
    }
    for (auto& t : pool) t.join();
  }

  std::vector<std::size_t> axes{outputs, seeds};
  if (side != nullptr) axes.push_back(sides);
  info::JointPmf jp(std::move(axes), std::move(joint), family.q());
  std::optional<info::JointPmf> source_side;
  if (side != nullptr) source_side = source.source_side_joint();
  return ExtractionResult(std::move(jp), family.q(), family.m(), family.k(), family.describe(), source.pmf(),
                          std::move(source_side));
}

std::vector<DivergenceRow> divergence_table(const info::JointPmf& joint, const std::vector<Alpha>& alphas) {
  std::vector<DivergenceRow> rows;
  rows.reserve(alphas.size());
  const double tv = info::joint_tv_from_uniform(joint);
  const double kl = info::joint_divergence_from_uniform(joint, Alpha::one());
  for (const Alpha& a : alphas) {
    DivergenceRow r;
    r.alpha = a;
    r.joint = info::joint_divergence_from_uniform(joint, a);
    r.conditional = info::conditional_divergence(joint, a);
    r.tv = tv;
    r.kl = kl;
    rows.push_back(r);
  }
  return rows;
}

std::vector<DivergenceRow> empirical_divergences(const ExtractionResult& result, const std::vector<Alpha>& alphas) {
  return divergence_table(result.joint(), alphas);
}

}  // namespace renyi::extractor
