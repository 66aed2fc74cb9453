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

#include "renyi/extractor/source.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

#include "renyi/infomeasure/numeric.hpp"

namespace renyi::extractor {

Source::Source(std::vector<FieldElement> support, info::Pmf probs, std::optional<SideChannel> side)
    : support_(std::move(support)), probs_(std::move(probs)), side_(std::move(side)) {
  if (support_.empty()) throw std::invalid_argument("source support is empty");
  if (support_.size() != probs_.size()) throw std::invalid_argument("source pmf size differs from its support");
  std::set<std::uint64_t> seen;
  for (const auto& e : support_) {
    if (e.params() != support_.front().params()) throw std::invalid_argument("source support mixes fields");
    if (!seen.insert(e.index()).second) throw std::invalid_argument("source support elements are not distinct");
  }
  if (probs_.base_q() != support_.front().params().q) {
    throw std::invalid_argument("source pmf base differs from the field alphabet");
  }
  if (side_) {
    if (side_->outcomes == 0) throw std::invalid_argument("side channel has no outcomes");
    if (side_->table.size() != side_->outcomes * support_.size()) {
      throw std::invalid_argument("side channel table must have one row per support element");
    }
    for (std::size_t row = 0; row < support_.size(); ++row) {
      info::CompensatedSum s;
      for (std::size_t z = 0; z < side_->outcomes; ++z) {
        const double v = side_->at(row, z);
        if (!std::isfinite(v) || v < 0.0) throw std::invalid_argument("side channel entries must be >= 0");
        s.add(v);
      }
      if (std::abs(s.value() - 1.0) > info::kNormalizationTolerance) {
        throw std::invalid_argument("side channel row " + std::to_string(row) + " does not sum to 1");
      }
    }
  }
}

info::JointPmf Source::source_side_joint() const {
  if (!side_) throw std::logic_error("source has no side channel");
  std::vector<double> p(support_.size() * side_->outcomes);
  for (std::size_t x = 0; x < support_.size(); ++x) {
    for (std::size_t z = 0; z < side_->outcomes; ++z) p[x * side_->outcomes + z] = probs_[x] * side_->at(x, z);
  }
  return info::JointPmf({support_.size(), side_->outcomes}, std::move(p), probs_.base_q());
}

Source Source::with_side_channel(SideChannel side) const { return Source(support_, probs_, std::move(side)); }

namespace {

std::vector<FieldElement> first_elements(const Field& field, std::size_t size) {
  if (size == 0 || size > field.order()) throw std::invalid_argument("source size outside [1, q^n]");
  std::vector<FieldElement> out;
  out.reserve(size);
  for (std::size_t i = 0; i < size; ++i) out.push_back(field.element(i));
  return out;
}

}  // namespace

Source uniform_source(const Field& field, std::size_t size) {
  return Source(first_elements(field, size), info::Pmf::uniform(size, field.q()));
}

Source point_mass_source(const Field& field, std::uint64_t element_index) {
  return Source({field.element(element_index)}, info::Pmf({1.0}, field.q()));
}

Source two_spike_source(const Field& field, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("two-spike weight must lie in [0, 1]");
  return Source(first_elements(field, 2), info::Pmf({p, 1.0 - p}, field.q()));
}

Source geometric_source(const Field& field, double r, std::size_t size) {
  if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("geometric ratio must be > 0");
  std::vector<double> w(size);
  info::CompensatedSum total;
  double v = 1.0;
  for (std::size_t i = 0; i < size; ++i) {
    w[i] = v;
    total.add(v);
    v *= r;
  }
  for (double& x : w) x /= total.value();
  return Source(first_elements(field, size), info::Pmf(std::move(w), field.q()));
}

Source explicit_source(const Field& field, std::vector<double> probs) {
  const std::size_t n = probs.size();
  return Source(first_elements(field, n), info::Pmf(std::move(probs), field.q()));
}

Source explicit_source(const Field& field, std::span<const std::uint64_t> indices, std::vector<double> probs) {
  std::vector<FieldElement> support;
  support.reserve(indices.size());
  for (std::uint64_t i : indices) support.push_back(field.element(i));
  return Source(std::move(support), info::Pmf(std::move(probs), field.q()));
}

}  // namespace renyi::extractor
