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

#include "renyi/infomeasure/pmf.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "renyi/infomeasure/numeric.hpp"

namespace renyi::info {

namespace {

void validate_probs(std::span<const double> probs, std::uint32_t base_q) {
  if (base_q < 2) throw std::invalid_argument("logarithm base q must be >= 2");
  if (probs.empty()) throw std::invalid_argument("probability vector is empty");
  for (double p : probs) {
    if (!std::isfinite(p) || p < 0.0) throw std::invalid_argument("probabilities must be finite and >= 0");
  }
  const double total = compensated_sum(probs);
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw std::invalid_argument("probabilities sum to " + std::to_string(total) + ", not 1");
  }
}

}  // namespace

Pmf::Pmf(std::vector<double> probs, std::uint32_t base_q) : probs_(std::move(probs)), base_q_(base_q) {
  validate_probs(probs_, base_q_);
}

Pmf Pmf::uniform(std::size_t size, std::uint32_t base_q) {
  if (size == 0) throw std::invalid_argument("uniform pmf needs size >= 1");
  return Pmf(std::vector<double>(size, 1.0 / static_cast<double>(size)), base_q);
}

Pmf Pmf::point_mass(std::size_t size, std::size_t at, std::uint32_t base_q) {
  if (at >= size) throw std::out_of_range("point mass outside the support");
  std::vector<double> p(size, 0.0);
  p[at] = 1.0;
  return Pmf(std::move(p), base_q);
}

Pmf Pmf::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != probs_.size()) throw std::invalid_argument("permutation has wrong size");
  std::vector<double> out(probs_.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out[i] = probs_.at(perm[i]);
  return Pmf(std::move(out), base_q_);
}

JointPmf::JointPmf(std::vector<std::size_t> axis_sizes, std::vector<double> probs, std::uint32_t base_q)
    : axis_sizes_(std::move(axis_sizes)), probs_(std::move(probs)), base_q_(base_q) {
  if (axis_sizes_.size() != 2 && axis_sizes_.size() != 3) throw std::invalid_argument("joint pmf needs 2 or 3 axes");
  std::size_t total = 1;
  for (std::size_t s : axis_sizes_) {
    if (s == 0) throw std::invalid_argument("joint pmf axis of size 0");
    total *= s;
  }
  if (total != probs_.size()) throw std::invalid_argument("joint pmf size does not match its axes");
  validate_probs(probs_, base_q_);
}

JointPmf JointPmf::product(const Pmf& a, const Pmf& b) {
  std::vector<double> p(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) p[i * b.size() + j] = a[i] * b[j];
  }
  return JointPmf({a.size(), b.size()}, std::move(p), a.base_q());
}

double JointPmf::at(std::size_t i, std::size_t j) const {
  if (rank() != 2) throw std::logic_error("at(i, j) on a rank-3 joint");
  return probs_.at(i * axis_sizes_[1] + j);
}

double JointPmf::at(std::size_t i, std::size_t j, std::size_t k) const {
  if (rank() != 3) throw std::logic_error("at(i, j, k) on a rank-2 joint");
  return probs_.at((i * axis_sizes_[1] + j) * axis_sizes_[2] + k);
}

Pmf JointPmf::marginal(std::size_t axis) const {
  if (axis >= rank()) throw std::out_of_range("marginal axis out of range");
  std::size_t inner = 1;
  for (std::size_t a = axis + 1; a < rank(); ++a) inner *= axis_sizes_[a];
  const std::size_t n = axis_sizes_[axis];
  std::vector<CompensatedSum> acc(n);
  for (std::size_t idx = 0; idx < probs_.size(); ++idx) acc[(idx / inner) % n].add(probs_[idx]);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = acc[i].value();
  return Pmf(std::move(out), base_q_);
}

Pmf JointPmf::trailing_marginal() const {
  const std::size_t rest = probs_.size() / axis_sizes_[0];
  std::vector<CompensatedSum> acc(rest);
  for (std::size_t idx = 0; idx < probs_.size(); ++idx) acc[idx % rest].add(probs_[idx]);
  std::vector<double> out(rest);
  for (std::size_t i = 0; i < rest; ++i) out[i] = acc[i].value();
  return Pmf(std::move(out), base_q_);
}

JointPmf JointPmf::flatten_trailing() const {
  if (rank() == 2) return *this;
  return JointPmf({axis_sizes_[0], axis_sizes_[1] * axis_sizes_[2]}, probs_, base_q_);
}

JointPmf JointPmf::sum_out(std::size_t axis) const {
  if (rank() != 3) throw std::logic_error("sum_out needs a rank-3 joint");
  if (axis > 2) throw std::out_of_range("sum_out axis out of range");
  std::vector<std::size_t> sizes;
  for (std::size_t a = 0; a < 3; ++a) {
    if (a != axis) sizes.push_back(axis_sizes_[a]);
  }
  std::vector<CompensatedSum> acc(sizes[0] * sizes[1]);
  for (std::size_t i = 0; i < axis_sizes_[0]; ++i) {
    for (std::size_t j = 0; j < axis_sizes_[1]; ++j) {
      for (std::size_t k = 0; k < axis_sizes_[2]; ++k) {
        const std::size_t idx[3] = {i, j, k};
        std::size_t kept[2];
        std::size_t c = 0;
        for (std::size_t a = 0; a < 3; ++a) {
          if (a != axis) kept[c++] = idx[a];
        }
        acc[kept[0] * sizes[1] + kept[1]].add(at(i, j, k));
      }
    }
  }
  std::vector<double> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = acc[i].value();
  return JointPmf(std::move(sizes), std::move(out), base_q_);
}

JointPmf JointPmf::swap_to_front(std::size_t axis) const {
  if (axis >= rank()) throw std::out_of_range("axis out of range");
  if (axis == 0) return *this;
  std::vector<std::size_t> order(rank());
  std::iota(order.begin(), order.end(), 0);
  std::swap(order[0], order[axis]);
  std::vector<std::size_t> sizes(rank());
  for (std::size_t a = 0; a < rank(); ++a) sizes[a] = axis_sizes_[order[a]];

  std::vector<double> out(probs_.size());
  std::vector<std::size_t> idx(rank(), 0);
  for (std::size_t flat = 0; flat < probs_.size(); ++flat) {
    std::size_t rem = flat;
    for (std::size_t a = rank(); a-- > 0;) {
      idx[a] = rem % axis_sizes_[a];
      rem /= axis_sizes_[a];
    }
    std::size_t dst = 0;
    for (std::size_t a = 0; a < rank(); ++a) dst = dst * sizes[a] + idx[order[a]];
    out[dst] = probs_[flat];
  }
  return JointPmf(std::move(sizes), std::move(out), base_q_);
}

}  // namespace renyi::info
