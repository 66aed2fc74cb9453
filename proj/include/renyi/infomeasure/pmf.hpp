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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace renyi::info {

/// Tolerance on |sum - 1| accepted at construction.
inline constexpr double kNormalizationTolerance = 1e-9;

/// Finitely supported probability mass function over {0, ..., size-1}.
///
/// `base_q` is the logarithm base used by every functional evaluated on it.
class Pmf {
 public:
  /// Throws std::invalid_argument on negative or non-finite entries, an
  /// empty vector, base < 2, or a sum off 1 by more than 1e-9.
  Pmf(std::vector<double> probs, std::uint32_t base_q);

  static Pmf uniform(std::size_t size, std::uint32_t base_q);
  static Pmf point_mass(std::size_t size, std::size_t at, std::uint32_t base_q);

  std::size_t size() const { return probs_.size(); }
  std::uint32_t base_q() const { return base_q_; }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const { return probs_; }

  /// Same probabilities reindexed: result[i] = this[perm[i]].
  Pmf permuted(std::span<const std::size_t> perm) const;

 private:
  std::vector<double> probs_;
  std::uint32_t base_q_;
};

/// Dense pmf over a product of 2 or 3 finite axes, stored row-major with
/// the last axis varying fastest. Axis 0 is the output (or source) axis,
/// axis 1 the seed (or side information), axis 2 optional side information.
class JointPmf {
 public:
  JointPmf(std::vector<std::size_t> axis_sizes, std::vector<double> probs, std::uint32_t base_q);

  /// Outer product P(i, j) = a[i] * b[j].
  static JointPmf product(const Pmf& a, const Pmf& b);

  std::size_t rank() const { return axis_sizes_.size(); }
  std::size_t axis_size(std::size_t axis) const { return axis_sizes_.at(axis); }
  std::span<const std::size_t> axis_sizes() const { return axis_sizes_; }
  std::uint32_t base_q() const { return base_q_; }
  std::span<const double> probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }

  double at(std::size_t i, std::size_t j) const;
  double at(std::size_t i, std::size_t j, std::size_t k) const;

  /// Marginal on one axis.
  Pmf marginal(std::size_t axis) const;
  /// Marginal on the joint of all axes after the first, flattened.
  Pmf trailing_marginal() const;
  /// Collapses axes 1.. into a single axis (row-major), giving rank 2.
  JointPmf flatten_trailing() const;
  /// Sums out axis `axis`, reducing rank by one. Requires rank 3.
  JointPmf sum_out(std::size_t axis) const;
  /// Swaps axis `axis` with axis 0.
  JointPmf swap_to_front(std::size_t axis) const;

 private:
  std::vector<std::size_t> axis_sizes_;
  std::vector<double> probs_;
  std::uint32_t base_q_;
};

}  // namespace renyi::info
