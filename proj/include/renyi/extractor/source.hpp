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
#include <memory>
#include <optional>
#include <vector>

#include "renyi/hashfam/field.hpp"
#include "renyi/infomeasure/pmf.hpp"

namespace renyi::extractor {

using hashfam::Field;
using hashfam::FieldElement;

/// Conditional table P_{Z|X}: one row per support element, `outcomes`
/// columns, row-major.
struct SideChannel {
  std::size_t outcomes = 0;
  std::vector<double> table;

  double at(std::size_t row, std::size_t z) const { return table[row * outcomes + z]; }
};

/// A finite source X over distinct elements of GF(q^n), with optional side
/// information Z drawn through a conditional table.
class Source {
 public:
  /// Throws std::invalid_argument on duplicate support elements, mixed
  /// fields, a pmf whose size differs from the support, or a side-channel
  /// row that does not sum to 1 within 1e-9.
  Source(std::vector<FieldElement> support, info::Pmf probs, std::optional<SideChannel> side = std::nullopt);

  std::span<const FieldElement> support() const { return support_; }
  const info::Pmf& pmf() const { return probs_; }
  const std::optional<SideChannel>& side_channel() const { return side_; }
  bool has_side_channel() const { return side_.has_value(); }
  std::size_t size() const { return support_.size(); }

  /// Joint of (X, Z) with X on axis 0. Requires a side channel.
  info::JointPmf source_side_joint() const;

  Source with_side_channel(SideChannel side) const;

 private:
  std::vector<FieldElement> support_;
  info::Pmf probs_;
  std::optional<SideChannel> side_;
};

// Presets. The support is the first `size` field elements by index, and
// logarithms use base q of the field.

Source uniform_source(const Field& field, std::size_t size);
Source point_mass_source(const Field& field, std::uint64_t element_index);
/// Mass p on element 0 and 1 - p on element 1.
Source two_spike_source(const Field& field, double p);
/// P(i) proportional to r^i on the first `size` elements.
Source geometric_source(const Field& field, double r, std::size_t size);
/// Explicit probabilities on the first probs.size() elements.
Source explicit_source(const Field& field, std::vector<double> probs);
/// Explicit probabilities on given element indices.
Source explicit_source(const Field& field, std::span<const std::uint64_t> indices, std::vector<double> probs);

}  // namespace renyi::extractor
