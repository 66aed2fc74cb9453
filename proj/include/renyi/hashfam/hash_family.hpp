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
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "renyi/hashfam/field.hpp"

namespace renyi::hashfam {

enum class FamilyKind {
  /// x -> first m coefficients of s_0 + s_1 x + ... + s_{k-1} x^{k-1}.
  polynomial,
  /// The seed is a full truth table X -> Z_q^m.
  full_table,
  /// One seed, every input maps to 0^m. Not universal; used as a negative
  /// control by certification.
  constant,
};

std::string_view to_string(FamilyKind kind);
FamilyKind family_kind_from_string(std::string_view name);

/// A seeded function family S x GF(q^n) -> Z_q^m with seeds 0..size-1.
///
/// Outputs are packed as sum_i u_i q^i for the q-ary string (u_0..u_{m-1}).
/// For the polynomial kind a seed decodes base q^n into (s_0, ..., s_{k-1})
/// with s_0 least significant. For the full-table kind the seed decodes
/// base q^m into the table entries for x = 0, 1, ..., q^n - 1 (entry for
/// x = 0 least significant).
class HashFamily {
 public:
  static HashFamily polynomial(std::shared_ptr<const Field> field, std::uint32_t k, std::uint32_t m);
  static HashFamily full_table(std::shared_ptr<const Field> field, std::uint32_t k, std::uint32_t m);
  static HashFamily constant(std::shared_ptr<const Field> field, std::uint32_t k, std::uint32_t m);
  static HashFamily make(FamilyKind kind, std::shared_ptr<const Field> field, std::uint32_t k, std::uint32_t m);

  FamilyKind kind() const { return kind_; }
  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  std::uint32_t q() const { return field_->q(); }
  std::uint32_t k() const { return k_; }
  std::uint32_t m() const { return m_; }
  std::uint64_t seed_space_size() const { return seeds_; }
  std::uint32_t domain_size() const { return field_->order(); }
  std::uint32_t output_size() const { return outputs_; }

  /// Packed output for a packed input index. Unchecked.
  std::uint32_t evaluate_index(std::uint64_t seed, std::uint32_t x) const {
    switch (kind_) {
      case FamilyKind::polynomial: {
        std::uint32_t acc = 0;
        for (std::uint32_t i = k_; i-- > 0;) {
          const auto coeff = static_cast<std::uint32_t>((seed / coeff_place_[i]) % field_->order());
          acc = field_->add(field_->mul(acc, x), coeff);
        }
        return acc % outputs_;
      }
      case FamilyKind::full_table:
        return static_cast<std::uint32_t>((seed / table_place_[x]) % outputs_);
      case FamilyKind::constant:
        return 0;
    }
    return 0;
  }

  /// Checked evaluation returning the q-ary output string (u_0, ..., u_{m-1}).
  std::vector<std::uint32_t> evaluate(std::uint64_t seed, const FieldElement& x) const;
  /// Checked evaluation on packed indices.
  std::uint32_t evaluate_checked(std::uint64_t seed, std::uint32_t x) const;

  /// Decoded polynomial coefficients for a seed (polynomial kind only).
  std::vector<FieldElement> seed_coefficients(std::uint64_t seed) const;

  std::vector<std::uint32_t> unpack_output(std::uint32_t packed) const;

  std::string describe() const;

 private:
  HashFamily(FamilyKind kind, std::shared_ptr<const Field> field, std::uint32_t k, std::uint32_t m);

  FamilyKind kind_;
  std::shared_ptr<const Field> field_;
  std::uint32_t k_;
  std::uint32_t m_;
  std::uint32_t outputs_ = 1;
  std::uint64_t seeds_ = 1;
  std::vector<std::uint64_t> coeff_place_;  // (q^n)^i
  std::vector<std::uint64_t> table_place_;  // (q^m)^x
};

}  // namespace renyi::hashfam
