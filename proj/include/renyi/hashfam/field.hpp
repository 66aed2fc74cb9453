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
#include <span>
#include <vector>

namespace renyi::hashfam {

/// 128-bit unsigned integer for overflow-free products of 64-bit counts.
__extension__ typedef unsigned __int128 u128;

/// Largest extension degree accepted anywhere in the library.
inline constexpr std::uint32_t kMaxDegree = 16;

/// Largest field order for which the table-driven `Field` is built.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t value);

/// Returns the lexicographically smallest monic irreducible polynomial of
/// degree `n` over Z_q. Coefficient vectors are compared constant term
/// first; the returned vector has length n + 1 and ends with the leading 1.
std::vector<std::uint32_t> find_irreducible(std::uint32_t q, std::uint32_t n);

/// Rabin irreducibility test for a monic polynomial over Z_q.
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t q);

/// Parameters of GF(q^n) = Z_q[x] / (modulus).
struct FieldParams {
  std::uint32_t q = 2;
  std::uint32_t n = 1;
  /// Length n + 1, coefficient of x^i at index i, monic.
  std::vector<std::uint32_t> modulus;

  /// Validates q, n and irreducibility of `modulus`.
  static FieldParams make(std::uint32_t q, std::uint32_t n, std::vector<std::uint32_t> modulus);
  /// Uses the canonical modulus from find_irreducible.
  static FieldParams canonical(std::uint32_t q, std::uint32_t n);

  std::uint64_t order() const;

  bool operator==(const FieldParams&) const = default;
};

/// An element of GF(q^n) as a coefficient vector over Z_q.
///
/// Elements remember the field they belong to; arithmetic between elements
/// of different fields throws std::invalid_argument.
class FieldElement {
 public:
  FieldElement(std::shared_ptr<const FieldParams> params, std::vector<std::uint32_t> coeffs);

  static FieldElement zero(std::shared_ptr<const FieldParams> params);
  static FieldElement one(std::shared_ptr<const FieldParams> params);
  /// Decodes the base-q positional index sum_i c_i q^i.
  static FieldElement from_index(std::shared_ptr<const FieldParams> params, std::uint64_t index);

  const FieldParams& params() const { return *params_; }
  const std::shared_ptr<const FieldParams>& params_ptr() const { return params_; }
  std::span<const std::uint32_t> coeffs() const { return coeffs_; }
  std::uint64_t index() const;
  bool is_zero() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  std::shared_ptr<const FieldParams> params_;
  std::vector<std::uint32_t> coeffs_;
};

// Schoolbook arithmetic on coefficient vectors. These are the reference
// route; `Field` below is the table-driven fast route used for hashing.
FieldElement gf_add(const FieldElement& a, const FieldElement& b);
FieldElement gf_neg(const FieldElement& a);
FieldElement gf_mul(const FieldElement& a, const FieldElement& b);
FieldElement gf_pow(const FieldElement& a, std::uint64_t exponent);

/// Table-driven GF(q^n) arithmetic on packed element indices.
///
/// An element index is sum_i c_i q^i, so the first m coefficients of an
/// element are its index modulo q^m. Multiplication goes through discrete
/// log / antilog tables with respect to a primitive element found at
/// construction.
class Field {
 public:
  explicit Field(FieldParams params);
  static std::shared_ptr<const Field> create(std::uint32_t q, std::uint32_t n);

  const FieldParams& params() const { return *params_; }
  const std::shared_ptr<const FieldParams>& params_ptr() const { return params_; }
  std::uint32_t q() const { return params_->q; }
  std::uint32_t degree() const { return params_->n; }
  std::uint32_t order() const { return order_; }
  std::uint32_t primitive_element() const { return generator_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = log_[a] + log_[b];
    if (e >= order_ - 1) e -= order_ - 1;
    return exp_[e];
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t exponent) const;

  FieldElement element(std::uint64_t index) const;
  /// Index of `e`; throws if `e` belongs to a different field.
  std::uint32_t index_of(const FieldElement& e) const;

 private:
  std::shared_ptr<const FieldParams> params_;
  std::uint32_t order_ = 0;
  std::uint32_t generator_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace renyi::hashfam
