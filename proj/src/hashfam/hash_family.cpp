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

#include "renyi/hashfam/hash_family.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace renyi::hashfam {

namespace {

constexpr std::uint64_t kMaxSeeds = std::uint64_t{1} << 62;

// a * b, or nullopt-style sentinel 0 on exceeding kMaxSeeds.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kMaxSeeds / a) return 0;
  return a * b;
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::polynomial:
      return "polynomial";
    case FamilyKind::full_table:
      return "full-table";
    case FamilyKind::constant:
      return "constant";
  }
  return "?";
}

FamilyKind family_kind_from_string(std::string_view name) {
  if (name == "polynomial") return FamilyKind::polynomial;
  if (name == "full-table") return FamilyKind::full_table;
  if (name == "constant") return FamilyKind::constant;
  throw std::invalid_argument("unknown family kind '" + std::string(name) + "'");
}

HashFamily::HashFamily(FamilyKind kind, std::shared_ptr<const Field> field, std::uint32_t k, std::uint32_t m)
    : kind_(kind), field_(std::move(field)), k_(k), m_(m) {
  if (!field_) throw std::invalid_argument("hash family without field");
  if (k_ < 2) throw std::invalid_argument("independence order k must be >= 2");
  if (m_ < 1) throw std::invalid_argument("output length m must be >= 1");
  const std::uint32_t q = field_->q();
  const std::uint32_t n = field_->degree();
  if (kind_ == FamilyKind::polynomial && m_ > n) {
    throw std::invalid_argument("polynomial family needs m <= n");
  }
  std::uint64_t outputs = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    outputs *= q;
    if (outputs > kMaxFieldOrder) throw std::invalid_argument("output alphabet q^m too large");
  }
  outputs_ = static_cast<std::uint32_t>(outputs);

  switch (kind_) {
    case FamilyKind::polynomial: {
      coeff_place_.assign(k_, 1);
      std::uint64_t place = 1;
      for (std::uint32_t i = 0; i < k_; ++i) {
        coeff_place_[i] = place;
        place = checked_mul(place, field_->order());
        if (place == 0) throw std::invalid_argument("seed space q^(n k) exceeds 2^62");
      }
      seeds_ = place;
      break;
    }
    case FamilyKind::full_table: {
      table_place_.assign(field_->order(), 1);
      std::uint64_t place = 1;
      for (std::uint32_t x = 0; x < field_->order(); ++x) {
        table_place_[x] = place;
        place = checked_mul(place, outputs_);
        if (place == 0) throw std::invalid_argument("seed space q^(m |X|) exceeds 2^62");
      }
      seeds_ = place;
      break;
    }
    case FamilyKind::constant:
      seeds_ = 1;
      break;
  }
}

HashFamily HashFamily::polynomial(std::shared_ptr<const Field> field, std::uint32_t k, std::uint32_t m) {
  return HashFamily(FamilyKind::polynomial, std::move(field), k, m);
}

HashFamily HashFamily::full_table(std::shared_ptr<const Field> field, std::uint32_t k, std::uint32_t m) {
  return HashFamily(FamilyKind::full_table, std::move(field), k, m);
}

HashFamily HashFamily::constant(std::shared_ptr<const Field> field, std::uint32_t k, std::uint32_t m) {
  return HashFamily(FamilyKind::constant, std::move(field), k, m);
}

HashFamily HashFamily::make(FamilyKind kind, std::shared_ptr<const Field> field, std::uint32_t k, std::uint32_t m) {
  return HashFamily(kind, std::move(field), k, m);
}

std::uint32_t HashFamily::evaluate_checked(std::uint64_t seed, std::uint32_t x) const {
  if (seed >= seeds_) throw std::out_of_range("seed index out of range");
  if (x >= field_->order()) throw std::out_of_range("input outside the field");
  return evaluate_index(seed, x);
}

std::vector<std::uint32_t> HashFamily::evaluate(std::uint64_t seed, const FieldElement& x) const {
  const std::uint32_t xi = field_->index_of(x);
  return unpack_output(evaluate_checked(seed, xi));
}

std::vector<FieldElement> HashFamily::seed_coefficients(std::uint64_t seed) const {
  if (kind_ != FamilyKind::polynomial) throw std::logic_error("seed coefficients exist only for polynomial families");
  if (seed >= seeds_) throw std::out_of_range("seed index out of range");
  std::vector<FieldElement> out;
  out.reserve(k_);
  for (std::uint32_t i = 0; i < k_; ++i) out.push_back(field_->element((seed / coeff_place_[i]) % field_->order()));
  return out;
}

std::vector<std::uint32_t> HashFamily::unpack_output(std::uint32_t packed) const {
  std::vector<std::uint32_t> digits(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    digits[i] = packed % field_->q();
    packed /= field_->q();
  }
  return digits;
}

std::string HashFamily::describe() const {
  std::ostringstream os;
  os << to_string(kind_) << "(q=" << q() << ", n=" << field_->degree() << ", k=" << k_ << ", m=" << m_ << ")";
  return os.str();
}

}  // namespace renyi::hashfam
