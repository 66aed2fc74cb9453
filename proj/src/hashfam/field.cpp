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

#include "renyi/hashfam/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace renyi::hashfam {

namespace {

using Poly = std::vector<std::uint64_t>;

constexpr std::uint32_t kMaxPrime = 1u << 16;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t q) {
  // q is prime: a^(q-2)
  std::uint64_t result = 1, base = a % q, e = q - 2;
  while (e > 0) {
    if (e & 1) result = result * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return result;
}

// r := r mod m, m monic or not (leading coefficient invertible).
void poly_mod(Poly& r, const Poly& m, std::uint64_t q) {
  trim(r);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inverse_mod(m.back(), q);
  while (r.size() >= m.size()) {
    const std::uint64_t factor = r.back() * lead_inv % q;
    const std::size_t shift = r.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      r[shift + i] = (r[shift + i] + (q - factor) * m[i]) % q;
    }
    trim(r);
  }
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t q) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = (c[i + j] + a[i] * b[j]) % q;
    }
  }
  poly_mod(c, m, q);
  return c;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t q) {
  Poly result{1};
  poly_mod(base, m, q);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, q);
    e >>= 1;
    if (e > 0) base = poly_mulmod(base, base, m, q);
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t q) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    poly_mod(a, b, q);
    std::swap(a, b);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

void check_q_n(std::uint32_t q, std::uint32_t n) {
  if (q < 2 || q >= kMaxPrime || !is_prime(q)) {
    throw std::invalid_argument("alphabet size q=" + std::to_string(q) + " is not a supported prime");
  }
  if (n < 1 || n > kMaxDegree) {
    throw std::invalid_argument("extension degree n=" + std::to_string(n) + " outside [1, 16]");
  }
}

// Schoolbook multiply of two coefficient vectors of length n, reduced
// modulo the monic modulus of the field.
std::vector<std::uint32_t> mul_coeffs(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                                      const FieldParams& f) {
  const std::uint64_t q = f.q;
  const std::size_t n = f.n;
  std::vector<std::uint64_t> c(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      c[i + j] = (c[i + j] + std::uint64_t{a[i]} * b[j]) % q;
    }
  }
  for (std::size_t d = 2 * n - 1; d-- > n;) {
    const std::uint64_t factor = c[d];
    if (factor == 0) continue;
    for (std::size_t i = 0; i <= n; ++i) {
      c[d - n + i] = (c[d - n + i] + (q - factor) * f.modulus[i]) % q;
    }
  }
  std::vector<std::uint32_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(c[i]);
  return out;
}

std::vector<std::uint32_t> digits_of(std::uint64_t index, std::uint32_t q, std::uint32_t n) {
  std::vector<std::uint32_t> d(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    d[i] = static_cast<std::uint32_t>(index % q);
    index /= q;
  }
  return d;
}

std::uint64_t index_from_digits(std::span<const std::uint32_t> d, std::uint32_t q) {
  std::uint64_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * q + d[i];
  return v;
}

}  // namespace

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t q) {
  if (monic.size() < 2 || monic.back() != 1) {
    throw std::invalid_argument("is_irreducible expects a monic polynomial of degree >= 1");
  }
  const std::uint64_t n = monic.size() - 1;
  if (n == 1) return true;
  Poly f(monic.begin(), monic.end());
  if (f[0] == 0) return false;

  // x^(q^i) mod f for i = 0..n
  std::vector<Poly> frob;
  frob.reserve(n + 1);
  frob.push_back(Poly{0, 1});
  for (std::uint64_t i = 1; i <= n; ++i) frob.push_back(poly_powmod(frob.back(), q, f, q));

  auto minus_x = [q](Poly p) {
    if (p.size() < 2) p.resize(2, 0);
    p[1] = (p[1] + q - 1) % q;
    trim(p);
    return p;
  };
  if (!minus_x(frob[n]).empty()) return false;
  for (std::uint64_t p : prime_factors(n)) {
    Poly g = poly_gcd(f, minus_x(frob[n / p]), q);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t q, std::uint32_t n) {
  check_q_n(q, n);
  std::vector<std::uint32_t> poly(n + 1, 0);
  poly[n] = 1;
  // Odometer with the constant term as the most significant digit.
  while (true) {
    if (is_irreducible(poly, q)) return poly;
    std::size_t pos = n;
    while (pos-- > 0) {
      if (++poly[pos] < q) break;
      poly[pos] = 0;
    }
    if (pos == static_cast<std::size_t>(-1)) break;
  }
  throw std::logic_error("no irreducible polynomial found");
}

FieldParams FieldParams::make(std::uint32_t q, std::uint32_t n, std::vector<std::uint32_t> modulus) {
  check_q_n(q, n);
  if (modulus.size() != n + 1 || modulus.back() != 1) {
    throw std::invalid_argument("field modulus must be monic of degree n");
  }
  if (std::any_of(modulus.begin(), modulus.end(), [q](std::uint32_t c) { return c >= q; })) {
    throw std::invalid_argument("field modulus coefficient outside [0, q)");
  }
  if (!is_irreducible(modulus, q)) throw std::invalid_argument("field modulus is reducible");
  return FieldParams{q, n, std::move(modulus)};
}

FieldParams FieldParams::canonical(std::uint32_t q, std::uint32_t n) {
  return FieldParams{q, n, find_irreducible(q, n)};
}

std::uint64_t FieldParams::order() const {
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < n; ++i) v *= q;
  return v;
}

// --- FieldElement --------------------------------------------------------

FieldElement::FieldElement(std::shared_ptr<const FieldParams> params, std::vector<std::uint32_t> coeffs)
    : params_(std::move(params)), coeffs_(std::move(coeffs)) {
  if (!params_) throw std::invalid_argument("field element without field");
  if (coeffs_.size() != params_->n) throw std::invalid_argument("field element has wrong length");
  for (std::uint32_t c : coeffs_) {
    if (c >= params_->q) throw std::invalid_argument("field element coefficient outside [0, q)");
  }
}

FieldElement FieldElement::zero(std::shared_ptr<const FieldParams> params) {
  const std::uint32_t n = params->n;
  return FieldElement(std::move(params), std::vector<std::uint32_t>(n, 0));
}

FieldElement FieldElement::one(std::shared_ptr<const FieldParams> params) {
  std::vector<std::uint32_t> c(params->n, 0);
  c[0] = 1;
  return FieldElement(std::move(params), std::move(c));
}

FieldElement FieldElement::from_index(std::shared_ptr<const FieldParams> params, std::uint64_t index) {
  if (index >= params->order()) throw std::out_of_range("field element index out of range");
  auto d = digits_of(index, params->q, params->n);
  return FieldElement(std::move(params), std::move(d));
}

std::uint64_t FieldElement::index() const { return index_from_digits(coeffs_, params_->q); }

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.coeffs_ == b.coeffs_ && (a.params_ == b.params_ || *a.params_ == *b.params_);
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.params_ptr() != b.params_ptr() && a.params() != b.params()) {
    throw std::invalid_argument("field elements belong to different fields");
  }
}

}  // namespace

FieldElement gf_add(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const std::uint32_t q = a.params().q;
  std::vector<std::uint32_t> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeffs()[i] + b.coeffs()[i]) % q;
  return FieldElement(a.params_ptr(), std::move(c));
}

FieldElement gf_neg(const FieldElement& a) {
  const std::uint32_t q = a.params().q;
  std::vector<std::uint32_t> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (q - a.coeffs()[i]) % q;
  return FieldElement(a.params_ptr(), std::move(c));
}

FieldElement gf_mul(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.params_ptr(), mul_coeffs(a.coeffs(), b.coeffs(), a.params()));
}

FieldElement gf_pow(const FieldElement& a, std::uint64_t exponent) {
  FieldElement result = FieldElement::one(a.params_ptr());
  FieldElement base = a;
  while (exponent > 0) {
    if (exponent & 1) result = gf_mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = gf_mul(base, base);
  }
  return result;
}

// --- Field ---------------------------------------------------------------

Field::Field(FieldParams params) {
  params = FieldParams::make(params.q, params.n, std::move(params.modulus));
  const std::uint64_t order = params.order();
  if (order > kMaxFieldOrder) {
    throw std::invalid_argument("field order " + std::to_string(order) + " exceeds the table limit 2^20");
  }
  params_ = std::make_shared<const FieldParams>(std::move(params));
  order_ = static_cast<std::uint32_t>(order);

  const FieldParams& f = *params_;
  const std::uint64_t group = order - 1;
  exp_.assign(order, 0);
  log_.assign(order, 0);
  if (group == 1) {
    // GF(2): the multiplicative group is trivial.
    generator_ = 1;
    exp_[0] = 1;
    exp_[1] = 1;
    return;
  }

  const auto factors = prime_factors(group);
  auto pow_index = [&](std::uint64_t g, std::uint64_t e) {
    std::vector<std::uint32_t> result(f.n, 0);
    result[0] = 1;
    std::vector<std::uint32_t> base = digits_of(g, f.q, f.n);
    while (e > 0) {
      if (e & 1) result = mul_coeffs(result, base, f);
      e >>= 1;
      if (e > 0) base = mul_coeffs(base, base, f);
    }
    return index_from_digits(result, f.q);
  };
  for (std::uint64_t g = 2; g < order; ++g) {
    bool primitive = true;
    for (std::uint64_t p : factors) {
      if (pow_index(g, group / p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = static_cast<std::uint32_t>(g);
      break;
    }
  }
  if (generator_ == 0) throw std::logic_error("no primitive element found");

  const auto g_digits = digits_of(generator_, f.q, f.n);
  std::vector<std::uint32_t> cur(f.n, 0);
  cur[0] = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    const auto idx = static_cast<std::uint32_t>(index_from_digits(cur, f.q));
    exp_[i] = idx;
    log_[idx] = static_cast<std::uint32_t>(i);
    cur = mul_coeffs(cur, g_digits, f);
  }
  exp_[group] = exp_[0];
}

std::shared_ptr<const Field> Field::create(std::uint32_t q, std::uint32_t n) {
  return std::make_shared<const Field>(FieldParams::canonical(q, n));
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  const std::uint32_t q = params_->q;
  if (q == 2) return a ^ b;
  std::uint32_t result = 0, place = 1;
  for (std::uint32_t i = 0; i < params_->n; ++i) {
    const std::uint32_t d = (a % q + b % q) % q;
    result += d * place;
    place *= q;
    a /= q;
    b /= q;
  }
  return result;
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t exponent) const {
  if (exponent == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t e = (std::uint64_t{log_[a]} * (exponent % (order_ - 1))) % (order_ - 1);
  return exp_[e];
}

FieldElement Field::element(std::uint64_t index) const { return FieldElement::from_index(params_, index); }

std::uint32_t Field::index_of(const FieldElement& e) const {
  if (e.params_ptr() != params_ && e.params() != *params_) {
    throw std::invalid_argument("field element belongs to a different field");
  }
  return static_cast<std::uint32_t>(e.index());
}

}  // namespace renyi::hashfam
