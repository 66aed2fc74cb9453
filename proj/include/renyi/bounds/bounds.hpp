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
#include <optional>
#include <string>
#include <string_view>

#include "renyi/infomeasure/alpha.hpp"

// Closed-form divergence bounds for leftover hashing with k*-universal
// families, all in base-q units. Each calculator takes the source entropy
// as a number: pass H_a(X) for plain extraction or H_a(X|Z) for extraction
// against side information; the formulas are identical.

namespace renyi::bounds {

using info::Alpha;

/// Slack allowed when comparing an exact quantity against a bound.
inline constexpr double kVerdictSlack = 1e-9;

struct BoundInputs {
  std::uint32_t q = 2;
  double m = 1.0;          // output length in q-ary symbols
  std::uint32_t k = 2;     // universality order
  Alpha alpha = Alpha::finite(2.0);
  double entropy = 0.0;    // H_a(X) or H_a(X|Z), q-ary units
  double epsilon = 0.1;

  /// Throws std::invalid_argument unless q >= 2, m >= 1, k >= 2,
  /// entropy >= 0 and finite, epsilon > 0.
  void validate() const;
};

/// (1/(a-1)) log_q sum_{l=1}^{a} S(a,l) q^{(a-l)(m-H)} for integer a in [2, k].
double bound_integer_alpha(const BoundInputs& in);

/// Bound on the joint a-divergence for real a in (1, k]:
///   (1/(a-1)) log_q [ sum_{l=1}^{c-1} l S(c-1,l) q^{(a-l)(m-H)}
///                   + sum_{l=1}^{c}   S(c-1,l-1) q^{(c-l)(m-H)} ],  c = ceil(a).
double bound_real_alpha(const BoundInputs& in);

/// Majorant of bound_real_alpha using S(c, l) with exponents (a-l) when
/// m <= H and (c-l) otherwise.
double bound_real_alpha_simplified(const BoundInputs& in);

/// k^2 / (2 q^{H-m} (k-1) ln q), from the exponential Poisson-moment bound.
double dk_bound_simple(const BoundInputs& in);

/// (k/(k-1)) log_q( t / ln(t+1) ), t = k q^{m-H}.
double dk_bound_sharp(const BoundInputs& in);

/// Conditional a-divergence bound for a in (k, inf); `entropy` is H_k.
double bound_alpha_above_k(const BoundInputs& in);

/// Conditional inf-divergence bound m/k + log_q(t / ln(t+1)); `entropy` is H_k.
double bound_infty(const BoundInputs& in);

/// Inverse of x -> x / ln(x+1) on y >= 1; gamma(1) = 0.
double gamma_fn(double y);

enum class Regime {
  thm3_1,       // integer a: H_a - log_q(a^2 / (2 eps (a-1) ln q))  =>  D_a <= eps
  corollary,    // a in (1,2]: H_a - (1/(a-1)) log_q(1/(eps (a-1) ln q))  =>  D_a <= eps
  thm4_2,       // H_k - log_q(k / (2 eps ln q))  =>  conditional D_inf <= m/k + eps
  sharp_gamma,  // H_k + log_q(gamma(q^{eps (k-1)/k}) / k)  =>  D_k <= eps
  lhl_tv,       // H_inf - log_q(1/eps)  =>  TV <= sqrt(eps)/2
  lhl_kl,       // H_2 - log_q(1/eps)  =>  KL <= eps / ln q
};

std::string_view to_string(Regime regime);
Regime regime_from_string(std::string_view name);

/// Largest admissible real m for a regime. `order` is a for thm3_1 and
/// corollary, k for thm4_2 and sharp_gamma, ignored for the baselines.
double m_threshold(Regime regime, std::uint32_t q, double order, double entropy, double epsilon);

/// Right-hand side the regime guarantees once m is below its threshold.
double threshold_conclusion(Regime regime, std::uint32_t q, double m, std::uint32_t k, double epsilon);

/// Expected largest bucket bound k q^{m/k} / ln(k q^m / |A| + 1).
double bucket_bound(std::uint32_t k, double m, std::uint32_t q, double subset_size);

/// One evaluated bound, optionally compared with an exact quantity.
struct BoundReport {
  std::string name;
  BoundInputs inputs;
  double bound = 0.0;
  std::optional<double> empirical;
  /// False when a threshold premise does not hold; such reports carry no
  /// empirical value and count as satisfied.
  bool applicable = true;
  bool satisfied = true;
  double slack = 0.0;  // bound - empirical
  std::string note;

  static BoundReport compare(std::string name, const BoundInputs& inputs, double bound, double empirical);
  static BoundReport inapplicable(std::string name, const BoundInputs& inputs, double bound, std::string note);
};

}  // namespace renyi::bounds
