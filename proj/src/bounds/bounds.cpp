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

#include "renyi/bounds/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "renyi/bounds/stirling.hpp"
#include "renyi/infomeasure/numeric.hpp"

namespace renyi::bounds {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double ln_q(std::uint32_t q) { return std::log(static_cast<double>(q)); }

// ln(t / ln(1 + t)) given ln t.
double log_ratio_over_log1p(double log_t) {
  if (log_t < -8.0) {
    const double t = std::exp(log_t);
    // t / ln(1+t) = 1 / (1 - t/2 + t^2/3 - t^3/4 + ...)
    return -std::log1p(-t / 2.0 + t * t / 3.0 - t * t * t / 4.0);
  }
  return log_t - std::log(info::softplus(log_t));
}

double sharp_log_term(const BoundInputs& in) {
  const double log_t = std::log(static_cast<double>(in.k)) + (in.m - in.entropy) * ln_q(in.q);
  return log_ratio_over_log1p(log_t) / ln_q(in.q);
}

void require_real_order(const BoundInputs& in) {
  if (!in.alpha.is_finite()) throw std::invalid_argument("bound needs a finite order alpha > 1");
  if (in.alpha.value() > in.k) throw std::invalid_argument("bound needs alpha <= k");
  if (std::ceil(in.alpha.value()) - 1 > kMaxStirlingOrder) throw std::invalid_argument("alpha too large");
}

}  // namespace

void BoundInputs::validate() const {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  if (!std::isfinite(m) || m < 1.0) throw std::invalid_argument("m must be >= 1");
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  if (!std::isfinite(entropy) || entropy < 0.0) throw std::invalid_argument("entropy must be finite and >= 0");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
}

double bound_integer_alpha(const BoundInputs& in) {
  in.validate();
  require_real_order(in);
  if (!in.alpha.is_integer() || in.alpha.value() < 2.0) {
    throw std::invalid_argument("bound_integer_alpha needs an integer alpha in [2, k]");
  }
  const auto a = static_cast<unsigned>(in.alpha.value());
  const double x = (in.m - in.entropy) * ln_q(in.q);
  std::vector<double> terms;
  for (unsigned l = 1; l <= a; ++l) terms.push_back(log_stirling2(a, l) + static_cast<double>(a - l) * x);
  return info::log_sum_exp(terms) / ((a - 1.0) * ln_q(in.q));
}

double bound_real_alpha(const BoundInputs& in) {
  in.validate();
  require_real_order(in);
  const double a = in.alpha.value();
  const auto c = static_cast<unsigned>(std::ceil(a));
  const double x = (in.m - in.entropy) * ln_q(in.q);
  std::vector<double> terms;
  for (unsigned l = 1; l + 1 <= c; ++l) {
    terms.push_back(std::log(static_cast<double>(l)) + log_stirling2(c - 1, l) + (a - l) * x);
  }
  for (unsigned l = 1; l <= c; ++l) {
    const double ls = log_stirling2(c - 1, l - 1);
    if (ls == kNegInf) continue;
    terms.push_back(ls + static_cast<double>(c - l) * x);
  }
  return info::log_sum_exp(terms) / ((a - 1.0) * ln_q(in.q));
}

double bound_real_alpha_simplified(const BoundInputs& in) {
  in.validate();
  require_real_order(in);
  const double a = in.alpha.value();
  const auto c = static_cast<unsigned>(std::ceil(a));
  const double x = (in.m - in.entropy) * ln_q(in.q);
  const bool below = in.m <= in.entropy;
  std::vector<double> terms;
  for (unsigned l = 1; l <= c; ++l) {
    const double exponent = below ? a - l : static_cast<double>(c) - l;
    terms.push_back(log_stirling2(c, l) + exponent * x);
  }
  return info::log_sum_exp(terms) / ((a - 1.0) * ln_q(in.q));
}

double dk_bound_simple(const BoundInputs& in) {
  in.validate();
  const double k = in.k;
  return std::exp(std::log(k * k / (2.0 * (k - 1.0) * ln_q(in.q))) + (in.m - in.entropy) * ln_q(in.q));
}

double dk_bound_sharp(const BoundInputs& in) {
  in.validate();
  const double k = in.k;
  return k / (k - 1.0) * sharp_log_term(in);
}

double bound_alpha_above_k(const BoundInputs& in) {
  in.validate();
  if (!in.alpha.is_finite() || in.alpha.value() <= in.k) {
    throw std::invalid_argument("bound_alpha_above_k needs a finite alpha > k");
  }
  const double a = in.alpha.value();
  const double k = in.k;
  return (a - k) * in.m / (k * (a - 1.0)) + a / (a - 1.0) * sharp_log_term(in);
}

double bound_infty(const BoundInputs& in) {
  in.validate();
  return in.m / in.k + sharp_log_term(in);
}

double gamma_fn(double y) {
  if (!(y >= 1.0) || !std::isfinite(y)) throw std::invalid_argument("gamma is defined for finite y >= 1");
  if (y == 1.0) return 0.0;
  auto forward = [](double x) { return x == 0.0 ? 1.0 : x / std::log1p(x); };
  double lo = 0.0;
  double hi = std::max(4.0, y * std::log(y + 1.0) * 4.0);
  while (forward(hi) < y) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (forward(mid) < y) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-15 * hi) break;
  }
  return 0.5 * (lo + hi);
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::thm3_1:
      return "thm3.1";
    case Regime::corollary:
      return "corollary";
    case Regime::thm4_2:
      return "thm4.2";
    case Regime::sharp_gamma:
      return "sharp-gamma";
    case Regime::lhl_tv:
      return "lhl-tv";
    case Regime::lhl_kl:
      return "lhl-kl";
  }
  return "?";
}

Regime regime_from_string(std::string_view name) {
  for (Regime r : {Regime::thm3_1, Regime::corollary, Regime::thm4_2, Regime::sharp_gamma, Regime::lhl_tv,
                   Regime::lhl_kl}) {
    if (to_string(r) == name) return r;
  }
  throw std::invalid_argument("unknown regime '" + std::string(name) + "'");
}

double m_threshold(Regime regime, std::uint32_t q, double order, double entropy, double epsilon) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (!std::isfinite(entropy)) throw std::invalid_argument("entropy must be finite");
  const double lq = ln_q(q);
  switch (regime) {
    case Regime::thm3_1: {
      if (!(order > 1.0)) throw std::invalid_argument("thm3.1 threshold needs alpha > 1");
      return entropy - std::log(order * order / (2.0 * epsilon * (order - 1.0) * lq)) / lq;
    }
    case Regime::corollary: {
      if (!(order > 1.0) || order > 2.0) throw std::invalid_argument("corollary threshold needs alpha in (1, 2]");
      return entropy - std::log(1.0 / (epsilon * (order - 1.0) * lq)) / ((order - 1.0) * lq);
    }
    case Regime::thm4_2: {
      if (!(order >= 2.0)) throw std::invalid_argument("thm4.2 threshold needs k >= 2");
      return entropy - std::log(order / (2.0 * epsilon * lq)) / lq;
    }
    case Regime::sharp_gamma: {
      if (!(order >= 2.0)) throw std::invalid_argument("sharp-gamma threshold needs k >= 2");
      const double y = std::pow(static_cast<double>(q), epsilon * (order - 1.0) / order);
      return entropy + std::log(gamma_fn(y) / order) / lq;
    }
    case Regime::lhl_tv:
    case Regime::lhl_kl:
      return entropy - std::log(1.0 / epsilon) / lq;
  }
  throw std::logic_error("unhandled regime");
}

double threshold_conclusion(Regime regime, std::uint32_t q, double m, std::uint32_t k, double epsilon) {
  switch (regime) {
    case Regime::thm3_1:
    case Regime::corollary:
    case Regime::sharp_gamma:
      return epsilon;
    case Regime::thm4_2:
      return m / k + epsilon;
    case Regime::lhl_tv:
      return std::sqrt(epsilon) / 2.0;
    case Regime::lhl_kl:
      return epsilon / ln_q(q);
  }
  throw std::logic_error("unhandled regime");
}

double bucket_bound(std::uint32_t k, double m, std::uint32_t q, double subset_size) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  if (!(subset_size >= 1.0)) throw std::invalid_argument("subset size must be >= 1");
  const double lq = ln_q(q);
  const double log_k = std::log(static_cast<double>(k));
  const double numerator = std::exp(log_k + m / k * lq);
  return numerator / info::softplus(log_k + m * lq - std::log(subset_size));
}

BoundReport BoundReport::compare(std::string name, const BoundInputs& inputs, double bound, double empirical) {
  BoundReport r;
  r.name = std::move(name);
  r.inputs = inputs;
  r.bound = bound;
  r.empirical = empirical;
  r.applicable = true;
  r.satisfied = empirical <= bound + kVerdictSlack;
  r.slack = bound - empirical;
  return r;
}

BoundReport BoundReport::inapplicable(std::string name, const BoundInputs& inputs, double bound, std::string note) {
  BoundReport r;
  r.name = std::move(name);
  r.inputs = inputs;
  r.bound = bound;
  r.applicable = false;
  r.satisfied = true;
  r.slack = std::numeric_limits<double>::quiet_NaN();
  r.note = std::move(note);
  return r;
}

}  // namespace renyi::bounds
