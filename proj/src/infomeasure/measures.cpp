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

#include "renyi/infomeasure/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "renyi/infomeasure/numeric.hpp"

namespace renyi::info {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double entropy_raw(std::span<const double> p, Alpha alpha, double ln_q) {
  switch (alpha.kind()) {
    case Alpha::Kind::one: {
      CompensatedSum s;
      for (double v : p) {
        if (v > 0.0) s.add(-v * std::log(v));
      }
      return s.value() / ln_q;
    }
    case Alpha::Kind::infinity: {
      const double mx = *std::max_element(p.begin(), p.end());
      return -std::log(mx) / ln_q;
    }
    case Alpha::Kind::finite:
      break;
  }
  const double a = alpha.value();
  CompensatedSum s;
  for (double v : p) {
    if (v > 0.0) s.add(std::pow(v, a));
  }
  return std::log(s.value()) / ((1.0 - a) * ln_q);
}

// D_a(p || r) on raw spans of equal length.
double divergence_raw(std::span<const double> p, std::span<const double> r, Alpha alpha, double ln_q) {
  switch (alpha.kind()) {
    case Alpha::Kind::one: {
      CompensatedSum s;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0.0) continue;
        if (r[i] <= 0.0) return kInf;
        s.add(p[i] * (std::log(p[i]) - std::log(r[i])));
      }
      return s.value() / ln_q;
    }
    case Alpha::Kind::infinity: {
      double best = -kInf;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0.0) continue;
        if (r[i] <= 0.0) return kInf;
        best = std::max(best, std::log(p[i]) - std::log(r[i]));
      }
      return best / ln_q;
    }
    case Alpha::Kind::finite:
      break;
  }
  const double a = alpha.value();
  CompensatedSum s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (r[i] <= 0.0) return kInf;
    s.add(std::exp(a * std::log(p[i]) + (1.0 - a) * std::log(r[i])));
  }
  return std::log(s.value()) / ((a - 1.0) * ln_q);
}

// D_a(row || uniform on row.size() points), row normalized.
double divergence_from_uniform_raw(std::span<const double> row, Alpha alpha, double ln_q) {
  const double n = static_cast<double>(row.size());
  const double log_n = std::log(n);
  switch (alpha.kind()) {
    case Alpha::Kind::one: {
      CompensatedSum s;
      for (double v : row) {
        if (v > 0.0) s.add(v * (std::log(v) + log_n));
      }
      return s.value() / ln_q;
    }
    case Alpha::Kind::infinity: {
      const double mx = *std::max_element(row.begin(), row.end());
      return (std::log(mx) + log_n) / ln_q;
    }
    case Alpha::Kind::finite:
      break;
  }
  const double a = alpha.value();
  CompensatedSum s;
  for (double v : row) {
    if (v > 0.0) s.add(std::exp(a * std::log(v) + (a - 1.0) * log_n));
  }
  return std::log(s.value()) / ((a - 1.0) * ln_q);
}

void require_compatible(const Pmf& p, const Pmf& r) {
  if (p.size() != r.size()) throw std::invalid_argument("pmfs have different support sizes");
  if (p.base_q() != r.base_q()) throw std::invalid_argument("pmfs use different logarithm bases");
}

void require_finite_order(Alpha alpha) {
  if (!alpha.is_finite()) throw std::invalid_argument("this conditional entropy is defined for 1 < alpha < inf only");
}

double ln_base(std::uint32_t q) { return std::log(static_cast<double>(q)); }

// Calls fn(weight, normalized row of axis-0 values) for every trailing
// index with positive weight.
template <typename Fn>
void for_each_conditional(const JointPmf& joint, Fn&& fn) {
  const std::size_t rows = joint.axis_size(0);
  const std::size_t rest = joint.size() / rows;
  const auto probs = joint.probs();
  std::vector<double> column(rows);
  for (std::size_t s = 0; s < rest; ++s) {
    CompensatedSum w;
    for (std::size_t u = 0; u < rows; ++u) {
      column[u] = probs[u * rest + s];
      w.add(column[u]);
    }
    const double weight = w.value();
    if (weight <= 0.0) continue;
    for (double& v : column) v /= weight;
    fn(weight, std::span<const double>(column));
  }
}

}  // namespace

double renyi_entropy(const Pmf& p, Alpha alpha) { return entropy_raw(p.probs(), alpha, ln_base(p.base_q())); }

double renyi_divergence(const Pmf& p, const Pmf& r, Alpha alpha) {
  require_compatible(p, r);
  return divergence_raw(p.probs(), r.probs(), alpha, ln_base(p.base_q()));
}

double kl_divergence(const Pmf& p, const Pmf& r) { return renyi_divergence(p, r, Alpha::one()); }

double tv_distance(const Pmf& p, const Pmf& r) {
  require_compatible(p, r);
  CompensatedSum s;
  for (std::size_t i = 0; i < p.size(); ++i) s.add(std::abs(p[i] - r[i]));
  return 0.5 * s.value();
}

double conditional_renyi_entropy(const JointPmf& joint, Alpha alpha) {
  require_finite_order(alpha);
  const double a = alpha.value();
  CompensatedSum total;
  for_each_conditional(joint, [&](double weight, std::span<const double> row) {
    CompensatedSum s;
    for (double v : row) {
      if (v > 0.0) s.add(std::pow(v, a));
    }
    total.add(weight * s.value());
  });
  return std::log(total.value()) / ((1.0 - a) * ln_base(joint.base_q()));
}

double tilde_conditional_entropy(const JointPmf& joint, Alpha alpha) {
  require_finite_order(alpha);
  const double ln_q = ln_base(joint.base_q());
  CompensatedSum total;
  for_each_conditional(joint, [&](double weight, std::span<const double> row) {
    total.add(weight * entropy_raw(row, alpha, ln_q));
  });
  return total.value();
}

double conditional_divergence(const JointPmf& joint, Alpha alpha) {
  const double ln_q = ln_base(joint.base_q());
  CompensatedSum total;
  for_each_conditional(joint, [&](double weight, std::span<const double> row) {
    total.add(weight * divergence_from_uniform_raw(row, alpha, ln_q));
  });
  return total.value();
}

namespace {

std::vector<double> uniform_times_rest(const JointPmf& joint) {
  const std::size_t rows = joint.axis_size(0);
  const Pmf rest = joint.trailing_marginal();
  std::vector<double> ref(joint.size());
  const double inv_rows = 1.0 / static_cast<double>(rows);
  for (std::size_t u = 0; u < rows; ++u) {
    for (std::size_t s = 0; s < rest.size(); ++s) ref[u * rest.size() + s] = inv_rows * rest[s];
  }
  return ref;
}

}  // namespace

double joint_divergence_from_uniform(const JointPmf& joint, Alpha alpha) {
  const auto ref = uniform_times_rest(joint);
  return divergence_raw(joint.probs(), ref, alpha, ln_base(joint.base_q()));
}

double joint_tv_from_uniform(const JointPmf& joint) {
  const auto ref = uniform_times_rest(joint);
  CompensatedSum s;
  const auto p = joint.probs();
  for (std::size_t i = 0; i < p.size(); ++i) s.add(std::abs(p[i] - ref[i]));
  return 0.5 * s.value();
}

}  // namespace renyi::info
