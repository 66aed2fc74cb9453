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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "renyi/bounds/bounds.hpp"
#include "renyi/bounds/stirling.hpp"
#include "renyi/extractor/bucket.hpp"
#include "renyi/extractor/extraction.hpp"
#include "renyi/hashfam/universality.hpp"
#include "renyi/infomeasure/measures.hpp"

using namespace renyi;
using bounds::BoundInputs;
using bounds::Regime;
using extractor::ExtractionResult;
using extractor::Source;
using hashfam::Field;
using hashfam::HashFamily;
using info::Alpha;

namespace {

constexpr double kSlack = 1e-9;
constexpr double kIdentityTol = 1e-12;
constexpr std::uint64_t kBudget = 200'000'000;

struct Outcome {
  bool pass = true;
  std::string detail;
  int checks = 0;
  int failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      pass = false;
      if (first_failure.empty()) first_failure = what;
    }
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

BoundInputs inputs(std::uint32_t q, double m, std::uint32_t k, Alpha a, double h, double eps = 0.1) {
  BoundInputs in;
  in.q = q;
  in.m = m;
  in.k = k;
  in.alpha = a;
  in.entropy = h;
  in.epsilon = eps;
  return in;
}

const std::vector<double> kGridAlphas = {1.25, 1.5, 2.0, 2.5, 3.0};
const std::vector<double> kEpsilons = {0.1, 0.01};

// A fixed non-uniform 8-point pmf.
const std::vector<double> kExplicit8 = {0.3, 0.2, 0.15, 0.1, 0.1, 0.07, 0.05, 0.03};

struct NamedSource {
  std::string name;
  Source source;
};

std::vector<NamedSource> grid_sources(const Field& f) {
  return {{"uniform", extractor::uniform_source(f, 8)},
          {"two-spike(0.75)", extractor::two_spike_source(f, 0.75)},
          {"explicit8", extractor::explicit_source(f, kExplicit8)}};
}

// Binary side channel with two distinct conditional rows, alternating over
// the support.
Source with_binary_side(const Source& s, double a, double b) {
  extractor::SideChannel side;
  side.outcomes = 2;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double p = i % 2 == 0 ? a : b;
    side.table.push_back(p);
    side.table.push_back(1.0 - p);
  }
  return s.with_side_channel(side);
}

struct GridPoint {
  std::string label;
  HashFamily family;
  ExtractionResult result;
};

std::vector<GridPoint> grid_points(bool side) {
  const auto field = Field::create(2, 3);
  std::vector<GridPoint> out;
  for (std::uint32_t k : {2u, 3u}) {
    for (std::uint32_t m : {1u, 2u}) {
      const auto h = HashFamily::polynomial(field, k, m);
      for (const auto& ns : grid_sources(*field)) {
        const Source src = side ? with_binary_side(ns.source, 0.9, 0.2) : ns.source;
        out.push_back({h.describe() + " " + ns.name, h, extractor::extract_joint(h, src, {kBudget, 1})});
      }
    }
  }
  return out;
}

// Entropy feeding the bounds: H_a(X), or H_a(X|Z) with side information.
double source_entropy(const ExtractionResult& r, Alpha a) {
  return r.has_side_channel() ? r.source_conditional_entropy(a) : r.source_entropy(a);
}

// Dominance of the real-alpha bound over the exact joint divergence.
void check_dominance(const std::vector<GridPoint>& points, Outcome& o, double& worst) {
  for (const auto& p : points) {
    for (double av : kGridAlphas) {
      if (av > p.family.k()) continue;
      const Alpha a = Alpha::finite(av);
      const double d = info::joint_divergence_from_uniform(p.result.joint(), a);
      const double b = bounds::bound_real_alpha(
          inputs(2, p.family.m(), p.family.k(), a, source_entropy(p.result, a)));
      worst = std::min(worst, b - d);
      o.check(d <= b + kSlack, p.label + " alpha=" + a.to_string());
    }
  }
}

// Threshold premise => conclusion, counting how many premises held.
void check_thresholds(const std::vector<GridPoint>& points, Outcome& o, int& applicable) {
  for (const auto& p : points) {
    const double m = p.family.m();
    for (double eps : kEpsilons) {
      for (double av : kGridAlphas) {
        if (av > p.family.k()) continue;
        const Alpha a = Alpha::finite(av);
        const double h = source_entropy(p.result, a);
        const double d = info::joint_divergence_from_uniform(p.result.joint(), a);
        const double kl = info::joint_divergence_from_uniform(p.result.joint(), Alpha::one());
        std::vector<Regime> regimes;
        if (a.is_integer()) regimes.push_back(Regime::thm3_1);
        if (av <= 2.0) regimes.push_back(Regime::corollary);
        for (Regime r : regimes) {
          if (m > bounds::m_threshold(r, 2, av, h, eps)) continue;
          ++applicable;
          const std::string what = p.label + " " + std::string(bounds::to_string(r)) + " alpha=" + a.to_string() +
                                   " eps=" + fmt("%g", eps);
          o.check(d <= eps + kSlack, what);
          o.check(kl <= eps + kSlack, what + " (kl)");
        }
      }
    }
  }
}

// Non-vacuous companion grid: GF(2^6), k = 2, near-uniform sources whose
// entropy leaves room below the thresholds.
std::vector<GridPoint> wide_points(bool side) {
  const auto field = Field::create(2, 6);
  std::vector<GridPoint> out;
  for (std::uint32_t m : {1u, 2u}) {
    const auto h = HashFamily::polynomial(field, 2, m);
    for (const auto& [name, src] : std::vector<std::pair<std::string, Source>>{
             {"uniform64", extractor::uniform_source(*field, 64)},
             {"geometric(0.98)", extractor::geometric_source(*field, 0.98, 64)}}) {
      const Source s = side ? with_binary_side(src, 0.6, 0.4) : src;
      out.push_back({h.describe() + " " + name, h, extractor::extract_joint(h, s, {kBudget, 1})});
    }
  }
  return out;
}

bool certified(const HashFamily& h) { return hashfam::certify_k_star(h, kBudget).k_star_universal(); }

Outcome ac1(const std::vector<GridPoint>& grid) {
  Outcome o;
  for (const auto& p : grid) o.check(certified(p.family), p.label + " certification");
  double worst = INFINITY;
  check_dominance(grid, o, worst);
  o.detail = std::to_string(o.checks) + " checks, min slack " + fmt("%.4g", worst);
  return o;
}

Outcome ac2(const std::vector<GridPoint>& grid, const std::vector<GridPoint>& wide) {
  Outcome o;
  int stated = 0;
  int extra = 0;
  check_thresholds(grid, o, stated);
  for (const auto& p : wide) o.check(certified(p.family), p.label + " certification");
  check_thresholds(wide, o, extra);
  o.check(extra > 0, "companion grid has applicable thresholds");
  o.detail = std::to_string(stated) + " premises hold on the n=3 grid, " + std::to_string(extra) +
             " on the n=6 companion grid; " + std::to_string(o.checks) + " checks";
  return o;
}

Outcome ac3(const std::vector<GridPoint>& grid, const std::vector<GridPoint>& wide) {
  Outcome o;
  int applicable = 0;
  auto run = [&](const std::vector<GridPoint>& points) {
    for (const auto& p : points) {
      const std::uint32_t k = p.family.k();
      const double m = p.family.m();
      const double hk = p.result.source_entropy(Alpha::finite(k));
      std::vector<Alpha> alphas = {Alpha::infinity()};
      if (k == 2) alphas = {Alpha::finite(3), Alpha::finite(5), Alpha::infinity()};
      for (const Alpha& a : alphas) {
        const double d = info::conditional_divergence(p.result.joint(), a);
        const auto in = inputs(2, m, k, a, hk);
        const double b = a.is_infinity() ? bounds::bound_infty(in) : bounds::bound_alpha_above_k(in);
        o.check(d <= b + kSlack, p.label + " alpha=" + a.to_string());
      }
      const double dinf = info::conditional_divergence(p.result.joint(), Alpha::infinity());
      for (double eps : kEpsilons) {
        if (m > hk - std::log2(k / (2 * eps * std::log(2.0)))) continue;
        ++applicable;
        o.check(dinf <= m / k + eps + kSlack, p.label + " D_inf threshold eps=" + fmt("%g", eps));
      }
    }
  };
  run(grid);
  const int stated = applicable;
  run(wide);
  o.check(applicable > stated, "companion grid has applicable thresholds");
  o.detail = std::to_string(o.checks) + " checks, threshold premise held " + std::to_string(stated) +
             " times on the n=3 grid and " + std::to_string(applicable - stated) + " on the n=6 grid";
  return o;
}

Outcome ac4(const std::vector<GridPoint>& side_grid, const std::vector<GridPoint>& side_wide) {
  Outcome o;
  double worst = INFINITY;
  for (const auto& p : side_grid) o.check(p.result.joint().rank() == 3, p.label + " joint over (u,s,z)");
  check_dominance(side_grid, o, worst);
  int stated = 0;
  int extra = 0;
  check_thresholds(side_grid, o, stated);
  check_thresholds(side_wide, o, extra);
  o.check(extra > 0, "companion grid has applicable thresholds");
  o.detail = std::to_string(o.checks) + " checks, min dominance slack " + fmt("%.4g", worst) + ", thresholds held " +
             std::to_string(stated) + " (n=3) and " + std::to_string(extra) + " (n=6) times";
  return o;
}

// sum_j j^k e^{-lambda} lambda^j / j!.
double poisson_moment(unsigned k, double lambda) {
  double sum = 0;
  double log_w = -lambda;
  for (unsigned j = 1; j < 5000; ++j) {
    log_w += std::log(lambda) - std::log(static_cast<double>(j));
    const double term = std::exp(log_w + k * std::log(static_cast<double>(j)));
    sum += term;
    if (j > lambda + 10 && term < 1e-20 * sum) break;
  }
  return sum;
}

Outcome ac5() {
  Outcome o;
  double worst = 0;
  for (unsigned k = 2; k <= 8; ++k) {
    for (double lambda : {0.5, 1.0, 2.0, 8.0}) {
      double touchard = 0;
      for (unsigned l = 1; l <= k; ++l) touchard += bounds::stirling2(k, l).convert_to<double>() * std::pow(lambda, l);
      const double rel = std::abs(touchard / poisson_moment(k, lambda) - 1.0);
      worst = std::max(worst, rel);
      const std::string what = "k=" + std::to_string(k) + " lambda=" + fmt("%g", lambda);
      o.check(rel <= 1e-9, what + " moment");
      const auto in = inputs(2, 3, k, Alpha::finite(k), 3 + std::log2(lambda));
      o.check(bounds::bound_integer_alpha(in) <= bounds::dk_bound_simple(in), what + " integer <= simple");
    }
  }
  o.detail = std::to_string(o.checks) + " checks, max relative moment error " + fmt("%.2g", worst);
  return o;
}

std::uint64_t count_partitions(unsigned k, unsigned l) {
  std::uint64_t count = 0;
  std::vector<unsigned> rgs;
  std::function<void(unsigned)> rec = [&](unsigned blocks) {
    if (rgs.size() == k) {
      count += blocks == l ? 1 : 0;
      return;
    }
    for (unsigned b = 0; b <= blocks && b < l; ++b) {
      rgs.push_back(b);
      rec(std::max(blocks, b + 1));
      rgs.pop_back();
    }
  };
  rec(0);
  return count;
}

Outcome ac6() {
  Outcome o;
  for (unsigned k = 0; k <= 7; ++k) {
    for (unsigned l = 0; l <= k; ++l) {
      o.check(bounds::stirling2(k, l) == count_partitions(k, l), "S(" + std::to_string(k) + "," + std::to_string(l) + ")");
    }
  }
  double worst = 0;
  for (std::uint32_t q : {2u, 3u, 5u}) {
    for (unsigned a = 2; a <= 10; ++a) {
      for (double h : {0.0, 1.0, 3.0, 6.0, 10.0, 25.0}) {
        const auto in = inputs(q, 4, 10, Alpha::finite(a), h);
        const double diff = std::abs(bounds::bound_real_alpha(in) - bounds::bound_integer_alpha(in));
        worst = std::max(worst, diff);
        o.check(diff <= 1e-12, "real vs integer a=" + std::to_string(a));
      }
    }
  }
  o.detail = std::to_string(o.checks) + " checks, max |real - integer| " + fmt("%.2g", worst);
  return o;
}

Outcome ac7() {
  Outcome o;
  double worst = 0;
  for (double x : {0.1, 1.0, 2.0, 10.0, 100.0}) {
    const double rel = std::abs(bounds::gamma_fn(x / std::log1p(x)) / x - 1.0);
    worst = std::max(worst, rel);
    o.check(rel <= 1e-10, "gamma round trip x=" + fmt("%g", x));
  }
  double worst_excess = -INFINITY;
  for (std::uint32_t q : {2u, 3u}) {
    for (std::uint32_t k = 2; k <= 6; ++k) {
      for (double eps : {0.5, 0.1, 0.01}) {
        const double h = 16;
        const double y = std::pow(static_cast<double>(q), eps * (k - 1.0) / k);
        const double m = h + std::log(bounds::gamma_fn(y) / k) / std::log(static_cast<double>(q));
        const double v = bounds::dk_bound_sharp(inputs(q, m, k, Alpha::finite(k), h));
        worst_excess = std::max(worst_excess, v - eps);
        o.check(v <= eps + kSlack, "sharp at threshold k=" + std::to_string(k));
      }
    }
  }
  o.detail = std::to_string(o.checks) + " checks, max round-trip error " + fmt("%.2g", worst) +
             ", max sharp - eps " + fmt("%.2g", worst_excess);
  return o;
}

double iid_max_load(unsigned balls, unsigned bins) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < balls; ++i) total *= bins;
  double acc = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<unsigned> load(bins, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < balls; ++i) {
      ++load[c % bins];
      c /= bins;
    }
    acc += *std::max_element(load.begin(), load.end());
  }
  return acc / static_cast<double>(total);
}

Outcome ac8() {
  Outcome o;
  const auto poly = HashFamily::polynomial(Field::create(2, 3), 2, 2);
  std::vector<std::uint32_t> all(8);
  std::iota(all.begin(), all.end(), 0u);
  const auto est = extractor::expected_max_bucket(poly, all, extractor::ExactMode{}, kBudget);
  const double bound = bounds::bucket_bound(2, 2, 2, 8);
  o.check(est.exact && est.seeds_used == 64, "exact over 64 seeds");
  o.check(est.mean <= bound + kSlack, "poly bucket <= bound");
  o.check(est.mean <= 2.0 * 2.0 / std::log(3.0) + kSlack, "poly bucket <= 2*2/ln 3");

  const auto table = HashFamily::full_table(Field::create(2, 2), 2, 2);
  std::vector<std::uint32_t> four = {0, 1, 2, 3};
  const auto t = extractor::expected_max_bucket(table, four, extractor::ExactMode{}, kBudget);
  const double oracle = iid_max_load(4, 4);
  o.check(t.mean == oracle, "full-table equals enumeration");
  o.detail = "polynomial E[max] " + fmt("%.6g", est.mean) + " <= bound " + fmt("%.6g", bound) +
             "; full-table " + fmt("%.6g", t.mean) + " vs enumeration " + fmt("%.6g", oracle);
  return o;
}

Outcome ac9() {
  Outcome o;
  const auto field = Field::create(2, 3);
  for (std::uint32_t k : {2u, 3u}) {
    for (std::uint32_t m : {1u, 2u}) {
      const auto h = HashFamily::polynomial(field, k, m);
      o.check(certified(h), h.describe());
    }
  }
  for (std::uint32_t m : {1u, 2u}) {
    const auto h = HashFamily::polynomial(Field::create(2, 6), 2, m);
    o.check(certified(h), h.describe());
  }
  const auto c = hashfam::certify_k_star(HashFamily::constant(field, 3, 1), kBudget);
  o.check(!c.k_star_universal() && c.first_failure() == 2u, "constant fails at l=2");

  // Every l-tuple of distinct inputs collides with probability exactly
  // q^{-m(l-1)} under the full-table family.
  for (std::uint32_t m : {1u, 2u}) {
    const auto t = HashFamily::full_table(Field::create(2, 2), 3, m);
    for (std::uint32_t l = 2; l <= 3; ++l) {
      const auto r = hashfam::verify_universality(t, l, kBudget);
      const std::uint64_t denom = std::uint64_t{1} << (m * (l - 1));
      o.check(r.max_collision == hashfam::CollisionRatio{1, denom}, t.describe() + " max");
      for (std::uint32_t a = 0; a < 4; ++a) {
        for (std::uint32_t b = a + 1; b < 4; ++b) {
          for (std::uint32_t c3 = (l == 3 ? b + 1 : 0); c3 < (l == 3 ? 4u : 1u); ++c3) {
            std::uint64_t hits = 0;
            for (std::uint64_t s = 0; s < t.seed_space_size(); ++s) {
              const auto u = t.evaluate_index(s, a);
              hits += (t.evaluate_index(s, b) == u && (l == 2 || t.evaluate_index(s, c3) == u)) ? 1 : 0;
            }
            o.check(hits * denom == t.seed_space_size(), t.describe() + " tuple");
          }
        }
      }
    }
  }
  o.detail = std::to_string(o.checks) + " checks";
  return o;
}

Outcome ac10(const std::vector<const std::vector<GridPoint>*>& sets) {
  Outcome o;
  const std::vector<Alpha> finite = {Alpha::finite(1.25), Alpha::finite(1.5), Alpha::finite(2),
                                     Alpha::finite(2.5),  Alpha::finite(3),   Alpha::finite(5)};
  double worst = 0;
  int joints = 0;
  for (const auto* set : sets) {
    for (const auto& p : *set) {
      ++joints;
      const auto& j = p.result.joint();
      const double m = p.family.m();
      double prev_joint = info::joint_divergence_from_uniform(j, Alpha::one());
      double prev_cond = info::conditional_divergence(j, Alpha::one());
      auto step = [&](const Alpha& a) {
        const double dj = info::joint_divergence_from_uniform(j, a);
        const double dc = info::conditional_divergence(j, a);
        o.check(dj >= prev_joint - kIdentityTol, p.label + " joint monotone " + a.to_string());
        o.check(dc >= prev_cond - kIdentityTol, p.label + " conditional monotone " + a.to_string());
        o.check(dc <= dj + kIdentityTol, p.label + " conditional <= joint " + a.to_string());
        prev_joint = dj;
        prev_cond = dc;
        return dc;
      };
      for (const Alpha& a : finite) {
        const double dc = step(a);
        const double tilde = info::tilde_conditional_entropy(j, a);
        worst = std::max(worst, std::abs(dc - (m - tilde)));
        o.check(std::abs(dc - (m - tilde)) <= kIdentityTol, p.label + " tilde identity " + a.to_string());
        const auto pu = j.marginal(0);
        const double du = info::renyi_divergence(pu, info::Pmf::uniform(pu.size(), pu.base_q()), a);
        worst = std::max(worst, std::abs(du - (m - info::renyi_entropy(pu, a))));
        o.check(std::abs(du - (m - info::renyi_entropy(pu, a))) <= kIdentityTol, p.label + " uniform identity");
      }
      step(Alpha::infinity());
    }
  }
  o.detail = std::to_string(joints) + " joints, " + std::to_string(o.checks) + " checks, max identity error " +
             fmt("%.2g", worst);
  return o;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const auto grid = grid_points(false);
  Outcome r1 = ac1(grid);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r1.check(seconds < 60.0, "runtime");
  r1.detail += ", " + fmt("%.2f", seconds) + " s single-worker";
  const auto wide = wide_points(false);
  const auto side_grid = grid_points(true);
  const auto side_wide = wide_points(true);

  const std::vector<std::pair<std::string, Outcome>> results = {
      {"AC1 bound dominance", r1},
      {"AC2 threshold soundness", ac2(grid, wide)},
      {"AC3 conditional regime", ac3(grid, wide)},
      {"AC4 side information", ac4(side_grid, side_wide)},
      {"AC5 Poisson moments", ac5()},
      {"AC6 Stirling consistency", ac6()},
      {"AC7 gamma inverse", ac7()},
      {"AC8 largest bucket", ac8()},
      {"AC9 universality certification", ac9()},
      {"AC10 structural invariants", ac10({&grid, &wide, &side_grid, &side_wide})},
  };
  bool all = true;
  for (const auto& [name, o] : results) {
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    if (!o.pass) {
      std::printf("     %d of %d checks failed, first: %s\n", o.failures, o.checks, o.first_failure.c_str());
    }
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
