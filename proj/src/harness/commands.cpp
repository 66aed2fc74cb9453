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

#include "renyi/harness/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "renyi/bounds/bounds.hpp"
#include "renyi/extractor/bucket.hpp"
#include "renyi/extractor/extraction.hpp"
#include "renyi/infomeasure/measures.hpp"

namespace renyi::harness {

using bounds::BoundInputs;
using bounds::BoundReport;
using bounds::Regime;
using extractor::DivergenceRow;

namespace {

const DivergenceRow& row_for(const std::vector<DivergenceRow>& rows, const Alpha& a) {
  for (const auto& r : rows) {
    if (r.alpha == a) return r;
  }
  throw std::logic_error("missing divergence row for alpha=" + a.to_string());
}

void add_unique(std::vector<Alpha>& v, const Alpha& a) {
  if (std::find(v.begin(), v.end(), a) == v.end()) v.push_back(a);
}

std::vector<Alpha> sorted_unique(std::vector<Alpha> v) {
  std::vector<Alpha> out;
  for (const auto& a : v) add_unique(out, a);
  std::stable_sort(out.begin(), out.end(), [](const Alpha& a, const Alpha& b) { return a.value() < b.value(); });
  return out;
}

std::string fmt(double v) { return csv_number(v); }

// Threshold check: evaluate the conclusion only when m lies under the
// regime's admissible length.
BoundReport threshold_report(const std::string& name, Regime regime, BoundInputs in, double order,
                             double empirical) {
  const double m_star = bounds::m_threshold(regime, in.q, order, in.entropy, in.epsilon);
  const double rhs = bounds::threshold_conclusion(regime, in.q, in.m, in.k, in.epsilon);
  if (in.m > m_star) {
    return BoundReport::inapplicable(name, in, rhs, "m=" + fmt(in.m) + " above threshold " + fmt(m_star));
  }
  auto r = BoundReport::compare(name, in, rhs, empirical);
  r.note = "threshold " + fmt(m_star);
  return r;
}

struct EntropyLookup {
  const std::vector<EntropyRow>& rows;
  bool side;
  double at(const Alpha& a) const {
    for (const auto& r : rows) {
      if (r.alpha == a) {
        if (!side) return r.entropy;
        if (!r.given_side) throw std::logic_error("conditional entropy unavailable for alpha=" + a.to_string());
        return *r.given_side;
      }
    }
    throw std::logic_error("missing entropy row for alpha=" + a.to_string());
  }
};

// Bound reports for one joint: plain (u, s) against H(X), or (u, s, z)
// against H(X|Z) with the "side/" prefix.
void evaluate_bounds(const ExperimentConfig& config, const hashfam::HashFamily& family,
                     const std::vector<DivergenceRow>& divs, const EntropyLookup& entropy, const std::string& prefix,
                     std::vector<BoundReport>& out) {
  const std::uint32_t q = family.q();
  const std::uint32_t k = family.k();
  const double m = family.m();
  const Alpha ak = Alpha::finite(k);
  auto inputs = [&](const Alpha& a, double h, double eps = 0.1) {
    BoundInputs in;
    in.q = q;
    in.m = m;
    in.k = k;
    in.alpha = a;
    in.entropy = h;
    in.epsilon = eps;
    return in;
  };

  for (const auto& a : config.alphas) {
    if (a.is_one()) continue;
    const auto& d = row_for(divs, a);
    if (a.is_finite() && a.value() <= k) {
      if (!config.wants("real-alpha")) continue;
      const auto in = inputs(a, entropy.at(a));
      if (a.is_integer()) {
        out.push_back(BoundReport::compare(prefix + "integer-alpha", in, bounds::bound_integer_alpha(in), d.joint));
      }
      out.push_back(BoundReport::compare(prefix + "real-alpha", in, bounds::bound_real_alpha(in), d.joint));
      out.push_back(BoundReport::compare(prefix + "real-alpha-simplified", in,
                                         bounds::bound_real_alpha_simplified(in), d.joint));
      if (a == ak) {
        out.push_back(BoundReport::compare(prefix + "dk-simple", in, bounds::dk_bound_simple(in), d.joint));
        out.push_back(BoundReport::compare(prefix + "dk-sharp", in, bounds::dk_bound_sharp(in), d.joint));
      }
    } else {
      if (!config.wants("above-k")) continue;
      const auto in = inputs(a, entropy.at(ak));
      if (a.is_infinity()) {
        out.push_back(BoundReport::compare(prefix + "infty", in, bounds::bound_infty(in), d.conditional));
      } else {
        out.push_back(BoundReport::compare(prefix + "above-k", in, bounds::bound_alpha_above_k(in), d.conditional));
      }
    }
  }

  const Alpha inf = Alpha::infinity();
  if (config.wants("infty-relation")) {
    const double dk = row_for(divs, ak).conditional;
    const double dinf = row_for(divs, inf).conditional;
    const auto in = inputs(inf, entropy.at(ak));
    out.push_back(BoundReport::compare(prefix + "infty-relation", in, (k - 1.0) / k * dk + m / k, dinf));
  }

  if (config.wants("thresholds")) {
    for (double eps : config.epsilons) {
      for (const auto& a : config.alphas) {
        if (!a.is_finite() || a.value() > k) continue;
        const auto in = inputs(a, entropy.at(a), eps);
        const double dj = row_for(divs, a).joint;
        if (a.is_integer()) {
          out.push_back(threshold_report(prefix + "threshold/thm3.1", Regime::thm3_1, in, a.value(), dj));
        }
        if (a.value() <= 2.0) {
          out.push_back(threshold_report(prefix + "threshold/corollary", Regime::corollary, in, a.value(), dj));
        }
      }
      const auto in = inputs(ak, entropy.at(ak), eps);
      out.push_back(threshold_report(prefix + "threshold/thm4.2", Regime::thm4_2, inputs(inf, entropy.at(ak), eps),
                                     k, row_for(divs, inf).conditional));
      out.push_back(threshold_report(prefix + "threshold/sharp-gamma", Regime::sharp_gamma, in, k,
                                     row_for(divs, ak).joint));
    }
  }

  if (config.wants("baselines") && prefix.empty()) {
    for (double eps : config.epsilons) {
      const auto& d1 = row_for(divs, Alpha::one());
      out.push_back(threshold_report("baseline/lhl-tv", Regime::lhl_tv, inputs(inf, entropy.at(inf), eps), 0.0,
                                     d1.tv));
      out.push_back(threshold_report("baseline/lhl-kl", Regime::lhl_kl,
                                     inputs(Alpha::finite(2.0), entropy.at(Alpha::finite(2.0)), eps), 0.0, d1.kl));
    }
  }
}

BucketRow bucket_row(const ExperimentConfig& config, std::uint32_t k, std::uint32_t m, std::size_t size,
                     std::uint64_t rng_seed, const RunOptions& options) {
  const auto family = build_family(config.family, k, m);
  if (size > family.domain_size()) {
    throw ConfigError("bucket.subset_sizes: " + std::to_string(size) + " exceeds the field order");
  }
  std::vector<std::uint32_t> subset(size);
  for (std::size_t i = 0; i < size; ++i) subset[i] = static_cast<std::uint32_t>(i);

  const auto& b = *config.bucket;
  bool exact = b.mode == "exact";
  if (b.mode == "auto") {
    const hashfam::u128 cost = static_cast<hashfam::u128>(family.seed_space_size()) * size;
    exact = cost <= options.budget;
  }
  extractor::BucketMode mode = extractor::ExactMode{};
  if (!exact) mode = extractor::SampledMode{b.samples, rng_seed};
  const auto est = extractor::expected_max_bucket(family, subset, mode, options.budget);

  BucketRow row;
  row.k = k;
  row.m = m;
  row.subset_size = size;
  row.mode = est.exact ? "exact" : "sampled";
  row.empirical = est.mean;
  row.stderr_mean = est.stderr_mean;
  row.seeds_used = est.seeds_used;
  row.bound = bounds::bucket_bound(k, m, family.q(), static_cast<double>(size));
  row.satisfied = row.empirical <= row.bound + bounds::kVerdictSlack;
  return row;
}

}  // namespace

VerifyReport run_verify(const ExperimentConfig& config, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.config = config_to_json(config);
  report.budget = options.budget;
  const auto family = build_family(config.family);
  report.family = family.describe();
  report.q = family.q();
  report.certification = hashfam::certify_k_star(family, options.budget);
  if (!report.certified()) return report;

  const auto source = build_source(config.source, family.field());
  const auto result = extractor::extract_joint(family, source, {options.budget, options.workers});

  const Alpha ak = Alpha::finite(family.k());
  std::vector<Alpha> needed = config.alphas;
  for (const auto& a : {Alpha::one(), Alpha::finite(2.0), ak, Alpha::infinity()}) add_unique(needed, a);
  needed = sorted_unique(needed);

  for (const auto& a : needed) {
    EntropyRow row;
    row.alpha = a;
    row.entropy = result.source_entropy(a);
    if (result.has_side_channel() && a.is_finite()) row.given_side = result.source_conditional_entropy(a);
    report.entropies.push_back(row);
  }
  report.divergences = extractor::divergence_table(result.output_seed_joint(), needed);
  evaluate_bounds(config, family, report.divergences, {report.entropies, false}, "", report.bounds);
  if (result.has_side_channel()) {
    report.side_divergences = extractor::divergence_table(result.joint(), needed);
    evaluate_bounds(config, family, report.side_divergences, {report.entropies, true}, "side/", report.bounds);
  }
  if (config.bucket) report.buckets = run_bucket(config, options);
  if (options.timing) {
    report.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

std::vector<BucketRow> run_bucket(const ExperimentConfig& config, const RunOptions& options) {
  if (!config.bucket) throw ConfigError("config has no bucket section");
  std::vector<BucketRow> rows;
  std::uint64_t index = 0;
  for (auto k : config.bucket->ks) {
    for (auto m : config.bucket->ms) {
      for (auto size : config.bucket->subset_sizes) {
        rows.push_back(bucket_row(config, k, m, size, config.rng_seed + index, options));
        ++index;
      }
    }
  }
  return rows;
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& config, const RunOptions& options) {
  if (!config.sweep) throw ConfigError("config has no sweep section");
  std::vector<SweepRow> rows;
  const std::uint32_t k = config.family.k;
  const Alpha ak = Alpha::finite(k);
  for (auto m : config.sweep->ms) {
    const auto family = build_family(config.family, k, m);
    const auto verdict = hashfam::certify_k_star(family, options.budget);
    if (!verdict.k_star_universal()) {
      throw ConfigError("family " + family.describe() + " is not k*-universal");
    }
    const auto source = build_source(config.source, family.field());
    const auto result = extractor::extract_joint(family, source, {options.budget, options.workers});
    const bool side = result.has_side_channel();
    auto entropy = [&](const Alpha& a) {
      return side ? result.source_conditional_entropy(a) : result.source_entropy(a);
    };
    const info::JointPmf joint = side ? result.joint() : result.output_seed_joint();
    for (const auto& a : config.sweep->alphas) {
      BoundInputs in;
      in.q = family.q();
      in.m = m;
      in.k = k;
      in.alpha = a;
      SweepRow row;
      row.alpha = a;
      row.m = m;
      if (a.is_finite() && a.value() <= k) {
        in.entropy = entropy(a);
        row.measure = "joint";
        row.empirical = info::joint_divergence_from_uniform(joint, a);
        row.bound = bounds::bound_real_alpha(in);
      } else {
        in.entropy = entropy(ak);
        row.measure = "conditional";
        row.empirical = info::conditional_divergence(joint, a);
        row.bound = a.is_infinity() ? bounds::bound_infty(in) : bounds::bound_alpha_above_k(in);
      }
      row.entropy = in.entropy;
      row.satisfied = row.empirical <= row.bound + bounds::kVerdictSlack;
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<std::pair<std::string, double>> evaluate_bound_query(const BoundQuery& qy) {
  auto need = [&](const auto& opt, const char* flag) {
    if (!opt) throw ConfigError("bound '" + qy.name + "' needs --" + flag);
    return *opt;
  };
  const std::string& n = qy.name;
  if (n == "gamma") return {{"gamma", bounds::gamma_fn(need(qy.y, "y"))}};
  if (n == "bucket") {
    return {{"bucket", bounds::bucket_bound(need(qy.k, "k"), need(qy.m, "m"), need(qy.q, "q"), need(qy.subset_size, "A"))}};
  }
  static const std::vector<std::string> calculators = {"integer-alpha", "real-alpha", "simplified", "dk-simple",
                                                       "dk-sharp",      "above-k",    "infty"};
  if (std::find(calculators.begin(), calculators.end(), n) != calculators.end()) {
    BoundInputs in;
    in.q = need(qy.q, "q");
    in.m = need(qy.m, "m");
    in.k = need(qy.k, "k");
    in.entropy = need(qy.entropy, "H");
    if (n == "dk-simple" || n == "dk-sharp") {
      in.alpha = Alpha::finite(in.k);
    } else if (n == "infty") {
      in.alpha = Alpha::infinity();
    } else {
      in.alpha = need(qy.alpha, "alpha");
    }
    if (qy.epsilon) in.epsilon = *qy.epsilon;
    in.validate();
    double v = 0.0;
    if (n == "integer-alpha") v = bounds::bound_integer_alpha(in);
    if (n == "real-alpha") v = bounds::bound_real_alpha(in);
    if (n == "simplified") v = bounds::bound_real_alpha_simplified(in);
    if (n == "dk-simple") v = bounds::dk_bound_simple(in);
    if (n == "dk-sharp") v = bounds::dk_bound_sharp(in);
    if (n == "above-k") v = bounds::bound_alpha_above_k(in);
    if (n == "infty") v = bounds::bound_infty(in);
    return {{"bound", v}};
  }
  Regime regime;
  try {
    regime = bounds::regime_from_string(n);
  } catch (const std::invalid_argument&) {
    throw ConfigError("unknown bound or regime '" + n + "'");
  }
  const std::uint32_t q = need(qy.q, "q");
  const double h = need(qy.entropy, "H");
  const double eps = need(qy.epsilon, "eps");
  double order = 0.0;
  if (regime == Regime::thm3_1 || regime == Regime::corollary) {
    const Alpha a = need(qy.alpha, "alpha");
    if (!a.is_finite()) throw ConfigError("regime '" + n + "' needs a finite --alpha");
    order = a.value();
  } else if (regime == Regime::thm4_2 || regime == Regime::sharp_gamma) {
    order = need(qy.k, "k");
  }
  const double t = bounds::m_threshold(regime, q, order, h, eps);
  std::vector<std::pair<std::string, double>> lines = {{"threshold", t}, {"floor", std::floor(t)}};
  return lines;
}

namespace {

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

struct CommonFlags {
  std::string config;
  std::string out;
  std::string units = "qary";
  std::optional<std::uint64_t> budget;
  unsigned workers = 1;
  std::optional<std::uint64_t> rng_seed;
  bool timing = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config, "experiment config (JSON)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--out", f.out, "output file (report JSON or CSV)");
  cmd->add_option("--budget", f.budget, "work budget (hash evaluations)")->check(CLI::PositiveNumber);
  cmd->add_option("--workers", f.workers, "extraction worker threads")->check(CLI::Range(1u, 256u));
  cmd->add_option("--rng-seed", f.rng_seed, "seed for sampled bucket estimates");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rényi-divergence leftover hashing toolkit", kToolName};
  app.set_version_flag("--version", std::string(kToolName) + " " + RENYI_EXTRACT_VERSION);
  app.require_subcommand(1);

  CommonFlags verify_flags, sweep_flags, bucket_flags;
  auto* verify = app.add_subcommand("verify", "certify, extract and check bounds for one config");
  add_common(verify, verify_flags);
  verify->add_option("--units", verify_flags.units, "printed units: qary or bits");
  verify->add_flag("--timing", verify_flags.timing, "record wall-clock time in the report");
  auto* sweep = app.add_subcommand("sweep", "bound-vs-empirical CSV over an (alpha, m) grid");
  add_common(sweep, sweep_flags);
  auto* bucket = app.add_subcommand("bucket", "expected largest bucket against its bound");
  add_common(bucket, bucket_flags);

  BoundQuery query;
  std::string regime;
  std::string alpha_text;
  std::string bound_units = "qary";
  std::uint32_t q_flag = 0, k_flag = 0;
  double m_flag = 0, h_flag = 0, eps_flag = 0, a_flag = 0, y_flag = 0;
  auto* bound = app.add_subcommand("bound", "evaluate a closed-form bound or threshold");
  bound->add_option("--name", query.name, "bound name");
  bound->add_option("--regime", regime, "threshold regime");
  auto* oq = bound->add_option("--q", q_flag, "field characteristic")->check(CLI::Range(2u, 65535u));
  auto* om = bound->add_option("--m", m_flag, "output length");
  auto* ok = bound->add_option("--k", k_flag, "universality order")->check(CLI::Range(2u, 64u));
  auto* oa = bound->add_option("--alpha", alpha_text, "order (number or inf)");
  auto* oh = bound->add_option("--H", h_flag, "source entropy, base q");
  auto* oe = bound->add_option("--eps", eps_flag, "epsilon");
  auto* oA = bound->add_option("--A", a_flag, "subset size");
  auto* oy = bound->add_option("--y", y_flag, "argument of gamma");
  bound->add_option("--units", bound_units, "printed units: qary or bits");

  std::string probs_text;
  std::vector<std::string> entropy_alphas;
  std::uint32_t entropy_q = 2;
  std::string entropy_units = "qary";
  auto* entropy = app.add_subcommand("entropy", "Rényi entropies of an explicit pmf");
  entropy->add_option("--probs", probs_text, "comma-separated probabilities")->required();
  entropy->add_option("--q", entropy_q, "logarithm base")->check(CLI::Range(2u, 65535u));
  entropy->add_option("--alpha", entropy_alphas, "orders (repeatable)")->required();
  entropy->add_option("--units", entropy_units, "printed units: qary or bits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  auto line = [&](const std::string& label, double v) {
    out << label << " " << csv_number(v) << "\n";
  };

  try {
    if (bound->parsed()) {
      if (!query.name.empty() && !regime.empty()) throw ConfigError("give --name or --regime, not both");
      if (query.name.empty()) query.name = regime;
      if (query.name.empty()) throw ConfigError("bound needs --name or --regime");
      if (oq->count()) query.q = q_flag;
      if (om->count()) query.m = m_flag;
      if (ok->count()) query.k = k_flag;
      if (oa->count()) query.alpha = Alpha::parse(alpha_text);
      if (oh->count()) query.entropy = h_flag;
      if (oe->count()) query.epsilon = eps_flag;
      if (oA->count()) query.subset_size = a_flag;
      if (oy->count()) query.y = y_flag;
      const Units units = units_from_string(bound_units);
      const bool unitless = query.name == "gamma" || query.name == "bucket" || query.name == "lhl-tv";
      const double scale =
          units == Units::bits && !unitless ? std::log2(static_cast<double>(query.q.value_or(2))) : 1.0;
      for (const auto& [label, v] : evaluate_bound_query(query)) line(label, v * scale);
      return kExitOk;
    }

    if (entropy->parsed()) {
      std::vector<double> probs;
      std::stringstream ss(probs_text);
      std::string item;
      while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0;
        try {
          v = std::stod(item, &used);
        } catch (const std::exception&) {
          throw ConfigError("--probs: cannot parse '" + item + "'");
        }
        if (used != item.size()) throw ConfigError("--probs: cannot parse '" + item + "'");
        probs.push_back(v);
      }
      const info::Pmf pmf(probs, entropy_q);
      const double scale = units_from_string(entropy_units) == Units::bits ? std::log2(double(entropy_q)) : 1.0;
      for (const auto& text : entropy_alphas) {
        const Alpha a = Alpha::parse(text);
        line("H_" + a.to_string(), info::renyi_entropy(pmf, a) * scale);
      }
      return kExitOk;
    }

    CommonFlags& f = verify->parsed() ? verify_flags : sweep->parsed() ? sweep_flags : bucket_flags;
    ExperimentConfig config = load_config(f.config);
    if (f.rng_seed) config.rng_seed = *f.rng_seed;
    RunOptions options;
    options.budget = resolve_budget(f.budget, config);
    options.workers = f.workers;
    options.timing = f.timing;

    if (verify->parsed()) {
      const Units units = units_from_string(f.units);
      const auto report = run_verify(config, options);
      out << summary_text(report, units);
      const std::string path = !f.out.empty() ? f.out : config.output.report.value_or("");
      if (!path.empty()) write_text(path, to_json(report).dump(2) + "\n");
      return report.all_satisfied() ? kExitOk : kExitViolation;
    }
    if (sweep->parsed()) {
      const auto rows = run_sweep(config, options);
      const std::string csv = sweep_csv(rows);
      const std::string path = !f.out.empty() ? f.out : config.output.csv.value_or("");
      if (path.empty()) {
        out << csv;
      } else {
        write_text(path, csv);
      }
      const bool ok_all = std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.satisfied; });
      return ok_all ? kExitOk : kExitViolation;
    }
    const auto rows = run_bucket(config, options);
    const std::string csv = bucket_csv(rows);
    const std::string path = !f.out.empty() ? f.out : config.output.csv.value_or("");
    if (path.empty()) {
      out << csv;
    } else {
      write_text(path, csv);
    }
    const bool ok_all = std::all_of(rows.begin(), rows.end(), [](const BucketRow& r) { return r.satisfied; });
    return ok_all ? kExitOk : kExitViolation;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hashfam::BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace renyi::harness
