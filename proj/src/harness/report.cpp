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

#include "renyi/harness/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace renyi::harness {

using nlohmann::json;

namespace {

json inputs_to_json(const bounds::BoundInputs& in) {
  return {{"q", in.q},
          {"m", number_to_json(in.m)},
          {"k", in.k},
          {"alpha", alpha_to_json(in.alpha)},
          {"entropy", number_to_json(in.entropy)},
          {"epsilon", number_to_json(in.epsilon)}};
}

json divergence_rows(const std::vector<extractor::DivergenceRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"alpha", alpha_to_json(r.alpha)},
                   {"joint", number_to_json(r.joint)},
                   {"conditional", number_to_json(r.conditional)},
                   {"tv", number_to_json(r.tv)},
                   {"kl", number_to_json(r.kl)}});
  }
  return out;
}

// TV distances are unitless.
bool is_tv_bound(const std::string& name) { return name.find("lhl-tv") != std::string::npos; }

bool has_epsilon(const std::string& name) {
  return name.find("threshold/") != std::string::npos || name.find("baseline/") != std::string::npos;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace


Units units_from_string(const std::string& name) {
  if (name == "qary" || name == "q") return Units::base_q;
  if (name == "bits") return Units::bits;
  throw std::invalid_argument("unknown units '" + name + "' (expected qary or bits)");
}

bool VerifyReport::all_satisfied() const {
  if (!certified()) return false;
  for (const auto& b : bounds) {
    if (!b.satisfied) return false;
  }
  for (const auto& b : buckets) {
    if (!b.satisfied) return false;
  }
  return true;
}

json number_to_json(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

json to_json(const VerifyReport& r) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = {{"name", kToolName}, {"version", RENYI_EXTRACT_VERSION}};
  j["config"] = r.config;
  j["family"] = r.family;
  j["budget"] = r.budget;

  json cert;
  cert["k_star_universal"] = r.certified();
  if (auto f = r.certification.first_failure()) cert["first_failure"] = *f;
  cert["orders"] = json::array();
  for (const auto& o : r.certification.orders) {
    cert["orders"].push_back({{"l", o.order},
                              {"max_collision", o.max_collision.to_string()},
                              {"max_collision_value", o.max_collision.value()},
                              {"threshold", o.threshold},
                              {"witness", o.witness},
                              {"universal", o.universal}});
  }
  j["certification"] = cert;

  j["entropies"] = json::array();
  for (const auto& e : r.entropies) {
    json row = {{"alpha", alpha_to_json(e.alpha)}, {"H", number_to_json(e.entropy)}};
    if (e.given_side) row["H_given_Z"] = number_to_json(*e.given_side);
    j["entropies"].push_back(row);
  }
  j["divergences"] = divergence_rows(r.divergences);
  if (!r.side_divergences.empty()) j["side_divergences"] = divergence_rows(r.side_divergences);

  j["bounds"] = json::array();
  for (const auto& b : r.bounds) {
    json row = {{"name", b.name},
                {"inputs", inputs_to_json(b.inputs)},
                {"bound", number_to_json(b.bound)},
                {"applicable", b.applicable},
                {"satisfied", b.satisfied}};
    if (b.empirical) {
      row["empirical"] = number_to_json(*b.empirical);
      row["slack"] = number_to_json(b.slack);
    }
    if (!b.note.empty()) row["note"] = b.note;
    j["bounds"].push_back(row);
  }
  if (!r.buckets.empty()) {
    j["buckets"] = json::array();
    for (const auto& b : r.buckets) {
      j["buckets"].push_back({{"k", b.k},
                              {"m", b.m},
                              {"subset_size", b.subset_size},
                              {"mode", b.mode},
                              {"empirical", number_to_json(b.empirical)},
                              {"stderr", number_to_json(b.stderr_mean)},
                              {"seeds_used", b.seeds_used},
                              {"bound", number_to_json(b.bound)},
                              {"satisfied", b.satisfied}});
    }
  }
  if (r.wall_clock_seconds) j["wall_clock_seconds"] = *r.wall_clock_seconds;
  j["all_satisfied"] = r.all_satisfied();
  return j;
}

std::string summary_text(const VerifyReport& r, Units units) {
  const double scale = units == Units::bits ? std::log2(static_cast<double>(r.q)) : 1.0;
  const char* unit = units == Units::bits ? "bits" : "q-ary";
  std::ostringstream os;
  os << r.family << "\n";
  for (const auto& o : r.certification.orders) {
    os << "certify l=" << o.order << " max=" << o.max_collision.to_string() << " threshold=" << o.threshold
       << (o.universal ? " ok" : " FAILED") << "\n";
  }
  if (!r.certified()) {
    os << "certification failed; nothing extracted\n";
    return os.str();
  }
  os << "entropies (" << unit << ")\n";
  for (const auto& e : r.entropies) {
    os << "  H_" << e.alpha.to_string() << " = " << fmt(e.entropy * scale);
    if (e.given_side) os << "  H_" << e.alpha.to_string() << "(X|Z) = " << fmt(*e.given_side * scale);
    os << "\n";
  }
  os << "divergences (" << unit << ", tv unitless)\n";
  for (const auto& d : r.divergences) {
    os << "  alpha=" << d.alpha.to_string() << " joint=" << fmt(d.joint * scale)
       << " conditional=" << fmt(d.conditional * scale) << " kl=" << fmt(d.kl * scale) << " tv=" << fmt(d.tv) << "\n";
  }
  for (const auto& b : r.bounds) {
    const double s = is_tv_bound(b.name) ? 1.0 : scale;
    if (!b.applicable) {
      os << "SKIP " << b.name << " alpha=" << b.inputs.alpha.to_string();
      if (has_epsilon(b.name)) os << " eps=" << fmt(b.inputs.epsilon);
      os << " (" << b.note << ")\n";
      continue;
    }
    os << (b.satisfied ? "PASS " : "FAIL ") << b.name << " alpha=" << b.inputs.alpha.to_string();
    if (has_epsilon(b.name)) os << " eps=" << fmt(b.inputs.epsilon);
    os << " empirical=" << fmt(*b.empirical * s) << " bound=" << fmt(b.bound * s) << "\n";
  }
  for (const auto& b : r.buckets) {
    os << (b.satisfied ? "PASS " : "FAIL ") << "bucket k=" << b.k << " m=" << b.m << " |A|=" << b.subset_size
       << " " << b.mode << " empirical=" << fmt(b.empirical) << " bound=" << fmt(b.bound) << "\n";
  }
  os << (r.all_satisfied() ? "all bounds satisfied\n" : "some bounds violated\n");
  return os.str();
}

std::string csv_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt(v);
}

std::string bucket_csv(const std::vector<BucketRow>& rows) {
  std::ostringstream os;
  os << "k,m,subset_size,mode,empirical,stderr,seeds_used,bound,satisfied\n";
  for (const auto& r : rows) {
    os << r.k << ',' << r.m << ',' << r.subset_size << ',' << r.mode << ',' << csv_number(r.empirical) << ','
       << csv_number(r.stderr_mean) << ',' << r.seeds_used << ',' << csv_number(r.bound) << ','
       << (r.satisfied ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "alpha,m,H,measure,empirical,bound,bound_minus_empirical,satisfied\n";
  for (const auto& r : rows) {
    os << r.alpha.to_string() << ',' << r.m << ',' << csv_number(r.entropy) << ',' << r.measure << ','
       << csv_number(r.empirical) << ',' << csv_number(r.bound) << ',' << csv_number(r.bound - r.empirical) << ','
       << (r.satisfied ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace renyi::harness
