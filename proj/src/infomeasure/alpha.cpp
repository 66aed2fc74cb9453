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

#include "renyi/infomeasure/alpha.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace renyi::info {

Alpha Alpha::infinity() { return Alpha(Kind::infinity, std::numeric_limits<double>::infinity()); }

Alpha Alpha::finite(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("finite order must be a finite real");
  if (value < 1.0 + kMinGap) {
    throw std::invalid_argument("order alpha=" + std::to_string(value) +
                                " must be >= 1 + 1e-6 (use ONE for the Shannon/KL limit)");
  }
  return Alpha(Kind::finite, value);
}

Alpha Alpha::from_real(double value) {
  if (value == 1.0) return one();
  if (std::isinf(value) && value > 0) return infinity();
  return finite(value);
}

Alpha Alpha::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Infinity" || text == "INF") return infinity();
  if (text == "one" || text == "ONE") return one();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse order '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("cannot parse order '" + text + "'");
  return from_real(v);
}

bool Alpha::is_integer() const { return kind_ == Kind::finite && std::floor(value_) == value_; }

std::string Alpha::to_string() const {
  switch (kind_) {
    case Kind::one:
      return "1";
    case Kind::infinity:
      return "inf";
    case Kind::finite:
      break;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value_);
  return buf;
}

}  // namespace renyi::info
