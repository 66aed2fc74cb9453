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

#include <string>

namespace renyi::info {

/// Order of a Rényi quantity: a real value > 1, or one of the limits
/// ONE (Shannon / KL) and INFINITY (min-entropy / max-divergence).
class Alpha {
 public:
  enum class Kind { one, finite, infinity };

  /// Smallest accepted distance above 1 for a finite order.
  static constexpr double kMinGap = 1e-6;

  static Alpha one() { return Alpha(Kind::one, 1.0); }
  static Alpha infinity();
  /// Finite order; throws std::invalid_argument unless value >= 1 + 1e-6.
  static Alpha finite(double value);
  /// 1 -> ONE, +inf -> INFINITY, otherwise finite(value).
  static Alpha from_real(double value);
  /// Accepts a number or "inf"/"infinity"/"one".
  static Alpha parse(const std::string& text);

  Kind kind() const { return kind_; }
  bool is_one() const { return kind_ == Kind::one; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_infinity() const { return kind_ == Kind::infinity; }
  /// 1.0, the finite value, or +inf.
  double value() const { return value_; }
  bool is_integer() const;

  std::string to_string() const;

  friend bool operator==(const Alpha&, const Alpha&) = default;

 private:
  Alpha(Kind kind, double value) : kind_(kind), value_(value) {}

  Kind kind_;
  double value_;
};

}  // namespace renyi::info
