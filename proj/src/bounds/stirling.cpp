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

#include "renyi/bounds/stirling.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace renyi::bounds {

namespace {

struct Table {
  std::vector<std::vector<BigInt>> s;
  std::vector<std::vector<double>> log_s;

  Table() : s(kMaxStirlingOrder + 1), log_s(kMaxStirlingOrder + 1) {
    for (unsigned k = 0; k <= kMaxStirlingOrder; ++k) {
      s[k].assign(k + 1, 0);
      log_s[k].assign(k + 1, -std::numeric_limits<double>::infinity());
    }
    s[0][0] = 1;
    for (unsigned k = 1; k <= kMaxStirlingOrder; ++k) {
      for (unsigned l = 1; l <= k; ++l) {
        BigInt v = s[k - 1][l - 1];
        if (l <= k - 1) v += BigInt(l) * s[k - 1][l];
        s[k][l] = v;
      }
    }
    for (unsigned k = 0; k <= kMaxStirlingOrder; ++k) {
      for (unsigned l = 0; l <= k; ++l) {
        if (s[k][l] != 0) log_s[k][l] = std::log(s[k][l].convert_to<long double>());
      }
    }
  }
};

const Table& table() {
  static const Table t;
  return t;
}

void check_range(unsigned k, unsigned l) {
  if (k > kMaxStirlingOrder || l > k) {
    throw std::out_of_range("Stirling number S(" + std::to_string(k) + "," + std::to_string(l) +
                            ") outside 0 <= l <= k <= 64");
  }
}

}  // namespace

const BigInt& stirling2(unsigned k, unsigned l) {
  check_range(k, l);
  return table().s[k][l];
}

double log_stirling2(unsigned k, unsigned l) {
  check_range(k, l);
  return table().log_s[k][l];
}

BigInt bell(unsigned k) {
  check_range(k, 0);
  BigInt total = 0;
  for (unsigned l = 0; l <= k; ++l) total += table().s[k][l];
  return total;
}

}  // namespace renyi::bounds
