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

#include <boost/multiprecision/cpp_int.hpp>

namespace renyi::bounds {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr unsigned kMaxStirlingOrder = 64;

/// Stirling number of the second kind: partitions of a k-set into l
/// nonempty blocks. Exact, 0 <= l <= k <= 64; S(0,0) = 1, S(k,0) = 0 for
/// k > 0. Throws std::out_of_range otherwise.
const BigInt& stirling2(unsigned k, unsigned l);

/// Natural log of S(k, l); -inf when S(k, l) = 0.
double log_stirling2(unsigned k, unsigned l);

/// Bell number B(k) = sum_l S(k, l).
BigInt bell(unsigned k);

}  // namespace renyi::bounds
