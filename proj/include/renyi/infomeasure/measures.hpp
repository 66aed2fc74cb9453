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

#include "renyi/infomeasure/alpha.hpp"
#include "renyi/infomeasure/pmf.hpp"

// All quantities below are in base-q units, q = base_q() of the arguments.
// Zero-probability atoms contribute nothing (0 log 0 = 0, 0^a = 0).

namespace renyi::info {

/// Rényi entropy; Shannon at ONE, min-entropy at INFINITY.
double renyi_entropy(const Pmf& p, Alpha alpha);

/// D_a(p || r); KL at ONE, max log-ratio at INFINITY. +inf when p is not
/// absolutely continuous w.r.t. r. Throws on size or base mismatch.
double renyi_divergence(const Pmf& p, const Pmf& r, Alpha alpha);

double kl_divergence(const Pmf& p, const Pmf& r);

double tv_distance(const Pmf& p, const Pmf& r);

/// Conditional Rényi entropy of axis 0 given axis 1,
///   1/(1-a) log sum_z P_Z(z) sum_x P_{X|Z}(x|z)^a,
/// for finite a only.
double conditional_renyi_entropy(const JointPmf& joint, Alpha alpha);

/// 1/(1-a) sum_z P_Z(z) log sum_x P_{X|Z}(x|z)^a for finite a. A rank-3
/// joint is conditioned on the pair of trailing axes.
double tilde_conditional_entropy(const JointPmf& joint, Alpha alpha);

/// sum_s P_S(s) D_a(P_{U|S=s} || uniform) where U is axis 0 and S is the
/// remaining axes (flattened for rank 3).
double conditional_divergence(const JointPmf& joint, Alpha alpha);

/// D_a(joint || uniform(U) x P_rest), P_rest the joint's own marginal on
/// the trailing axes.
double joint_divergence_from_uniform(const JointPmf& joint, Alpha alpha);

/// TV distance between the joint and uniform(U) x P_rest.
double joint_tv_from_uniform(const JointPmf& joint);

}  // namespace renyi::info
