// Copyright 2026 The tracewit developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "tracewit/group_algebra.hpp"
#include "tracewit/partition.hpp"

namespace tracewit::sgroup {

/// Centrally primitive idempotent
/// omega_lambda = (chi_lambda(id)/n!) sum_sigma chi_lambda(sigma) sigma^{-1}.
/// Exact coefficients; support is all of S_n.
GroupAlgebraElement young_idempotent(const Partition& lambda);

/// Central projector onto the ideal J_d: sum of omega_lambda over partitions
/// of n with height <= d. Equals the identity when d >= n.
GroupAlgebraElement jd_projector(int d, int n);

/// True when every isotypic component of a outside J_d has coefficients
/// below tol in absolute value.
bool in_jd_ideal(const GroupAlgebraElement& a, int d, double tol = 1e-12);

/// Weingarten element wg(d, n) = (1/n!) sum_{lambda, height<=d}
/// (tau(omega_lambda)/tr P_lambda) omega_lambda, with exact coefficients.
GroupAlgebraElement weingarten(int d, int n);

/// The group-algebra inverse of wg(d, n) on J_d:
/// wg^{-1} = n! sum_{lambda, height<=d} (tr P_lambda / tau(omega_lambda)) omega_lambda.
GroupAlgebraElement weingarten_inverse(int d, int n);

/// wg^{-1} viewed as a class function: its coefficient on any permutation of
/// cycle type mu equals sum_{lambda, height<=d} s_lambda(1^d) chi_lambda(mu),
/// an integer. Evaluated lazily per cycle type; no element over S_n is built.
BigInt weingarten_inverse_value(int d, int n, const Partition& mu);

/// weingarten_inverse_value tabulated on all cycle types of S_n.
ClassFunction weingarten_inverse_class_function(int d, int n);

}  // namespace tracewit::sgroup
