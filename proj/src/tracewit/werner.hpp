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

#ifndef TRACEWIT_WERNER_HPP_
#define TRACEWIT_WERNER_HPP_

#include <cstdint>
#include <string>
#include <utility>

#include "tracewit/dense.hpp"
#include "tracewit/group_algebra.hpp"
#include "tracewit/rng.hpp"
#include "tracewit/witness.hpp"

namespace tracewit {
namespace werner {

/// Random n-party Werner-invariant state in group-ring form: r = s s^dag
/// normalized to tau(r) = 1, restricted to the ideal J_d when d < n. The
/// dense state it stands for is n! eta_d(wg(d, n)) eta_d(r).
struct GroupRingState {
  int parties = 0;
  int local_dim = 0;
  sgroup::GroupAlgebraElement r = sgroup::GroupAlgebraElement::zero_float(1);
};

/// Draws s with independent standard complex Gaussian coefficients on every
/// permutation, projects into J_d if d < n, and normalizes.
GroupRingState sample_state(int n, int d, Rng& rng);

/// The group-ring element whose dense render is 1/d^n: r = wg^{-1}/(n! d^n).
GroupRingState maximally_mixed_state(int n, int d);

/// (p, q) = (tr(rho P_{1^n}), tr(rho P_{(n)})), evaluated symbolically as
/// tau(r omega_lambda); never renders the dense state.
std::pair<double, double> projections(const GroupRingState& state);

/// q - (1 - p - q)/4, the three-party linear witness P_(3) - P_(2,1)/4 up to
/// a positive factor. Zero exactly on the line q = (1 - p)/5. Requires n = 3.
double linear_value(const GroupRingState& state);

/// The nonlinear witness W (x) W (x) P_(2,1) with W = P_(3) - P_(2,1)/4 on
/// three copies, evaluated with the group-ring backend (degree 9 support,
/// capped). Requires n = 3; works for any d >= 2 the state was drawn with.
double nonlinear_value(const GroupRingState& state,
                       witness::GroupRingEvalStats* stats = nullptr);

/// The WitnessSpec behind nonlinear_value, for dense cross-checks.
witness::WitnessSpec nonlinear_spec(int d);

/// Dense n! eta(wg) eta(r) on (C^d)^(x n).
hilbert::DenseOperator render_dense(const GroupRingState& state);

/// Scatter table at n = d = k = 3: one sampled state per row, columns
/// id,p,q,linear_value,nonlinear_value. Deterministic per seed.
std::string scatter_csv(int n_samples, std::uint64_t seed);

/// Writes scatter_csv to the given path.
void emit_scatter(int n_samples, std::uint64_t seed, const std::string& path);

}  // namespace werner
}  // namespace tracewit

#endif  // TRACEWIT_WERNER_HPP_
