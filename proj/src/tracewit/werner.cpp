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

#include "tracewit/werner.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "tracewit/partition.hpp"
#include "tracewit/weingarten.hpp"

namespace tracewit {
namespace werner {

using sgroup::GroupAlgebraElement;
using sgroup::Partition;

namespace {

void check_dims(int n, int d) {
  if (n < 2) throw std::invalid_argument("werner: need n >= 2");
  if (d < 2) throw std::invalid_argument("werner: need d >= 2");
}

void check_three_parties(const GroupRingState& state) {
  if (state.parties != 3)
    throw std::invalid_argument("werner: this witness is defined for n = 3");
}

GroupAlgebraElement young_float(const Partition& lambda) {
  return sgroup::young_idempotent(lambda).to_float();
}

}  // namespace

GroupRingState sample_state(int n, int d, Rng& rng) {
  check_dims(n, d);
  GroupAlgebraElement s = GroupAlgebraElement::zero_float(n);
  for (const auto& sigma : sgroup::all_permutations(n))
    s.add_term(sigma, rng.complex_gaussian());
  if (d < n) {
    // Kill the isotypic components that vanish on (C^d)^(x n).
    s = sgroup::algebra_mul(sgroup::jd_projector(d, n).to_float(), s);
  }
  GroupAlgebraElement m = sgroup::algebra_mul(s, sgroup::dagger(s));
  std::complex<double> norm = sgroup::tau(m);
  GroupRingState state;
  state.parties = n;
  state.local_dim = d;
  state.r = m.scaled(1.0 / norm.real());
  return state;
}

GroupRingState maximally_mixed_state(int n, int d) {
  check_dims(n, d);
  GroupAlgebraElement wginv = sgroup::weingarten_inverse(d, n).to_float();
  double scale = 1.0 / (to_double(factorial(n)) * std::pow(double(d), n));
  GroupRingState state;
  state.parties = n;
  state.local_dim = d;
  state.r = wginv.scaled(scale);
  return state;
}

std::pair<double, double> projections(const GroupRingState& state) {
  int n = state.parties;
  check_dims(n, state.local_dim);
  if (!sgroup::in_jd_ideal(state.r, state.local_dim, 1e-9))
    throw std::invalid_argument("werner: state not supported on J_d");
  GroupAlgebraElement anti = young_float(Partition(std::vector<int>(n, 1)));
  GroupAlgebraElement sym = young_float(Partition({n}));
  double p = sgroup::tau(sgroup::algebra_mul(state.r, anti)).real();
  double q = sgroup::tau(sgroup::algebra_mul(state.r, sym)).real();
  return {p, q};
}

double linear_value(const GroupRingState& state) {
  check_three_parties(state);
  auto [p, q] = projections(state);
  return q - (1.0 - p - q) / 4.0;
}

witness::WitnessSpec nonlinear_spec(int d) {
  GroupAlgebraElement sym = sgroup::young_idempotent(Partition({3}));
  GroupAlgebraElement mixed = sgroup::young_idempotent(Partition({2, 1}));
  GroupAlgebraElement w =
      sym + mixed.scaled(ExactComplex(BigRat(-1, 4)));

  witness::WitnessFactor witness_factor;
  witness_factor.role = witness::FactorRole::kWitness;
  witness_factor.symbolic = w;
  witness_factor.source = "catalog:hook:2,1:proj";
  witness::WitnessFactor positive_factor;
  positive_factor.role = witness::FactorRole::kPositive;
  positive_factor.symbolic = mixed;
  positive_factor.source = "young:2,1";
  return witness::compose_nonlinear(
      {witness_factor, witness_factor, positive_factor}, 3, {d, d, d});
}

double nonlinear_value(const GroupRingState& state,
                       witness::GroupRingEvalStats* stats) {
  check_three_parties(state);
  witness::WitnessSpec spec = nonlinear_spec(state.local_dim);
  return witness::evaluate_group_ring(spec, state.r, state.local_dim, stats);
}

hilbert::DenseOperator render_dense(const GroupRingState& state) {
  int n = state.parties;
  int d = state.local_dim;
  check_dims(n, d);
  hilbert::DenseOperator wg = hilbert::eta(sgroup::weingarten(d, n).to_float(), d);
  hilbert::DenseOperator rr = hilbert::eta(state.r, d);
  hilbert::DenseOperator out;
  out.factors = wg.factors;
  out.mat = to_double(factorial(n)) * (wg.mat * rr.mat);
  return out;
}

std::string scatter_csv(int n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("werner: need n_samples >= 1");
  Rng master(seed);
  std::string out = "id,p,q,linear_value,nonlinear_value\n";
  char line[192];
  for (int id = 0; id < n_samples; ++id) {
    Rng sub = master.derive(static_cast<std::uint64_t>(id));
    GroupRingState state = sample_state(3, 3, sub);
    auto [p, q] = projections(state);
    double lin = q - (1.0 - p - q) / 4.0;
    double nonlin = nonlinear_value(state);
    std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%.17g,%.17g\n", id, p, q,
                  lin, nonlin);
    out += line;
  }
  return out;
}

void emit_scatter(int n_samples, std::uint64_t seed, const std::string& path) {
  std::ofstream stream(path, std::ios::binary);
  if (!stream)
    throw std::runtime_error("werner: cannot open output path " + path);
  stream << scatter_csv(n_samples, seed);
  if (!stream.flush())
    throw std::runtime_error("werner: write failed for " + path);
}

}  // namespace werner
}  // namespace tracewit
