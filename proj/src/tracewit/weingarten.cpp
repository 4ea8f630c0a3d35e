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

#include "tracewit/weingarten.hpp"

#include <stdexcept>

namespace tracewit::sgroup {

GroupAlgebraElement young_idempotent(const Partition& lambda) {
  const int n = lambda.weight();
  if (n < 1) throw std::invalid_argument("young_idempotent: empty partition");
  const BigRat scale(BigInt(character_identity(lambda)), factorial(n));
  GroupAlgebraElement e = GroupAlgebraElement::zero(n);
  for (const Permutation& sigma : all_permutations(n)) {
    std::int64_t chi = character(lambda, Partition(sigma.cycle_type()));
    if (chi == 0) continue;
    e.add_term(sigma.inverse(), ExactComplex(scale * chi));
  }
  return e;
}

GroupAlgebraElement jd_projector(int d, int n) {
  GroupAlgebraElement e = GroupAlgebraElement::zero(n);
  for (const Partition& lambda : Partition::all(n)) {
    if (lambda.height() > d) continue;
    e = e + young_idempotent(lambda);
  }
  return e;
}

bool in_jd_ideal(const GroupAlgebraElement& a, int d, double tol) {
  const int n = a.degree();
  for (const Partition& lambda : Partition::all(n)) {
    if (lambda.height() <= d) continue;
    GroupAlgebraElement component = algebra_mul(young_idempotent(lambda).to_float(), a.to_float());
    if (coeff_max_abs(component) > tol) return false;
  }
  return true;
}

GroupAlgebraElement weingarten(int d, int n) {
  if (d < 1 || n < 1) throw std::invalid_argument("weingarten: need d >= 1, n >= 1");
  GroupAlgebraElement e = GroupAlgebraElement::zero(n);
  const BigRat inv_fact(BigInt(1), factorial(n));
  for (const Partition& lambda : Partition::all(n)) {
    if (lambda.height() > d) continue;
    BigInt chi_id(character_identity(lambda));
    // tau(omega) / tr P = chi^2 / (chi s) = chi / s.
    BigRat weight = inv_fact * BigRat(chi_id, schur_dimension(lambda, d));
    e = e + young_idempotent(lambda).scaled(ExactComplex(weight));
  }
  return e;
}

GroupAlgebraElement weingarten_inverse(int d, int n) {
  if (d < 1 || n < 1) throw std::invalid_argument("weingarten_inverse: need d >= 1, n >= 1");
  GroupAlgebraElement e = GroupAlgebraElement::zero(n);
  const BigRat fact(factorial(n));
  for (const Partition& lambda : Partition::all(n)) {
    if (lambda.height() > d) continue;
    BigInt chi_id(character_identity(lambda));
    // tr P / tau(omega) = (chi s) / chi^2 = s / chi.
    BigRat weight = fact * BigRat(schur_dimension(lambda, d), chi_id);
    e = e + young_idempotent(lambda).scaled(ExactComplex(weight));
  }
  return e;
}

BigInt weingarten_inverse_value(int d, int n, const Partition& mu) {
  if (mu.weight() != n) throw std::invalid_argument("weingarten_inverse_value: |mu| != n");
  BigInt total = 0;
  for (const Partition& lambda : Partition::all(n)) {
    if (lambda.height() > d) continue;
    total += schur_dimension(lambda, d) * character(lambda, mu);
  }
  return total;
}

ClassFunction weingarten_inverse_class_function(int d, int n) {
  ClassFunction f;
  f.degree = n;
  for (const Partition& mu : Partition::all(n))
    f.values.emplace(mu, BigRat(weingarten_inverse_value(d, n, mu)));
  return f;
}

}  // namespace tracewit::sgroup
