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

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

#include "tracewit/group_algebra.hpp"
#include "tracewit/partition.hpp"
#include "tracewit/rng.hpp"

namespace tracewit::hilbert {

/// Default cap on dense Hilbert-space dimension (2^14). Callers working at
/// known-small dimensions may raise it explicitly.
inline constexpr long long kDefaultDimCap = 1LL << 14;

/// Returns prod(factors), throwing DimensionCapError beyond cap.
long long checked_dimension(const std::vector<int>& factors, long long cap);

/// Dense operator on a tensor product of local spaces; factors lists the
/// local dimensions in site order (site 0 is the most significant index).
struct DenseOperator {
  Eigen::MatrixXcd mat;
  std::vector<int> factors;

  long long dim() const { return mat.rows(); }
};

/// Dense vector on a tensor product of local spaces.
struct StateVector {
  Eigen::VectorXcd vec;
  std::vector<int> factors;

  long long dim() const { return vec.size(); }
};

DenseOperator identity_operator(std::vector<int> factors, long long cap = kDefaultDimCap);
DenseOperator kron(const DenseOperator& a, const DenseOperator& b,
                   long long cap = kDefaultDimCap);
DenseOperator tensor_power(const DenseOperator& a, int k, long long cap = kDefaultDimCap);
DenseOperator projector(const StateVector& psi);

/// The representation eta_d on (C^d)^(tensor m): a basis permutation sigma
/// maps |i_0 ... i_{m-1}> to the vector whose site-s letter is i_{sigma^{-1}(s)},
/// extended linearly to group-algebra elements.
DenseOperator eta(const sgroup::GroupAlgebraElement& a, int d, long long cap = kDefaultDimCap);

/// eta of the centrally primitive idempotent omega_lambda: the isotypic
/// projector P_lambda on (C^d)^(tensor |lambda|).
DenseOperator young_projector(const sgroup::Partition& lambda, int d,
                              long long cap = kDefaultDimCap);

/// (1/sqrt d) sum_i |i...i> on n sites of dimension d.
StateVector ghz_state(int n, int d);
StateVector bell_phi_plus(int d);
/// (|01> + |10>)/sqrt 2 on two qubits.
StateVector bell_psi_plus();

/// p |GHZ><GHZ| + (1-p) identity / d^n.
DenseOperator noisy_ghz(int n, int d, double p);

/// Traces out the listed sites; remaining sites keep their order.
DenseOperator partial_trace(const DenseOperator& op, const std::vector<int>& sites);

/// Transposes the listed sites.
DenseOperator partial_transpose(const DenseOperator& op, const std::vector<int>& sites);

/// Permutes tensor factors: new site p carries what old site source[p] held.
DenseOperator reorder_factors(const DenseOperator& op, const std::vector<int>& source);

/// Haar-distributed unitary via QR of a Gaussian matrix with the R-diagonal
/// phase fix.
Eigen::MatrixXcd haar_unitary(int d, Rng& rng);

/// Haar-distributed unit vector.
StateVector haar_random_state(std::vector<int> factors, Rng& rng);

std::complex<double> trace_product(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Re tr(op rho), guarding that the imaginary part is negligible.
double expectation(const DenseOperator& op, const DenseOperator& rho);

/// Coefficient c(k, d, r) with tr_{first r sites}(P_{1^k}) =
/// c * P_{1^{k-r}} on (C^d) factors: prod_{j<r} (d+1-k+j) * (k-r)!/k!.
BigRat antisym_reduction_coefficient(int k, int d, int r);

}  // namespace tracewit::hilbert
