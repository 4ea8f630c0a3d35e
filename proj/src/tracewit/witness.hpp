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

#include <optional>
#include <string>
#include <vector>

#include "tracewit/dense.hpp"
#include "tracewit/group_algebra.hpp"
#include "tracewit/partition.hpp"

namespace tracewit::witness {

enum class FactorRole { kWitness, kPositive };

/// One tensor factor of a nonlinear witness: an operator on k copies of one
/// party's local space, given either symbolically (an element of C[S_k]) or
/// as a dense matrix on (C^d)^(tensor k).
struct WitnessFactor {
  FactorRole role = FactorRole::kWitness;
  std::optional<sgroup::GroupAlgebraElement> symbolic;
  std::optional<hilbert::DenseOperator> dense;
  /// Textual descriptor ("catalog:hadamard", "dense:bell_xxzz", ...) kept for
  /// round-trip printing; may be empty for programmatic factors.
  std::string source;
};

/// Multi-copy witness: one factor per party, all acting on `copies` copies.
/// Site order of the underlying 2^... space is party-major:
/// site(party i, copy j) = i*copies + j.
struct WitnessSpec {
  int parties = 0;
  int copies = 0;
  std::vector<int> local_dims;
  std::vector<WitnessFactor> factors;
};

/// Validates and assembles a WitnessSpec. Requirements: one factor and one
/// local dimension per party, symbolic factors of degree `copies`, dense
/// factors on exactly `copies` sites of the party's dimension, at least one
/// factor in the witness role, and positive-role dense factors PSD.
WitnessSpec compose_nonlinear(std::vector<WitnessFactor> factors, int copies,
                              std::vector<int> local_dims);

enum class CatalogFamily { kHadamard, kSchur, kHook, kMarcus, kPermanent };
enum class CatalogNormalization { kProjector, kPermutation };

struct CatalogWitness {
  CatalogFamily family;
  std::optional<sgroup::Partition> lambda;
  int n = 0;
  CatalogNormalization normalization = CatalogNormalization::kProjector;
  /// True for the permanent-dominance family, whose defining matrix
  /// inequality is conjectured rather than proven.
  bool conjectured = false;
  std::string name;
  std::string inequality;
  sgroup::GroupAlgebraElement element = sgroup::GroupAlgebraElement::zero(1);
};

/// Builds a witness from the immanant-inequality catalog as an exact element
/// of C[S_n].
///
/// Projector normalization:
///   hadamard        1 - n! P_{1^n}
///   schur(lambda)   P_lambda / chi^2 - P_{1^n}
///   hook(lambda)    P_{lambda+} / chi+^2 - P_lambda / chi^2, for hooks
///                   lambda = (j, 1^{n-j}), lambda+ = (j+1, 1^{n-j-1})
///   marcus          n! P_{(n)} - 1
///   permanent(lambda)  P_{(n)} - P_lambda / chi^2   [conjectured]
/// with P_lambda the isotypic projector (omega_lambda as an algebra element).
/// Permutation normalization multiplies schur/hook/permanent by n!; hadamard
/// and marcus coincide in both normalizations.
CatalogWitness catalog_witness(CatalogFamily family, int n,
                               const std::optional<sgroup::Partition>& lambda = std::nullopt,
                               CatalogNormalization normalization =
                                   CatalogNormalization::kProjector);

/// One representative witness per family (canonical lambda choices).
std::vector<CatalogWitness> catalog_listing(int n);

/// Human-readable catalog for n parties, one line per family with the
/// permutation-normalized expansion.
std::string catalog_text(int n);

/// W = 1 - XX - ZZ on two qubits; negative exactly on a neighborhood of
/// phi_plus among the Bell basis.
hilbert::DenseOperator witness_bell_xxzz();

/// V = (sum_ij |ii><jj|)^{T_B} on C^d x C^d, the partial transpose of the
/// unnormalized maximally entangled projector (equals the swap operator).
hilbert::DenseOperator witness_phi_plus_pt(int d);

/// tr(W rho^(tensor k)) evaluated densely. rho is an n-party state with
/// rho.factors == spec.local_dims; the k-fold power is regrouped from
/// copy-major to the spec's party-major site order.
double evaluate_dense(const WitnessSpec& spec, const hilbert::DenseOperator& rho,
                      long long dim_cap = hilbert::kDefaultDimCap);

struct GroupRingEvalStats {
  std::size_t peak_support = 0;
};

/// Same value for a Werner-invariant state given by its group-ring element r
/// (tau(r) = 1, r in J_d): all factors must be symbolic. The only dense
/// ingredient avoided here is the d^(nk)-dimensional Hilbert space; the
/// computation stays in C[S_{nk}] with the Weingarten inverse evaluated
/// lazily per cycle type.
double evaluate_group_ring(const WitnessSpec& spec, const sgroup::GroupAlgebraElement& r,
                           int d, GroupRingEvalStats* stats = nullptr,
                           std::size_t support_cap = 100000);

struct ConcentrationOutcome {
  double probability = 0.0;
  hilbert::DenseOperator conditional_state;
};

/// Projects copies B, B' of two copies of the bipartite pure state psi onto
/// the projector P and returns the outcome probability together with the
/// post-measurement state of A, A'. Throws ZeroProbabilityError when the
/// outcome has vanishing probability.
ConcentrationOutcome concentration_outcome(const hilbert::StateVector& psi,
                                           const hilbert::DenseOperator& p);

/// tr(P_{1^k} rho^(tensor k)) - tr(P_{1^k} rho_A^(tensor k)) for a bipartite
/// rho; negative values certify that the state rank is smaller than the
/// marginal rank, which is impossible for separable states.
double rank_criterion_value(const hilbert::DenseOperator& rho, int k,
                            long long dim_cap = hilbert::kDefaultDimCap);

/// Average of the flagship multi-copy witness over Haar-random pure global
/// states on n parties of local dimension d with k copies:
/// zero for odd n, (1 - k!) C(d,k)^n / C(d^n + k - 1, k) for even n.
double haar_average(int n, int k, int d);

/// tr(rho^{T_B} sigma) for bipartite operators on matching factors.
double npt_overlap(const hilbert::DenseOperator& rho, const hilbert::DenseOperator& sigma);

}  // namespace tracewit::witness
