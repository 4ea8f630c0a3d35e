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

#ifndef TRACEWIT_SHADOWS_HPP_
#define TRACEWIT_SHADOWS_HPP_

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tracewit/dense.hpp"
#include "tracewit/permutation.hpp"
#include "tracewit/rng.hpp"
#include "tracewit/witness.hpp"

namespace tracewit {
namespace shadows {

/// One randomized-measurement round: the sampled local basis rotation and
/// the computational-basis outcome for every party.
struct ShadowRecord {
  int round = 0;
  std::vector<Eigen::MatrixXcd> unitaries;
  std::vector<int> outcomes;
};

struct EstimationReport {
  double estimate = 0.0;
  double standard_error = 0.0;
  int rounds = 0;
  long long tuples_used = 0;
  bool subsampled = false;
};

/// Measures rho after applying the given local unitaries; outcomes follow
/// the exact Born distribution. rho must be PSD with unit trace; its factor
/// list defines the parties.
ShadowRecord simulate_round_with(const hilbert::DenseOperator& rho,
                                 std::vector<Eigen::MatrixXcd> unitaries,
                                 int round, Rng& rng);

/// simulate_round_with using fresh Haar unitaries on every party.
ShadowRecord simulate_round(const hilbert::DenseOperator& rho, int round,
                            Rng& rng);

/// Convenience batch: m independent rounds, indices 0..m-1.
std::vector<ShadowRecord> simulate_rounds(const hilbert::DenseOperator& rho,
                                          int m, Rng& rng);

/// Single-party classical shadow (d+1) U^dag |q><q| U - 1_d; trace 1.
Eigen::MatrixXcd shadow_factor(const Eigen::MatrixXcd& u, int q, int d);

/// tr(eta_d(sigma) X_1 (x) ... (x) X_k) evaluated cycle by cycle as products
/// of the k matrices; never forms the d^k-dimensional operator.
std::complex<double> cycle_contraction(const sgroup::Permutation& sigma,
                                       const std::vector<Eigen::MatrixXcd>& x);

/// Default cap on the number of ordered distinct k-tuples evaluated by
/// estimate(); above it an unbiased uniform subsample of this size is used.
inline constexpr long long kDefaultTupleBudget = 1000000;

/// U-statistic estimate of the witness value from m shadow rounds. All spec
/// factors must be symbolic; record round indices must be pairwise distinct
/// and m >= k. Standard error by 10-block delete-one jackknife over rounds.
EstimationReport estimate(const witness::WitnessSpec& spec,
                          const std::vector<ShadowRecord>& records, Rng& rng,
                          long long tuple_budget = kDefaultTupleBudget);

struct ConvergencePoint {
  int m = 0;
  double mean_abs_error = 0.0;
};

struct ConvergenceScan {
  std::vector<ConvergencePoint> points;
  double ground_truth = 0.0;
  double slope = 0.0;  // least-squares log-log slope of error vs m
  std::string csv;     // columns m,mean_abs_error,ground_truth
};

/// Repeats the simulate-and-estimate pipeline over an m-grid; the ground
/// truth is the dense evaluation of the spec on rho.
ConvergenceScan convergence_scan(const witness::WitnessSpec& spec,
                                 const hilbert::DenseOperator& rho,
                                 const std::vector<int>& m_grid,
                                 int repetitions, Rng& rng,
                                 long long tuple_budget = kDefaultTupleBudget);

}  // namespace shadows
}  // namespace tracewit

#endif  // TRACEWIT_SHADOWS_HPP_
