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

#ifndef TRACEWIT_INEQUALITIES_HPP_
#define TRACEWIT_INEQUALITIES_HPP_

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tracewit/partition.hpp"
#include "tracewit/rng.hpp"

namespace tracewit {
namespace witness {

/// imm_lambda(A) = sum_sigma chi_lambda(sigma) prod_i A(i, sigma(i)).
/// Factorial enumeration; guarded at n <= 8.
std::complex<double> immanant(const sgroup::Partition& lambda,
                              const Eigen::MatrixXcd& a);

/// imm_{(n)}, the permanent.
std::complex<double> permanent(const Eigen::MatrixXcd& a);

struct InequalityRow {
  std::string name;
  bool conjectured = false;
  int trials = 0;
  double min_slack = 0.0;
  int violations = 0;
};

struct InequalityReport {
  int n = 0;
  int trials = 0;
  std::vector<InequalityRow> rows;
};

/// Monte Carlo check of the immanant-inequality catalog on Gram matrices of
/// random unit vectors (plus a second PSD matrix for the Hadamard-product
/// row). Rows: Hadamard, Schur per lambda, the hook ladder, Marcus,
/// permanent dominance (conjectured, reported but never asserted), the
/// Hadamard-product (Oppenheim-type) determinant bound, and the block
/// permanent bound. Violations count slacks below -tol. Requires n <= 6.
InequalityReport verify_matrix_inequalities(int trials, int n, Rng& rng,
                                            double tol = 1e-9);

std::string inequality_report_text(const InequalityReport& report);

}  // namespace witness
}  // namespace tracewit

#endif  // TRACEWIT_INEQUALITIES_HPP_
