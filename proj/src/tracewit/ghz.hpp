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

#ifndef TRACEWIT_GHZ_HPP_
#define TRACEWIT_GHZ_HPP_

#include <string>
#include <vector>

#include "tracewit/numeric.hpp"
#include "tracewit/witness.hpp"

namespace tracewit {
namespace ghz {

/// Closed-form value of the flagship nonlinear witness
///   W = (1 - k! P_{1^k}) (x) P_{1^k}^(x)(n-1)
/// on k copies of the noisy GHZ state p|GHZ><GHZ| + (1-p) 1/d^n.
/// Coefficients are assembled in exact rationals, then combined with float
/// powers of p. Requires n >= 2, 2 <= k <= d, p in [0, 1].
double ghz_witness_value(int n, int k, int d, double p);

/// Fully exact evaluation at a rational noise parameter.
BigRat ghz_witness_value_exact(int n, int k, int d,
                                       const BigRat& p);

/// The same witness as a WitnessSpec (first factor 1 - k! P_{1^k}, the other
/// n-1 factors the antisymmetrizer), for dense cross-checks.
witness::WitnessSpec ghz_witness_spec(int n, int k, int d);

/// Second and third moments of the partial transpose of the noisy GHZ state,
/// and the P3-PPT criterion value m3 - m2^2 (negative flags NPT).
double pt_moment2(int n, int d, double p);
double pt_moment3(int n, int d, double p);
double p3ppt_value(int n, int d, double p);

/// Noise threshold 1/(1 + d^(n-1)) above which the noisy GHZ state is NPT.
double ppt_threshold(int n, int d);

/// Smallest p at which ghz_witness_value turns negative, located by a grid
/// scan plus bisection to 1e-10 in p. Returns 2.0 when the witness never
/// detects (always for odd n).
double detection_threshold(int n, int k, int d);

/// Grid description for curve emission: all d in [d_min, d_max], all listed
/// copy counts with k <= d, and a uniform p grid with p_steps points on
/// [0, 1].
struct GhzScanConfig {
  int n = 4;
  int d_min = 4;
  int d_max = 30;
  std::vector<int> copies{2, 3, 4};
  int p_steps = 201;
  std::string out_path;
};

/// CSV with header d,k,p,witness_value,p3ppt_value,ppt_threshold and one row
/// per grid point, ordered by (d, k, p). Deterministic; LF line endings.
std::string curves_csv(const GhzScanConfig& config);

/// Writes curves_csv(config) to config.out_path.
void emit_curves(const GhzScanConfig& config);

}  // namespace ghz
}  // namespace tracewit

#endif  // TRACEWIT_GHZ_HPP_
