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

#include "tracewit/ghz.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "tracewit/weingarten.hpp"

namespace tracewit {
namespace ghz {


namespace {

void check_args(int n, int k, int d) {
  if (n < 2) throw std::invalid_argument("ghz: need at least two parties");
  if (k < 2) throw std::invalid_argument("ghz: need at least two copies");
  if (k > d)
    throw std::invalid_argument(
        "ghz: k > d, the antisymmetrizer vanishes on (C^d)^k");
}

BigRat pow_rat(const BigRat& base, int e) {
  BigRat acc(1);
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

// Coefficient of (1-p)^r p^(k-r) in the closed form, exact. The subtracted
// part of Delta_r carries sum_{sigma in S_{k-r}} sgn(sigma)^n, which is
// (k-r)! whenever n is even or k-r <= 1 (no odd permutations exist) and 0
// only for odd n with k-r >= 2.
std::vector<BigRat> witness_coefficients(int n, int k, int d) {
  check_args(n, k, d);
  BigRat prefactor(falling_factorial(BigInt(d), k));
  for (int i = 0; i < n - 1; ++i) prefactor /= BigRat(factorial(k));
  std::vector<BigRat> coeffs;
  coeffs.reserve(k + 1);
  BigRat dn = pow_rat(BigRat(d), n);
  for (int r = 0; r <= k; ++r) {
    int sigma = (n % 2 == 0 || k - r <= 1) ? 1 : 0;
    BigInt rising = rising_factorial(BigInt(d + 1 - k), r);
    BigInt delta = BigInt(1);
    for (int i = 0; i < r; ++i) delta *= d;
    delta -= BigInt(sigma) * factorial(k - r) * rising;
    BigRat c = prefactor * BigRat(binomial(k, r));
    c /= pow_rat(dn, r);
    c /= pow_rat(BigRat(d), k - r);
    BigRat rise_pow(1);
    for (int i = 0; i < n - 2; ++i) rise_pow *= BigRat(rising);
    c *= rise_pow;
    c *= BigRat(delta);
    coeffs.push_back(c);
  }
  return coeffs;
}

void check_noise(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("ghz: noise parameter outside [0, 1]");
}

}  // namespace

double ghz_witness_value(int n, int k, int d, double p) {
  check_noise(p);
  std::vector<BigRat> coeffs = witness_coefficients(n, k, d);
  double value = 0.0;
  for (int r = 0; r <= k; ++r)
    value += to_double(coeffs[r]) * std::pow(1.0 - p, r) *
             std::pow(p, k - r);
  return value;
}

BigRat ghz_witness_value_exact(int n, int k, int d, const BigRat& p) {
  if (p < 0 || p > 1)
    throw std::invalid_argument("ghz: noise parameter outside [0, 1]");
  std::vector<BigRat> coeffs = witness_coefficients(n, k, d);
  BigRat value(0);
  for (int r = 0; r <= k; ++r)
    value += coeffs[r] * pow_rat(BigRat(1) - p, r) * pow_rat(p, k - r);
  return value;
}

witness::WitnessSpec ghz_witness_spec(int n, int k, int d) {
  check_args(n, k, d);
  sgroup::Partition column(std::vector<int>(k, 1));
  sgroup::GroupAlgebraElement anti = sgroup::young_idempotent(column);
  sgroup::GroupAlgebraElement head =
      sgroup::GroupAlgebraElement::identity(k) +
      anti.scaled(ExactComplex(BigRat(-factorial(k))));

  std::vector<witness::WitnessFactor> factors;
  witness::WitnessFactor w;
  w.role = witness::FactorRole::kWitness;
  w.symbolic = head;
  w.source = "catalog:hadamard";
  factors.push_back(w);
  for (int i = 1; i < n; ++i) {
    witness::WitnessFactor f;
    f.role = witness::FactorRole::kPositive;
    f.symbolic = anti;
    f.source = "young:" + column.to_string();
    factors.push_back(f);
  }
  return witness::compose_nonlinear(std::move(factors), k,
                                    std::vector<int>(n, d));
}

double pt_moment2(int n, int d, double p) {
  check_noise(p);
  if (n < 2 || d < 2) throw std::invalid_argument("ghz: need n, d >= 2");
  double dn = std::pow(double(d), n);
  return p * p + 2.0 * p * (1.0 - p) / dn + (1.0 - p) * (1.0 - p) / dn;
}

double pt_moment3(int n, int d, double p) {
  check_noise(p);
  if (n < 2 || d < 2) throw std::invalid_argument("ghz: need n, d >= 2");
  double dn = std::pow(double(d), n);
  double m2 = pt_moment2(n, d, p);
  return p * p * p / (double(d) * d) + 2.0 * p * p * (1.0 - p) / dn +
         p * (1.0 - p) * (1.0 - p) / (dn * dn) + (1.0 - p) / dn * m2;
}

double p3ppt_value(int n, int d, double p) {
  double m2 = pt_moment2(n, d, p);
  return pt_moment3(n, d, p) - m2 * m2;
}

double ppt_threshold(int n, int d) {
  if (n < 2 || d < 2) throw std::invalid_argument("ghz: need n, d >= 2");
  return 1.0 / (1.0 + std::pow(double(d), n - 1));
}

double detection_threshold(int n, int k, int d) {
  check_args(n, k, d);
  if (n % 2 == 1) return 2.0;
  std::vector<BigRat> coeffs = witness_coefficients(n, k, d);
  auto value = [&](double p) {
    double v = 0.0;
    for (int r = 0; r <= k; ++r)
      v += to_double(coeffs[r]) * std::pow(1.0 - p, r) *
           std::pow(p, k - r);
    return v;
  };
  // Grid scan for the first sign change, then bisection.
  const int grid = 101;
  double lo = -1.0, hi = -1.0;
  double prev_p = 0.0, prev_v = value(0.0);
  for (int i = 1; i < grid; ++i) {
    double p = double(i) / (grid - 1);
    double v = value(p);
    if (prev_v >= 0.0 && v < 0.0) {
      lo = prev_p;
      hi = p;
      break;
    }
    prev_p = p;
    prev_v = v;
  }
  if (hi < 0.0) return 2.0;
  while (hi - lo > 1e-10) {
    double mid = 0.5 * (lo + hi);
    if (value(mid) < 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

std::string curves_csv(const GhzScanConfig& config) {
  if (config.d_min < 2 || config.d_max < config.d_min)
    throw std::invalid_argument("ghz: bad dimension range");
  if (config.p_steps < 2)
    throw std::invalid_argument("ghz: need at least two noise grid points");
  if (config.copies.empty())
    throw std::invalid_argument("ghz: empty copy list");
  for (int k : config.copies)
    if (k < 2) throw std::invalid_argument("ghz: copy counts must be >= 2");

  std::string out = "d,k,p,witness_value,p3ppt_value,ppt_threshold\n";
  char line[256];
  bool any = false;
  for (int d = config.d_min; d <= config.d_max; ++d) {
    for (int k : config.copies) {
      if (k > d) continue;
      any = true;
      std::vector<BigRat> coeffs = witness_coefficients(config.n, k, d);
      double thr = ppt_threshold(config.n, d);
      for (int i = 0; i < config.p_steps; ++i) {
        double p = double(i) / (config.p_steps - 1);
        double v = 0.0;
        for (int r = 0; r <= k; ++r)
          v += to_double(coeffs[r]) * std::pow(1.0 - p, r) *
               std::pow(p, k - r);
        std::snprintf(line, sizeof line, "%d,%d,%.17g,%.17g,%.17g,%.17g\n", d,
                      k, p, v, p3ppt_value(config.n, d, p), thr);
        out += line;
      }
    }
  }
  if (!any)
    throw std::invalid_argument("ghz: no (d, k) pair satisfies k <= d");
  return out;
}

void emit_curves(const GhzScanConfig& config) {
  std::ofstream stream(config.out_path, std::ios::binary);
  if (!stream)
    throw std::runtime_error("ghz: cannot open output path " +
                             config.out_path);
  stream << curves_csv(config);
  if (!stream.flush())
    throw std::runtime_error("ghz: write failed for " + config.out_path);
}

}  // namespace ghz
}  // namespace tracewit
