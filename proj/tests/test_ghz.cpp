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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "tracewit/dense.hpp"
#include "tracewit/ghz.hpp"

using namespace tracewit;
using namespace tracewit::ghz;
using tracewit::BigRat;

namespace {

double dense_pt_moment(int n, int d, double p, int power) {
  hilbert::DenseOperator rho = hilbert::noisy_ghz(n, d, p);
  hilbert::DenseOperator g = hilbert::partial_transpose(rho, {0});
  Eigen::MatrixXcd acc = g.mat;
  for (int i = 1; i < power; ++i) acc = acc * g.mat;
  return acc.trace().real();
}

double min_eig_pt(int n, int d, double p) {
  hilbert::DenseOperator rho = hilbert::noisy_ghz(n, d, p);
  hilbert::DenseOperator g = hilbert::partial_transpose(rho, {0});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g.mat);
  return es.eigenvalues().minCoeff();
}

}  // namespace

TEST_CASE("closed form reproduces the hand-derived qubit points") {
  CHECK(ghz_witness_value(2, 2, 2, 1.0) == doctest::Approx(-0.25).epsilon(1e-12));
  CHECK(ghz_witness_value(2, 2, 2, 0.0) == doctest::Approx(0.125).epsilon(1e-12));
  BigRat exact = ghz_witness_value_exact(2, 2, 2, BigRat(1));
  CHECK(exact == BigRat(-1, 4));
  BigRat mixed = ghz_witness_value_exact(2, 2, 2, BigRat(0));
  CHECK(mixed == BigRat(1, 8));
}

TEST_CASE("closed form matches the dense evaluation across the scan set") {
  struct Triple {
    int n, k, d;
  };
  for (Triple t : {Triple{2, 2, 2}, Triple{2, 2, 3}, Triple{3, 2, 2},
                   Triple{4, 2, 2}}) {
    witness::WitnessSpec spec = ghz_witness_spec(t.n, t.k, t.d);
    for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      double closed = ghz_witness_value(t.n, t.k, t.d, p);
      double dense =
          witness::evaluate_dense(spec, hilbert::noisy_ghz(t.n, t.d, p));
      CHECK(std::abs(closed - dense) < 1e-9);
    }
  }
}

TEST_CASE("odd party counts never detect") {
  for (int d : {2, 3}) {
    for (int i = 0; i <= 100; ++i) {
      double p = double(i) / 100.0;
      CHECK(ghz_witness_value(3, 2, d, p) >= 0.0);
    }
  }
  CHECK(ghz_witness_value(5, 2, 5, 0.9) >= 0.0);
  CHECK(detection_threshold(3, 2, 2) == doctest::Approx(2.0));
  CHECK(detection_threshold(5, 3, 5) == doctest::Approx(2.0));
}

TEST_CASE("witness validity below the separable bound") {
  for (int d : {2, 3}) {
    double thr = ppt_threshold(4, d);
    for (int i = 0; i <= 100; ++i) {
      double p = thr * double(i) / 100.0;
      CHECK(ghz_witness_value(4, 2, d, p) >= -1e-12);
    }
  }
}

TEST_CASE("partial transpose moments match the dense oracle") {
  for (int n : {2, 3}) {
    for (int d : {2, 3}) {
      for (int i = 0; i <= 10; ++i) {
        double p = double(i) / 10.0;
        CHECK(std::abs(pt_moment2(n, d, p) - dense_pt_moment(n, d, p, 2)) <
              1e-10);
        CHECK(std::abs(pt_moment3(n, d, p) - dense_pt_moment(n, d, p, 3)) <
              1e-10);
        double dn = std::pow(double(d), n);
        double floor = 1.0 / dn;
        if (p == 0.0)
          CHECK(pt_moment2(n, d, p) == doctest::Approx(floor).epsilon(1e-12));
        else
          CHECK(pt_moment2(n, d, p) > floor);
      }
    }
  }
}

TEST_CASE("p3ppt criterion pinned values") {
  CHECK(std::abs(p3ppt_value(2, 2, 0.0)) < 1e-15);
  CHECK(std::abs(p3ppt_value(3, 3, 0.0)) < 1e-15);
  CHECK(p3ppt_value(2, 2, 1.0) == doctest::Approx(-0.75).epsilon(1e-12));
}

TEST_CASE("ppt threshold formula agrees with dense eigenvalue crossing") {
  CHECK(ppt_threshold(2, 2) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(ppt_threshold(2, 3) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(ppt_threshold(3, 2) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(ppt_threshold(4, 2) == doctest::Approx(1.0 / 9.0).epsilon(1e-12));

  struct Pair {
    int n, d;
  };
  for (Pair c : {Pair{2, 2}, Pair{2, 3}, Pair{3, 2}}) {
    double lo = 0.0, hi = 1.0;
    REQUIRE(min_eig_pt(c.n, c.d, hi) < 0.0);
    while (hi - lo > 1e-9) {
      double mid = 0.5 * (lo + hi);
      if (min_eig_pt(c.n, c.d, mid) < 0.0)
        hi = mid;
      else
        lo = mid;
    }
    CHECK(std::abs(0.5 * (lo + hi) - ppt_threshold(c.n, c.d)) < 1e-6);
  }
}

TEST_CASE("detection threshold is a true sign change and shrinks with k") {
  double p_star = detection_threshold(2, 2, 2);
  CHECK(p_star > 0.0);
  CHECK(p_star < 1.0);
  CHECK(std::abs(ghz_witness_value(2, 2, 2, p_star)) < 1e-8);
  CHECK(ghz_witness_value(2, 2, 2, std::min(1.0, p_star + 1e-6)) < 0.0);
  CHECK(ghz_witness_value(2, 2, 2, std::max(0.0, p_star - 1e-6)) > 0.0);
  CHECK(ghz_witness_value(2, 2, 2, 1.0) < 0.0);

  double prev = 2.0;
  for (int k = 2; k <= 5; ++k) {
    double thr = detection_threshold(4, k, 10);
    CHECK(thr < 1.0);
    CHECK(thr < prev);
    CHECK(thr >= ppt_threshold(4, 10));
    prev = thr;
  }
}

TEST_CASE("curve emission layout and region property") {
  GhzScanConfig config;
  config.n = 4;
  config.d_min = 4;
  config.d_max = 6;
  config.copies = {2, 3};
  config.p_steps = 11;
  std::string csv = curves_csv(config);
  CHECK(csv == curves_csv(config));
  CHECK(csv.rfind("d,k,p,witness_value,p3ppt_value,ppt_threshold\n", 0) == 0);

  int rows = 0;
  std::size_t pos = csv.find('\n') + 1;
  while (pos < csv.size()) {
    std::size_t end = csv.find('\n', pos);
    std::string line = csv.substr(pos, end - pos);
    int d, k;
    double p, wv, tau, thr;
    REQUIRE(std::sscanf(line.c_str(), "%d,%d,%lf,%lf,%lf,%lf", &d, &k, &p, &wv,
                        &tau, &thr) == 6);
    if (p < thr) CHECK(wv >= -1e-12);
    ++rows;
    pos = end + 1;
  }
  CHECK(rows == 3 * 2 * 11);

  GhzScanConfig bad = config;
  bad.copies = {9};
  CHECK_THROWS_AS(curves_csv(bad), std::invalid_argument);
  bad = config;
  bad.p_steps = 1;
  CHECK_THROWS_AS(curves_csv(bad), std::invalid_argument);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(ghz_witness_value(2, 3, 2, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(ghz_witness_value(1, 2, 2, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(ghz_witness_value(2, 2, 2, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(ghz_witness_value(2, 1, 2, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(pt_moment2(1, 2, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(ppt_threshold(2, 1), std::invalid_argument);
}
