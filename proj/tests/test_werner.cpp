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

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tracewit/dense.hpp"
#include "tracewit/errors.hpp"
#include "tracewit/weingarten.hpp"
#include "tracewit/werner.hpp"

using namespace tracewit;
using namespace tracewit::sgroup;
using namespace tracewit::hilbert;
using namespace tracewit::werner;

namespace {

double hermiticity_defect(const GroupAlgebraElement& r) {
  GroupAlgebraElement diff = r + dagger(r).scaled(std::complex<double>(-1.0));
  double worst = 0.0;
  diff.for_each_term([&](const Permutation&, std::complex<double> c) {
    worst = std::max(worst, std::abs(c));
  });
  return worst;
}

double min_eigenvalue(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  return solver.eigenvalues().minCoeff();
}

// Applies a 27x27 operator to one party axis of a tensor on
// (C^27)^(x 3) stored with party-major strides (729, 27, 1).
Eigen::VectorXcd apply_party(const Eigen::VectorXcd& in,
                             const Eigen::MatrixXcd& op, int axis) {
  REQUIRE(in.size() == 19683);
  REQUIRE(op.rows() == 27);
  REQUIRE(op.cols() == 27);
  int strides[3] = {729, 27, 1};
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(19683);
  for (int a = 0; a < 27; ++a)
    for (int b = 0; b < 27; ++b)
      for (int c = 0; c < 27; ++c) {
        int idx[3] = {a, b, c};
        int base = a * strides[0] + b * strides[1] + c * strides[2];
        std::complex<double> acc = 0.0;
        for (int j = 0; j < 27; ++j) {
          int src = base + (j - idx[axis]) * strides[axis];
          acc += op(idx[axis], j) * in(src);
        }
        out(base) = acc;
      }
  return out;
}

}  // namespace

TEST_CASE("sampled states are normalized hermitian ideal elements") {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    GroupRingState st = sample_state(3, 3, rng);
    CHECK(st.parties == 3);
    CHECK(st.local_dim == 3);
    CHECK(st.r.degree() == 3);
    CHECK(std::abs(tau(st.r).real() - 1.0) < 1e-12);
    CHECK(std::abs(tau(st.r).imag()) < 1e-12);
    CHECK(hermiticity_defect(st.r) < 1e-12);
    CHECK(in_jd_ideal(st.r, 3, 1e-9));
  }
  // d < n activates the ideal projection and must land inside J_2.
  for (int trial = 0; trial < 6; ++trial) {
    GroupRingState st = sample_state(3, 2, rng);
    CHECK(std::abs(tau(st.r).real() - 1.0) < 1e-12);
    CHECK(hermiticity_defect(st.r) < 1e-12);
    CHECK(in_jd_ideal(st.r, 2, 1e-9));
  }
  // Two parties as a degenerate sanity point.
  GroupRingState two = sample_state(2, 2, rng);
  CHECK(std::abs(tau(two.r).real() - 1.0) < 1e-12);
  CHECK(in_jd_ideal(two.r, 2, 1e-9));
}

TEST_CASE("rendered samples are density matrices") {
  Rng rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    GroupRingState st = sample_state(3, 3, rng);
    DenseOperator rho = render_dense(st);
    REQUIRE(rho.mat.rows() == 27);
    CHECK(std::abs(rho.mat.trace().real() - 1.0) < 1e-9);
    CHECK(std::abs(rho.mat.trace().imag()) < 1e-12);
    CHECK((rho.mat - rho.mat.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(min_eigenvalue(rho.mat) > -1e-9);
  }
  for (int trial = 0; trial < 6; ++trial) {
    GroupRingState st = sample_state(3, 2, rng);
    DenseOperator rho = render_dense(st);
    REQUIRE(rho.mat.rows() == 8);
    CHECK(std::abs(rho.mat.trace().real() - 1.0) < 1e-9);
    CHECK(min_eigenvalue(rho.mat) > -1e-9);
  }
}

TEST_CASE("the maximally mixed point renders flat with known projections") {
  GroupRingState mm = maximally_mixed_state(3, 3);
  CHECK(std::abs(tau(mm.r).real() - 1.0) < 1e-12);
  DenseOperator rho = render_dense(mm);
  Eigen::MatrixXcd flat =
      Eigen::MatrixXcd::Identity(27, 27) / 27.0;
  CHECK((rho.mat - flat).cwiseAbs().maxCoeff() < 1e-12);

  auto [p, q] = projections(mm);
  CHECK(std::abs(p - 1.0 / 27.0) < 1e-12);
  CHECK(std::abs(q - 10.0 / 27.0) < 1e-12);
  CHECK(std::abs(linear_value(mm) - 6.0 / 27.0) < 1e-12);

  GroupRingState mm22 = maximally_mixed_state(2, 2);
  DenseOperator rho22 = render_dense(mm22);
  CHECK((rho22.mat - Eigen::MatrixXcd::Identity(4, 4) / 4.0)
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  auto [p22, q22] = projections(mm22);
  CHECK(std::abs(p22 - 1.0 / 4.0) < 1e-12);
  CHECK(std::abs(q22 - 3.0 / 4.0) < 1e-12);
}

TEST_CASE("symbolic projections match dense traces and are complete") {
  Rng rng(31);
  DenseOperator anti = young_projector(Partition({1, 1, 1}), 3);
  DenseOperator sym = young_projector(Partition({3}), 3);
  DenseOperator mid = young_projector(Partition({2, 1}), 3);
  for (int trial = 0; trial < 20; ++trial) {
    GroupRingState st = sample_state(3, 3, rng);
    auto [p, q] = projections(st);
    CHECK(p >= -1e-12);
    CHECK(q >= -1e-12);
    CHECK(p + q <= 1.0 + 1e-12);
    DenseOperator rho = render_dense(st);
    double p_dense = trace_product(anti.mat, rho.mat).real();
    double q_dense = trace_product(sym.mat, rho.mat).real();
    double mid_dense = trace_product(mid.mat, rho.mat).real();
    CHECK(std::abs(p - p_dense) < 1e-9);
    CHECK(std::abs(q - q_dense) < 1e-9);
    CHECK(std::abs(p + q + mid_dense - 1.0) < 1e-9);
  }
}

TEST_CASE("the linear witness vanishes exactly on the q = (1-p)/5 line") {
  Rng rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    GroupRingState st = sample_state(3, 3, rng);
    auto [p, q] = projections(st);
    double lin = linear_value(st);
    // Algebraic identity: q - (1-p-q)/4 = (5/4)(q - (1-p)/5).
    CHECK(std::abs(lin - 1.25 * (q - (1.0 - p) / 5.0)) < 1e-12);
    CHECK(std::abs(lin - (q - (1.0 - p - q) / 4.0)) < 1e-12);
  }
  // Walk a convex mix from the antisymmetric corner (linear 0) toward the
  // symmetric corner (linear 1) and bisect the sign change of q - (1-p)/5
  // after shifting by the mixed block; the crossing matches linear_value 0.
  GroupRingState anti;
  anti.parties = 3;
  anti.local_dim = 3;
  anti.r = young_idempotent(Partition({1, 1, 1})).to_float();
  GroupRingState mixed;
  mixed.parties = 3;
  mixed.local_dim = 3;
  mixed.r = young_idempotent(Partition({2, 1})).to_float().scaled(0.25);
  auto blend = [&](double t) {
    GroupRingState st;
    st.parties = 3;
    st.local_dim = 3;
    st.r = anti.r.scaled(1.0 - t) + mixed.r.scaled(t);
    return st;
  };
  // linear(blend(t)) = -t/4 + 0*(1-t) ... strictly decreasing from 0, so the
  // line is only touched at t = 0; instead mix mixed-block against symmetric.
  GroupRingState symc;
  symc.parties = 3;
  symc.local_dim = 3;
  symc.r = young_idempotent(Partition({3})).to_float();
  auto blend2 = [&](double t) {
    GroupRingState st;
    st.parties = 3;
    st.local_dim = 3;
    st.r = mixed.r.scaled(1.0 - t) + symc.r.scaled(t);
    return st;
  };
  double lo = 0.0, hi = 1.0;
  REQUIRE(linear_value(blend2(lo)) < 0.0);
  REQUIRE(linear_value(blend2(hi)) > 0.0);
  for (int it = 0; it < 60; ++it) {
    double midt = 0.5 * (lo + hi);
    (linear_value(blend2(midt)) < 0.0 ? lo : hi) = midt;
  }
  auto [pc, qc] = projections(blend2(0.5 * (lo + hi)));
  CHECK(std::abs(qc - (1.0 - pc) / 5.0) < 1e-9);
  CHECK(std::abs(linear_value(blend(0.5)) + 0.125) < 1e-12);
}

TEST_CASE("nonlinear evaluation agrees with the dense oracle at d = 2") {
  Rng rng(53);
  witness::WitnessSpec spec = nonlinear_spec(2);
  for (int trial = 0; trial < 6; ++trial) {
    GroupRingState st = sample_state(3, 2, rng);
    witness::GroupRingEvalStats stats;
    double symbolic = nonlinear_value(st, &stats);
    double dense = witness::evaluate_dense(spec, render_dense(st));
    CHECK(std::abs(symbolic - dense) < 1e-8);
    CHECK(stats.peak_support > 0);
    CHECK(stats.peak_support < 100000);
  }
  // Corner states of the invariant family at d = 2 (no antisymmetric block).
  for (const Partition& lambda : {Partition({3}), Partition({2, 1})}) {
    GroupAlgebraElement omega = young_idempotent(lambda).to_float();
    GroupRingState st;
    st.parties = 3;
    st.local_dim = 2;
    st.r = omega.scaled(1.0 / tau(omega).real());
    double symbolic = nonlinear_value(st);
    double dense = witness::evaluate_dense(spec, render_dense(st));
    CHECK(std::abs(symbolic - dense) < 1e-8);
  }
}

TEST_CASE("the antisymmetric corner is detected only nonlinearly") {
  GroupRingState corner;
  corner.parties = 3;
  corner.local_dim = 3;
  corner.r = young_idempotent(Partition({1, 1, 1})).to_float();
  REQUIRE(std::abs(tau(corner.r).real() - 1.0) < 1e-12);

  auto [p, q] = projections(corner);
  CHECK(std::abs(p - 1.0) < 1e-12);
  CHECK(std::abs(q) < 1e-12);
  CHECK(std::abs(linear_value(corner)) < 1e-12);

  double nonlin = nonlinear_value(corner);
  CHECK(nonlin < -1e-3);
  CHECK(std::abs(nonlin + 1.0 / 12.0) < 1e-10);

  // Independent oracle: the corner renders to the rank-one antisymmetric
  // projector |A><A|, so tr(W (x) W (x) P (rho^(x 3))) = <T| M |T> with
  // T = A (x) A (x) A regrouped party-major and M applied one party at a
  // time on the (C^27)^(x 3) tensor.
  DenseOperator rho = render_dense(corner);
  DenseOperator anti = young_projector(Partition({1, 1, 1}), 3);
  CHECK((rho.mat - anti.mat).cwiseAbs().maxCoeff() < 1e-12);

  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(27);
  int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                     {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  double signs[6] = {1, 1, 1, -1, -1, -1};
  for (int i = 0; i < 6; ++i)
    a(perms[i][0] * 9 + perms[i][1] * 3 + perms[i][2]) =
        signs[i] / std::sqrt(6.0);
  REQUIRE(std::abs(a.squaredNorm() - 1.0) < 1e-12);

  // T indexed party-major: T[(a0 a1 a2),(b0 b1 b2),(c0 c1 c2)] =
  // prod_j A[a_j b_j c_j] over copies j.
  Eigen::VectorXcd t = Eigen::VectorXcd::Zero(19683);
  for (int ia = 0; ia < 27; ++ia)
    for (int ib = 0; ib < 27; ++ib)
      for (int ic = 0; ic < 27; ++ic) {
        int ad[3] = {ia / 9, (ia / 3) % 3, ia % 3};
        int bd[3] = {ib / 9, (ib / 3) % 3, ib % 3};
        int cd[3] = {ic / 9, (ic / 3) % 3, ic % 3};
        std::complex<double> val = 1.0;
        for (int j = 0; j < 3; ++j)
          val *= a(ad[j] * 9 + bd[j] * 3 + cd[j]);
        t(ia * 729 + ib * 27 + ic) = val;
      }

  witness::WitnessSpec spec = nonlinear_spec(3);
  Eigen::MatrixXcd w_mat = eta(spec.factors[0].symbolic->to_float(), 3).mat;
  Eigen::MatrixXcd pos_mat = eta(spec.factors[2].symbolic->to_float(), 3).mat;
  Eigen::VectorXcd image = apply_party(t, w_mat, 0);
  image = apply_party(image, w_mat, 1);
  image = apply_party(image, pos_mat, 2);
  std::complex<double> oracle = t.adjoint() * image;
  CHECK(std::abs(oracle.imag()) < 1e-10);
  CHECK(std::abs(nonlin - oracle.real()) < 1e-10);
}

TEST_CASE("scatter csv is deterministic with the documented columns") {
  std::string csv = scatter_csv(150, 42);
  std::istringstream lines(csv);
  std::string header;
  REQUIRE(std::getline(lines, header));
  CHECK(header == "id,p,q,linear_value,nonlinear_value");

  int rows = 0;
  std::string line;
  while (std::getline(lines, line)) {
    int id = -1;
    double p = 0, q = 0, lin = 0, nonlin = 0;
    REQUIRE(std::sscanf(line.c_str(), "%d,%lg,%lg,%lg,%lg", &id, &p, &q, &lin,
                        &nonlin) == 5);
    CHECK(id == rows);
    CHECK(p >= -1e-12);
    CHECK(q >= -1e-12);
    CHECK(p + q <= 1.0 + 1e-12);
    CHECK(std::abs(lin - 1.25 * (q - (1.0 - p) / 5.0)) < 1e-12);
    if (lin < 0.0) CHECK(q < (1.0 - p) / 5.0 + 1e-9);
    ++rows;
  }
  CHECK(rows == 150);

  CHECK(scatter_csv(25, 7) == scatter_csv(25, 7));
  CHECK(scatter_csv(25, 7) != scatter_csv(25, 8));

  std::string path = "test_werner_scatter.csv";
  emit_scatter(10, 3, path);
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == scatter_csv(10, 3));
  std::remove(path.c_str());
}

TEST_CASE("werner arguments are validated") {
  Rng rng(5);
  CHECK_THROWS_AS(sample_state(1, 3, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_state(3, 1, rng), std::invalid_argument);
  CHECK_THROWS_AS(maximally_mixed_state(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(scatter_csv(0, 1), std::invalid_argument);

  // A state advertised at d = 2 but supported outside J_2 must be rejected.
  GroupRingState bogus;
  bogus.parties = 3;
  bogus.local_dim = 2;
  bogus.r = young_idempotent(Partition({1, 1, 1})).to_float();
  CHECK_THROWS_AS(projections(bogus), std::invalid_argument);

  // The three-party witnesses reject other party counts.
  GroupRingState two = sample_state(2, 2, rng);
  CHECK_THROWS_AS(linear_value(two), std::invalid_argument);
  CHECK_THROWS_AS(nonlinear_value(two), std::invalid_argument);
}
