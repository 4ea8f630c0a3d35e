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

#include "tracewit/witness.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tracewit/errors.hpp"
#include "tracewit/weingarten.hpp"

namespace tracewit::witness {

using sgroup::GroupAlgebraElement;
using sgroup::Partition;
using sgroup::Permutation;

WitnessSpec compose_nonlinear(std::vector<WitnessFactor> factors, int copies,
                              std::vector<int> local_dims) {
  if (copies < 1) throw std::invalid_argument("compose_nonlinear: copies must be >= 1");
  if (factors.empty() || factors.size() != local_dims.size())
    throw std::invalid_argument("compose_nonlinear: one factor and one dimension per party");
  bool has_witness = false;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const WitnessFactor& f = factors[i];
    if (f.symbolic.has_value() == f.dense.has_value())
      throw std::invalid_argument("compose_nonlinear: factor must be symbolic xor dense");
    if (local_dims[i] < 2)
      throw std::invalid_argument("compose_nonlinear: local dimension must be >= 2");
    if (f.symbolic && f.symbolic->degree() != copies)
      throw std::invalid_argument("compose_nonlinear: symbolic factor degree != copies");
    if (f.dense) {
      std::vector<int> expected(static_cast<std::size_t>(copies), local_dims[i]);
      if (f.dense->factors != expected)
        throw std::invalid_argument("compose_nonlinear: dense factor has wrong shape");
      if (f.role == FactorRole::kPositive) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(f.dense->mat);
        if (es.eigenvalues().minCoeff() < -1e-10)
          throw std::invalid_argument("compose_nonlinear: positive factor is not PSD");
      }
    }
    if (f.role == FactorRole::kWitness) has_witness = true;
  }
  if (!has_witness)
    throw std::invalid_argument("compose_nonlinear: at least one factor must be a witness");
  WitnessSpec spec;
  spec.parties = static_cast<int>(factors.size());
  spec.copies = copies;
  spec.local_dims = std::move(local_dims);
  spec.factors = std::move(factors);
  return spec;
}

namespace {

GroupAlgebraElement normalized_projector(const Partition& lambda) {
  BigInt chi(sgroup::character_identity(lambda));
  return sgroup::young_idempotent(lambda).scaled(ExactComplex(BigRat(1, chi * chi)));
}

Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

}  // namespace

CatalogWitness catalog_witness(CatalogFamily family, int n,
                               const std::optional<Partition>& lambda,
                               CatalogNormalization normalization) {
  if (n < 2) throw std::invalid_argument("catalog_witness: need n >= 2");
  if (lambda && lambda->weight() != n)
    throw std::invalid_argument("catalog_witness: |lambda| != n");

  CatalogWitness w;
  w.family = family;
  w.lambda = lambda;
  w.n = n;
  w.normalization = normalization;

  const GroupAlgebraElement one = GroupAlgebraElement::identity(n);
  const BigRat nf(factorial(n));
  bool scale_by_nf = false;

  switch (family) {
    case CatalogFamily::kHadamard: {
      if (lambda) throw std::invalid_argument("catalog_witness: hadamard takes no lambda");
      w.element = one - sgroup::young_idempotent(ones(n)).scaled(ExactComplex(nf));
      w.name = "hadamard";
      w.inequality = "prod_i A_ii >= det(A)";
      break;
    }
    case CatalogFamily::kSchur: {
      if (!lambda) throw std::invalid_argument("catalog_witness: schur needs lambda");
      if (*lambda == ones(n))
        throw std::invalid_argument("catalog_witness: schur(1^n) is degenerate");
      w.element = normalized_projector(*lambda) - sgroup::young_idempotent(ones(n));
      w.name = "schur" + lambda->to_string();
      w.inequality = "imm_" + lambda->to_string() + "(A)/chi(id) >= det(A)";
      scale_by_nf = true;
      break;
    }
    case CatalogFamily::kHook: {
      if (!lambda) throw std::invalid_argument("catalog_witness: hook needs lambda");
      if (!lambda->is_hook() || lambda->part(0) >= n)
        throw std::invalid_argument("catalog_witness: hook needs lambda = (j,1^(n-j)), j < n");
      int j = lambda->part(0);
      std::vector<int> up{j + 1};
      for (int t = 0; t < n - j - 1; ++t) up.push_back(1);
      Partition lambda_up(up);
      w.element = normalized_projector(lambda_up) - normalized_projector(*lambda);
      w.name = "hook" + lambda->to_string();
      w.inequality = "imm_" + lambda->to_string() + "(A)/chi(id) >= imm_" +
                     lambda_up.to_string() + "(A)/chi(id)";
      scale_by_nf = true;
      break;
    }
    case CatalogFamily::kMarcus: {
      if (lambda) throw std::invalid_argument("catalog_witness: marcus takes no lambda");
      w.element = sgroup::young_idempotent(Partition({n})).scaled(ExactComplex(nf)) - one;
      w.name = "marcus";
      w.inequality = "per(A) >= prod_i A_ii";
      break;
    }
    case CatalogFamily::kPermanent: {
      if (!lambda) throw std::invalid_argument("catalog_witness: permanent needs lambda");
      if (*lambda == Partition({n}))
        throw std::invalid_argument("catalog_witness: permanent((n)) is degenerate");
      w.element = sgroup::young_idempotent(Partition({n})) - normalized_projector(*lambda);
      w.name = "permanent" + lambda->to_string();
      w.inequality =
          "per(A) >= imm_" + lambda->to_string() + "(A)/chi(id)   [conjectured]";
      w.conjectured = true;
      scale_by_nf = true;
      break;
    }
  }
  if (scale_by_nf && normalization == CatalogNormalization::kPermutation)
    w.element = w.element.scaled(ExactComplex(nf));
  return w;
}

std::vector<CatalogWitness> catalog_listing(int n) {
  std::vector<CatalogWitness> out;
  out.push_back(catalog_witness(CatalogFamily::kHadamard, n, std::nullopt,
                                CatalogNormalization::kPermutation));
  std::optional<Partition> lam;
  if (n == 2) {
    lam = Partition({2});
  } else {
    lam = Partition({n - 1, 1});
  }
  out.push_back(catalog_witness(CatalogFamily::kSchur, n, lam,
                                CatalogNormalization::kPermutation));
  if (n >= 3)
    out.push_back(catalog_witness(CatalogFamily::kHook, n, Partition({n - 1, 1}),
                                  CatalogNormalization::kPermutation));
  else
    out.push_back(catalog_witness(CatalogFamily::kHook, n, ones(n),
                                  CatalogNormalization::kPermutation));
  out.push_back(catalog_witness(CatalogFamily::kMarcus, n, std::nullopt,
                                CatalogNormalization::kPermutation));
  // permanent((n)) is degenerate; at n = 2 the only other choice is (1,1).
  std::optional<Partition> per_lam = n == 2 ? Partition({1, 1}) : lam;
  out.push_back(catalog_witness(CatalogFamily::kPermanent, n, per_lam,
                                CatalogNormalization::kPermutation));
  return out;
}

std::string catalog_text(int n) {
  std::ostringstream os;
  os << "catalog for n = " << n << " (permutation normalization)\n";
  for (const auto& w : catalog_listing(n)) {
    os << w.name << "\n"
       << "  inequality: " << w.inequality << "\n"
       << "  status: " << (w.conjectured ? "conjectured" : "proven") << "\n"
       << "  expansion: " << sgroup::to_string(w.element) << "\n";
  }
  if (n == 2)
    os << "note: for n = 2 the hadamard and marcus witnesses both reduce to the swap"
          " operator.\n";
  return os.str();
}

hilbert::DenseOperator witness_bell_xxzz() {
  Eigen::MatrixXcd x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  hilbert::DenseOperator xx = hilbert::kron({x, {2}}, {x, {2}});
  hilbert::DenseOperator zz = hilbert::kron({z, {2}}, {z, {2}});
  return {Eigen::MatrixXcd::Identity(4, 4) - xx.mat - zz.mat, {2, 2}};
}

hilbert::DenseOperator witness_phi_plus_pt(int d) {
  // Partial transpose of the unnormalized maximally entangled projector
  // sum_ij |ii><jj|, which is the swap operator. The unnormalized convention
  // is the one under which tr((phi+ x V)(rho x sigma)) = tr(rho^Gamma sigma)
  // holds without dimension factors.
  hilbert::DenseOperator v =
      hilbert::partial_transpose(hilbert::projector(hilbert::bell_phi_plus(d)), {1});
  v.mat *= double(d);
  return v;
}

namespace {

hilbert::DenseOperator render_factor(const WitnessFactor& f, int d, long long cap) {
  if (f.dense) return *f.dense;
  return hilbert::eta(*f.symbolic, d, cap);
}

}  // namespace

double evaluate_dense(const WitnessSpec& spec, const hilbert::DenseOperator& rho,
                      long long dim_cap) {
  if (rho.factors != spec.local_dims)
    throw std::invalid_argument("evaluate_dense: state factors != spec local dims");
  const int n = spec.parties;
  const int k = spec.copies;

  hilbert::DenseOperator w = render_factor(spec.factors[0], spec.local_dims[0], dim_cap);
  for (int i = 1; i < n; ++i)
    w = hilbert::kron(w, render_factor(spec.factors[static_cast<std::size_t>(i)],
                                       spec.local_dims[static_cast<std::size_t>(i)], dim_cap),
                      dim_cap);

  hilbert::DenseOperator power = hilbert::tensor_power(rho, k, dim_cap);
  // Regroup the copy-major k-fold power to the spec's party-major site order.
  std::vector<int> source(static_cast<std::size_t>(n * k));
  for (int p = 0; p < n * k; ++p)
    source[static_cast<std::size_t>(p)] = (p % k) * n + (p / k);
  hilbert::DenseOperator grouped = hilbert::reorder_factors(power, source);
  return hilbert::expectation(w, grouped);
}

double evaluate_group_ring(const WitnessSpec& spec, const GroupAlgebraElement& r, int d,
                           GroupRingEvalStats* stats, std::size_t support_cap) {
  const int n = spec.parties;
  const int k = spec.copies;
  if (r.degree() != n) throw std::invalid_argument("evaluate_group_ring: r degree != parties");
  std::vector<GroupAlgebraElement> ws;
  for (const auto& f : spec.factors) {
    if (!f.symbolic)
      throw std::invalid_argument("evaluate_group_ring: all factors must be symbolic");
    ws.push_back(*f.symbolic);
  }
  for (int dim : spec.local_dims)
    if (dim != d)
      throw std::invalid_argument("evaluate_group_ring: spec local dims must all equal d");

  std::size_t peak = 0;
  GroupAlgebraElement base = sgroup::algebra_mul(sgroup::weingarten(d, n), r, support_cap, &peak);
  GroupAlgebraElement copies_part = sgroup::embed_copies(base, k, support_cap, &peak);
  GroupAlgebraElement parties_part = sgroup::embed_parties(ws, support_cap, &peak);
  GroupAlgebraElement x =
      sgroup::algebra_mul(copies_part, parties_part, support_cap, &peak);
  if (stats) stats->peak_support = peak;

  // Value = n!^k sum_pi x_pi wginv_d(cycle type of pi), with the Weingarten
  // inverse class function evaluated lazily on the cycle types that occur.
  std::map<std::vector<int>, double> wginv_cache;
  std::complex<double> sum = 0.0;
  x.for_each_term([&](const Permutation& pi, std::complex<double> c) {
    auto type = pi.cycle_type();
    auto it = wginv_cache.find(type);
    if (it == wginv_cache.end()) {
      double v = to_double(sgroup::weingarten_inverse_value(d, n * k, Partition(type)));
      it = wginv_cache.emplace(std::move(type), v).first;
    }
    sum += c * it->second;
  });
  double scale = std::pow(to_double(factorial(n)), k);
  std::complex<double> value = scale * sum;
  if (std::abs(value.imag()) > 1e-8 * (1.0 + std::abs(value.real())))
    throw std::runtime_error("evaluate_group_ring: non-negligible imaginary part");
  return value.real();
}

ConcentrationOutcome concentration_outcome(const hilbert::StateVector& psi,
                                           const hilbert::DenseOperator& p) {
  if (psi.factors.size() != 2)
    throw std::invalid_argument("concentration_outcome: psi must be bipartite");
  const int da = psi.factors[0];
  const int db = psi.factors[1];
  if (p.factors != std::vector<int>{db, db})
    throw std::invalid_argument("concentration_outcome: projector must act on B, B'");

  hilbert::DenseOperator rho = hilbert::projector(psi);
  hilbert::DenseOperator two = hilbert::kron(rho, rho);   // A B A' B'
  two = hilbert::reorder_factors(two, {0, 2, 1, 3});      // A A' B B'
  hilbert::DenseOperator full =
      hilbert::kron(hilbert::identity_operator({da, da}), p);
  hilbert::DenseOperator product{full.mat * two.mat, two.factors};
  double prob = product.mat.trace().real();
  if (prob < 1e-12)
    throw ZeroProbabilityError("concentration_outcome: outcome probability is zero");
  hilbert::DenseOperator xi = hilbert::partial_trace(product, {2, 3});
  xi.mat = ((xi.mat + xi.mat.adjoint()) / 2.0).eval() / prob;
  return {prob, std::move(xi)};
}

double rank_criterion_value(const hilbert::DenseOperator& rho, int k, long long dim_cap) {
  if (rho.factors.size() != 2)
    throw std::invalid_argument("rank_criterion_value: rho must be bipartite");
  const long long global = rho.dim();
  if (global > static_cast<long long>(1) << 20)
    throw DimensionCapError("rank_criterion_value: state too large");

  Partition anti(std::vector<int>(static_cast<std::size_t>(k), 1));
  hilbert::DenseOperator flat{rho.mat, {static_cast<int>(global)}};
  double t_global = hilbert::expectation(
      hilbert::young_projector(anti, static_cast<int>(global), dim_cap),
      hilbert::tensor_power(flat, k, dim_cap));

  hilbert::DenseOperator marginal = hilbert::partial_trace(rho, {1});
  double t_marginal = hilbert::expectation(
      hilbert::young_projector(anti, rho.factors[0], dim_cap),
      hilbert::tensor_power(marginal, k, dim_cap));
  return t_global - t_marginal;
}

double haar_average(int n, int k, int d) {
  if (n < 1 || k < 1 || d < 2) throw std::invalid_argument("haar_average: bad arguments");
  if (n % 2 == 1) return 0.0;
  BigInt global = 1;
  for (int i = 0; i < n; ++i) global *= d;
  // C(global + k - 1, k) without assuming global fits common integer types.
  BigInt denom = 1;
  for (int i = 0; i < k; ++i) {
    denom *= global + k - 1 - i;
    denom /= i + 1;
  }
  BigInt local = binomial(d, k);
  BigInt num = 1;
  for (int i = 0; i < n; ++i) num *= local;
  BigRat value = BigRat(num, denom) * (BigInt(1) - factorial(k));
  return to_double(value);
}

double npt_overlap(const hilbert::DenseOperator& rho, const hilbert::DenseOperator& sigma) {
  if (rho.factors.size() != 2 || rho.factors != sigma.factors)
    throw std::invalid_argument("npt_overlap: operators must be bipartite on equal factors");
  return hilbert::expectation(hilbert::partial_transpose(rho, {1}), sigma);
}

}  // namespace tracewit::witness
