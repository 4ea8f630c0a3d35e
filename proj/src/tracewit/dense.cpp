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

#include "tracewit/dense.hpp"

#include <cmath>
#include <stdexcept>

#include "tracewit/errors.hpp"
#include "tracewit/weingarten.hpp"

namespace tracewit::hilbert {

namespace {

std::vector<long long> strides_of(const std::vector<int>& factors) {
  std::vector<long long> strides(factors.size(), 1);
  for (int s = static_cast<int>(factors.size()) - 2; s >= 0; --s)
    strides[static_cast<std::size_t>(s)] =
        strides[static_cast<std::size_t>(s + 1)] * factors[static_cast<std::size_t>(s + 1)];
  return strides;
}

void decode(long long index, const std::vector<int>& factors, std::vector<int>& digits) {
  digits.resize(factors.size());
  for (int s = static_cast<int>(factors.size()) - 1; s >= 0; --s) {
    digits[static_cast<std::size_t>(s)] = static_cast<int>(index % factors[static_cast<std::size_t>(s)]);
    index /= factors[static_cast<std::size_t>(s)];
  }
}

void check_sites(const std::vector<int>& sites, std::size_t count, const char* what) {
  std::vector<bool> seen(count, false);
  for (int s : sites) {
    if (s < 0 || static_cast<std::size_t>(s) >= count || seen[static_cast<std::size_t>(s)])
      throw std::invalid_argument(std::string(what) + ": bad site list");
    seen[static_cast<std::size_t>(s)] = true;
  }
}

}  // namespace

long long checked_dimension(const std::vector<int>& factors, long long cap) {
  long long dim = 1;
  for (int f : factors) {
    if (f < 1) throw std::invalid_argument("checked_dimension: factor < 1");
    if (dim > cap / f)
      throw DimensionCapError("dense dimension exceeds cap " + std::to_string(cap));
    dim *= f;
  }
  return dim;
}

DenseOperator identity_operator(std::vector<int> factors, long long cap) {
  long long dim = checked_dimension(factors, cap);
  return {Eigen::MatrixXcd::Identity(dim, dim), std::move(factors)};
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b, long long cap) {
  std::vector<int> factors = a.factors;
  factors.insert(factors.end(), b.factors.begin(), b.factors.end());
  long long dim = checked_dimension(factors, cap);
  Eigen::MatrixXcd out(dim, dim);
  const long long bd = b.dim();
  for (long long i = 0; i < a.dim(); ++i)
    for (long long j = 0; j < a.dim(); ++j)
      out.block(i * bd, j * bd, bd, bd) = a.mat(i, j) * b.mat;
  return {std::move(out), std::move(factors)};
}

DenseOperator tensor_power(const DenseOperator& a, int k, long long cap) {
  if (k < 1) throw std::invalid_argument("tensor_power: k must be >= 1");
  DenseOperator out = a;
  for (int i = 1; i < k; ++i) out = kron(out, a, cap);
  return out;
}

DenseOperator projector(const StateVector& psi) {
  return {psi.vec * psi.vec.adjoint(), psi.factors};
}

DenseOperator eta(const sgroup::GroupAlgebraElement& a, int d, long long cap) {
  const int m = a.degree();
  std::vector<int> factors(static_cast<std::size_t>(m), d);
  long long dim = checked_dimension(factors, cap);
  auto strides = strides_of(factors);
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(dim, dim);
  std::vector<int> digits;
  a.for_each_term([&](const sgroup::Permutation& sigma, std::complex<double> c) {
    auto inv = sigma.inverse();
    for (long long col = 0; col < dim; ++col) {
      decode(col, factors, digits);
      long long row = 0;
      for (int s = 0; s < m; ++s)
        row += strides[static_cast<std::size_t>(s)] * digits[static_cast<std::size_t>(inv(s))];
      mat(row, col) += c;
    }
  });
  return {std::move(mat), std::move(factors)};
}

DenseOperator young_projector(const sgroup::Partition& lambda, int d, long long cap) {
  return eta(sgroup::young_idempotent(lambda), d, cap);
}

StateVector ghz_state(int n, int d) {
  if (n < 1 || d < 2) throw std::invalid_argument("ghz_state: need n >= 1, d >= 2");
  std::vector<int> factors(static_cast<std::size_t>(n), d);
  long long dim = checked_dimension(factors, kDefaultDimCap);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  long long repunit = (dim - 1) / (d - 1);  // 1 + d + ... + d^(n-1)
  for (int i = 0; i < d; ++i) v(i * repunit) = 1.0 / std::sqrt(static_cast<double>(d));
  return {std::move(v), std::move(factors)};
}

StateVector bell_phi_plus(int d) { return ghz_state(2, d); }

StateVector bell_psi_plus() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v(1) = v(2) = 1.0 / std::sqrt(2.0);
  return {std::move(v), {2, 2}};
}

DenseOperator noisy_ghz(int n, int d, double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("noisy_ghz: p must be in [0, 1]");
  DenseOperator rho = projector(ghz_state(n, d));
  double dim = static_cast<double>(rho.dim());
  rho.mat = p * rho.mat +
            ((1.0 - p) / dim) * Eigen::MatrixXcd::Identity(rho.dim(), rho.dim());
  return rho;
}

DenseOperator partial_trace(const DenseOperator& op, const std::vector<int>& sites) {
  check_sites(sites, op.factors.size(), "partial_trace");
  std::vector<bool> traced(op.factors.size(), false);
  for (int s : sites) traced[static_cast<std::size_t>(s)] = true;

  std::vector<int> kept_factors;
  std::vector<int> kept_sites;
  std::vector<int> traced_sites;
  for (std::size_t s = 0; s < op.factors.size(); ++s) {
    if (traced[s]) {
      traced_sites.push_back(static_cast<int>(s));
    } else {
      kept_sites.push_back(static_cast<int>(s));
      kept_factors.push_back(op.factors[s]);
    }
  }
  long long kept_dim = 1;
  for (int f : kept_factors) kept_dim *= f;
  long long traced_dim = op.dim() / kept_dim;

  auto strides = strides_of(op.factors);
  auto embed = [&](long long kept_index, long long traced_index) {
    long long full = 0;
    for (int s = static_cast<int>(kept_sites.size()) - 1; s >= 0; --s) {
      int site = kept_sites[static_cast<std::size_t>(s)];
      full += (kept_index % op.factors[static_cast<std::size_t>(site)]) *
              strides[static_cast<std::size_t>(site)];
      kept_index /= op.factors[static_cast<std::size_t>(site)];
    }
    for (int s = static_cast<int>(traced_sites.size()) - 1; s >= 0; --s) {
      int site = traced_sites[static_cast<std::size_t>(s)];
      full += (traced_index % op.factors[static_cast<std::size_t>(site)]) *
              strides[static_cast<std::size_t>(site)];
      traced_index /= op.factors[static_cast<std::size_t>(site)];
    }
    return full;
  };

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(kept_dim, kept_dim);
  for (long long i = 0; i < kept_dim; ++i)
    for (long long j = 0; j < kept_dim; ++j)
      for (long long t = 0; t < traced_dim; ++t)
        out(i, j) += op.mat(embed(i, t), embed(j, t));
  return {std::move(out), std::move(kept_factors)};
}

DenseOperator partial_transpose(const DenseOperator& op, const std::vector<int>& sites) {
  check_sites(sites, op.factors.size(), "partial_transpose");
  std::vector<bool> flip(op.factors.size(), false);
  for (int s : sites) flip[static_cast<std::size_t>(s)] = true;

  auto strides = strides_of(op.factors);
  const long long dim = op.dim();
  Eigen::MatrixXcd out(dim, dim);
  std::vector<int> ri, ci;
  for (long long i = 0; i < dim; ++i) {
    decode(i, op.factors, ri);
    for (long long j = 0; j < dim; ++j) {
      decode(j, op.factors, ci);
      long long src_row = 0, src_col = 0;
      for (std::size_t s = 0; s < op.factors.size(); ++s) {
        int a = ri[s], b = ci[s];
        if (flip[s]) std::swap(a, b);
        src_row += a * strides[s];
        src_col += b * strides[s];
      }
      out(i, j) = op.mat(src_row, src_col);
    }
  }
  return {std::move(out), op.factors};
}

DenseOperator reorder_factors(const DenseOperator& op, const std::vector<int>& source) {
  if (source.size() != op.factors.size())
    throw std::invalid_argument("reorder_factors: source list has wrong length");
  check_sites(source, op.factors.size(), "reorder_factors");

  std::vector<int> new_factors(source.size());
  for (std::size_t p = 0; p < source.size(); ++p)
    new_factors[p] = op.factors[static_cast<std::size_t>(source[p])];

  auto old_strides = strides_of(op.factors);
  auto new_strides = strides_of(new_factors);
  const long long dim = op.dim();
  std::vector<long long> map(static_cast<std::size_t>(dim));
  std::vector<int> digits;
  for (long long i = 0; i < dim; ++i) {
    decode(i, op.factors, digits);
    long long ni = 0;
    for (std::size_t p = 0; p < source.size(); ++p)
      ni += digits[static_cast<std::size_t>(source[p])] * new_strides[p];
    map[static_cast<std::size_t>(i)] = ni;
  }
  Eigen::MatrixXcd out(dim, dim);
  for (long long i = 0; i < dim; ++i)
    for (long long j = 0; j < dim; ++j)
      out(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]) = op.mat(i, j);
  return {std::move(out), std::move(new_factors)};
}

Eigen::MatrixXcd haar_unitary(int d, Rng& rng) {
  if (d < 1) throw std::invalid_argument("haar_unitary: d must be >= 1");
  Eigen::MatrixXcd g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = rng.complex_gaussian();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    std::complex<double> rjj = r(j, j);
    std::complex<double> phase = rjj == std::complex<double>(0.0) ? 1.0 : rjj / std::abs(rjj);
    q.col(j) *= phase;
  }
  return q;
}

StateVector haar_random_state(std::vector<int> factors, Rng& rng) {
  long long dim = checked_dimension(factors, kDefaultDimCap);
  Eigen::VectorXcd v(dim);
  for (long long i = 0; i < dim; ++i) v(i) = rng.complex_gaussian();
  v.normalize();
  return {std::move(v), std::move(factors)};
}

std::complex<double> trace_product(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.cols() || a.cols() != b.rows())
    throw std::invalid_argument("trace_product: shape mismatch");
  return (a.transpose().cwiseProduct(b)).sum();
}

double expectation(const DenseOperator& op, const DenseOperator& rho) {
  if (op.factors != rho.factors) throw std::invalid_argument("expectation: factor mismatch");
  std::complex<double> t = trace_product(op.mat, rho.mat);
  if (std::abs(t.imag()) > 1e-8 * (1.0 + std::abs(t.real())))
    throw std::runtime_error("expectation: non-negligible imaginary part");
  return t.real();
}

BigRat antisym_reduction_coefficient(int k, int d, int r) {
  if (k < 1 || r < 0 || r > k)
    throw std::invalid_argument("antisym_reduction_coefficient: need 0 <= r <= k");
  BigInt num = 1;
  for (int j = 0; j < r; ++j) num *= d + 1 - k + j;
  return BigRat(num * factorial(k - r), factorial(k));
}

}  // namespace tracewit::hilbert
