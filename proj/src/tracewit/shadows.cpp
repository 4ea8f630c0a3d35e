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

#include "tracewit/shadows.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

namespace tracewit {
namespace shadows {

namespace {

void check_state(const hilbert::DenseOperator& rho) {
  if (rho.factors.empty())
    throw std::invalid_argument("shadows: state has no factor list");
  if (std::abs(rho.mat.trace().real() - 1.0) > 1e-9 ||
      std::abs(rho.mat.trace().imag()) > 1e-9)
    throw std::invalid_argument("shadows: state trace != 1");
  if ((rho.mat - rho.mat.adjoint()).cwiseAbs().maxCoeff() > 1e-9)
    throw std::invalid_argument("shadows: state not Hermitian");
}

Eigen::MatrixXcd kron_mat(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Kahan-compensated accumulator; keeps reductions deterministic and tight.
struct Compensated {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

ShadowRecord simulate_round_with(const hilbert::DenseOperator& rho,
                                 std::vector<Eigen::MatrixXcd> unitaries,
                                 int round, Rng& rng) {
  check_state(rho);
  int n = static_cast<int>(rho.factors.size());
  if (static_cast<int>(unitaries.size()) != n)
    throw std::invalid_argument("shadows: one unitary per party required");
  for (int i = 0; i < n; ++i) {
    int d = rho.factors[i];
    if (unitaries[i].rows() != d || unitaries[i].cols() != d)
      throw std::invalid_argument("shadows: unitary size != local dimension");
    Eigen::MatrixXcd gram =
        unitaries[i].adjoint() * unitaries[i] -
        Eigen::MatrixXcd::Identity(d, d);
    if (gram.cwiseAbs().maxCoeff() > 1e-10)
      throw std::invalid_argument("shadows: non-unitary basis rotation");
  }

  // Born probabilities of the rotated state, computed densely.
  Eigen::MatrixXcd u = unitaries[0];
  for (int i = 1; i < n; ++i) u = kron_mat(u, unitaries[i]);
  Eigen::VectorXd probs = (u * rho.mat * u.adjoint()).diagonal().real();
  long dim = probs.size();
  double total = 0.0;
  for (long x = 0; x < dim; ++x) {
    if (probs(x) < -1e-9)
      throw std::invalid_argument("shadows: state not PSD");
    if (probs(x) < 0.0) probs(x) = 0.0;
    total += probs(x);
  }
  if (std::abs(total - 1.0) > 1e-8)
    throw std::invalid_argument("shadows: Born probabilities do not sum to 1");

  double ticket = rng.uniform01() * total;
  long outcome = dim - 1;
  double acc = 0.0;
  for (long x = 0; x < dim; ++x) {
    acc += probs(x);
    if (ticket < acc) {
      outcome = x;
      break;
    }
  }

  ShadowRecord record;
  record.round = round;
  record.unitaries = std::move(unitaries);
  record.outcomes.resize(n);
  for (int i = n - 1; i >= 0; --i) {
    record.outcomes[i] = static_cast<int>(outcome % rho.factors[i]);
    outcome /= rho.factors[i];
  }
  return record;
}

ShadowRecord simulate_round(const hilbert::DenseOperator& rho, int round,
                            Rng& rng) {
  std::vector<Eigen::MatrixXcd> unitaries;
  unitaries.reserve(rho.factors.size());
  for (int d : rho.factors) unitaries.push_back(hilbert::haar_unitary(d, rng));
  return simulate_round_with(rho, std::move(unitaries), round, rng);
}

std::vector<ShadowRecord> simulate_rounds(const hilbert::DenseOperator& rho,
                                          int m, Rng& rng) {
  std::vector<ShadowRecord> records;
  records.reserve(m);
  for (int r = 0; r < m; ++r) records.push_back(simulate_round(rho, r, rng));
  return records;
}

Eigen::MatrixXcd shadow_factor(const Eigen::MatrixXcd& u, int q, int d) {
  if (u.rows() != d || u.cols() != d)
    throw std::invalid_argument("shadows: unitary size != d");
  if (q < 0 || q >= d) throw std::invalid_argument("shadows: outcome out of range");
  Eigen::VectorXcd v = u.row(q).adjoint();  // U^dag |q>
  return double(d + 1) * (v * v.adjoint()) -
         Eigen::MatrixXcd::Identity(d, d);
}

std::complex<double> cycle_contraction(const sgroup::Permutation& sigma,
                                       const std::vector<Eigen::MatrixXcd>& x) {
  if (static_cast<int>(x.size()) != sigma.degree())
    throw std::invalid_argument("shadows: need one matrix per point");
  long d = x.empty() ? 0 : x[0].rows();
  for (const auto& m : x)
    if (m.rows() != d || m.cols() != d)
      throw std::invalid_argument("shadows: matrices must be square, equal size");

  std::complex<double> value = 1.0;
  for (const auto& cycle : sigma.cycles(/*include_fixed_points=*/true)) {
    // tr(eta(sigma) (x)X_i) couples slot s to slot sigma^{-1}(s); walking the
    // cycle backwards yields tr(X_a X_{sigma^{-1}(a)} ...).
    Eigen::MatrixXcd prod = x[cycle[0]];
    for (std::size_t j = cycle.size(); j-- > 1;) prod = prod * x[cycle[j]];
    value *= prod.trace();
  }
  return value;
}

EstimationReport estimate(const witness::WitnessSpec& spec,
                          const std::vector<ShadowRecord>& records, Rng& rng,
                          long long tuple_budget) {
  int n = spec.parties;
  int k = spec.copies;
  int m = static_cast<int>(records.size());
  if (m < k) throw std::invalid_argument("shadows: fewer rounds than copies");
  if (tuple_budget < 1) throw std::invalid_argument("shadows: empty tuple budget");
  for (const auto& f : spec.factors)
    if (!f.symbolic)
      throw std::invalid_argument(
          "shadows: dense factors defeat the contraction rule; symbolic only");
  {
    std::set<int> rounds;
    for (const auto& rec : records) {
      if (static_cast<int>(rec.unitaries.size()) != n ||
          static_cast<int>(rec.outcomes.size()) != n)
        throw std::invalid_argument("shadows: record party count != spec");
      if (!rounds.insert(rec.round).second)
        throw std::invalid_argument(
            "shadows: round indices must be pairwise distinct");
    }
  }

  // Per-record, per-party shadow factors; spec factors flattened to float
  // coefficient lists once, outside the tuple loop.
  std::vector<std::vector<Eigen::MatrixXcd>> factor(m);
  for (int r = 0; r < m; ++r) {
    factor[r].reserve(n);
    for (int i = 0; i < n; ++i)
      factor[r].push_back(shadow_factor(records[r].unitaries[i],
                                        records[r].outcomes[i],
                                        spec.local_dims[i]));
  }
  std::vector<std::vector<std::pair<sgroup::Permutation, std::complex<double>>>>
      terms(n);
  for (int i = 0; i < n; ++i)
    spec.factors[i].symbolic->for_each_term(
        [&](const sgroup::Permutation& sigma, std::complex<double> coeff) {
          terms[i].emplace_back(sigma, coeff);
        });

  // The estimator averages over ordered distinct k-tuples of rounds. Each
  // unordered k-subset contributes all k! of its orderings, so this equals
  // the symmetrized U-statistic (1/k!) C(m,k)^-1 sum over orderings; we
  // normalize by the ordered count (m)_(k) = k! C(m,k) directly.
  // Count ordered distinct k-tuples; decide on exhaustive vs subsampled.
  long long total_tuples = 1;
  bool overflow = false;
  for (int i = 0; i < k; ++i) {
    total_tuples *= (m - i);
    if (total_tuples > (1LL << 62) / (m + 1)) {
      overflow = true;
      break;
    }
  }
  bool subsample = overflow || total_tuples > tuple_budget;
  long long used = subsample ? tuple_budget : total_tuples;

  std::vector<int> blocks(m);
  const int kBlocks = 10;
  for (int r = 0; r < m; ++r)
    blocks[r] = static_cast<int>((static_cast<long long>(r) * kBlocks) / m);

  std::vector<Eigen::MatrixXcd> party_mats(k);
  std::vector<int> tuple(k);
  Compensated all_sum;
  std::vector<Compensated> excl_sum(kBlocks);   // sums of tuples touching block j
  std::vector<long long> excl_count(kBlocks, 0);
  Compensated sq_sum;

  auto eval_tuple = [&](const std::vector<int>& t) {
    double term = 1.0;
    std::complex<double> cterm = 1.0;
    for (int i = 0; i < n; ++i) {
      for (int c = 0; c < k; ++c) party_mats[c] = factor[t[c]][i];
      std::complex<double> party_value = 0.0;
      for (const auto& [sigma, coeff] : terms[i])
        party_value += coeff * cycle_contraction(sigma, party_mats);
      cterm *= party_value;
    }
    term = cterm.real();
    all_sum.add(term);
    sq_sum.add(term * term);
    std::uint32_t mask = 0;
    for (int c = 0; c < k; ++c) mask |= 1u << blocks[t[c]];
    for (int j = 0; j < kBlocks; ++j)
      if (mask & (1u << j)) {
        excl_sum[j].add(term);
        ++excl_count[j];
      }
  };

  if (!subsample) {
    // Lexicographic enumeration of ordered distinct tuples.
    std::vector<bool> in_use(m, false);
    std::vector<int> cursor(k, 0);
    int depth = 0;
    while (depth >= 0) {
      if (depth == k) {
        eval_tuple(tuple);
        --depth;
        if (depth >= 0) in_use[tuple[depth]] = false;
        continue;
      }
      int& c = cursor[depth];
      while (c < m && in_use[c]) ++c;
      if (c >= m) {
        cursor[depth] = 0;
        --depth;
        if (depth >= 0) in_use[tuple[depth]] = false;
        continue;
      }
      tuple[depth] = c;
      in_use[c] = true;
      ++c;
      ++depth;
      if (depth < k) cursor[depth] = 0;
    }
  } else {
    for (long long s = 0; s < used; ++s) {
      for (int c = 0; c < k; ++c) {
        for (;;) {
          int r = static_cast<int>(rng.uniform_below(m));
          bool dup = false;
          for (int j = 0; j < c; ++j) dup = dup || tuple[j] == r;
          if (!dup) {
            tuple[c] = r;
            break;
          }
        }
      }
      eval_tuple(tuple);
    }
  }

  EstimationReport report;
  report.rounds = m;
  report.tuples_used = used;
  report.subsampled = subsample;
  report.estimate = all_sum.sum / double(used);

  // Delete-block jackknife over round blocks: leave-one-block-out means.
  std::vector<double> leave_out;
  for (int j = 0; j < kBlocks; ++j) {
    long long remain = used - excl_count[j];
    if (remain <= 0) continue;
    leave_out.push_back((all_sum.sum - excl_sum[j].sum) / double(remain));
  }
  int b = static_cast<int>(leave_out.size());
  if (b >= 2) {
    double mean = 0.0;
    for (double v : leave_out) mean += v;
    mean /= b;
    double var = 0.0;
    for (double v : leave_out) var += (v - mean) * (v - mean);
    report.standard_error = std::sqrt(var * double(b - 1) / double(b));
  } else {
    // Degenerate blocking (tiny m): naive i.i.d. fallback.
    double var =
        sq_sum.sum / double(used) - report.estimate * report.estimate;
    report.standard_error = std::sqrt(std::max(var, 0.0) / double(used));
  }
  return report;
}

ConvergenceScan convergence_scan(const witness::WitnessSpec& spec,
                                 const hilbert::DenseOperator& rho,
                                 const std::vector<int>& m_grid,
                                 int repetitions, Rng& rng,
                                 long long tuple_budget) {
  if (m_grid.empty() || repetitions < 1)
    throw std::invalid_argument("shadows: empty convergence grid");
  ConvergenceScan scan;
  scan.ground_truth = witness::evaluate_dense(spec, rho);
  scan.csv = "m,mean_abs_error,ground_truth\n";
  char line[128];
  std::uint64_t stream = 0;
  for (int m : m_grid) {
    Compensated err;
    for (int rep = 0; rep < repetitions; ++rep) {
      Rng sub = rng.derive(++stream);
      std::vector<ShadowRecord> records = simulate_rounds(rho, m, sub);
      EstimationReport report = estimate(spec, records, sub, tuple_budget);
      err.add(std::abs(report.estimate - scan.ground_truth));
    }
    ConvergencePoint point;
    point.m = m;
    point.mean_abs_error = err.sum / repetitions;
    scan.points.push_back(point);
    std::snprintf(line, sizeof line, "%d,%.17g,%.17g\n", point.m,
                  point.mean_abs_error, scan.ground_truth);
    scan.csv += line;
  }

  // Least-squares slope of log(error) against log(m).
  int count = 0;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& point : scan.points) {
    if (point.mean_abs_error <= 0.0) continue;
    double lx = std::log(double(point.m));
    double ly = std::log(point.mean_abs_error);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++count;
  }
  if (count >= 2)
    scan.slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  return scan;
}

}  // namespace shadows
}  // namespace tracewit
