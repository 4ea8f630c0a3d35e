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

#include "tracewit/inequalities.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tracewit/numeric.hpp"
#include "tracewit/permutation.hpp"

namespace tracewit {
namespace witness {

using sgroup::Partition;
using sgroup::Permutation;

std::complex<double> immanant(const Partition& lambda, const Eigen::MatrixXcd& a) {
  int n = static_cast<int>(a.rows());
  if (a.cols() != n) throw std::invalid_argument("immanant: matrix not square");
  if (lambda.weight() != n)
    throw std::invalid_argument("immanant: partition weight does not match size");
  if (n > 8) throw std::invalid_argument("immanant: size above the n <= 8 guard");

  std::map<Partition, double> chi;
  for (const auto& mu : Partition::all(n))
    chi.emplace(mu, static_cast<double>(sgroup::character(lambda, mu)));

  std::complex<double> acc = 0.0;
  for (const auto& sigma : sgroup::all_permutations(n)) {
    std::complex<double> prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= a(i, sigma(i));
    acc += chi.at(Partition(sigma.cycle_type())) * prod;
  }
  return acc;
}

std::complex<double> permanent(const Eigen::MatrixXcd& a) {
  return immanant(Partition(std::vector<int>{static_cast<int>(a.rows())}), a);
}

namespace {

double real_checked(std::complex<double> z, const char* what) {
  if (std::abs(z.imag()) > 1e-9 * (1.0 + std::abs(z.real())))
    throw std::runtime_error(std::string("inequalities: ") + what +
                             " unexpectedly non-real");
  return z.real();
}

Eigen::MatrixXcd random_unit_gram(int n, Rng& rng) {
  Eigen::MatrixXcd g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
    g.row(i).normalize();
  }
  return g * g.adjoint();
}

struct RowAccumulator {
  InequalityRow row;
  void record(double slack, double tol) {
    ++row.trials;
    if (row.trials == 1 || slack < row.min_slack) row.min_slack = slack;
    if (slack < -tol) ++row.violations;
  }
};

Partition hook_partition(int j, int n) {
  std::vector<int> parts{j};
  for (int i = 0; i < n - j; ++i) parts.push_back(1);
  return Partition(parts);
}

}  // namespace

InequalityReport verify_matrix_inequalities(int trials, int n, Rng& rng, double tol) {
  if (n < 2 || n > 6)
    throw std::invalid_argument("verify_matrix_inequalities: n must be in [2, 6]");
  if (trials < 1)
    throw std::invalid_argument("verify_matrix_inequalities: trials must be positive");

  std::vector<Partition> all = Partition::all(n);
  Partition ones(std::vector<int>(n, 1));
  Partition full{std::vector<int>{n}};

  std::vector<RowAccumulator> acc;
  // Index bookkeeping: the evaluation loop walks rows in the same order.
  acc.push_back({{"hadamard: diag(A) - det(A)", false, 0, 0.0, 0}});
  std::vector<Partition> schur_lams;
  for (const auto& lam : all)
    if (!(lam == ones)) schur_lams.push_back(lam);
  for (const auto& lam : schur_lams)
    acc.push_back({{"schur " + lam.to_string() + ": imm/chi - det(A)", false, 0, 0.0, 0}});
  for (int j = 1; j < n; ++j)
    acc.push_back({{"hook " + hook_partition(j + 1, n).to_string() + " vs " +
                        hook_partition(j, n).to_string(),
                    false, 0, 0.0, 0}});
  acc.push_back({{"marcus: per(A) - diag(A)", false, 0, 0.0, 0}});
  std::vector<Partition> dom_lams;
  for (const auto& lam : all)
    if (!(lam == full)) dom_lams.push_back(lam);
  for (const auto& lam : dom_lams)
    acc.push_back(
        {{"permanent dominance " + lam.to_string() + ": per(A) - imm/chi", true, 0, 0.0, 0}});
  acc.push_back({{"hadamard product: det(A o B) - det(A) diag(B)", false, 0, 0.0, 0}});
  acc.push_back({{"block permanent: per(A) - per(A11) per(A22)", false, 0, 0.0, 0}});

  for (int t = 0; t < trials; ++t) {
    Eigen::MatrixXcd a = random_unit_gram(n, rng);
    Eigen::MatrixXcd b = random_unit_gram(n, rng);

    std::map<Partition, double> imm;
    for (const auto& lam : all)
      imm[lam] = real_checked(immanant(lam, a), "immanant of a PSD matrix");
    double det = imm.at(ones);
    double per = imm.at(full);
    double diag = 1.0;
    for (int i = 0; i < n; ++i) diag *= a(i, i).real();

    std::size_t idx = 0;
    acc[idx++].record(diag - det, tol);
    for (const auto& lam : schur_lams)
      acc[idx++].record(imm.at(lam) / static_cast<double>(sgroup::character_identity(lam)) - det,
                        tol);
    for (int j = 1; j < n; ++j) {
      Partition lo = hook_partition(j, n), hi = hook_partition(j + 1, n);
      double dlo = imm.at(lo) / static_cast<double>(sgroup::character_identity(lo));
      double dhi = imm.at(hi) / static_cast<double>(sgroup::character_identity(hi));
      acc[idx++].record(dhi - dlo, tol);
    }
    acc[idx++].record(per - diag, tol);
    for (const auto& lam : dom_lams)
      acc[idx++].record(per - imm.at(lam) / static_cast<double>(sgroup::character_identity(lam)),
                        tol);

    Eigen::MatrixXcd had = a.cwiseProduct(b);
    double diag_b = 1.0;
    for (int i = 0; i < n; ++i) diag_b *= b(i, i).real();
    double det_a = real_checked(immanant(ones, a), "det");
    double det_had = real_checked(immanant(ones, had), "det of a Hadamard product");
    acc[idx++].record(det_had - det_a * diag_b, tol);

    int h = n / 2;
    double per11 = real_checked(permanent(a.topLeftCorner(h, h)), "block permanent");
    double per22 =
        real_checked(permanent(a.bottomRightCorner(n - h, n - h)), "block permanent");
    acc[idx++].record(per - per11 * per22, tol);
  }

  InequalityReport report;
  report.n = n;
  report.trials = trials;
  for (auto& r : acc) report.rows.push_back(r.row);
  return report;
}

std::string inequality_report_text(const InequalityReport& report) {
  std::ostringstream os;
  os << "matrix inequalities, n = " << report.n << ", trials = " << report.trials
     << "\n";
  for (const auto& row : report.rows) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "% .6e", row.min_slack);
    os << "  [" << (row.conjectured ? "conjectured" : "proven     ") << "] "
       << row.name << "  min slack " << buf << "  violations " << row.violations
       << "\n";
  }
  return os.str();
}

}  // namespace witness
}  // namespace tracewit
