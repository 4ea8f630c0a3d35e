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

#include "tracewit/group_algebra.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "tracewit/errors.hpp"

namespace tracewit::sgroup {

namespace {

void check_degrees(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                   const char* what) {
  if (a.degree() != b.degree())
    throw std::invalid_argument(std::string(what) + ": degree mismatch");
}

void track_peak(std::size_t* peak, std::size_t value) {
  if (peak && value > *peak) *peak = value;
}

void check_cap(std::size_t cap, std::size_t value, const char* what) {
  if (cap > 0 && value > cap)
    throw SupportCapError(std::string(what) + ": support size " + std::to_string(value) +
                          " exceeds cap " + std::to_string(cap));
}

}  // namespace

GroupAlgebraElement GroupAlgebraElement::zero(int degree) {
  return GroupAlgebraElement(degree, true);
}

GroupAlgebraElement GroupAlgebraElement::zero_float(int degree) {
  return GroupAlgebraElement(degree, false);
}

GroupAlgebraElement GroupAlgebraElement::identity(int degree) {
  GroupAlgebraElement e(degree, true);
  e.exact_.emplace(Permutation::identity(degree), ExactComplex(1L));
  return e;
}

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation& p) {
  GroupAlgebraElement e(p.degree(), true);
  e.exact_.emplace(p, ExactComplex(1L));
  return e;
}

void GroupAlgebraElement::add_term(const Permutation& p, const ExactComplex& c) {
  if (p.degree() != degree_) throw std::invalid_argument("add_term: degree mismatch");
  if (!exact_mode_) {
    add_term(p, c.to_complex());
    return;
  }
  auto [it, inserted] = exact_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) exact_.erase(it);
  } else if (c.is_zero()) {
    exact_.erase(it);
  }
}

void GroupAlgebraElement::add_term(const Permutation& p, std::complex<double> c) {
  if (p.degree() != degree_) throw std::invalid_argument("add_term: degree mismatch");
  if (exact_mode_) {
    // Coerce the whole element to float mode.
    for (const auto& [q, e] : exact_) approx_.emplace(q, e.to_complex());
    exact_.clear();
    exact_mode_ = false;
  }
  auto [it, inserted] = approx_.try_emplace(p, c);
  if (!inserted) it->second += c;
  if (it->second == std::complex<double>(0.0, 0.0)) approx_.erase(it);
}

std::complex<double> GroupAlgebraElement::coeff(const Permutation& p) const {
  if (exact_mode_) {
    auto it = exact_.find(p);
    return it == exact_.end() ? std::complex<double>(0.0) : it->second.to_complex();
  }
  auto it = approx_.find(p);
  return it == approx_.end() ? std::complex<double>(0.0) : it->second;
}

const ExactComplex& GroupAlgebraElement::exact_coeff(const Permutation& p) const {
  static const ExactComplex kZero{};
  if (!exact_mode_) throw std::logic_error("exact_coeff: element is in float mode");
  auto it = exact_.find(p);
  return it == exact_.end() ? kZero : it->second;
}

GroupAlgebraElement GroupAlgebraElement::to_float() const {
  if (!exact_mode_) return *this;
  GroupAlgebraElement e(degree_, false);
  for (const auto& [p, c] : exact_) e.approx_.emplace(p, c.to_complex());
  return e;
}

const GroupAlgebraElement::ExactTerms& GroupAlgebraElement::exact_terms() const {
  if (!exact_mode_) throw std::logic_error("exact_terms: element is in float mode");
  return exact_;
}

const GroupAlgebraElement::FloatTerms& GroupAlgebraElement::float_terms() const {
  if (exact_mode_) throw std::logic_error("float_terms: element is in exact mode");
  return approx_;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const ExactComplex& s) const {
  if (!exact_mode_) return scaled(s.to_complex());
  GroupAlgebraElement e(degree_, true);
  if (s.is_zero()) return e;
  for (const auto& [p, c] : exact_) e.exact_.emplace(p, s * c);
  return e;
}

GroupAlgebraElement GroupAlgebraElement::scaled(std::complex<double> s) const {
  GroupAlgebraElement e(degree_, false);
  if (s == std::complex<double>(0.0)) return e;
  for_each_term([&](const Permutation& p, std::complex<double> c) { e.approx_.emplace(p, s * c); });
  return e;
}

GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  check_degrees(a, b, "operator+");
  if (a.is_exact() && b.is_exact()) {
    GroupAlgebraElement e = a;
    for (const auto& [p, c] : b.exact_terms()) e.add_term(p, c);
    return e;
  }
  GroupAlgebraElement e = a.is_exact() ? a.to_float() : a;
  b.for_each_term([&](const Permutation& p, std::complex<double> c) { e.add_term(p, c); });
  return e;
}

GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return a + b.scaled(ExactComplex(-1L));
}

bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.degree_ != b.degree_ || a.exact_mode_ != b.exact_mode_) return false;
  return a.exact_mode_ ? a.exact_ == b.exact_ : a.approx_ == b.approx_;
}

GroupAlgebraElement algebra_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                                std::size_t support_cap, std::size_t* peak_support) {
  check_degrees(a, b, "algebra_mul");
  track_peak(peak_support, a.support_size());
  track_peak(peak_support, b.support_size());
  if (a.is_exact() && b.is_exact()) {
    GroupAlgebraElement e = GroupAlgebraElement::zero(a.degree());
    for (const auto& [p, cp] : a.exact_terms()) {
      for (const auto& [q, cq] : b.exact_terms()) {
        e.add_term(p.compose(q), cp * cq);
        check_cap(support_cap, e.support_size(), "algebra_mul");
      }
    }
    track_peak(peak_support, e.support_size());
    return e;
  }
  GroupAlgebraElement e = GroupAlgebraElement::zero_float(a.degree());
  a.for_each_term([&](const Permutation& p, std::complex<double> cp) {
    b.for_each_term([&](const Permutation& q, std::complex<double> cq) {
      e.add_term(p.compose(q), cp * cq);
      check_cap(support_cap, e.support_size(), "algebra_mul");
    });
  });
  track_peak(peak_support, e.support_size());
  return e;
}

GroupAlgebraElement dagger(const GroupAlgebraElement& a) {
  if (a.is_exact()) {
    GroupAlgebraElement e = GroupAlgebraElement::zero(a.degree());
    for (const auto& [p, c] : a.exact_terms()) e.add_term(p.inverse(), c.conj());
    return e;
  }
  GroupAlgebraElement e = GroupAlgebraElement::zero_float(a.degree());
  a.for_each_term([&](const Permutation& p, std::complex<double> c) {
    e.add_term(p.inverse(), std::conj(c));
  });
  return e;
}

std::complex<double> tau(const GroupAlgebraElement& a) {
  return to_double(factorial(a.degree())) * a.coeff(Permutation::identity(a.degree()));
}

ExactComplex tau_exact(const GroupAlgebraElement& a) {
  BigRat f(factorial(a.degree()));
  return f * a.exact_coeff(Permutation::identity(a.degree()));
}

double coeff_max_abs(const GroupAlgebraElement& a) {
  double m = 0.0;
  a.for_each_term([&](const Permutation&, std::complex<double> c) {
    m = std::max(m, std::abs(c));
  });
  return m;
}

namespace {

// sigma on party row i of an n x k site grid, site(i, j) = i*k + j.
Permutation embed_row(const Permutation& sigma, int n, int k, int row) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(n * k));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j)
      img[static_cast<std::size_t>(i * k + j)] =
          static_cast<std::uint8_t>(i == row ? i * k + sigma(j) : i * k + j);
  return unchecked_permutation(std::move(img));
}

// sigma on copy column j: site (i, j) -> (sigma(i), j).
Permutation embed_column(const Permutation& sigma, int n, int k, int col) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(n * k));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j)
      img[static_cast<std::size_t>(i * k + j)] =
          static_cast<std::uint8_t>(j == col ? sigma(i) * k + j : i * k + j);
  return unchecked_permutation(std::move(img));
}

GroupAlgebraElement map_support(const GroupAlgebraElement& a, int new_degree,
                                const std::function<Permutation(const Permutation&)>& lift) {
  if (a.is_exact()) {
    GroupAlgebraElement e = GroupAlgebraElement::zero(new_degree);
    for (const auto& [p, c] : a.exact_terms()) e.add_term(lift(p), c);
    return e;
  }
  GroupAlgebraElement e = GroupAlgebraElement::zero_float(new_degree);
  a.for_each_term([&](const Permutation& p, std::complex<double> c) { e.add_term(lift(p), c); });
  return e;
}

}  // namespace

GroupAlgebraElement embed_copies(const GroupAlgebraElement& a, int k,
                                 std::size_t support_cap, std::size_t* peak_support) {
  if (k < 1) throw std::invalid_argument("embed_copies: k must be >= 1");
  const int n = a.degree();
  GroupAlgebraElement out = map_support(
      a, n * k, [&](const Permutation& p) { return embed_column(p, n, k, 0); });
  for (int j = 1; j < k; ++j) {
    GroupAlgebraElement factor = map_support(
        a, n * k, [&](const Permutation& p) { return embed_column(p, n, k, j); });
    out = algebra_mul(out, factor, support_cap, peak_support);
  }
  track_peak(peak_support, out.support_size());
  check_cap(support_cap, out.support_size(), "embed_copies");
  return out;
}

GroupAlgebraElement embed_parties(const std::vector<GroupAlgebraElement>& ws,
                                  std::size_t support_cap, std::size_t* peak_support) {
  if (ws.empty()) throw std::invalid_argument("embed_parties: no factors");
  const int n = static_cast<int>(ws.size());
  const int k = ws[0].degree();
  for (const auto& w : ws)
    if (w.degree() != k) throw std::invalid_argument("embed_parties: degree mismatch");
  GroupAlgebraElement out = map_support(
      ws[0], n * k, [&](const Permutation& p) { return embed_row(p, n, k, 0); });
  for (int i = 1; i < n; ++i) {
    GroupAlgebraElement factor = map_support(
        ws[static_cast<std::size_t>(i)], n * k,
        [&](const Permutation& p) { return embed_row(p, n, k, i); });
    out = algebra_mul(out, factor, support_cap, peak_support);
  }
  track_peak(peak_support, out.support_size());
  check_cap(support_cap, out.support_size(), "embed_parties");
  return out;
}

std::string to_string(const GroupAlgebraElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Permutation& p, const std::string& coeff_text, bool negative) {
    if (!first) os << ' ';
    os << (negative ? '-' : '+');
    first = false;
    if (coeff_text != "1") os << ' ' << coeff_text;
    os << ' ' << print_cycles(p);
  };
  if (a.is_exact()) {
    for (const auto& [p, c] : a.exact_terms()) {
      bool negative = c.im == 0 && c.re < 0;
      emit(p, exact_complex_to_string(negative ? -c : c), negative);
    }
  } else {
    for (const auto& [p, c] : a.float_terms()) {
      bool negative = c.imag() == 0.0 && c.real() < 0.0;
      std::complex<double> v = negative ? -c : c;
      char buf[64];
      if (v.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.17g", v.real());
      } else {
        std::snprintf(buf, sizeof buf, "(%.17g%+.17gi)", v.real(), v.imag());
      }
      emit(p, buf, negative);
    }
  }
  return os.str();
}

}  // namespace tracewit::sgroup
