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

#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "tracewit/numeric.hpp"
#include "tracewit/permutation.hpp"

namespace tracewit::sgroup {

/// Sparse element of the group algebra C[S_m]. Coefficients are either all
/// exact (Gaussian rationals) or all double-precision complex; the element
/// records its mode. Operations mixing the two modes coerce to float.
/// No stored term has coefficient exactly zero.
class GroupAlgebraElement {
 public:
  using ExactTerms = std::map<Permutation, ExactComplex>;
  using FloatTerms = std::map<Permutation, std::complex<double>>;

  static GroupAlgebraElement zero(int degree);
  static GroupAlgebraElement zero_float(int degree);
  static GroupAlgebraElement identity(int degree);
  static GroupAlgebraElement basis(const Permutation& p);

  int degree() const { return degree_; }
  bool is_exact() const { return exact_mode_; }
  std::size_t support_size() const {
    return exact_mode_ ? exact_.size() : approx_.size();
  }
  bool is_zero() const { return support_size() == 0; }

  void add_term(const Permutation& p, const ExactComplex& c);
  void add_term(const Permutation& p, std::complex<double> c);

  /// Coefficient of p (0 if absent), converted to double precision if exact.
  std::complex<double> coeff(const Permutation& p) const;
  /// Exact coefficient of p; element must be in exact mode.
  const ExactComplex& exact_coeff(const Permutation& p) const;

  GroupAlgebraElement to_float() const;

  const ExactTerms& exact_terms() const;
  const FloatTerms& float_terms() const;

  /// Applies f(perm, complex coefficient) to every term in either mode.
  template <class F>
  void for_each_term(F&& f) const {
    if (exact_mode_) {
      for (const auto& [p, c] : exact_) f(p, c.to_complex());
    } else {
      for (const auto& [p, c] : approx_) f(p, c);
    }
  }

  GroupAlgebraElement scaled(const ExactComplex& s) const;
  GroupAlgebraElement scaled(std::complex<double> s) const;

  friend GroupAlgebraElement operator+(const GroupAlgebraElement& a,
                                       const GroupAlgebraElement& b);
  friend GroupAlgebraElement operator-(const GroupAlgebraElement& a,
                                       const GroupAlgebraElement& b);
  /// Exact structural equality: same mode and identical term maps.
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

 private:
  explicit GroupAlgebraElement(int degree, bool exact_mode)
      : degree_(degree), exact_mode_(exact_mode) {}

  int degree_;
  bool exact_mode_;
  ExactTerms exact_;
  FloatTerms approx_;
};

/// Convolution product. When support_cap > 0, throws SupportCapError if the
/// result would hold more terms; peak_support (if given) records the largest
/// support size seen, including the inputs.
GroupAlgebraElement algebra_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                                std::size_t support_cap = 0,
                                std::size_t* peak_support = nullptr);

/// Conjugate-transpose: sum of conj(c) sigma^{-1}.
GroupAlgebraElement dagger(const GroupAlgebraElement& a);

/// Normalized trace functional: m! times the identity coefficient.
std::complex<double> tau(const GroupAlgebraElement& a);
ExactComplex tau_exact(const GroupAlgebraElement& a);

/// Largest absolute coefficient value.
double coeff_max_abs(const GroupAlgebraElement& a);

/// For a over S_n, the k-fold product of independent copies of a, one per
/// copy column, as an element over S_{nk}. Sites are indexed
/// site(i, j) = i*k + j for party i in [0,n) and copy j in [0,k); the copy-j
/// factor sends site (i, j) to (sigma(i), j).
GroupAlgebraElement embed_copies(const GroupAlgebraElement& a, int k,
                                 std::size_t support_cap = 0,
                                 std::size_t* peak_support = nullptr);

/// For w_0..w_{n-1} over S_k, the product of w_i embedded on party row i,
/// as an element over S_{nk}: the row-i factor sends site (i, j) to
/// (i, sigma(j)). Under the same site convention as embed_copies.
GroupAlgebraElement embed_parties(const std::vector<GroupAlgebraElement>& ws,
                                  std::size_t support_cap = 0,
                                  std::size_t* peak_support = nullptr);

/// Deterministic rendering, e.g. "+ (0 1) - 3/2 (0 1 2)". Exact coefficients
/// print as rationals, float coefficients with %.17g.
std::string to_string(const GroupAlgebraElement& a);

}  // namespace tracewit::sgroup
