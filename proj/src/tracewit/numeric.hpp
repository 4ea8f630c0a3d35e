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

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <string>

namespace tracewit {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline double to_double(const BigRat& r) { return r.convert_to<double>(); }
inline double to_double(const BigInt& i) { return i.convert_to<double>(); }

BigInt factorial(int n);
BigInt binomial(int n, int k);
/// a (a-1) ... (a-b+1), b factors.
BigInt falling_factorial(BigInt a, int b);
/// a (a+1) ... (a+b-1), b factors.
BigInt rising_factorial(BigInt a, int b);

/// Complex number with exact rational real and imaginary parts.
struct ExactComplex {
  BigRat re;
  BigRat im;

  ExactComplex() = default;
  ExactComplex(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}
  explicit ExactComplex(BigRat r) : re(std::move(r)) {}
  explicit ExactComplex(long v) : re(v) {}

  bool is_zero() const { return re == 0 && im == 0; }
  ExactComplex conj() const { return {re, -im}; }
  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

  ExactComplex& operator+=(const ExactComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ExactComplex& operator-=(const ExactComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ExactComplex operator*(const BigRat& s, const ExactComplex& a) {
    return {s * a.re, s * a.im};
  }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// "3", "-1/2", "3/2+1/2i" style rendering used by catalog listings.
std::string rational_to_string(const BigRat& r);
std::string exact_complex_to_string(const ExactComplex& c);

}  // namespace tracewit
