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

#include "tracewit/numeric.hpp"

#include <stdexcept>

namespace tracewit {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

BigInt falling_factorial(BigInt a, int b) {
  BigInt r = 1;
  for (int i = 0; i < b; ++i) r *= a - i;
  return r;
}

BigInt rising_factorial(BigInt a, int b) {
  BigInt r = 1;
  for (int i = 0; i < b; ++i) r *= a + i;
  return r;
}

std::string rational_to_string(const BigRat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

std::string exact_complex_to_string(const ExactComplex& c) {
  if (c.im == 0) return rational_to_string(c.re);
  if (c.re == 0) return rational_to_string(c.im) + "i";
  std::string s = rational_to_string(c.re);
  if (c.im > 0) s += "+";
  return s + rational_to_string(c.im) + "i";
}

}  // namespace tracewit
