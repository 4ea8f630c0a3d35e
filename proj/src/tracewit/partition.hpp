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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tracewit/numeric.hpp"

namespace tracewit::sgroup {

/// Integer partition with weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;  // the empty partition of 0
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int height() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < height() ? parts_[static_cast<std::size_t>(i)] : 0; }
  Partition conjugate() const;
  bool is_hook() const;

  /// Rendering like "(3,1,1)".
  std::string to_string() const;
  /// Parses "3,1,1" or "(3,1,1)".
  static Partition parse(const std::string& text);

  /// Partitions of n in reverse lexicographic order, (n) first, (1^n) last.
  static std::vector<Partition> all(int n);

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
};

/// Product of all hook lengths of the diagram.
BigInt hook_product(const Partition& lambda);

/// Irreducible character chi_lambda evaluated on the class of cycle type mu.
/// Murnaghan-Nakayama recursion, memoized; |lambda| must equal |mu|.
std::int64_t character(const Partition& lambda, const Partition& mu);

/// chi_lambda(id), the dimension of the S_n irrep, via the hook length formula.
std::int64_t character_identity(const Partition& lambda);

/// Schur polynomial at 1^d: product over cells of (d + col - row) / hook.
/// Zero when the diagram has more than d rows.
BigInt schur_dimension(const Partition& lambda, int d);

/// Dimension of the lambda-isotypic block of (C^d)^(tensor n):
/// character_identity(lambda) * schur_dimension(lambda, d).
BigInt dim_isotypic(const Partition& lambda, int d);

/// Number of elements of S_n with cycle type mu: n! / prod(i^m_i m_i!).
BigInt conjugacy_class_size(const Partition& mu);

/// Function on conjugacy classes of S_degree, keyed by cycle type.
struct ClassFunction {
  int degree = 0;
  std::map<Partition, BigRat> values;

  const BigRat& at(const Partition& mu) const;
};

}  // namespace tracewit::sgroup
