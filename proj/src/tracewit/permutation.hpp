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
#include <string>
#include <vector>

namespace tracewit::sgroup {

/// Permutation of {0, ..., m-1} stored in one-line form: images[i] = sigma(i).
/// Composition is O(m) in this representation.
class Permutation {
 public:
  /// Validates that images is a bijection.
  explicit Permutation(std::vector<std::uint8_t> images);

  static Permutation identity(int degree);
  static Permutation transposition(int degree, int a, int b);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  bool is_identity() const;
  /// (p.compose(q))(i) = p(q(i)).
  Permutation compose(const Permutation& q) const;
  Permutation inverse() const;
  int sign() const;
  /// Number of cycles, fixed points included.
  int cycle_count() const;
  /// Cycle lengths sorted decreasing (a partition of the degree).
  std::vector<int> cycle_type() const;
  /// Cycles as index lists; each cycle starts at its smallest element and
  /// follows i -> sigma(i); cycles ordered by smallest element.
  std::vector<std::vector<int>> cycles(bool include_fixed_points = false) const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<std::uint8_t> images) : images_(std::move(images)) {}

  std::vector<std::uint8_t> images_;

  friend Permutation unchecked_permutation(std::vector<std::uint8_t> images);
};

/// Internal fast path for callers that construct known-valid images.
inline Permutation unchecked_permutation(std::vector<std::uint8_t> images) {
  return Permutation(Permutation::Unchecked{}, std::move(images));
}

/// All m! permutations of degree m, in lexicographic one-line order.
std::vector<Permutation> all_permutations(int degree);

/// Cycle notation with 0-based entries, e.g. "(0 1)(2 3 4)"; identity is "()".
/// Printing uses the canonical cycle order of Permutation::cycles().
std::string print_cycles(const Permutation& p);

/// Parses cycle notation. Entries must be < degree; cycles must be disjoint.
Permutation parse_cycles(const std::string& text, int degree);

}  // namespace tracewit::sgroup
