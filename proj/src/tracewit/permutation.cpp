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

#include "tracewit/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tracewit/errors.hpp"

namespace tracewit::sgroup {

namespace {
constexpr int kMaxDegree = 128;
}

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  const std::size_t m = images_.size();
  if (m > kMaxDegree) throw std::invalid_argument("Permutation: degree too large");
  std::vector<bool> seen(m, false);
  for (std::uint8_t v : images_) {
    if (v >= m || seen[v]) throw std::invalid_argument("Permutation: images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  return unchecked_permutation(std::move(img));
}

Permutation Permutation::transposition(int degree, int a, int b) {
  if (a < 0 || b < 0 || a >= degree || b >= degree || a == b)
    throw std::invalid_argument("Permutation::transposition: bad indices");
  Permutation p = identity(degree);
  std::swap(p.images_[static_cast<std::size_t>(a)], p.images_[static_cast<std::size_t>(b)]);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Permutation Permutation::compose(const Permutation& q) const {
  if (degree() != q.degree()) throw std::invalid_argument("Permutation::compose: degree mismatch");
  std::vector<std::uint8_t> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) img[i] = images_[q.images_[i]];
  return unchecked_permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    img[images_[i]] = static_cast<std::uint8_t>(i);
  return unchecked_permutation(std::move(img));
}

int Permutation::sign() const {
  int transposition_parity = degree() - cycle_count();
  return (transposition_parity % 2 == 0) ? 1 : -1;
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (std::size_t j = i; !seen[j]; j = images_[j]) seen[j] = true;
  }
  return count;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  return lengths;
}

std::vector<std::vector<int>> Permutation::cycles(bool include_fixed_points) const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cyc.push_back(static_cast<int>(j));
    }
    if (cyc.size() > 1 || include_fixed_points) out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<Permutation> all_permutations(int degree) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  std::vector<Permutation> out;
  do {
    out.push_back(unchecked_permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::string print_cycles(const Permutation& p) {
  auto cycs = p.cycles();
  if (cycs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cyc : cycs) {
    os << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << ' ';
      os << cyc[i];
    }
    os << ')';
  }
  return os.str();
}

Permutation parse_cycles(const std::string& text, int degree) {
  if (degree < 0 || degree > kMaxDegree) throw ParseError("parse_cycles: bad degree");
  std::vector<std::uint8_t> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  std::vector<bool> used(static_cast<std::size_t>(degree), false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  bool any = false;
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("parse_cycles: expected '('");
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("parse_cycles: expected digit");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      if (v >= degree) throw ParseError("parse_cycles: entry out of range");
      if (used[static_cast<std::size_t>(v)]) throw ParseError("parse_cycles: repeated entry");
      used[static_cast<std::size_t>(v)] = true;
      cyc.push_back(v);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size()) throw ParseError("parse_cycles: unterminated cycle");
    ++pos;  // ')'
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      img[static_cast<std::size_t>(from)] = static_cast<std::uint8_t>(to);
    }
    any = true;
    skip_ws();
  }
  if (!any) throw ParseError("parse_cycles: empty input");
  return Permutation(std::move(img));
}

}  // namespace tracewit::sgroup
