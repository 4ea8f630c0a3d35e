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

#include "tracewit/partition.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tracewit/errors.hpp"

namespace tracewit::sgroup {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int col = 0; col < part(0); ++col) {
    int rows = 0;
    while (rows < height() && parts_[static_cast<std::size_t>(rows)] > col) ++rows;
    out.push_back(rows);
  }
  return Partition(std::move(out));
}

bool Partition::is_hook() const {
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] != 1) return false;
  return !parts_.empty();
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("");
      parts.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("Partition::parse: bad part '" + tok + "'");
    }
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("Partition::parse: ") + e.what());
  }
}

std::vector<Partition> Partition::all(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

BigInt hook_product(const Partition& lambda) {
  Partition conj = lambda.conjugate();
  BigInt prod = 1;
  for (int i = 0; i < lambda.height(); ++i) {
    for (int j = 0; j < lambda.part(i); ++j) {
      int hook = (lambda.part(i) - j) + (conj.part(j) - i) - 1;
      prod *= hook;
    }
  }
  return prod;
}

namespace {

// Beta numbers lambda_i + (rows - 1 - i). Removing a border strip of length t
// maps one beta number b to b - t, provided b - t is nonnegative and not
// already a beta number; the strip height is the number of beta numbers
// strictly between the two values.
std::int64_t mn_recurse(const std::vector<int>& lambda, const std::vector<int>& mu,
                        std::size_t mu_pos,
                        std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t>& memo);

std::int64_t mn_dispatch(
    std::vector<int> lambda, const std::vector<int>& mu, std::size_t mu_pos,
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t>& memo) {
  if (lambda.empty()) return 1;
  std::vector<int> mu_rest(mu.begin() + static_cast<std::ptrdiff_t>(mu_pos), mu.end());
  auto key = std::make_pair(lambda, mu_rest);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::int64_t value = mn_recurse(lambda, mu, mu_pos, memo);
  memo.emplace(std::move(key), value);
  return value;
}

std::int64_t mn_recurse(
    const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t mu_pos,
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t>& memo) {
  const int t = mu[mu_pos];
  const int rows = static_cast<int>(lambda.size());
  std::vector<int> beta(lambda.size());
  for (int i = 0; i < rows; ++i)
    beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (rows - 1 - i);

  std::int64_t total = 0;
  for (int i = 0; i < rows; ++i) {
    int b = beta[static_cast<std::size_t>(i)] - t;
    if (b < 0) continue;
    bool collision = false;
    int crossings = 0;
    for (int j = 0; j < rows; ++j) {
      if (j == i) continue;
      int bj = beta[static_cast<std::size_t>(j)];
      if (bj == b) {
        collision = true;
        break;
      }
      if (bj > b && bj < beta[static_cast<std::size_t>(i)]) ++crossings;
    }
    if (collision) continue;

    std::vector<int> new_beta = beta;
    new_beta[static_cast<std::size_t>(i)] = b;
    std::sort(new_beta.begin(), new_beta.end(), std::greater<int>());
    std::vector<int> next;
    for (int j = 0; j < rows; ++j) {
      int part = new_beta[static_cast<std::size_t>(j)] - (rows - 1 - j);
      if (part > 0) next.push_back(part);
    }
    std::int64_t sub = mn_dispatch(std::move(next), mu, mu_pos + 1, memo);
    total += (crossings % 2 == 0) ? sub : -sub;
  }
  return total;
}

std::mutex g_character_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> g_character_memo;

}  // namespace

std::int64_t character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw std::invalid_argument("character: |lambda| != |mu|");
  std::lock_guard<std::mutex> lock(g_character_mutex);
  return mn_dispatch(lambda.parts(), mu.parts(), 0, g_character_memo);
}

std::int64_t character_identity(const Partition& lambda) {
  BigInt dim = factorial(lambda.weight()) / hook_product(lambda);
  return dim.convert_to<std::int64_t>();
}

BigInt schur_dimension(const Partition& lambda, int d) {
  if (d < 0) throw std::invalid_argument("schur_dimension: d must be nonnegative");
  if (lambda.height() > d) return 0;
  BigInt num = 1;
  for (int i = 0; i < lambda.height(); ++i)
    for (int j = 0; j < lambda.part(i); ++j) num *= d + j - i;
  return num / hook_product(lambda);
}

BigInt dim_isotypic(const Partition& lambda, int d) {
  return BigInt(character_identity(lambda)) * schur_dimension(lambda, d);
}

BigInt conjugacy_class_size(const Partition& mu) {
  BigInt z = 1;
  int run_value = 0;
  int run_length = 0;
  for (int p : mu.parts()) {
    if (p == run_value) {
      ++run_length;
    } else {
      run_value = p;
      run_length = 1;
    }
    z *= p * run_length;
  }
  return factorial(mu.weight()) / z;
}

const BigRat& ClassFunction::at(const Partition& mu) const {
  auto it = values.find(mu);
  if (it == values.end())
    throw std::invalid_argument("ClassFunction::at: unknown cycle type " + mu.to_string());
  return it->second;
}

}  // namespace tracewit::sgroup
