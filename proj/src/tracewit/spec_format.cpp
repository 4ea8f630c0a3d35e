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

#include "tracewit/spec_format.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "tracewit/errors.hpp"
#include "tracewit/matrix_io.hpp"
#include "tracewit/partition.hpp"
#include "tracewit/weingarten.hpp"

namespace tracewit {
namespace io {

using sgroup::GroupAlgebraElement;
using sgroup::Partition;
using witness::FactorRole;
using witness::WitnessFactor;
using witness::WitnessSpec;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, sep)) out.push_back(tok);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

int parse_int(const std::string& tok, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer for " + what + ", got '" + tok + "'");
  }
}

double parse_double(const std::string& tok, const std::string& what) {
  try {
    std::size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected a number for " + what + ", got '" + tok + "'");
  }
}

witness::CatalogFamily family_from_name(const std::string& name) {
  if (name == "hadamard") return witness::CatalogFamily::kHadamard;
  if (name == "schur") return witness::CatalogFamily::kSchur;
  if (name == "hook") return witness::CatalogFamily::kHook;
  if (name == "marcus") return witness::CatalogFamily::kMarcus;
  if (name == "permanent") return witness::CatalogFamily::kPermanent;
  throw ParseError("unknown catalog family '" + name + "'");
}

WitnessFactor factor_from_kind(const std::string& kind, FactorRole role,
                               int copies, int dim) {
  WitnessFactor f;
  f.role = role;
  f.source = kind;

  std::vector<std::string> seg = split(kind, ':');
  const std::string& head = seg[0];

  if (head == "identity") {
    if (seg.size() != 1) throw ParseError("identity takes no arguments");
    f.symbolic = GroupAlgebraElement::identity(copies);
    return f;
  }
  if (head == "young") {
    if (seg.size() != 2) throw ParseError("young needs parts: young:<parts>");
    Partition lambda = Partition::parse(seg[1]);
    if (lambda.weight() != copies)
      throw ParseError("young:" + seg[1] + " has weight " +
                       std::to_string(lambda.weight()) + ", expected copies = " +
                       std::to_string(copies));
    f.symbolic = sgroup::young_idempotent(lambda);
    return f;
  }
  if (head == "catalog") {
    if (seg.size() < 2 || seg.size() > 4)
      throw ParseError("catalog needs catalog:<family>[:<parts>][:proj|:perm]");
    witness::CatalogFamily family = family_from_name(seg[1]);
    std::optional<Partition> lambda;
    witness::CatalogNormalization norm = witness::CatalogNormalization::kProjector;
    for (std::size_t i = 2; i < seg.size(); ++i) {
      if (seg[i] == "proj") {
        norm = witness::CatalogNormalization::kProjector;
      } else if (seg[i] == "perm") {
        norm = witness::CatalogNormalization::kPermutation;
      } else if (!lambda) {
        lambda = Partition::parse(seg[i]);
      } else {
        throw ParseError("catalog kind has too many arguments: '" + kind + "'");
      }
    }
    f.symbolic = witness::catalog_witness(family, copies, lambda, norm).element;
    return f;
  }
  if (head == "dense") {
    if (seg.size() < 2) throw ParseError("dense needs a payload: dense:<name>");
    // Re-join: file paths may contain ':'.
    std::string payload = kind.substr(std::string("dense:").size());
    if (payload == "bell_xxzz") {
      if (copies != 2 || dim != 2)
        throw ParseError("dense:bell_xxzz needs copies = 2 and dim 2");
      f.dense = witness::witness_bell_xxzz();
      return f;
    }
    if (payload == "phi_plus_pt") {
      if (copies != 2)
        throw ParseError("dense:phi_plus_pt needs copies = 2");
      f.dense = witness::witness_phi_plus_pt(dim);
      return f;
    }
    if (!payload.empty() && payload[0] == '@') {
      Eigen::MatrixXcd m = load_matrix_csv(payload.substr(1));
      long long want = 1;
      for (int j = 0; j < copies; ++j) want *= dim;
      if (m.rows() != m.cols() || m.rows() != want)
        throw ParseError("dense:@" + payload.substr(1) + " is " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected " +
                         std::to_string(want) + " square");
      hilbert::DenseOperator op;
      op.mat = m;
      op.factors.assign(static_cast<std::size_t>(copies), dim);
      f.dense = op;
      return f;
    }
    throw ParseError("unknown dense payload '" + payload + "'");
  }
  throw ParseError("unknown factor kind '" + kind + "'");
}

}  // namespace

WitnessSpec parse_witness_spec(const std::string& text) {
  int parties = -1;
  int copies = -1;
  std::vector<int> dims;
  std::vector<std::pair<FactorRole, std::string>> factor_lines;

  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string::size_type hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream words(line);
    std::string key;
    if (!(words >> key)) continue;
    auto rest = [&](const std::string& what) {
      std::string tok;
      if (!(words >> tok))
        throw ParseError("line " + std::to_string(line_no) + ": missing " + what);
      return tok;
    };
    if (key == "parties") {
      parties = parse_int(rest("party count"), "parties");
    } else if (key == "copies") {
      copies = parse_int(rest("copy count"), "copies");
    } else if (key == "dims") {
      std::string tok;
      while (words >> tok) dims.push_back(parse_int(tok, "dims"));
      if (dims.empty())
        throw ParseError("line " + std::to_string(line_no) + ": missing dims");
    } else if (key == "factor") {
      std::string role_tok = rest("factor role");
      FactorRole role;
      if (role_tok == "witness") {
        role = FactorRole::kWitness;
      } else if (role_tok == "positive") {
        role = FactorRole::kPositive;
      } else {
        throw ParseError("line " + std::to_string(line_no) +
                         ": role must be witness or positive, got '" +
                         role_tok + "'");
      }
      factor_lines.emplace_back(role, rest("factor kind"));
    } else {
      throw ParseError("line " + std::to_string(line_no) +
                       ": unknown directive '" + key + "'");
    }
    std::string extra;
    if (key != "dims" && (words >> extra))
      throw ParseError("line " + std::to_string(line_no) +
                       ": trailing token '" + extra + "'");
  }

  if (parties < 1) throw ParseError("spec needs a 'parties' line");
  if (copies < 1) throw ParseError("spec needs a 'copies' line");
  if (dims.empty()) throw ParseError("spec needs a 'dims' line");
  if (dims.size() == 1) dims.assign(static_cast<std::size_t>(parties), dims[0]);
  if (static_cast<int>(dims.size()) != parties)
    throw ParseError("dims lists " + std::to_string(dims.size()) +
                     " entries for " + std::to_string(parties) + " parties");
  if (static_cast<int>(factor_lines.size()) != parties)
    throw ParseError("spec lists " + std::to_string(factor_lines.size()) +
                     " factors for " + std::to_string(parties) + " parties");

  std::vector<WitnessFactor> factors;
  for (int i = 0; i < parties; ++i)
    factors.push_back(factor_from_kind(factor_lines[static_cast<std::size_t>(i)].second,
                                       factor_lines[static_cast<std::size_t>(i)].first,
                                       copies, dims[static_cast<std::size_t>(i)]));
  return witness::compose_nonlinear(std::move(factors), copies, std::move(dims));
}

WitnessSpec load_witness_spec(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) throw ParseError("cannot open spec file " + path);
  std::stringstream buffer;
  buffer << stream.rdbuf();
  return parse_witness_spec(buffer.str());
}

std::string print_witness_spec(const WitnessSpec& spec) {
  std::ostringstream out;
  out << "parties " << spec.parties << '\n';
  out << "copies " << spec.copies << '\n';
  out << "dims";
  for (int d : spec.local_dims) out << ' ' << d;
  out << '\n';
  for (const WitnessFactor& f : spec.factors) {
    if (f.source.empty())
      throw std::invalid_argument(
          "print_witness_spec: factor has no textual source");
    out << "factor "
        << (f.role == FactorRole::kWitness ? "witness" : "positive") << ' '
        << f.source << '\n';
  }
  return out.str();
}

namespace {

std::map<std::string, std::string> keyword_args(
    const std::vector<std::string>& items, std::size_t first,
    const std::string& context) {
  std::map<std::string, std::string> out;
  for (std::size_t i = first; i < items.size(); ++i) {
    std::vector<std::string> kv = split(items[i], '=');
    if (kv.size() != 2 || kv[0].empty())
      throw ParseError(context + ": expected key=value, got '" + items[i] + "'");
    if (!out.emplace(kv[0], kv[1]).second)
      throw ParseError(context + ": duplicate key '" + kv[0] + "'");
  }
  return out;
}

int take_int(std::map<std::string, std::string>& args, const std::string& key,
             std::optional<int> fallback, const std::string& context) {
  auto it = args.find(key);
  if (it == args.end()) {
    if (fallback) return *fallback;
    throw ParseError(context + ": missing " + key + "=");
  }
  int v = parse_int(it->second, context + " " + key);
  args.erase(it);
  return v;
}

void expect_consumed(const std::map<std::string, std::string>& args,
                     const std::string& context) {
  if (!args.empty())
    throw ParseError(context + ": unknown key '" + args.begin()->first + "'");
}

}  // namespace

DescribedState state_from_descriptor(const std::string& text) {
  std::string::size_type colon = text.find(':');
  if (colon == std::string::npos || colon == 0)
    throw ParseError("state descriptor needs scheme:payload, got '" + text + "'");
  DescribedState out;
  out.scheme = text.substr(0, colon);
  std::string payload = text.substr(colon + 1);
  std::vector<std::string> items = split(payload, ',');

  if (out.scheme == "ghz") {
    auto args = keyword_args(items, 0, "ghz");
    int n = take_int(args, "n", std::nullopt, "ghz");
    int d = take_int(args, "d", std::nullopt, "ghz");
    double p = 1.0;
    auto it = args.find("p");
    if (it != args.end()) {
      p = parse_double(it->second, "ghz p");
      args.erase(it);
    }
    expect_consumed(args, "ghz");
    if (p < 0.0 || p > 1.0) throw ParseError("ghz: need 0 <= p <= 1");
    out.rho = hilbert::noisy_ghz(n, d, p);
    return out;
  }
  if (out.scheme == "bell") {
    if (items.empty() || items[0].empty())
      throw ParseError("bell: expected bell:phi_plus or bell:psi_plus");
    std::string which = items[0];
    auto args = keyword_args(items, 1, "bell");
    if (which == "phi_plus") {
      int d = take_int(args, "d", 2, "bell");
      expect_consumed(args, "bell");
      out.rho = hilbert::projector(hilbert::bell_phi_plus(d));
      return out;
    }
    if (which == "psi_plus") {
      expect_consumed(args, "bell");
      out.rho = hilbert::projector(hilbert::bell_psi_plus());
      return out;
    }
    throw ParseError("bell: unknown state '" + which + "'");
  }
  if (out.scheme == "mixed") {
    auto args = keyword_args(items, 0, "mixed");
    int n = take_int(args, "n", std::nullopt, "mixed");
    int d = take_int(args, "d", std::nullopt, "mixed");
    expect_consumed(args, "mixed");
    if (n < 1 || d < 2) throw ParseError("mixed: need n >= 1 and d >= 2");
    std::vector<int> factors(static_cast<std::size_t>(n), d);
    out.rho = hilbert::identity_operator(factors);
    out.rho.mat /= static_cast<double>(out.rho.mat.rows());
    return out;
  }
  if (out.scheme == "werner") {
    auto args = keyword_args(items, 0, "werner");
    int n = take_int(args, "n", 3, "werner");
    int d = take_int(args, "d", 3, "werner");
    int seed = take_int(args, "seed", std::nullopt, "werner");
    expect_consumed(args, "werner");
    Rng rng(static_cast<std::uint64_t>(seed));
    werner::GroupRingState state = werner::sample_state(n, d, rng);
    out.rho = werner::render_dense(state);
    out.group_ring = std::move(state);
    return out;
  }
  if (out.scheme == "file") {
    if (items.empty() || items[0].empty())
      throw ParseError("file: expected file:<path>[,dims=2x2x2]");
    std::string path = items[0];
    std::vector<int> dims;
    auto args = keyword_args(items, 1, "file");
    auto it = args.find("dims");
    if (it != args.end()) {
      for (const std::string& tok : split(it->second, 'x'))
        dims.push_back(parse_int(tok, "file dims"));
      args.erase(it);
    }
    expect_consumed(args, "file");
    Eigen::MatrixXcd m = load_matrix_csv(path);
    if (m.rows() != m.cols())
      throw ParseError("file: matrix is not square");
    long long want = 1;
    for (int d : dims) want *= d;
    if (!dims.empty() && want != m.rows())
      throw ParseError("file: dims product " + std::to_string(want) +
                       " does not match matrix size " +
                       std::to_string(m.rows()));
    if (std::abs(m.trace().real() - 1.0) > 1e-6 ||
        std::abs(m.trace().imag()) > 1e-6)
      throw ParseError("file: matrix trace is not 1");
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-8)
      throw ParseError("file: matrix is not Hermitian");
    out.rho.mat = std::move(m);
    out.rho.factors = dims.empty()
                          ? std::vector<int>{static_cast<int>(out.rho.mat.rows())}
                          : dims;
    return out;
  }
  throw ParseError("unknown state scheme '" + out.scheme + "'");
}

}  // namespace io
}  // namespace tracewit
