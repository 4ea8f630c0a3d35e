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

#include "tracewit/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "tracewit/errors.hpp"

namespace tracewit {
namespace io {

std::string matrix_to_csv(const Eigen::MatrixXcd& m) {
  std::string out;
  char buf[64];
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out += ',';
      std::snprintf(buf, sizeof buf, "%.17g,%.17g", m(r, c).real(),
                    m(r, c).imag());
      out += buf;
    }
    out += '\n';
  }
  return out;
}

namespace {

double parse_field(const std::string& field, int line_no) {
  try {
    std::size_t used = 0;
    double v = std::stod(field, &used);
    while (used < field.size() &&
           (field[used] == ' ' || field[used] == '\t' || field[used] == '\r'))
      ++used;
    if (used != field.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("matrix csv line " + std::to_string(line_no) +
                     ": bad numeric field '" + field + "'");
  }
}

}  // namespace

Eigen::MatrixXcd matrix_from_csv(const std::string& text) {
  std::vector<std::vector<std::complex<double>>> rows;
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> fields;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ','))
      fields.push_back(parse_field(cell, line_no));
    if (fields.size() % 2 != 0)
      throw ParseError("matrix csv line " + std::to_string(line_no) +
                       ": odd field count (entries are re,im pairs)");
    std::vector<std::complex<double>> row;
    for (std::size_t i = 0; i < fields.size(); i += 2)
      row.emplace_back(fields[i], fields[i + 1]);
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("matrix csv line " + std::to_string(line_no) +
                       ": ragged row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("matrix csv: no rows");
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows.size()),
                     static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.front().size(); ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          rows[r][c];
  return m;
}

void save_matrix_csv(const std::string& path, const Eigen::MatrixXcd& m) {
  std::ofstream stream(path, std::ios::binary);
  if (!stream) throw std::runtime_error("cannot open output path " + path);
  stream << matrix_to_csv(m);
  if (!stream.flush()) throw std::runtime_error("write failed for " + path);
}

Eigen::MatrixXcd load_matrix_csv(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) throw ParseError("cannot open matrix csv " + path);
  std::stringstream buffer;
  buffer << stream.rdbuf();
  return matrix_from_csv(buffer.str());
}

}  // namespace io
}  // namespace tracewit
