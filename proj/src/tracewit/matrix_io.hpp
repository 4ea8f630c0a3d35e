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

#ifndef TRACEWIT_MATRIX_IO_HPP_
#define TRACEWIT_MATRIX_IO_HPP_

#include <Eigen/Dense>
#include <string>

namespace tracewit {
namespace io {

/// Complex matrices travel as plain CSV: one line per row, each entry two
/// consecutive fields (real part, imaginary part), printed with %.17g so a
/// write/read round trip is bit-exact for doubles.
std::string matrix_to_csv(const Eigen::MatrixXcd& m);

/// Inverse of matrix_to_csv. Throws ParseError on ragged rows, an odd field
/// count, or non-numeric fields.
Eigen::MatrixXcd matrix_from_csv(const std::string& text);

void save_matrix_csv(const std::string& path, const Eigen::MatrixXcd& m);
Eigen::MatrixXcd load_matrix_csv(const std::string& path);

}  // namespace io
}  // namespace tracewit

#endif  // TRACEWIT_MATRIX_IO_HPP_
