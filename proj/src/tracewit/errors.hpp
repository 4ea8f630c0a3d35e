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

#include <stdexcept>
#include <string>

namespace tracewit {

/// Malformed textual input (cycle notation, spec files, CSV, descriptors).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A dense object would exceed the configured Hilbert-space dimension cap.
struct DimensionCapError : std::runtime_error {
  explicit DimensionCapError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A symbolic product would exceed the configured support-size cap.
struct SupportCapError : std::runtime_error {
  explicit SupportCapError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Conditioning on a measurement outcome of (numerically) zero probability.
struct ZeroProbabilityError : std::runtime_error {
  explicit ZeroProbabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tracewit
