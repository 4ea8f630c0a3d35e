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

#ifndef TRACEWIT_SPEC_FORMAT_HPP_
#define TRACEWIT_SPEC_FORMAT_HPP_

#include <optional>
#include <string>

#include "tracewit/dense.hpp"
#include "tracewit/werner.hpp"
#include "tracewit/witness.hpp"

namespace tracewit {
namespace io {

/// Witness specs travel as a small declarative text format:
///
///   # comment
///   parties 3
///   copies 2
///   dims 2          # one value broadcasts; or one value per party
///   factor witness catalog:hadamard
///   factor positive dense:phi_plus_pt
///
/// One `factor <role> <kind>` line per party, in party order. Roles are
/// `witness` or `positive`. Kinds:
///
///   identity                          the unit of C[S_copies]
///   young:<parts>                     omega_lambda, e.g. young:2,1
///   catalog:<family>[:<parts>][:proj|:perm]
///                                     catalog witness on `copies` letters;
///                                     families hadamard, schur, hook,
///                                     marcus, permanent; default :proj
///   dense:bell_xxzz                   1 - XX - ZZ (copies = 2, dim 2)
///   dense:phi_plus_pt                 partial-transposed unnormalized
///                                     maximally entangled projector
///                                     (copies = 2, any dim)
///   dense:@<path>                     matrix csv (see matrix_io), size
///                                     d^copies, Hermitian
///
/// parse(print(parse(text))) == parse(text): printing replays each factor's
/// stored source string.
witness::WitnessSpec parse_witness_spec(const std::string& text);
witness::WitnessSpec load_witness_spec(const std::string& path);
std::string print_witness_spec(const witness::WitnessSpec& spec);

/// A state named on the command line. The dense render is always available;
/// the group-ring form is carried only for werner: descriptors, where the
/// symbolic evaluation backend applies.
struct DescribedState {
  std::string scheme;
  hilbert::DenseOperator rho;
  std::optional<werner::GroupRingState> group_ring;
};

/// Descriptor grammar (scheme:key=value,... or scheme:name,...):
///
///   ghz:n=3,d=2,p=1.0      noisy GHZ, p = 1 pure
///   bell:phi_plus[,d=2]    |phi+><phi+| on two qudits
///   bell:psi_plus          |psi+><psi+| on two qubits
///   mixed:n=2,d=2          identity / d^n
///   werner:n=3,d=3,seed=7  random group-ring Werner sample
///   file:<path>[,dims=2x2x2]
///                          density matrix from matrix csv; dims optional
///                          (consumers may refactor a single-factor load)
DescribedState state_from_descriptor(const std::string& text);

}  // namespace io
}  // namespace tracewit

#endif  // TRACEWIT_SPEC_FORMAT_HPP_
