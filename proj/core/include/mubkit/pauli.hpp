/*
   Copyright 2026 The mubkit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MUBKIT_PAULI_HPP
#define MUBKIT_PAULI_HPP

#include <optional>
#include <string>
#include <vector>

#include "mubkit/matrix.hpp"
#include "mubkit/mub.hpp"

namespace mubkit {

/// Cyclic shift X|n> = |n+1 mod d>, order-1 entries.
ExactMatrix shift_op(std::size_t d);

/// Clock Z = diag(omega_d^0, ..., omega_d^{d-1}).
ExactMatrix clock_op(std::size_t d);

/// True iff every vector of the basis is an exact eigenvector of u
/// (denominator-1 matrices only). The scalar is recovered from the first
/// nonzero component and verified on all components.
bool diagonalizes(const ExactMatrix& u, const Basis& b);

/// Eigenvalues when the basis diagonalizes u, in basis-vector order.
std::optional<std::vector<CyclotomicInt>> eigenvalues_of(const ExactMatrix& u, const Basis& b);

struct PauliMatch {
  std::size_t basis_index = 0;
  std::size_t op_index = 0;
  std::string op_label;
  std::vector<CyclotomicInt> eigenvalues;
};

struct PauliCorrespondence {
  bool perfect = false;
  std::vector<PauliMatch> matches;  // one per basis when perfect
  std::vector<std::string> op_labels;
  MubSet mubs;
};

/// Builds {Z} united with {X Z^k : k = 0..p-1} and the full MUB set in
/// dimension p, then searches for a perfect matching basis <-> operator under
/// the exact eigenvector predicate.
PauliCorrespondence pauli_mub_correspondence(int p, long cap = kDefaultDimCap);

}  // namespace mubkit

#endif
