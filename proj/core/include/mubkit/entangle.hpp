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

#ifndef MUBKIT_ENTANGLE_HPP
#define MUBKIT_ENTANGLE_HPP

#include <string>
#include <vector>

#include "mubkit/matrix.hpp"
#include "mubkit/mub.hpp"
#include "mubkit/state.hpp"

namespace mubkit {

/// Family of generalized Bell states on C^d tensor C^d. States are grouped
/// by the shift label h (cyclic position shift |n, n+h mod d>); within one h
/// the family holds one or more partial bases (index a), each of d vectors
/// (index b). The two-particle vector uses left-major flat indexing
/// |n, n'> <-> n*d + n'.
class BellFamily {
 public:
  BellFamily() = default;
  BellFamily(std::size_t dim, std::vector<std::vector<std::vector<StateVector>>> sets,
             std::string route);

  std::size_t dim() const { return dim_; }
  std::size_t shift_count() const { return sets_.size(); }
  std::size_t layer_count() const { return sets_.empty() ? 0 : sets_.front().size(); }
  const std::vector<std::vector<std::vector<StateVector>>>& sets() const { return sets_; }
  const StateVector& state(std::size_t h, std::size_t a, std::size_t b) const;
  const std::string& route() const { return route_; }

 private:
  std::size_t dim_ = 0;
  std::vector<std::vector<std::vector<StateVector>>> sets_;  // [h][a][b]
  std::string route_;
};

/// Unrefined Fourier family: |B_{h,k}> = (1/sqrt d) sum_n omega_d^{k n}
/// |n, n+h>; one partial basis per h.
BellFamily bell_basis(std::size_t d, long cap = kDefaultDimCap);

/// Even refinement over GR(4^m): amplitudes i^{trace((a + 2b) * n)} with
/// a, b, n running over the Teichmuller set; d = 2^m partial bases per shift.
BellFamily bell_even(int m, long cap = kDefaultDimCap);

/// Odd-characteristic refinement over GF(p^m): amplitudes
/// omega_p^{trace((a*n + b)*n)}; d partial bases per shift.
BellFamily bell_odd(int p, int m, long cap = kDefaultDimCap);

/// Composite d: amplitudes of the tensor-route MUB bases 1..m_tilde paired
/// with the cyclic shift kets, giving m_tilde partial bases per shift.
BellFamily bell_composite(std::size_t d, long cap = kDefaultDimCap);

/// Routing: prime powers by characteristic, composite by the tensor route.
BellFamily bell_auto(std::size_t d, long cap = kDefaultDimCap);

/// Reduction to the first subsystem: rho[n][n''] = sum_{n'} v[n,n']
/// conj(v[n'',n']), returned with denominator = scale_sq. The split
/// (d_left, d_right) defaults to the square split.
ExactMatrix partial_trace_second(const StateVector& v);
ExactMatrix partial_trace_second(const StateVector& v, std::size_t d_left, std::size_t d_right);
ExactMatrix partial_trace_first(const StateVector& v, std::size_t d_left, std::size_t d_right);

/// rho == identity * (scale_sq / d), i.e. the state is maximally entangled.
bool is_maximally_mixed(const ExactMatrix& rho, std::size_t d, long long scale_sq);

struct BellCheckFailure {
  std::string check;  // "orthonormality", "entanglement", "unbiasedness", "cross_shift"
  std::size_t h_a = 0, a_a = 0, b_a = 0;
  std::size_t h_b = 0, a_b = 0, b_b = 0;
  std::string detail;
};

struct BellReport {
  bool pass = false;
  bool orthonormal = false;       // within every (h, a) partial basis and across shifts
  bool entangled = false;         // every state has partial trace I/d
  bool unbiased_within_shift = false;  // cross-a overlaps at level 1/d_s
  bool orthogonal_across_shift = false;
  std::vector<BellCheckFailure> failures;
};

/// Exact verification of a family: (i) orthonormality of every partial basis,
/// (ii) partial trace of every state equals I/d, (iii) within one shift,
/// overlaps across partial bases satisfy abs_squared == s^2 / d_s,
/// (iv) across shifts all overlaps vanish. d_s defaults to d.
BellReport verify_bell_family(const BellFamily& f, long long sector_dim = 0);

}  // namespace mubkit

#endif
