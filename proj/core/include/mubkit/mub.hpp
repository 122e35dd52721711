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

#ifndef MUBKIT_MUB_HPP
#define MUBKIT_MUB_HPP

#include <string>
#include <vector>

#include "mubkit/finite_field.hpp"
#include "mubkit/galois_ring.hpp"
#include "mubkit/matrix.hpp"
#include "mubkit/state.hpp"

namespace mubkit {

/// Guards cyclotomic order blowup in the constructions; configurable per call.
inline constexpr long kDefaultDimCap = 128;

Basis computational_basis(std::size_t d);

/// Rows of the d-dimensional Fourier matrix: vector k has entries
/// omega_d^{k n}, scale_sq = d.
Basis fourier_basis(std::size_t d);

/// The three qubit bases as row stacks of I, H = (1,1;1,-1)/sqrt2 and
/// HS = (1,i;1,-i)/sqrt2.
struct GateBases {
  Basis identity;
  Basis hadamard;
  Basis hadamard_s;
};
GateBases qubit_gate_bases();

/// d+1 bases for d = p^m, p an odd prime: the computational basis plus one
/// basis per field element a, vector b, exponent trace((a*n + b)*n) on
/// omega_p. Positions follow the field enumeration (0, alpha^0, alpha^1, ...).
/// p = 2 is routed to mub_even.
MubSet mub_odd_prime_power(int p, int m, long cap = kDefaultDimCap);

/// 2^m + 1 bases from GR(4^m): computational plus one basis per Teichmuller
/// element a; vector b has entry i^{trace((a + 2b) * n)} at the position of
/// Teichmuller element n.
MubSet mub_even(int m, long cap = kDefaultDimCap);

/// Composite dimensions: prime powers delegate to the prime-power routes;
/// otherwise min_i(p_i^{e_i}) + 1 bases as tensor products of the factors'
/// bases, factors ordered by ascending prime.
MubSet mub_composite(std::size_t d, long cap = kDefaultDimCap);

/// Routing used by the CLI: d = 1 trivial, prime powers by characteristic,
/// composite d by the tensor route.
MubSet mub_auto(std::size_t d, long cap = kDefaultDimCap);

/// Entry-wise Kronecker product; vector (i, j) lands at flat index
/// i * b.dim() + j, likewise positions; scale_sq multiplies.
Basis tensor_product(const Basis& a, const Basis& b);

/// Exact test: every raw cross inner product has
/// abs_squared == scale_sq(A) * scale_sq(B) / d. Requires the product of the
/// scales to be divisible by d (else the pair cannot be unbiased with these
/// normalizations and the check returns false).
bool verify_unbiased_pair(const Basis& a, const Basis& b);

struct PairCheck {
  std::size_t basis_a = 0, basis_b = 0;
  bool unbiased = false;
  std::string detail;  // offending inner product in cyclotomic text form
};
struct BasisCheck {
  std::size_t basis_index = 0;
  bool orthonormal = false;
  std::string detail;
};
struct MubReport {
  bool pass = false;
  std::vector<BasisCheck> bases;
  std::vector<PairCheck> pairs;
};

MubReport verify_mub_set(const MubSet& s);

/// Character sum S = sum_n omega_p^{trace((a*n + b)*n)} over all field
/// elements n of the context of a and b.
CyclotomicInt weil_sum(const FieldElement& a, const FieldElement& b);

/// Operator sum_b lambda_b |v_b><v_b| with exact rational eigenvalue labels,
/// stored as an integer matrix over a common positive denominator.
class PhaseOperator {
 public:
  PhaseOperator(Basis eigenbasis, std::vector<Rational> eigenvalues);

  std::size_t dim() const { return eigenbasis_.dim(); }
  const Basis& eigenbasis() const { return eigenbasis_; }
  const std::vector<Rational>& eigenvalues() const { return eigenvalues_; }
  const ExactMatrix& matrix() const { return matrix_; }
  const BigInt& denominator() const { return matrix_.denominator(); }

  /// matrix * v_b == lambda_b * v_b, exactly, for every eigenpair.
  bool verify_eigenpairs() const;
  /// sum_b |v_b><v_b| == scale_sq * identity.
  bool verify_completeness() const;

 private:
  Basis eigenbasis_;
  std::vector<Rational> eigenvalues_;
  ExactMatrix matrix_;
};

PhaseOperator phase_operator(const Basis& b, const std::vector<Rational>& eigenvalues);
/// Default labels are the integers 0 .. d-1.
PhaseOperator phase_operator(const Basis& b);

}  // namespace mubkit

#endif
