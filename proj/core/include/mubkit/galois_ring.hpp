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

#ifndef MUBKIT_GALOIS_RING_HPP
#define MUBKIT_GALOIS_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mubkit/zpoly.hpp"

namespace mubkit {

class RingContext;
using RingContextPtr = std::shared_ptr<const RingContext>;

/// Element of GR(4^m): a residue polynomial of degree < m over Z_4.
class RingElement {
 public:
  RingElement() = default;
  RingElement(RingContextPtr ctx, zpoly::Poly coeffs);

  const zpoly::Poly& coeffs() const { return coeffs_; }
  const RingContextPtr& context() const { return ctx_; }
  bool is_zero() const;

  RingElement operator+(const RingElement& other) const;
  RingElement operator-(const RingElement& other) const;
  RingElement operator*(const RingElement& other) const;
  bool operator==(const RingElement& other) const;

  RingElement pow(unsigned long e) const;
  /// Coefficient-wise reduction mod 2 (the projection GR(4^m) -> GF(2^m)).
  zpoly::Poly mod2() const;

 private:
  RingContextPtr ctx_;
  zpoly::Poly coeffs_;  // length m, values in {0,1,2,3}
};

/// Lift of a primitive irreducible binary polynomial to the basic primitive
/// polynomial over Z_4: split h2 = e - d into even and odd parts, form
/// +-(e^2 - d^2), pick the monic sign, substitute x^2 -> x, reduce mod 4.
/// Rejects reducible or non-primitive input.
zpoly::Poly hensel_lift(const zpoly::Poly& h2);

/// GR(4^m) = Z_4[x]/(h) with its Teichmuller set and 2-adic decomposition
/// table. Immutable after construction.
class RingContext : public std::enable_shared_from_this<RingContext> {
 public:
  /// Default chain: find_modulus(2, m) -> hensel_lift.
  static RingContextPtr create(int m);
  /// Explicit binary polynomial to lift.
  static RingContextPtr create_from_binary(const zpoly::Poly& h2);

  int degree() const { return m_; }
  long size() const { return size_; }                    // 4^m
  long teichmuller_size() const { return t_size_; }      // 2^m
  const zpoly::Poly& modulus() const { return modulus_; }
  const zpoly::Poly& binary_modulus() const { return h2_; }

  RingElement zero() const;
  RingElement one() const;
  /// The distinguished root xi of the basic primitive polynomial.
  RingElement xi() const;
  RingElement from_coeffs(zpoly::Poly coeffs) const;

  /// T_m = (0, 1, xi, ..., xi^{2^m - 2}).
  const std::vector<RingElement>& teichmuller_set() const { return teichmuller_; }

  /// All 4^m elements, coefficient-code order.
  RingElement element(long code) const;
  long encode(const RingElement& e) const;

  /// The unique (a, b) in T_m x T_m with beta = a + 2b; a equals beta^{2^m}.
  std::pair<RingElement, RingElement> teichmuller_decompose(const RingElement& beta) const;

  /// sigma(a + 2b) = a^2 + 2 b^2.
  RingElement frobenius(const RingElement& beta) const;

  /// Sum of the m Frobenius iterates, a residue in Z_4.
  int ring_trace(const RingElement& beta) const;

  /// Rows indexed by a in T_m, columns by b, entry a + 2b.
  std::vector<std::vector<RingElement>> decomposition_matrix() const;

 private:
  RingContext() = default;
  void init(zpoly::Poly h2);

  int m_ = 0;
  long size_ = 0;
  long t_size_ = 0;
  zpoly::Poly modulus_;  // over Z_4
  zpoly::Poly h2_;       // over Z_2
  zpoly::Poly xi_;
  std::vector<RingElement> teichmuller_;
  std::unordered_map<long, std::pair<long, long>> decompose_by_code_;  // code -> (ia, ib)
  std::unordered_map<long, long> teich_index_by_code_;

  friend class RingElement;
};

struct RingRepresentationRow {
  long power;               // -1 for zero, else k for xi^k
  std::string power_label;  // "0", "1", "xi", "xi^2", ...
  std::string poly;
  std::vector<int> tuple_z4;  // highest degree first
  std::vector<int> tuple_z2;  // reduction mod 2, highest degree first
};

/// One row per Teichmuller element: 0, 1, xi, ..., xi^{2^m-2}.
std::vector<RingRepresentationRow> ring_representation_table(const RingContext& ctx);

/// Generic quotient ring Z_n[x]/(f) with explicit element enumeration;
/// elements are addressed by their coefficient code (base-n digits, constant
/// coefficient least significant).
class QuotientRing {
 public:
  QuotientRing(int n, zpoly::Poly f);

  int coeff_modulus() const { return n_; }
  const zpoly::Poly& modulus_poly() const { return f_; }
  long size() const { return size_; }

  zpoly::Poly element(long code) const;
  long encode(const zpoly::Poly& coeffs) const;

  long add(long a, long b) const;
  long mul(long a, long b) const;
  long scalar_mul(int k, long a) const;

 private:
  int n_ = 0;
  int deg_ = 0;
  long size_ = 0;
  zpoly::Poly f_;
};

struct SylowDecomposition {
  std::vector<long> annihilator_of_2;  // S_a = {x : 2x = 0}
  std::vector<long> annihilator_of_3;  // S_b = {x : 3x = 0}
};

/// The two Sylow annihilator sets of a quotient ring over Z_6; checks that
/// every ring element splits uniquely as a + b across them.
SylowDecomposition sylow_decomposition(const QuotientRing& ring);

struct SubfieldReport {
  bool is_field = false;
  std::optional<long> identity;  // element code of the multiplicative identity
  long mult_group_order = 0;
  std::string failure;
};

/// Decides whether a subset (given by element codes) forms a field under the
/// ambient ring operations.
SubfieldReport verify_subfield(const std::vector<long>& subset, const QuotientRing& ring);

}  // namespace mubkit

#endif
