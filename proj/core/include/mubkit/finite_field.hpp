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

#ifndef MUBKIT_FINITE_FIELD_HPP
#define MUBKIT_FINITE_FIELD_HPP

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "mubkit/zpoly.hpp"

namespace mubkit {

class FieldContext;
using FieldContextPtr = std::shared_ptr<const FieldContext>;

/// Element of GF(p^m): a residue-class polynomial of degree < m over Z_p,
/// bound to its field description. Immutable.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldContextPtr ctx, zpoly::Poly coeffs);

  const zpoly::Poly& coeffs() const { return coeffs_; }
  const FieldContextPtr& context() const { return ctx_; }
  bool is_zero() const;

  FieldElement operator+(const FieldElement& other) const;
  FieldElement operator-(const FieldElement& other) const;
  FieldElement operator*(const FieldElement& other) const;
  FieldElement operator-() const;
  bool operator==(const FieldElement& other) const;

  FieldElement pow(long long e) const;
  FieldElement inverse() const;

 private:
  FieldContextPtr ctx_;
  zpoly::Poly coeffs_;  // length m, values in [0, p)
};

/// The lexicographically smallest monic irreducible degree-m polynomial over
/// Z_p whose residue class x generates the multiplicative group. Coefficient
/// tuples are compared highest degree first, so for p = 2 the result is
/// x^2+x+1, x^3+x+1, x^4+x+1 for m = 2, 3, 4.
zpoly::Poly find_modulus(int p, int m);

/// Ambient description of GF(p^m): modulus, element enumeration
/// (0 first, then ascending powers of the primitive element) and log table.
/// Immutable after construction; share via FieldContextPtr.
class FieldContext : public std::enable_shared_from_this<FieldContext> {
 public:
  /// Build with find_modulus(p, m).
  static FieldContextPtr create(int p, int m);
  /// Build with an explicit monic irreducible modulus (degree m, ascending
  /// coefficients, length m+1). The primitive element is the residue x when
  /// primitive, otherwise discovered by search.
  static FieldContextPtr create_with_modulus(int p, zpoly::Poly modulus);

  int characteristic() const { return p_; }
  int degree() const { return m_; }
  long size() const { return q_; }
  const zpoly::Poly& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  /// The stored primitive element.
  FieldElement primitive_element() const;
  FieldElement from_coeffs(zpoly::Poly coeffs) const;

  /// Enumeration 0, alpha^0, alpha^1, ..., alpha^{q-2}.
  const std::vector<FieldElement>& elements() const { return elements_; }
  const FieldElement& element(long index) const { return elements_.at(static_cast<std::size_t>(index)); }
  long index_of(const FieldElement& e) const;

  /// Exponent k with alpha^k == e, defined for nonzero e.
  long log(const FieldElement& e) const;

 private:
  FieldContext() = default;
  void init(int p, zpoly::Poly modulus);
  long encode(const zpoly::Poly& coeffs) const;

  int p_ = 0;
  int m_ = 0;
  long q_ = 0;
  zpoly::Poly modulus_;
  zpoly::Poly alpha_;
  std::vector<FieldElement> elements_;
  std::unordered_map<long, long> index_by_code_;
  std::unordered_map<long, long> log_by_code_;

  friend class FieldElement;
};

/// Trace of GF(p^m) down to GF(p): the sum of the m Frobenius iterates,
/// returned as an integer in {0, ..., p-1}.
int trace(const FieldElement& e);

struct RepresentationRow {
  long power;               // -1 for the zero element, else k for alpha^k
  std::string power_label;  // "0", "a^0", "a^1", ...
  std::string poly;         // "1+x" style, ascending degree
  std::vector<int> tuple;   // coefficients, highest degree first
};

/// One row per element: 0 first, then alpha^0 ... alpha^{q-2}.
std::vector<RepresentationRow> representation_table(const FieldContext& ctx);
std::vector<RepresentationRow> representation_table(int p, int m);

}  // namespace mubkit

#endif
