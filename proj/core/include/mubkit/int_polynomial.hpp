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

#ifndef MUBKIT_INT_POLYNOMIAL_HPP
#define MUBKIT_INT_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "mubkit/integers.hpp"

namespace mubkit {

/// Polynomial with unbounded integer coefficients, stored in ascending
/// degree with a nonzero leading coefficient (the zero polynomial has an
/// empty coefficient vector).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial constant(BigInt c);
  /// x^k
  static IntPolynomial monomial(std::size_t k, BigInt c = 1);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const BigInt& coeff(std::size_t k) const;
  bool is_monic() const;

  IntPolynomial operator+(const IntPolynomial& other) const;
  IntPolynomial operator-(const IntPolynomial& other) const;
  IntPolynomial operator*(const IntPolynomial& other) const;
  IntPolynomial operator-() const;
  bool operator==(const IntPolynomial& other) const = default;

  /// Quotient and remainder by a monic divisor: *this = q*div + r with
  /// deg r < deg div. All arithmetic stays in Z.
  std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& div) const;

  /// Exact division; throws if the remainder is nonzero.
  IntPolynomial divide_exact(const IntPolynomial& div) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace mubkit

#endif
