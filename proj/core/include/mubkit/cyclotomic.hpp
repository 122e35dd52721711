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

#ifndef MUBKIT_CYCLOTOMIC_HPP
#define MUBKIT_CYCLOTOMIC_HPP

#include <optional>
#include <vector>

#include "mubkit/int_polynomial.hpp"
#include "mubkit/integers.hpp"

namespace mubkit {

/// N-th cyclotomic polynomial Phi_N, computed by exact division of x^N - 1
/// by the product of Phi_d over proper divisors d of N. Results are memoized
/// behind a mutex; the fill is idempotent.
const IntPolynomial& cyclotomic_polynomial(unsigned long n);

/// Element of Z[zeta_N], the ring of integers of the N-th cyclotomic field.
///
/// Coordinates are kept in the power basis {zeta_N^i : 0 <= i < phi(N)},
/// always reduced modulo Phi_N, so equality of elements of one order is
/// coefficient-vector equality. Mixed-order arithmetic is rejected; callers
/// rescale explicitly (see with_common_order).
class CyclotomicInt {
 public:
  /// Zero of order 1.
  CyclotomicInt() : order_(1), coeffs_(1, 0) {}

  static CyclotomicInt zero(unsigned long order);
  static CyclotomicInt from_integer(unsigned long order, BigInt value);
  /// zeta_N^{k mod N}; k may be negative.
  static CyclotomicInt root_of_unity(unsigned long order, long long k);
  /// Reduce an arbitrary exponent-indexed coefficient vector mod Phi_N.
  static CyclotomicInt from_raw(unsigned long order, std::vector<BigInt> raw);

  unsigned long order() const { return order_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  CyclotomicInt operator+(const CyclotomicInt& other) const;
  CyclotomicInt operator-(const CyclotomicInt& other) const;
  CyclotomicInt operator*(const CyclotomicInt& other) const;
  CyclotomicInt operator-() const;
  CyclotomicInt operator*(const BigInt& scalar) const;
  bool operator==(const CyclotomicInt& other) const = default;

  CyclotomicInt& operator+=(const CyclotomicInt& other);

  /// Image under zeta_N -> zeta_N^{N-1}, i.e. complex conjugation.
  CyclotomicInt conjugate() const;

  /// The same algebraic number in Z[zeta_M]; requires order() | M.
  CyclotomicInt rescale_order(unsigned long new_order) const;

  /// this * conjugate(this). Real and nonnegative; an integer whenever the
  /// caller needs a norm check (see as_integer).
  CyclotomicInt abs_squared() const;

  /// The value as a rational integer if the canonical form is constant.
  std::optional<BigInt> as_integer() const;

  CyclotomicInt pow(unsigned long e) const;

 private:
  CyclotomicInt(unsigned long order, std::vector<BigInt> reduced)
      : order_(order), coeffs_(std::move(reduced)) {}

  unsigned long order_;
  std::vector<BigInt> coeffs_;  // length phi(order_)
};

inline CyclotomicInt operator*(const BigInt& scalar, const CyclotomicInt& a) {
  return a * scalar;
}

/// Rescale both operands to the lcm of their orders.
std::pair<CyclotomicInt, CyclotomicInt> with_common_order(const CyclotomicInt& a,
                                                          const CyclotomicInt& b);

}  // namespace mubkit

#endif
