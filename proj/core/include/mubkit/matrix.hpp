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

#ifndef MUBKIT_MATRIX_HPP
#define MUBKIT_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "mubkit/cyclotomic.hpp"
#include "mubkit/state.hpp"

namespace mubkit {

/// Matrix of cyclotomic integers with a positive integer denominator: the
/// represented matrix is entries / denominator. Entries share one order.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  /// Zero matrix.
  ExactMatrix(std::size_t rows, std::size_t cols, unsigned long order, BigInt denominator = 1);

  static ExactMatrix identity_matrix(std::size_t n, unsigned long order = 1);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned long order() const { return order_; }
  const BigInt& denominator() const { return denominator_; }

  const CyclotomicInt& entry(std::size_t i, std::size_t j) const;
  void set_entry(std::size_t i, std::size_t j, CyclotomicInt value);

  ExactMatrix rescale_order(unsigned long new_order) const;

  ExactMatrix operator*(const ExactMatrix& other) const;
  ExactMatrix operator+(const ExactMatrix& other) const;
  ExactMatrix scaled(const BigInt& k) const;

  /// Equality of the represented matrices: cross-multiplied entries compared
  /// at the common cyclotomic order.
  bool same_matrix(const ExactMatrix& other) const;

  bool operator==(const ExactMatrix& other) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  unsigned long order_ = 1;
  BigInt denominator_ = 1;
  std::vector<CyclotomicInt> entries_;  // row-major
};

/// Matrix-vector application. The result's scale_sq absorbs the matrix
/// denominator as denominator^2 * scale_sq.
StateVector mat_apply(const ExactMatrix& a, const StateVector& v);

/// Basis vectors as matrix rows (amplitudes entries / sqrt(scale_sq); the
/// returned matrix carries the raw entries with denominator 1).
ExactMatrix basis_row_matrix(const Basis& b);

}  // namespace mubkit

#endif
