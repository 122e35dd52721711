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

#ifndef MUBKIT_STATE_HPP
#define MUBKIT_STATE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mubkit/cyclotomic.hpp"

namespace mubkit {

/// Hilbert vector with exact amplitudes: component i is entries[i] divided
/// by sqrt(scale_sq). Entries share one cyclotomic order.
class StateVector {
 public:
  StateVector() = default;
  StateVector(std::vector<CyclotomicInt> entries, long long scale_sq);

  std::size_t dim() const { return entries_.size(); }
  unsigned long order() const { return order_; }
  long long scale_sq() const { return scale_sq_; }
  const std::vector<CyclotomicInt>& entries() const { return entries_; }
  const CyclotomicInt& entry(std::size_t i) const { return entries_.at(i); }

  StateVector rescale_order(unsigned long new_order) const;

  /// Multiplies every entry by the conjugate of the first nonzero entry when
  /// that entry is unimodular, making the first nonzero entry 1. Vectors with
  /// a non-unimodular leading entry are returned unchanged.
  StateVector canonical_phase() const;

  /// <this|this> as an unnormalized integer: equals scale_sq for unit norm.
  CyclotomicInt norm_squared() const;
  bool is_unit_norm() const;

  bool operator==(const StateVector& other) const = default;

 private:
  std::vector<CyclotomicInt> entries_;
  long long scale_sq_ = 1;
  unsigned long order_ = 1;
};

/// Unnormalized inner product sum_i conj(u_i) * v_i; same dim and order.
CyclotomicInt raw_inner_product(const StateVector& u, const StateVector& v);

/// Ordered orthonormal family of dim() vectors. Vectors are promoted to a
/// common cyclotomic order on construction; orthonormality is not enforced
/// here (the verifiers decide), only shape is.
class Basis {
 public:
  Basis() = default;
  Basis(std::vector<StateVector> vectors, std::string label);

  std::size_t dim() const { return vectors_.size(); }
  unsigned long order() const { return vectors_.empty() ? 1 : vectors_.front().order(); }
  long long scale_sq() const { return vectors_.empty() ? 1 : vectors_.front().scale_sq(); }
  const std::vector<StateVector>& vectors() const { return vectors_; }
  const StateVector& vector(std::size_t i) const { return vectors_.at(i); }
  const std::string& label() const { return label_; }

  Basis rescale_order(unsigned long new_order) const;

  /// <v_i|v_j> == scale_sq * delta_ij for all pairs, exactly.
  bool is_orthonormal() const;

  bool operator==(const Basis& other) const = default;

 private:
  std::vector<StateVector> vectors_;
  std::string label_;
};

struct MubProvenance {
  std::string route;            // "fourier", "gates", "field", "ring", "tensor", "trivial"
  std::string dimension_class;  // "prime", "odd_prime_power", "even_prime_power", "composite", ...
  std::vector<std::string> moduli;

  bool operator==(const MubProvenance&) const = default;
};

/// Ordered collection of bases of one dimension (computational basis first by
/// convention), all promoted to a common cyclotomic order.
class MubSet {
 public:
  MubSet() = default;
  MubSet(std::size_t dim, std::vector<Basis> bases, MubProvenance provenance);

  std::size_t dim() const { return dim_; }
  unsigned long order() const { return bases_.empty() ? 1 : bases_.front().order(); }
  std::size_t basis_count() const { return bases_.size(); }
  const std::vector<Basis>& bases() const { return bases_; }
  const Basis& basis(std::size_t i) const { return bases_.at(i); }
  const MubProvenance& provenance() const { return provenance_; }

  bool operator==(const MubSet& other) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Basis> bases_;
  MubProvenance provenance_;
};

}  // namespace mubkit

#endif
