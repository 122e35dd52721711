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

#include "mubkit/state.hpp"

#include <stdexcept>

namespace mubkit {

StateVector::StateVector(std::vector<CyclotomicInt> entries, long long scale_sq)
    : entries_(std::move(entries)), scale_sq_(scale_sq) {
  if (entries_.empty()) throw std::invalid_argument("StateVector: empty");
  if (scale_sq_ < 1) throw std::invalid_argument("StateVector: scale_sq must be positive");
  order_ = entries_.front().order();
  for (const auto& e : entries_)
    if (e.order() != order_) throw std::invalid_argument("StateVector: entries must share one order");
}

StateVector StateVector::rescale_order(unsigned long new_order) const {
  if (new_order == order_) return *this;
  std::vector<CyclotomicInt> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.rescale_order(new_order));
  return StateVector(std::move(out), scale_sq_);
}

StateVector StateVector::canonical_phase() const {
  for (const auto& e : entries_) {
    if (e.is_zero()) continue;
    auto norm = e.abs_squared().as_integer();
    if (!norm || *norm != 1) return *this;
    CyclotomicInt inverse = e.conjugate();
    std::vector<CyclotomicInt> out;
    out.reserve(entries_.size());
    for (const auto& f : entries_) out.push_back(f * inverse);
    return StateVector(std::move(out), scale_sq_);
  }
  return *this;
}

CyclotomicInt StateVector::norm_squared() const {
  CyclotomicInt acc = CyclotomicInt::zero(order_);
  for (const auto& e : entries_) acc += e.abs_squared();
  return acc;
}

bool StateVector::is_unit_norm() const {
  auto n = norm_squared().as_integer();
  return n && *n == scale_sq_;
}

CyclotomicInt raw_inner_product(const StateVector& u, const StateVector& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("raw_inner_product: dimension mismatch");
  if (u.order() != v.order())
    throw std::invalid_argument("raw_inner_product: order mismatch; rescale first");
  CyclotomicInt acc = CyclotomicInt::zero(u.order());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (u.entry(i).is_zero() || v.entry(i).is_zero()) continue;
    acc += u.entry(i).conjugate() * v.entry(i);
  }
  return acc;
}

Basis::Basis(std::vector<StateVector> vectors, std::string label)
    : vectors_(std::move(vectors)), label_(std::move(label)) {
  if (vectors_.empty()) throw std::invalid_argument("Basis: empty");
  unsigned long target = 1;
  long long s = vectors_.front().scale_sq();
  for (const auto& v : vectors_) {
    if (v.dim() != vectors_.size()) throw std::invalid_argument("Basis: vector count must equal dimension");
    if (v.scale_sq() != s) throw std::invalid_argument("Basis: vectors must share scale_sq");
    target = lcm_ul(target, v.order());
  }
  for (auto& v : vectors_) v = v.rescale_order(target);
}

Basis Basis::rescale_order(unsigned long new_order) const {
  std::vector<StateVector> out;
  out.reserve(vectors_.size());
  for (const auto& v : vectors_) out.push_back(v.rescale_order(new_order));
  return Basis(std::move(out), label_);
}

bool Basis::is_orthonormal() const {
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    for (std::size_t j = i; j < vectors_.size(); ++j) {
      CyclotomicInt ip = raw_inner_product(vectors_[i], vectors_[j]);
      auto value = ip.as_integer();
      if (!value) return false;
      if (i == j ? *value != scale_sq() : *value != 0) return false;
    }
  }
  return true;
}

MubSet::MubSet(std::size_t dim, std::vector<Basis> bases, MubProvenance provenance)
    : dim_(dim), bases_(std::move(bases)), provenance_(std::move(provenance)) {
  unsigned long target = 1;
  for (const auto& b : bases_) {
    if (b.dim() != dim_) throw std::invalid_argument("MubSet: basis dimension mismatch");
    target = lcm_ul(target, b.order());
  }
  for (auto& b : bases_) b = b.rescale_order(target);
}

}  // namespace mubkit
