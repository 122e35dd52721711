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

#include "mubkit/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace mubkit {

const IntPolynomial& cyclotomic_polynomial(unsigned long n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  static std::map<unsigned long, IntPolynomial> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_d for all divisors d of n, ascending, reusing earlier entries.
  for (unsigned long d : divisors(n)) {
    if (cache.count(d)) continue;
    std::vector<BigInt> xn1(d + 1, 0);
    xn1[0] = -1;
    xn1[d] = 1;
    IntPolynomial quotient(std::move(xn1));
    for (unsigned long e : divisors(d)) {
      if (e == d) continue;
      quotient = quotient.divide_exact(cache.at(e));
    }
    cache.emplace(d, std::move(quotient));
  }
  return cache.at(n);
}

CyclotomicInt CyclotomicInt::zero(unsigned long order) {
  if (order == 0) throw std::invalid_argument("CyclotomicInt: order must be positive");
  return CyclotomicInt(order, std::vector<BigInt>(euler_phi(order), 0));
}

CyclotomicInt CyclotomicInt::from_integer(unsigned long order, BigInt value) {
  CyclotomicInt out = zero(order);
  out.coeffs_[0] = std::move(value);
  return out;
}

CyclotomicInt CyclotomicInt::from_raw(unsigned long order, std::vector<BigInt> raw) {
  if (order == 0) throw std::invalid_argument("CyclotomicInt: order must be positive");
  const std::size_t phi = euler_phi(order);
  if (raw.size() > phi) {
    const IntPolynomial& modulus = cyclotomic_polynomial(order);
    IntPolynomial reduced = IntPolynomial(std::move(raw)).divmod_monic(modulus).second;
    raw = reduced.coeffs();
  }
  raw.resize(phi, 0);
  return CyclotomicInt(order, std::move(raw));
}

CyclotomicInt CyclotomicInt::root_of_unity(unsigned long order, long long k) {
  if (order == 0) throw std::invalid_argument("root_of_unity: order must be positive");
  long long n = static_cast<long long>(order);
  long long e = ((k % n) + n) % n;
  std::vector<BigInt> raw(static_cast<std::size_t>(e) + 1, 0);
  raw[static_cast<std::size_t>(e)] = 1;
  return from_raw(order, std::move(raw));
}

bool CyclotomicInt::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

namespace {
void require_same_order(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("CyclotomicInt: mixed orders; rescale explicitly first");
}
}  // namespace

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& other) const {
  require_same_order(*this, other);
  std::vector<BigInt> out = coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.coeffs_[i];
  return CyclotomicInt(order_, std::move(out));
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& other) const {
  require_same_order(*this, other);
  std::vector<BigInt> out = coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= other.coeffs_[i];
  return CyclotomicInt(order_, std::move(out));
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& other) const {
  require_same_order(*this, other);
  if (is_zero() || other.is_zero()) return zero(order_);
  std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (other.coeffs_[j] == 0) continue;
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return from_raw(order_, std::move(out));
}

CyclotomicInt CyclotomicInt::operator-() const {
  std::vector<BigInt> out = coeffs_;
  for (auto& c : out) c = -c;
  return CyclotomicInt(order_, std::move(out));
}

CyclotomicInt CyclotomicInt::operator*(const BigInt& scalar) const {
  std::vector<BigInt> out = coeffs_;
  for (auto& c : out) c *= scalar;
  return CyclotomicInt(order_, std::move(out));
}

CyclotomicInt CyclotomicInt::conjugate() const {
  std::vector<BigInt> raw(order_, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    std::size_t e = (i * (order_ - 1)) % order_;
    raw[e] += coeffs_[i];
  }
  return from_raw(order_, std::move(raw));
}

CyclotomicInt CyclotomicInt::rescale_order(unsigned long new_order) const {
  if (new_order == 0 || new_order % order_ != 0)
    throw std::invalid_argument("rescale_order: target order must be a multiple of the current order");
  if (new_order == order_) return *this;
  const unsigned long step = new_order / order_;
  std::vector<BigInt> raw(new_order, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    raw[(i * step) % new_order] += coeffs_[i];
  }
  return from_raw(new_order, std::move(raw));
}

CyclotomicInt CyclotomicInt::abs_squared() const {
  return *this * conjugate();
}

std::optional<BigInt> CyclotomicInt::as_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_[0];
}

CyclotomicInt CyclotomicInt::pow(unsigned long e) const {
  CyclotomicInt result = from_integer(order_, 1);
  CyclotomicInt base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::pair<CyclotomicInt, CyclotomicInt> with_common_order(const CyclotomicInt& a,
                                                          const CyclotomicInt& b) {
  unsigned long target = lcm_ul(a.order(), b.order());
  return {a.rescale_order(target), b.rescale_order(target)};
}

}  // namespace mubkit
