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

#include "mubkit/int_polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace mubkit {

namespace {
const BigInt kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
  return IntPolynomial({std::move(c)});
}

IntPolynomial IntPolynomial::monomial(std::size_t k, BigInt c) {
  std::vector<BigInt> coeffs(k + 1, 0);
  coeffs[k] = std::move(c);
  return IntPolynomial(std::move(coeffs));
}

const BigInt& IntPolynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

bool IntPolynomial::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == 1;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + other.coeff(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - other.coeff(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> out = coeffs_;
  for (auto& c : out) c = -c;
  return IntPolynomial(std::move(out));
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod_monic(const IntPolynomial& div) const {
  if (!div.is_monic()) throw std::invalid_argument("divmod_monic: divisor must be monic");
  std::vector<BigInt> rem = coeffs_;
  const long dd = div.degree();
  if (degree() < dd) return {IntPolynomial(), *this};
  std::vector<BigInt> quot(static_cast<std::size_t>(degree() - dd) + 1, 0);
  for (long k = degree(); k >= dd; --k) {
    BigInt c = rem[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - dd)] = c;
    for (long j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k - dd + j)] -= c * div.coeff(static_cast<std::size_t>(j));
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& div) const {
  if (div.is_zero()) throw std::invalid_argument("divide_exact: division by zero polynomial");
  // Division of integer polynomials; exactness is required, so trailing
  // coefficient ratios must stay integral throughout.
  std::vector<BigInt> rem = coeffs_;
  const long dd = div.degree();
  long dr = degree();
  if (dr < dd) {
    if (is_zero()) return {};
    throw std::invalid_argument("divide_exact: not divisible");
  }
  std::vector<BigInt> quot(static_cast<std::size_t>(dr - dd) + 1, 0);
  const BigInt& lead = div.coeffs().back();
  for (long k = dr; k >= dd; --k) {
    BigInt c = rem[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (c % lead != 0) throw std::invalid_argument("divide_exact: not divisible");
    BigInt q = c / lead;
    quot[static_cast<std::size_t>(k - dd)] = q;
    for (long j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k - dd + j)] -= q * div.coeff(static_cast<std::size_t>(j));
  }
  IntPolynomial r(std::move(rem));
  if (!r.is_zero()) throw std::invalid_argument("divide_exact: not divisible");
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (k == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace mubkit
