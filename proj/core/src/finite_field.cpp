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

#include "mubkit/finite_field.hpp"

#include <sstream>
#include <stdexcept>

#include "mubkit/integers.hpp"

namespace mubkit {

namespace zpoly {

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

long degree(const Poly& a) {
  for (long i = static_cast<long>(a.size()) - 1; i >= 0; --i)
    if (a[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

bool is_zero(const Poly& a) {
  return degree(a) < 0;
}

Poly add(const Poly& a, const Poly& b, int n) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int va = i < a.size() ? a[i] : 0;
    int vb = i < b.size() ? b[i] : 0;
    out[i] = (va + vb) % n;
  }
  return out;
}

Poly sub(const Poly& a, const Poly& b, int n) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int va = i < a.size() ? a[i] : 0;
    int vb = i < b.size() ? b[i] : 0;
    out[i] = ((va - vb) % n + n) % n;
  }
  return out;
}

Poly mul(const Poly& a, const Poly& b, int n) {
  if (is_zero(a) || is_zero(b)) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % n;
  }
  return out;
}

Poly scalar_mul(int k, const Poly& a, int n) {
  Poly out = a;
  for (auto& c : out) c = ((c * k) % n + n) % n;
  return out;
}

Poly mod(Poly a, const Poly& divisor, int n) {
  long dd = degree(divisor);
  if (dd < 0 || divisor[static_cast<std::size_t>(dd)] != 1)
    throw std::invalid_argument("zpoly::mod: divisor must be monic");
  for (long k = degree(a); k >= dd; --k) {
    int c = a[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    for (long j = 0; j <= dd; ++j) {
      auto idx = static_cast<std::size_t>(k - dd + j);
      a[idx] = ((a[idx] - c * divisor[static_cast<std::size_t>(j)]) % n + n) % n;
    }
  }
  a.resize(static_cast<std::size_t>(dd), 0);
  return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& divisor, int n) {
  return mod(mul(a, b, n), divisor, n);
}

std::string to_string(const Poly& a) {
  if (is_zero(a)) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (k == 0) {
      os << a[k];
    } else {
      if (a[k] != 1) os << a[k];
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace zpoly

namespace {

// Multiplicative order of a nonzero residue; 0 if the residue is zero or a
// zero divisor path never returns to 1 within the group bound.
long residue_order(const zpoly::Poly& a, const zpoly::Poly& modulus, int p, long bound) {
  if (zpoly::is_zero(a)) return 0;
  zpoly::Poly acc = {1};
  for (long k = 1; k <= bound; ++k) {
    acc = zpoly::mulmod(acc, a, modulus, p);
    if (zpoly::degree(acc) == 0 && acc[0] == 1) return k;
  }
  return 0;
}

bool is_irreducible(const zpoly::Poly& f, int p) {
  long m = zpoly::degree(f);
  if (m <= 0) return false;
  if (m == 1) return true;
  // Trial division by every monic polynomial of degree 1..m/2.
  for (long d = 1; 2 * d <= m; ++d) {
    long count = 1;
    for (long i = 0; i < d; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      zpoly::Poly g(static_cast<std::size_t>(d) + 1, 0);
      long c = code;
      for (long i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
        c /= p;
      }
      g[static_cast<std::size_t>(d)] = 1;
      if (zpoly::is_zero(zpoly::mod(f, g, p))) return false;
    }
  }
  return true;
}

}  // namespace

zpoly::Poly find_modulus(int p, int m) {
  if (!is_prime(static_cast<unsigned long>(p)))
    throw std::invalid_argument("find_modulus: p must be prime");
  if (m < 1) throw std::invalid_argument("find_modulus: m must be at least 1");
  long q = 1;
  for (int i = 0; i < m; ++i) q *= p;
  // Candidates ordered by coefficient tuple, highest degree most significant:
  // the base-p digit at place i of the counter is the coefficient of x^i.
  for (long code = 0; code < q; ++code) {
    zpoly::Poly f(static_cast<std::size_t>(m) + 1, 0);
    long c = code;
    for (int i = 0; i < m; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
      c /= p;
    }
    f[static_cast<std::size_t>(m)] = 1;
    if (!is_irreducible(f, p)) continue;
    if (residue_order({0, 1}, f, p, q - 1) == q - 1) return f;
  }
  throw std::logic_error("find_modulus: no primitive polynomial found");
}

FieldElement::FieldElement(FieldContextPtr ctx, zpoly::Poly coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  if (!ctx_) throw std::invalid_argument("FieldElement: null context");
  coeffs_.resize(static_cast<std::size_t>(ctx_->degree()), 0);
  for (auto& c : coeffs_) c = ((c % ctx_->characteristic()) + ctx_->characteristic()) % ctx_->characteristic();
}

bool FieldElement::is_zero() const {
  return zpoly::is_zero(coeffs_);
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.context() != b.context())
    throw std::invalid_argument("FieldElement: context mismatch");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& other) const {
  require_same_field(*this, other);
  return FieldElement(ctx_, zpoly::add(coeffs_, other.coeffs_, ctx_->characteristic()));
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
  require_same_field(*this, other);
  return FieldElement(ctx_, zpoly::sub(coeffs_, other.coeffs_, ctx_->characteristic()));
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
  require_same_field(*this, other);
  return FieldElement(ctx_, zpoly::mulmod(coeffs_, other.coeffs_, ctx_->modulus(), ctx_->characteristic()));
}

FieldElement FieldElement::operator-() const {
  return FieldElement(ctx_, zpoly::sub({}, coeffs_, ctx_->characteristic()));
}

bool FieldElement::operator==(const FieldElement& other) const {
  return ctx_ == other.ctx_ && coeffs_ == other.coeffs_;
}

FieldElement FieldElement::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement result = ctx_->one();
  FieldElement base = *this;
  unsigned long long n = static_cast<unsigned long long>(e);
  while (n > 0) {
    if (n & 1ULL) result = result * base;
    base = base * base;
    n >>= 1ULL;
  }
  return result;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("FieldElement: zero has no inverse");
  long k = ctx_->log(*this);
  long g = ctx_->size() - 1;
  return ctx_->primitive_element().pow((g - k) % g);
}

FieldContextPtr FieldContext::create(int p, int m) {
  return create_with_modulus(p, find_modulus(p, m));
}

FieldContextPtr FieldContext::create_with_modulus(int p, zpoly::Poly modulus) {
  auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
  ctx->init(p, std::move(modulus));
  return ctx;
}

void FieldContext::init(int p, zpoly::Poly modulus) {
  if (!is_prime(static_cast<unsigned long>(p)))
    throw std::invalid_argument("FieldContext: characteristic must be prime");
  long m = zpoly::degree(modulus);
  if (m < 1) throw std::invalid_argument("FieldContext: modulus degree must be at least 1");
  if (modulus[static_cast<std::size_t>(m)] != 1)
    throw std::invalid_argument("FieldContext: modulus must be monic");
  for (int c : modulus)
    if (c < 0 || c >= p) throw std::invalid_argument("FieldContext: modulus coefficients must lie in [0, p)");
  if (!is_irreducible(modulus, p))
    throw std::invalid_argument("FieldContext: modulus is reducible");

  p_ = p;
  m_ = static_cast<int>(m);
  q_ = 1;
  for (int i = 0; i < m_; ++i) q_ *= p;
  modulus_ = std::move(modulus);

  // Primitive element: the residue x when it generates, otherwise the first
  // element (by coefficient code) of full multiplicative order.
  zpoly::Poly x = {0, 1};
  if (m_ == 1) x = zpoly::mod({0, 1}, modulus_, p_);
  if (residue_order(x, modulus_, p_, q_ - 1) == q_ - 1) {
    alpha_ = x;
    alpha_.resize(static_cast<std::size_t>(m_), 0);
  } else {
    bool found = false;
    for (long code = 1; code < q_ && !found; ++code) {
      zpoly::Poly cand(static_cast<std::size_t>(m_), 0);
      long c = code;
      for (int i = 0; i < m_; ++i) {
        cand[static_cast<std::size_t>(i)] = static_cast<int>(c % p_);
        c /= p_;
      }
      if (residue_order(cand, modulus_, p_, q_ - 1) == q_ - 1) {
        alpha_ = cand;
        found = true;
      }
    }
    if (!found) throw std::logic_error("FieldContext: no primitive element (modulus not irreducible?)");
  }

  auto self = shared_from_this();
  elements_.reserve(static_cast<std::size_t>(q_));
  zpoly::Poly zero(static_cast<std::size_t>(m_), 0);
  elements_.emplace_back(self, zero);
  index_by_code_.emplace(0, 0);
  zpoly::Poly acc = {1};
  acc.resize(static_cast<std::size_t>(m_), 0);
  for (long k = 0; k < q_ - 1; ++k) {
    elements_.emplace_back(self, acc);
    long code = encode(acc);
    index_by_code_.emplace(code, k + 1);
    log_by_code_.emplace(code, k);
    acc = zpoly::mulmod(acc, alpha_, modulus_, p_);
    acc.resize(static_cast<std::size_t>(m_), 0);
  }
  if (index_by_code_.size() != static_cast<std::size_t>(q_))
    throw std::logic_error("FieldContext: primitive element does not enumerate the field");
}

long FieldContext::encode(const zpoly::Poly& coeffs) const {
  long code = 0;
  for (long i = m_ - 1; i >= 0; --i) code = code * p_ + coeffs[static_cast<std::size_t>(i)];
  return code;
}

FieldElement FieldContext::zero() const {
  return elements_.front();
}

FieldElement FieldContext::one() const {
  return elements_.at(1);
}

FieldElement FieldContext::primitive_element() const {
  return FieldElement(shared_from_this(), alpha_);
}

FieldElement FieldContext::from_coeffs(zpoly::Poly coeffs) const {
  return FieldElement(shared_from_this(), std::move(coeffs));
}

long FieldContext::index_of(const FieldElement& e) const {
  if (e.context().get() != this) throw std::invalid_argument("index_of: context mismatch");
  return index_by_code_.at(encode(e.coeffs()));
}

long FieldContext::log(const FieldElement& e) const {
  if (e.context().get() != this) throw std::invalid_argument("log: context mismatch");
  if (e.is_zero()) throw std::domain_error("log: zero element");
  return log_by_code_.at(encode(e.coeffs()));
}

int trace(const FieldElement& e) {
  const auto& ctx = e.context();
  FieldElement acc = ctx->zero();
  FieldElement iterate = e;
  for (int k = 0; k < ctx->degree(); ++k) {
    acc = acc + iterate;
    iterate = iterate.pow(ctx->characteristic());
  }
  for (std::size_t i = 1; i < acc.coeffs().size(); ++i)
    if (acc.coeffs()[i] != 0) throw std::logic_error("trace: result not in the prime subfield");
  return acc.coeffs()[0];
}

std::vector<RepresentationRow> representation_table(const FieldContext& ctx) {
  std::vector<RepresentationRow> rows;
  rows.reserve(static_cast<std::size_t>(ctx.size()));
  for (long i = 0; i < ctx.size(); ++i) {
    const FieldElement& e = ctx.element(i);
    RepresentationRow row;
    row.power = i - 1;
    row.power_label = i == 0 ? "0" : "a^" + std::to_string(i - 1);
    row.poly = zpoly::to_string(e.coeffs());
    row.tuple.assign(e.coeffs().rbegin(), e.coeffs().rend());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RepresentationRow> representation_table(int p, int m) {
  auto ctx = FieldContext::create(p, m);
  return representation_table(*ctx);
}

}  // namespace mubkit
