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

#include "mubkit/galois_ring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mubkit/finite_field.hpp"
#include "mubkit/integers.hpp"

namespace mubkit {

RingElement::RingElement(RingContextPtr ctx, zpoly::Poly coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  if (!ctx_) throw std::invalid_argument("RingElement: null context");
  coeffs_.resize(static_cast<std::size_t>(ctx_->degree()), 0);
  for (auto& c : coeffs_) c = ((c % 4) + 4) % 4;
}

bool RingElement::is_zero() const {
  return zpoly::is_zero(coeffs_);
}

namespace {
void require_same_ring(const RingElement& a, const RingElement& b) {
  if (a.context() != b.context()) throw std::invalid_argument("RingElement: context mismatch");
}
}  // namespace

RingElement RingElement::operator+(const RingElement& other) const {
  require_same_ring(*this, other);
  return RingElement(ctx_, zpoly::add(coeffs_, other.coeffs_, 4));
}

RingElement RingElement::operator-(const RingElement& other) const {
  require_same_ring(*this, other);
  return RingElement(ctx_, zpoly::sub(coeffs_, other.coeffs_, 4));
}

RingElement RingElement::operator*(const RingElement& other) const {
  require_same_ring(*this, other);
  return RingElement(ctx_, zpoly::mulmod(coeffs_, other.coeffs_, ctx_->modulus(), 4));
}

bool RingElement::operator==(const RingElement& other) const {
  return ctx_ == other.ctx_ && coeffs_ == other.coeffs_;
}

RingElement RingElement::pow(unsigned long e) const {
  RingElement result = ctx_->one();
  RingElement base = *this;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    base = base * base;
    e >>= 1UL;
  }
  return result;
}

zpoly::Poly RingElement::mod2() const {
  zpoly::Poly out = coeffs_;
  for (auto& c : out) c %= 2;
  return out;
}

zpoly::Poly hensel_lift(const zpoly::Poly& h2) {
  long m = zpoly::degree(h2);
  if (m < 1) throw std::invalid_argument("hensel_lift: input degree must be at least 1");
  for (int c : h2)
    if (c != 0 && c != 1) throw std::invalid_argument("hensel_lift: input must be a binary polynomial");
  if (h2[static_cast<std::size_t>(m)] != 1) throw std::invalid_argument("hensel_lift: input must be monic");

  // Validate irreducibility and primitivity of the binary input. The field
  // construction rejects reducible moduli; the residue x must generate the
  // multiplicative group, i.e. its discrete log is coprime to 2^m - 1.
  auto field = FieldContext::create_with_modulus(2, h2);
  FieldElement x_residue = m == 1 ? field->from_coeffs(zpoly::mod({0, 1}, h2, 2))
                                  : field->from_coeffs({0, 1});
  long group = field->size() - 1;
  if (x_residue.is_zero())
    throw std::invalid_argument("hensel_lift: x is not a unit modulo the input");
  if (group > 1 && std::gcd(field->log(x_residue), group) != 1)
    throw std::invalid_argument("hensel_lift: input is not primitive");

  // Even/odd split over Z: h2 = e - d, with d carrying the odd monomials.
  std::vector<long> e(h2.size(), 0), d(h2.size(), 0);
  for (std::size_t i = 0; i < h2.size(); ++i) {
    if (i % 2 == 0)
      e[i] = h2[i];
    else
      d[i] = -h2[i];
  }
  // g(x^2) = +-(e^2 - d^2); only even powers survive.
  std::vector<long> g2(2 * h2.size() - 1, 0);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j) g2[i + j] += e[i] * e[j] - d[i] * d[j];
  while (!g2.empty() && g2.back() == 0) g2.pop_back();
  if (g2.back() < 0)
    for (auto& c : g2) c = -c;

  zpoly::Poly lifted(static_cast<std::size_t>(m) + 1, 0);
  for (std::size_t i = 0; i < g2.size(); ++i) {
    if (g2[i] == 0) continue;
    if (i % 2 != 0) throw std::logic_error("hensel_lift: odd power survived the square substitution");
    lifted[i / 2] = static_cast<int>(((g2[i] % 4) + 4) % 4);
  }
  return lifted;
}

RingContextPtr RingContext::create(int m) {
  return create_from_binary(find_modulus(2, m));
}

RingContextPtr RingContext::create_from_binary(const zpoly::Poly& h2) {
  auto ctx = std::shared_ptr<RingContext>(new RingContext());
  ctx->init(h2);
  return ctx;
}

void RingContext::init(zpoly::Poly h2) {
  modulus_ = hensel_lift(h2);
  h2_ = zpoly::trim(std::move(h2));
  m_ = static_cast<int>(zpoly::degree(modulus_));
  size_ = 1;
  t_size_ = 1;
  for (int i = 0; i < m_; ++i) {
    size_ *= 4;
    t_size_ *= 2;
  }

  // h must divide x^{2^m - 1} - 1 over Z_4.
  {
    zpoly::Poly xr(static_cast<std::size_t>(t_size_), 0);
    xr[0] = 3;
    xr[static_cast<std::size_t>(t_size_ - 1)] = 1;
    if (!zpoly::is_zero(zpoly::mod(xr, modulus_, 4)))
      throw std::logic_error("RingContext: lift does not divide x^(2^m-1) - 1");
  }

  xi_ = zpoly::mod({0, 1}, modulus_, 4);
  xi_.resize(static_cast<std::size_t>(m_), 0);

  auto self = shared_from_this();
  teichmuller_.reserve(static_cast<std::size_t>(t_size_));
  teichmuller_.emplace_back(self, zpoly::Poly{});
  zpoly::Poly acc = {1};
  acc.resize(static_cast<std::size_t>(m_), 0);
  for (long k = 0; k < t_size_ - 1; ++k) {
    teichmuller_.emplace_back(self, acc);
    acc = zpoly::mulmod(acc, xi_, modulus_, 4);
    acc.resize(static_cast<std::size_t>(m_), 0);
  }
  // xi^{2^m - 1} = 1 and no earlier repeat.
  if (zpoly::degree(acc) != 0 || acc[0] != 1)
    throw std::logic_error("RingContext: xi does not have order 2^m - 1");
  for (long i = 0; i < t_size_; ++i) {
    long code = encode(teichmuller_[static_cast<std::size_t>(i)]);
    if (!teich_index_by_code_.emplace(code, i).second)
      throw std::logic_error("RingContext: Teichmuller powers are not distinct");
  }

  for (long ia = 0; ia < t_size_; ++ia) {
    for (long ib = 0; ib < t_size_; ++ib) {
      RingElement two_b(self, zpoly::scalar_mul(2, teichmuller_[static_cast<std::size_t>(ib)].coeffs(), 4));
      RingElement beta = teichmuller_[static_cast<std::size_t>(ia)] + two_b;
      if (!decompose_by_code_.emplace(encode(beta), std::make_pair(ia, ib)).second)
        throw std::logic_error("RingContext: Teichmuller decomposition is not unique");
    }
  }
  if (decompose_by_code_.size() != static_cast<std::size_t>(size_))
    throw std::logic_error("RingContext: Teichmuller decomposition does not cover the ring");
}

RingElement RingContext::zero() const {
  return RingElement(shared_from_this(), {});
}

RingElement RingContext::one() const {
  return RingElement(shared_from_this(), {1});
}

RingElement RingContext::xi() const {
  return RingElement(shared_from_this(), xi_);
}

RingElement RingContext::from_coeffs(zpoly::Poly coeffs) const {
  if (zpoly::degree(coeffs) >= m_) coeffs = zpoly::mod(std::move(coeffs), modulus_, 4);
  return RingElement(shared_from_this(), std::move(coeffs));
}

RingElement RingContext::element(long code) const {
  if (code < 0 || code >= size_) throw std::out_of_range("RingContext::element");
  zpoly::Poly coeffs(static_cast<std::size_t>(m_), 0);
  for (int i = 0; i < m_; ++i) {
    coeffs[static_cast<std::size_t>(i)] = static_cast<int>(code % 4);
    code /= 4;
  }
  return RingElement(shared_from_this(), std::move(coeffs));
}

long RingContext::encode(const RingElement& e) const {
  long code = 0;
  for (long i = m_ - 1; i >= 0; --i) code = code * 4 + e.coeffs()[static_cast<std::size_t>(i)];
  return code;
}

std::pair<RingElement, RingElement> RingContext::teichmuller_decompose(const RingElement& beta) const {
  if (beta.context().get() != this) throw std::invalid_argument("teichmuller_decompose: context mismatch");
  auto [ia, ib] = decompose_by_code_.at(encode(beta));
  return {teichmuller_[static_cast<std::size_t>(ia)], teichmuller_[static_cast<std::size_t>(ib)]};
}

RingElement RingContext::frobenius(const RingElement& beta) const {
  auto [a, b] = teichmuller_decompose(beta);
  RingElement a2 = a * a;
  RingElement b2 = b * b;
  return a2 + RingElement(shared_from_this(), zpoly::scalar_mul(2, b2.coeffs(), 4));
}

int RingContext::ring_trace(const RingElement& beta) const {
  RingElement acc = zero();
  RingElement iterate = beta;
  for (int k = 0; k < m_; ++k) {
    acc = acc + iterate;
    iterate = frobenius(iterate);
  }
  for (std::size_t i = 1; i < acc.coeffs().size(); ++i)
    if (acc.coeffs()[i] != 0) throw std::logic_error("ring_trace: result not in Z_4");
  return acc.coeffs()[0];
}

std::vector<std::vector<RingElement>> RingContext::decomposition_matrix() const {
  std::vector<std::vector<RingElement>> rows;
  rows.reserve(teichmuller_.size());
  auto self = shared_from_this();
  for (const auto& a : teichmuller_) {
    std::vector<RingElement> row;
    row.reserve(teichmuller_.size());
    for (const auto& b : teichmuller_)
      row.push_back(a + RingElement(self, zpoly::scalar_mul(2, b.coeffs(), 4)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RingRepresentationRow> ring_representation_table(const RingContext& ctx) {
  std::vector<RingRepresentationRow> rows;
  const auto& teich = ctx.teichmuller_set();
  rows.reserve(teich.size());
  for (std::size_t i = 0; i < teich.size(); ++i) {
    RingRepresentationRow row;
    row.power = static_cast<long>(i) - 1;
    if (i == 0)
      row.power_label = "0";
    else if (i == 1)
      row.power_label = "1";
    else if (i == 2)
      row.power_label = "xi";
    else
      row.power_label = "xi^" + std::to_string(i - 1);
    row.poly = zpoly::to_string(teich[i].coeffs());
    row.tuple_z4.assign(teich[i].coeffs().rbegin(), teich[i].coeffs().rend());
    zpoly::Poly m2 = teich[i].mod2();
    row.tuple_z2.assign(m2.rbegin(), m2.rend());
    rows.push_back(std::move(row));
  }
  return rows;
}

QuotientRing::QuotientRing(int n, zpoly::Poly f) : n_(n), f_(std::move(f)) {
  if (n_ < 2) throw std::invalid_argument("QuotientRing: coefficient modulus must be at least 2");
  long deg = zpoly::degree(f_);
  if (deg < 1) throw std::invalid_argument("QuotientRing: modulus degree must be at least 1");
  if (f_[static_cast<std::size_t>(deg)] != 1) throw std::invalid_argument("QuotientRing: modulus must be monic");
  deg_ = static_cast<int>(deg);
  size_ = 1;
  for (int i = 0; i < deg_; ++i) {
    size_ *= n_;
    if (size_ > 100000) throw std::invalid_argument("QuotientRing: enumeration too large");
  }
}

zpoly::Poly QuotientRing::element(long code) const {
  if (code < 0 || code >= size_) throw std::out_of_range("QuotientRing::element");
  zpoly::Poly coeffs(static_cast<std::size_t>(deg_), 0);
  for (int i = 0; i < deg_; ++i) {
    coeffs[static_cast<std::size_t>(i)] = static_cast<int>(code % n_);
    code /= n_;
  }
  return coeffs;
}

long QuotientRing::encode(const zpoly::Poly& coeffs) const {
  long code = 0;
  for (long i = deg_ - 1; i >= 0; --i) {
    int c = i < static_cast<long>(coeffs.size()) ? coeffs[static_cast<std::size_t>(i)] : 0;
    code = code * n_ + ((c % n_) + n_) % n_;
  }
  return code;
}

long QuotientRing::add(long a, long b) const {
  return encode(zpoly::add(element(a), element(b), n_));
}

long QuotientRing::mul(long a, long b) const {
  return encode(zpoly::mulmod(element(a), element(b), f_, n_));
}

long QuotientRing::scalar_mul(int k, long a) const {
  return encode(zpoly::scalar_mul(k, element(a), n_));
}

SylowDecomposition sylow_decomposition(const QuotientRing& ring) {
  if (ring.coeff_modulus() != 6)
    throw std::invalid_argument("sylow_decomposition: coefficient modulus must be 6");
  SylowDecomposition out;
  for (long e = 0; e < ring.size(); ++e) {
    if (ring.scalar_mul(2, e) == 0) out.annihilator_of_2.push_back(e);
    if (ring.scalar_mul(3, e) == 0) out.annihilator_of_3.push_back(e);
  }
  // Unique splitting beta = a + b across the two annihilators.
  std::vector<char> seen(static_cast<std::size_t>(ring.size()), 0);
  for (long a : out.annihilator_of_2)
    for (long b : out.annihilator_of_3) {
      long sum = ring.add(a, b);
      if (seen[static_cast<std::size_t>(sum)]++)
        throw std::logic_error("sylow_decomposition: splitting is not unique");
    }
  for (char s : seen)
    if (!s) throw std::logic_error("sylow_decomposition: splitting does not cover the ring");
  return out;
}

SubfieldReport verify_subfield(const std::vector<long>& subset, const QuotientRing& ring) {
  SubfieldReport report;
  std::vector<char> member(static_cast<std::size_t>(ring.size()), 0);
  for (long e : subset) member.at(static_cast<std::size_t>(e)) = 1;

  for (long a : subset)
    for (long b : subset)
      if (!member[static_cast<std::size_t>(ring.add(a, b))]) {
        report.failure = "not closed under addition";
        return report;
      }

  // Multiplicative identity: a nonzero e with e*s == s for every s.
  for (long e : subset) {
    if (e == 0) continue;
    bool ok = true;
    for (long s : subset)
      if (ring.mul(e, s) != s) {
        ok = false;
        break;
      }
    if (ok) {
      report.identity = e;
      break;
    }
  }
  if (!report.identity) {
    report.failure = "no multiplicative identity";
    return report;
  }

  for (long a : subset)
    for (long b : subset)
      if (!member[static_cast<std::size_t>(ring.mul(a, b))]) {
        report.failure = "not closed under multiplication";
        return report;
      }

  for (long a : subset) {
    if (a == 0) continue;
    bool has_inverse = false;
    for (long b : subset)
      if (ring.mul(a, b) == *report.identity) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) {
      report.failure = "element without inverse";
      return report;
    }
  }

  report.is_field = true;
  report.mult_group_order = static_cast<long>(subset.size()) - 1;
  return report;
}

}  // namespace mubkit
