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

#include "mubkit/mub.hpp"

#include <algorithm>
#include <stdexcept>

#include "mubkit/render.hpp"

namespace mubkit {

namespace {

void check_cap(std::size_t d, long cap) {
  if (cap < 1 || static_cast<long>(d) > cap)
    throw std::invalid_argument("dimension exceeds the configured cap");
}

Basis unimodular_basis(std::size_t d, unsigned long root_order,
                       const std::vector<std::vector<int>>& exponents, std::string label) {
  std::vector<StateVector> vectors;
  vectors.reserve(d);
  for (std::size_t b = 0; b < d; ++b) {
    std::vector<CyclotomicInt> entries;
    entries.reserve(d);
    for (std::size_t n = 0; n < d; ++n)
      entries.push_back(CyclotomicInt::root_of_unity(root_order, exponents[b][n]));
    vectors.push_back(StateVector(std::move(entries), static_cast<long long>(d)).canonical_phase());
  }
  return Basis(std::move(vectors), std::move(label));
}

}  // namespace

Basis computational_basis(std::size_t d) {
  if (d < 1) throw std::invalid_argument("computational_basis: d must be positive");
  std::vector<StateVector> vectors;
  vectors.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<CyclotomicInt> entries(d, CyclotomicInt::zero(1));
    entries[k] = CyclotomicInt::from_integer(1, 1);
    vectors.emplace_back(std::move(entries), 1);
  }
  return Basis(std::move(vectors), "computational");
}

Basis fourier_basis(std::size_t d) {
  if (d < 1) throw std::invalid_argument("fourier_basis: d must be positive");
  std::vector<std::vector<int>> exponents(d, std::vector<int>(d, 0));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t n = 0; n < d; ++n)
      exponents[k][n] = static_cast<int>((k * n) % d);
  return unimodular_basis(d, static_cast<unsigned long>(d), exponents, "fourier");
}

GateBases qubit_gate_bases() {
  GateBases out;
  out.identity = computational_basis(2);
  // Rows of H.
  out.hadamard = unimodular_basis(2, 2, {{0, 0}, {0, 1}}, "H");
  // Rows of HS: (1, i), (1, -i).
  out.hadamard_s = unimodular_basis(2, 4, {{0, 1}, {0, 3}}, "HS");
  return out;
}

MubSet mub_odd_prime_power(int p, int m, long cap) {
  if (p == 2) return mub_even(m, cap);
  if (!is_prime(static_cast<unsigned long>(p)) || p % 2 == 0)
    throw std::invalid_argument("mub_odd_prime_power: p must be an odd prime");
  if (m < 1) throw std::invalid_argument("mub_odd_prime_power: m must be at least 1");
  auto ctx = FieldContext::create(p, m);
  const std::size_t d = static_cast<std::size_t>(ctx->size());
  check_cap(d, cap);

  // Position <-> element bijection. For a prime field the residues are the
  // integers 0..p-1 and the identity map keeps the bases aligned with the
  // shift/clock operator family; extensions use the power enumeration
  // (0, alpha^0, alpha^1, ...).
  std::vector<FieldElement> by_position;
  by_position.reserve(d);
  for (std::size_t k = 0; k < d; ++k)
    by_position.push_back(m == 1 ? ctx->from_coeffs({static_cast<int>(k)})
                                 : ctx->element(static_cast<long>(k)));

  std::vector<Basis> bases;
  bases.reserve(d + 1);
  bases.push_back(computational_basis(d));
  std::vector<std::vector<int>> exponents(d, std::vector<int>(d, 0));
  for (std::size_t ai = 0; ai < d; ++ai) {
    const FieldElement& a = by_position[ai];
    for (std::size_t bi = 0; bi < d; ++bi) {
      const FieldElement& b = by_position[bi];
      for (std::size_t ni = 0; ni < d; ++ni) {
        const FieldElement& n = by_position[ni];
        exponents[bi][ni] = trace((a * n + b) * n);
      }
    }
    bases.push_back(unimodular_basis(d, static_cast<unsigned long>(p), exponents,
                                     "field a=" + std::to_string(ai)));
  }
  MubProvenance prov{"field", m == 1 ? "prime" : "odd_prime_power",
                     {zpoly::to_string(ctx->modulus()) + " (mod " + std::to_string(p) + ")"}};
  return MubSet(d, std::move(bases), std::move(prov));
}

MubSet mub_even(int m, long cap) {
  if (m < 1) throw std::invalid_argument("mub_even: m must be at least 1");
  auto ctx = RingContext::create(m);
  const std::size_t d = static_cast<std::size_t>(ctx->teichmuller_size());
  check_cap(d, cap);
  const auto& teich = ctx->teichmuller_set();

  std::vector<Basis> bases;
  bases.reserve(d + 1);
  bases.push_back(computational_basis(d));
  std::vector<std::vector<int>> exponents(d, std::vector<int>(d, 0));
  for (std::size_t ai = 0; ai < d; ++ai) {
    for (std::size_t bi = 0; bi < d; ++bi) {
      RingElement phase = teich[ai] + ctx->from_coeffs(zpoly::scalar_mul(2, teich[bi].coeffs(), 4));
      for (std::size_t ni = 0; ni < d; ++ni)
        exponents[bi][ni] = ctx->ring_trace(phase * teich[ni]);
    }
    bases.push_back(unimodular_basis(d, 4, exponents, "ring a=" + std::to_string(ai)));
  }
  MubProvenance prov{"ring", "even_prime_power",
                     {zpoly::to_string(ctx->modulus()) + " (mod 4)"}};
  return MubSet(d, std::move(bases), std::move(prov));
}

Basis tensor_product(const Basis& a, const Basis& b) {
  const std::size_t da = a.dim(), db = b.dim();
  unsigned long target = lcm_ul(a.order(), b.order());
  Basis ra = a.rescale_order(target);
  Basis rb = b.rescale_order(target);
  std::vector<StateVector> vectors;
  vectors.reserve(da * db);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < db; ++j) {
      std::vector<CyclotomicInt> entries;
      entries.reserve(da * db);
      for (std::size_t n1 = 0; n1 < da; ++n1)
        for (std::size_t n2 = 0; n2 < db; ++n2)
          entries.push_back(ra.vector(i).entry(n1) * rb.vector(j).entry(n2));
      vectors.emplace_back(std::move(entries), ra.scale_sq() * rb.scale_sq());
    }
  }
  return Basis(std::move(vectors), a.label() + " x " + b.label());
}

MubSet mub_composite(std::size_t d, long cap) {
  if (d < 2) throw std::invalid_argument("mub_composite: d must be at least 2");
  check_cap(d, cap);
  auto factors = factorize(d);
  if (factors.size() == 1) {
    auto [p, e] = factors.front();
    return p == 2 ? mub_even(static_cast<int>(e), cap)
                  : mub_odd_prime_power(static_cast<int>(p), static_cast<int>(e), cap);
  }

  std::size_t m_tilde = d;
  std::vector<MubSet> factor_sets;
  factor_sets.reserve(factors.size());
  for (auto [p, e] : factors) {
    std::size_t q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    m_tilde = std::min(m_tilde, q);
    factor_sets.push_back(p == 2 ? mub_even(static_cast<int>(e), cap)
                                 : mub_odd_prime_power(static_cast<int>(p), static_cast<int>(e), cap));
  }

  std::vector<Basis> bases;
  bases.reserve(m_tilde + 1);
  std::vector<std::string> moduli;
  for (const auto& fs : factor_sets)
    moduli.insert(moduli.end(), fs.provenance().moduli.begin(), fs.provenance().moduli.end());
  for (std::size_t k = 0; k <= m_tilde; ++k) {
    Basis acc = factor_sets.front().basis(k);
    for (std::size_t i = 1; i < factor_sets.size(); ++i)
      acc = tensor_product(acc, factor_sets[i].basis(k));
    bases.push_back(std::move(acc));
  }
  return MubSet(d, std::move(bases), MubProvenance{"tensor", "composite", std::move(moduli)});
}

MubSet mub_auto(std::size_t d, long cap) {
  if (d < 1) throw std::invalid_argument("mub_auto: d must be positive");
  check_cap(d, cap);
  if (d == 1)
    return MubSet(1, {computational_basis(1)}, MubProvenance{"trivial", "trivial", {}});
  return mub_composite(d, cap);
}

namespace {

// abs_squared of every cross inner product must equal sA*sB/d exactly.
bool unbiased_pair_impl(const Basis& a, const Basis& b, PairCheck* check) {
  if (a.dim() != b.dim()) throw std::invalid_argument("verify_unbiased_pair: dimension mismatch");
  const long long d = static_cast<long long>(a.dim());
  const long long product = a.scale_sq() * b.scale_sq();
  if (product % d != 0) {
    if (check)
      check->detail = "scale product " + std::to_string(product) + " not divisible by dimension";
    return false;
  }
  const BigInt expected = product / d;
  unsigned long target = lcm_ul(a.order(), b.order());
  Basis ra = a.rescale_order(target);
  Basis rb = b.rescale_order(target);
  for (std::size_t i = 0; i < ra.dim(); ++i) {
    for (std::size_t j = 0; j < rb.dim(); ++j) {
      CyclotomicInt ip = raw_inner_product(ra.vector(i), rb.vector(j));
      auto value = ip.abs_squared().as_integer();
      if (!value || *value != expected) {
        if (check) {
          check->detail = "vectors (" + std::to_string(i) + ", " + std::to_string(j) +
                          "): |<.|.>|^2 = " + cyclo_to_string(ip.abs_squared()) +
                          ", inner product " + cyclo_to_string(ip);
        }
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool verify_unbiased_pair(const Basis& a, const Basis& b) {
  return unbiased_pair_impl(a, b, nullptr);
}

MubReport verify_mub_set(const MubSet& s) {
  MubReport report;
  report.pass = true;
  for (std::size_t i = 0; i < s.basis_count(); ++i) {
    BasisCheck check{i, s.basis(i).is_orthonormal(), ""};
    if (!check.orthonormal) {
      for (std::size_t u = 0; u < s.dim() && check.detail.empty(); ++u) {
        for (std::size_t v = u; v < s.dim(); ++v) {
          CyclotomicInt ip = raw_inner_product(s.basis(i).vector(u), s.basis(i).vector(v));
          auto value = ip.as_integer();
          bool ok = value && (u == v ? *value == s.basis(i).scale_sq() : *value == 0);
          if (!ok) {
            check.detail = "vectors (" + std::to_string(u) + ", " + std::to_string(v) +
                           "): <.|.> = " + cyclo_to_string(ip);
            break;
          }
        }
      }
      report.pass = false;
    }
    report.bases.push_back(std::move(check));
  }
  for (std::size_t i = 0; i < s.basis_count(); ++i) {
    for (std::size_t j = i + 1; j < s.basis_count(); ++j) {
      PairCheck check{i, j, false, ""};
      check.unbiased = unbiased_pair_impl(s.basis(i), s.basis(j), &check);
      if (!check.unbiased) report.pass = false;
      report.pairs.push_back(std::move(check));
    }
  }
  return report;
}

CyclotomicInt weil_sum(const FieldElement& a, const FieldElement& b) {
  if (a.context() != b.context()) throw std::invalid_argument("weil_sum: context mismatch");
  const auto& ctx = a.context();
  const int p = ctx->characteristic();
  CyclotomicInt acc = CyclotomicInt::zero(static_cast<unsigned long>(p));
  for (long ni = 0; ni < ctx->size(); ++ni) {
    const FieldElement& n = ctx->element(ni);
    acc += CyclotomicInt::root_of_unity(static_cast<unsigned long>(p), trace((a * n + b) * n));
  }
  return acc;
}

PhaseOperator::PhaseOperator(Basis eigenbasis, std::vector<Rational> eigenvalues)
    : eigenbasis_(std::move(eigenbasis)), eigenvalues_(std::move(eigenvalues)) {
  const std::size_t d = eigenbasis_.dim();
  if (eigenvalues_.size() != d)
    throw std::invalid_argument("PhaseOperator: eigenvalue count must equal the dimension");
  BigInt lcm_den = 1;
  for (const auto& r : eigenvalues_) lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(r));
  BigInt denom = BigInt(eigenbasis_.scale_sq()) * lcm_den;
  matrix_ = ExactMatrix(d, d, eigenbasis_.order(), denom);
  for (std::size_t b = 0; b < d; ++b) {
    BigInt weight = boost::multiprecision::numerator(eigenvalues_[b]) *
                    (lcm_den / boost::multiprecision::denominator(eigenvalues_[b]));
    if (weight == 0) continue;
    const StateVector& v = eigenbasis_.vector(b);
    for (std::size_t j = 0; j < d; ++j) {
      if (v.entry(j).is_zero()) continue;
      for (std::size_t k = 0; k < d; ++k) {
        if (v.entry(k).is_zero()) continue;
        matrix_.set_entry(j, k, matrix_.entry(j, k) + v.entry(j) * v.entry(k).conjugate() * weight);
      }
    }
  }
}

bool PhaseOperator::verify_eigenpairs() const {
  const std::size_t d = eigenbasis_.dim();
  BigInt lcm_den = 1;
  for (const auto& r : eigenvalues_) lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(r));
  for (std::size_t b = 0; b < d; ++b) {
    const StateVector& v = eigenbasis_.vector(b);
    // matrix * v == s * L * lambda_b * v on the numerator entries.
    BigInt scalar = BigInt(eigenbasis_.scale_sq()) *
                    (lcm_den / boost::multiprecision::denominator(eigenvalues_[b])) *
                    boost::multiprecision::numerator(eigenvalues_[b]);
    for (std::size_t j = 0; j < d; ++j) {
      CyclotomicInt lhs = CyclotomicInt::zero(eigenbasis_.order());
      for (std::size_t k = 0; k < d; ++k) {
        if (matrix_.entry(j, k).is_zero() || v.entry(k).is_zero()) continue;
        lhs += matrix_.entry(j, k) * v.entry(k);
      }
      if (!(lhs == v.entry(j) * scalar)) return false;
    }
  }
  return true;
}

bool PhaseOperator::verify_completeness() const {
  const std::size_t d = eigenbasis_.dim();
  ExactMatrix sum(d, d, eigenbasis_.order(), 1);
  for (std::size_t b = 0; b < d; ++b) {
    const StateVector& v = eigenbasis_.vector(b);
    for (std::size_t j = 0; j < d; ++j) {
      if (v.entry(j).is_zero()) continue;
      for (std::size_t k = 0; k < d; ++k) {
        if (v.entry(k).is_zero()) continue;
        sum.set_entry(j, k, sum.entry(j, k) + v.entry(j) * v.entry(k).conjugate());
      }
    }
  }
  const BigInt s = eigenbasis_.scale_sq();
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      CyclotomicInt expected = j == k
                                   ? CyclotomicInt::from_integer(eigenbasis_.order(), s)
                                   : CyclotomicInt::zero(eigenbasis_.order());
      if (!(sum.entry(j, k) == expected)) return false;
    }
  return true;
}

PhaseOperator phase_operator(const Basis& b, const std::vector<Rational>& eigenvalues) {
  return PhaseOperator(b, eigenvalues);
}

PhaseOperator phase_operator(const Basis& b) {
  std::vector<Rational> labels;
  labels.reserve(b.dim());
  for (std::size_t k = 0; k < b.dim(); ++k) labels.emplace_back(static_cast<long>(k));
  return PhaseOperator(b, labels);
}

}  // namespace mubkit
