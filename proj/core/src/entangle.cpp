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

#include "mubkit/entangle.hpp"

#include <stdexcept>

#include "mubkit/render.hpp"

namespace mubkit {

BellFamily::BellFamily(std::size_t dim, std::vector<std::vector<std::vector<StateVector>>> sets,
                       std::string route)
    : dim_(dim), sets_(std::move(sets)), route_(std::move(route)) {
  // Promote every state to one cyclotomic order; shapes must agree per shift.
  unsigned long target = 1;
  for (const auto& shift : sets_)
    for (const auto& layer : shift)
      for (const auto& v : layer) {
        if (v.dim() != dim_ * dim_)
          throw std::invalid_argument("BellFamily: states must live on the doubled space");
        target = lcm_ul(target, v.order());
      }
  for (auto& shift : sets_)
    for (auto& layer : shift)
      for (auto& v : layer) v = v.rescale_order(target);
}

const StateVector& BellFamily::state(std::size_t h, std::size_t a, std::size_t b) const {
  return sets_.at(h).at(a).at(b);
}

namespace {

void check_cap_dim(std::size_t d, long cap) {
  if (cap < 1 || static_cast<long>(d) > cap)
    throw std::invalid_argument("dimension exceeds the configured cap");
}

/// Assemble sum_n amplitude(n) |n, n+h mod d> with scale_sq = d.
StateVector bell_state_from_amplitudes(const std::vector<CyclotomicInt>& amplitudes,
                                       std::size_t d, std::size_t h, unsigned long order) {
  std::vector<CyclotomicInt> entries(d * d, CyclotomicInt::zero(order));
  for (std::size_t n = 0; n < d; ++n) entries[n * d + (n + h) % d] = amplitudes[n];
  return StateVector(std::move(entries), static_cast<long long>(d));
}

/// One layer per non-computational basis: the basis's vector amplitudes are
/// spread along the shifted diagonal for every h.
BellFamily family_from_bases(const std::vector<Basis>& layers, std::size_t d, std::string route) {
  std::vector<std::vector<std::vector<StateVector>>> sets;
  sets.reserve(d);
  for (std::size_t h = 0; h < d; ++h) {
    std::vector<std::vector<StateVector>> per_layer;
    per_layer.reserve(layers.size());
    for (const auto& layer : layers) {
      std::vector<StateVector> states;
      states.reserve(d);
      for (std::size_t b = 0; b < d; ++b)
        states.push_back(
            bell_state_from_amplitudes(layer.vector(b).entries(), d, h, layer.order()));
      per_layer.push_back(std::move(states));
    }
    sets.push_back(std::move(per_layer));
  }
  return BellFamily(d, std::move(sets), std::move(route));
}

}  // namespace

BellFamily bell_basis(std::size_t d, long cap) {
  if (d < 2) throw std::invalid_argument("bell_basis: d must be at least 2");
  check_cap_dim(d, cap);
  return family_from_bases({fourier_basis(d)}, d, "fourier");
}

BellFamily bell_even(int m, long cap) {
  if (m < 1) throw std::invalid_argument("bell_even: m must be at least 1");
  MubSet mubs = mub_even(m, cap);
  std::vector<Basis> layers(mubs.bases().begin() + 1, mubs.bases().end());
  return family_from_bases(layers, mubs.dim(), "ring");
}

BellFamily bell_odd(int p, int m, long cap) {
  if (p == 2) return bell_even(m, cap);
  MubSet mubs = mub_odd_prime_power(p, m, cap);
  std::vector<Basis> layers(mubs.bases().begin() + 1, mubs.bases().end());
  return family_from_bases(layers, mubs.dim(), "field");
}

BellFamily bell_composite(std::size_t d, long cap) {
  if (d < 2) throw std::invalid_argument("bell_composite: d must be at least 2");
  if (prime_power(d).first != 0)
    throw std::invalid_argument("bell_composite: d must be composite with at least two prime factors");
  MubSet mubs = mub_composite(d, cap);
  std::vector<Basis> layers(mubs.bases().begin() + 1, mubs.bases().end());
  return family_from_bases(layers, d, "tensor");
}

BellFamily bell_auto(std::size_t d, long cap) {
  if (d < 2) throw std::invalid_argument("bell_auto: d must be at least 2");
  auto [p, e] = prime_power(d);
  if (p == 2) return bell_even(static_cast<int>(e), cap);
  if (p != 0) return bell_odd(static_cast<int>(p), static_cast<int>(e), cap);
  return bell_composite(d, cap);
}

ExactMatrix partial_trace_second(const StateVector& v, std::size_t d_left, std::size_t d_right) {
  if (d_left * d_right != v.dim())
    throw std::invalid_argument("partial_trace_second: split does not match the dimension");
  ExactMatrix rho(d_left, d_left, v.order(), BigInt(v.scale_sq()));
  for (std::size_t n = 0; n < d_left; ++n) {
    for (std::size_t n2 = 0; n2 < d_left; ++n2) {
      CyclotomicInt acc = CyclotomicInt::zero(v.order());
      for (std::size_t k = 0; k < d_right; ++k) {
        const CyclotomicInt& x = v.entry(n * d_right + k);
        const CyclotomicInt& y = v.entry(n2 * d_right + k);
        if (x.is_zero() || y.is_zero()) continue;
        acc += x * y.conjugate();
      }
      rho.set_entry(n, n2, std::move(acc));
    }
  }
  return rho;
}

ExactMatrix partial_trace_second(const StateVector& v) {
  std::size_t d = 0;
  while ((d + 1) * (d + 1) <= v.dim()) ++d;
  if (d * d != v.dim())
    throw std::invalid_argument("partial_trace_second: dimension is not a perfect square; pass a split");
  return partial_trace_second(v, d, d);
}

ExactMatrix partial_trace_first(const StateVector& v, std::size_t d_left, std::size_t d_right) {
  if (d_left * d_right != v.dim())
    throw std::invalid_argument("partial_trace_first: split does not match the dimension");
  ExactMatrix rho(d_right, d_right, v.order(), BigInt(v.scale_sq()));
  for (std::size_t n = 0; n < d_right; ++n) {
    for (std::size_t n2 = 0; n2 < d_right; ++n2) {
      CyclotomicInt acc = CyclotomicInt::zero(v.order());
      for (std::size_t k = 0; k < d_left; ++k) {
        const CyclotomicInt& x = v.entry(k * d_right + n);
        const CyclotomicInt& y = v.entry(k * d_right + n2);
        if (x.is_zero() || y.is_zero()) continue;
        acc += x * y.conjugate();
      }
      rho.set_entry(n, n2, std::move(acc));
    }
  }
  return rho;
}

bool is_maximally_mixed(const ExactMatrix& rho, std::size_t d, long long scale_sq) {
  if (rho.rows() != d || rho.cols() != d) return false;
  if (scale_sq % static_cast<long long>(d) != 0) return false;
  BigInt diagonal = BigInt(scale_sq / static_cast<long long>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      auto value = rho.entry(i, j).as_integer();
      if (!value) return false;
      if (i == j ? *value != diagonal : *value != 0) return false;
    }
  }
  return true;
}

BellReport verify_bell_family(const BellFamily& f, long long sector_dim) {
  BellReport report;
  const std::size_t d = f.dim();
  if (sector_dim == 0) sector_dim = static_cast<long long>(d);
  report.orthonormal = true;
  report.entangled = true;
  report.unbiased_within_shift = true;
  report.orthogonal_across_shift = true;

  const auto& sets = f.sets();
  for (std::size_t h = 0; h < sets.size(); ++h) {
    for (std::size_t a = 0; a < sets[h].size(); ++a) {
      const auto& layer = sets[h][a];
      // (i) Partial basis orthonormality.
      for (std::size_t i = 0; i < layer.size(); ++i) {
        for (std::size_t j = i; j < layer.size(); ++j) {
          CyclotomicInt ip = raw_inner_product(layer[i], layer[j]);
          auto value = ip.as_integer();
          bool ok = value && (i == j ? *value == layer[i].scale_sq() : *value == 0);
          if (!ok) {
            report.orthonormal = false;
            report.failures.push_back(BellCheckFailure{"orthonormality", h, a, i, h, a, j,
                                                       cyclo_to_string(ip)});
          }
        }
      }
      // (ii) Maximal entanglement of every state.
      for (std::size_t b = 0; b < layer.size(); ++b) {
        ExactMatrix rho = partial_trace_second(layer[b], d, d);
        if (!is_maximally_mixed(rho, d, layer[b].scale_sq())) {
          report.entangled = false;
          report.failures.push_back(
              BellCheckFailure{"entanglement", h, a, b, h, a, b, "partial trace differs from I/d"});
        }
      }
      // (iii) Cross-layer overlaps within this shift.
      for (std::size_t a2 = a + 1; a2 < sets[h].size(); ++a2) {
        for (std::size_t i = 0; i < layer.size(); ++i) {
          for (std::size_t j = 0; j < sets[h][a2].size(); ++j) {
            CyclotomicInt ip = raw_inner_product(layer[i], sets[h][a2][j]);
            long long product = layer[i].scale_sq() * sets[h][a2][j].scale_sq();
            auto value = ip.abs_squared().as_integer();
            bool ok = product % sector_dim == 0 && value && *value == BigInt(product / sector_dim);
            if (!ok) {
              report.unbiased_within_shift = false;
              report.failures.push_back(BellCheckFailure{"unbiasedness", h, a, i, h, a2, j,
                                                         cyclo_to_string(ip)});
            }
          }
        }
      }
    }
    // (iv) Orthogonality across shifts, all layer pairs.
    for (std::size_t h2 = h + 1; h2 < sets.size(); ++h2) {
      for (std::size_t a = 0; a < sets[h].size(); ++a) {
        for (std::size_t a2 = 0; a2 < sets[h2].size(); ++a2) {
          for (std::size_t i = 0; i < sets[h][a].size(); ++i) {
            for (std::size_t j = 0; j < sets[h2][a2].size(); ++j) {
              CyclotomicInt ip = raw_inner_product(sets[h][a][i], sets[h2][a2][j]);
              if (!ip.is_zero()) {
                report.orthogonal_across_shift = false;
                report.failures.push_back(BellCheckFailure{"cross_shift", h, a, i, h2, a2, j,
                                                           cyclo_to_string(ip)});
              }
            }
          }
        }
      }
    }
  }
  report.pass = report.orthonormal && report.entangled && report.unbiased_within_shift &&
                report.orthogonal_across_shift;
  return report;
}

}  // namespace mubkit
