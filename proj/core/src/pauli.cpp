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

#include "mubkit/pauli.hpp"

#include <stdexcept>

namespace mubkit {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, unsigned long order, BigInt denominator)
    : rows_(rows), cols_(cols), order_(order), denominator_(std::move(denominator)),
      entries_(rows * cols, CyclotomicInt::zero(order)) {
  if (denominator_ <= 0) throw std::invalid_argument("ExactMatrix: denominator must be positive");
}

ExactMatrix ExactMatrix::identity_matrix(std::size_t n, unsigned long order) {
  ExactMatrix out(n, n, order);
  for (std::size_t i = 0; i < n; ++i) out.set_entry(i, i, CyclotomicInt::from_integer(order, 1));
  return out;
}

const CyclotomicInt& ExactMatrix::entry(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("ExactMatrix::entry");
  return entries_[i * cols_ + j];
}

void ExactMatrix::set_entry(std::size_t i, std::size_t j, CyclotomicInt value) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("ExactMatrix::set_entry");
  if (value.order() != order_) throw std::invalid_argument("ExactMatrix::set_entry: order mismatch");
  entries_[i * cols_ + j] = std::move(value);
}

ExactMatrix ExactMatrix::rescale_order(unsigned long new_order) const {
  if (new_order == order_) return *this;
  ExactMatrix out(rows_, cols_, new_order, denominator_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out.set_entry(i, j, entry(i, j).rescale_order(new_order));
  return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("ExactMatrix: dimension mismatch");
  unsigned long target = lcm_ul(order_, other.order_);
  ExactMatrix a = rescale_order(target);
  ExactMatrix b = other.rescale_order(target);
  ExactMatrix out(rows_, other.cols_, target, denominator_ * other.denominator_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < other.cols_; ++j) {
      CyclotomicInt acc = CyclotomicInt::zero(target);
      for (std::size_t k = 0; k < cols_; ++k) {
        if (a.entry(i, k).is_zero() || b.entry(k, j).is_zero()) continue;
        acc += a.entry(i, k) * b.entry(k, j);
      }
      out.set_entry(i, j, std::move(acc));
    }
  }
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("ExactMatrix: shape mismatch");
  if (denominator_ != other.denominator_)
    throw std::invalid_argument("ExactMatrix: denominators differ; scale first");
  unsigned long target = lcm_ul(order_, other.order_);
  ExactMatrix a = rescale_order(target);
  ExactMatrix b = other.rescale_order(target);
  ExactMatrix out(rows_, cols_, target, denominator_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set_entry(i, j, a.entry(i, j) + b.entry(i, j));
  return out;
}

ExactMatrix ExactMatrix::scaled(const BigInt& k) const {
  ExactMatrix out = *this;
  for (auto& e : out.entries_) e = e * k;
  return out;
}

bool ExactMatrix::same_matrix(const ExactMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  unsigned long target = lcm_ul(order_, other.order_);
  ExactMatrix a = rescale_order(target);
  ExactMatrix b = other.rescale_order(target);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(a.entry(i, j) * other.denominator_ == b.entry(i, j) * denominator_)) return false;
  return true;
}

StateVector mat_apply(const ExactMatrix& a, const StateVector& v) {
  if (a.cols() != v.dim()) throw std::invalid_argument("mat_apply: dimension mismatch");
  unsigned long target = lcm_ul(a.order(), v.order());
  ExactMatrix m = a.rescale_order(target);
  StateVector w = v.rescale_order(target);
  std::vector<CyclotomicInt> out;
  out.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    CyclotomicInt acc = CyclotomicInt::zero(target);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (m.entry(i, k).is_zero() || w.entry(k).is_zero()) continue;
      acc += m.entry(i, k) * w.entry(k);
    }
    out.push_back(std::move(acc));
  }
  BigInt q2 = a.denominator() * a.denominator();
  long long scale = v.scale_sq() * static_cast<long long>(q2);
  return StateVector(std::move(out), scale);
}

ExactMatrix basis_row_matrix(const Basis& b) {
  ExactMatrix out(b.dim(), b.dim(), b.order());
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out.set_entry(i, j, b.vector(i).entry(j));
  return out;
}

ExactMatrix shift_op(std::size_t d) {
  if (d < 1) throw std::invalid_argument("shift_op: d must be positive");
  ExactMatrix out(d, d, 1);
  for (std::size_t n = 0; n < d; ++n)
    out.set_entry((n + 1) % d, n, CyclotomicInt::from_integer(1, 1));
  return out;
}

ExactMatrix clock_op(std::size_t d) {
  if (d < 1) throw std::invalid_argument("clock_op: d must be positive");
  ExactMatrix out(d, d, static_cast<unsigned long>(d));
  for (std::size_t n = 0; n < d; ++n)
    out.set_entry(n, n, CyclotomicInt::root_of_unity(static_cast<unsigned long>(d),
                                                     static_cast<long long>(n)));
  return out;
}

std::optional<std::vector<CyclotomicInt>> eigenvalues_of(const ExactMatrix& u, const Basis& b) {
  if (u.rows() != u.cols() || u.rows() != b.dim())
    throw std::invalid_argument("eigenvalues_of: dimension mismatch");
  if (u.denominator() != 1)
    throw std::invalid_argument("eigenvalues_of: only denominator-1 matrices are supported");
  std::vector<CyclotomicInt> eigenvalues;
  eigenvalues.reserve(b.dim());
  for (const auto& v : b.vectors()) {
    StateVector w = mat_apply(u, v);
    unsigned long target = lcm_ul(w.order(), v.order());
    StateVector wv = w.rescale_order(target);
    StateVector vv = v.rescale_order(target);
    std::size_t lead = vv.dim();
    for (std::size_t i = 0; i < vv.dim(); ++i) {
      if (!vv.entry(i).is_zero()) {
        lead = i;
        break;
      }
    }
    if (lead == vv.dim()) return std::nullopt;
    auto norm = vv.entry(lead).abs_squared().as_integer();
    if (!norm || *norm == 0) return std::nullopt;
    // lambda = w_lead / v_lead = w_lead * conj(v_lead) / |v_lead|^2; the
    // proportionality check below multiplies through by the norm instead of
    // dividing.
    CyclotomicInt lambda_num = wv.entry(lead) * vv.entry(lead).conjugate();
    for (std::size_t i = 0; i < vv.dim(); ++i) {
      if (!(wv.entry(i) * *norm == lambda_num * vv.entry(i))) return std::nullopt;
    }
    if (*norm == 1) {
      eigenvalues.push_back(std::move(lambda_num));
    } else {
      std::vector<BigInt> scaled = lambda_num.coeffs();
      for (auto& c : scaled) {
        if (c % *norm != 0) return std::nullopt;
        c /= *norm;
      }
      eigenvalues.push_back(CyclotomicInt::from_raw(lambda_num.order(), std::move(scaled)));
    }
  }
  return eigenvalues;
}

bool diagonalizes(const ExactMatrix& u, const Basis& b) {
  return eigenvalues_of(u, b).has_value();
}

namespace {

bool find_matching(const std::vector<std::vector<char>>& compat, std::size_t row,
                   std::vector<long>& op_of_basis, std::vector<char>& used) {
  if (row == compat.size()) return true;
  for (std::size_t op = 0; op < compat[row].size(); ++op) {
    if (!compat[row][op] || used[op]) continue;
    used[op] = 1;
    op_of_basis[row] = static_cast<long>(op);
    if (find_matching(compat, row + 1, op_of_basis, used)) return true;
    used[op] = 0;
    op_of_basis[row] = -1;
  }
  return false;
}

}  // namespace

PauliCorrespondence pauli_mub_correspondence(int p, long cap) {
  if (!is_prime(static_cast<unsigned long>(p)))
    throw std::invalid_argument("pauli_mub_correspondence: p must be prime");
  PauliCorrespondence out;
  out.mubs = p == 2 ? mub_even(1, cap) : mub_odd_prime_power(p, 1, cap);
  const std::size_t d = static_cast<std::size_t>(p);

  std::vector<ExactMatrix> ops;
  ops.push_back(clock_op(d));
  out.op_labels.push_back("Z");
  ExactMatrix x = shift_op(d);
  ExactMatrix z = clock_op(d);
  ExactMatrix xz_k = x;
  for (int k = 0; k < p; ++k) {
    ops.push_back(xz_k);
    out.op_labels.push_back(k == 0 ? "X" : (k == 1 ? "XZ" : "XZ^" + std::to_string(k)));
    xz_k = xz_k * z;
  }

  const std::size_t count = out.mubs.basis_count();
  std::vector<std::vector<char>> compat(count, std::vector<char>(ops.size(), 0));
  std::vector<std::vector<std::optional<std::vector<CyclotomicInt>>>> eigen(count);
  for (std::size_t bi = 0; bi < count; ++bi) {
    eigen[bi].resize(ops.size());
    for (std::size_t oi = 0; oi < ops.size(); ++oi) {
      eigen[bi][oi] = eigenvalues_of(ops[oi], out.mubs.basis(bi));
      compat[bi][oi] = eigen[bi][oi].has_value();
    }
  }

  std::vector<long> op_of_basis(count, -1);
  std::vector<char> used(ops.size(), 0);
  out.perfect = count == ops.size() && find_matching(compat, 0, op_of_basis, used);
  if (out.perfect) {
    for (std::size_t bi = 0; bi < count; ++bi) {
      auto oi = static_cast<std::size_t>(op_of_basis[bi]);
      out.matches.push_back(PauliMatch{bi, oi, out.op_labels[oi], *eigen[bi][oi]});
    }
  }
  return out;
}

}  // namespace mubkit
