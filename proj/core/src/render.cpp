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

#include "mubkit/render.hpp"

#include <algorithm>
#include <sstream>

namespace mubkit {

std::string cyclo_to_string(const CyclotomicInt& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  const std::string root = "z" + std::to_string(a.order());
  bool first = true;
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    const BigInt& c = a.coeffs()[k];
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
      os << root;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::string vector_to_string(const StateVector& v) {
  std::ostringstream os;
  os << "(1/sqrt(" << v.scale_sq() << ")) [";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) os << ", ";
    os << cyclo_to_string(v.entry(i));
  }
  os << "]";
  return os.str();
}

std::string basis_to_string(const Basis& b) {
  std::ostringstream os;
  os << "basis \"" << b.label() << "\" (dim " << b.dim() << ", order " << b.order() << ")\n";
  for (const auto& v : b.vectors()) os << "  " << vector_to_string(v) << "\n";
  return os.str();
}

std::string mub_set_to_string(const MubSet& s) {
  std::ostringstream os;
  os << "mub set: dim " << s.dim() << ", " << s.basis_count() << " bases, order " << s.order()
     << ", route " << s.provenance().route << "\n";
  for (const auto& m : s.provenance().moduli) os << "modulus: " << m << "\n";
  for (const auto& b : s.bases()) os << basis_to_string(b);
  return os.str();
}

std::string matrix_to_string(const ExactMatrix& m) {
  std::ostringstream os;
  if (m.denominator() != 1) os << "(1/" << m.denominator() << ") ";
  os << "[\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << cyclo_to_string(m.entry(i, j));
    }
    os << "]\n";
  }
  os << "]";
  return os.str();
}

std::string mub_report_to_string(const MubReport& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << " mub verification\n";
  for (const auto& b : r.bases) {
    os << "  basis " << b.basis_index << ": " << (b.orthonormal ? "orthonormal" : "NOT orthonormal");
    if (!b.detail.empty()) os << " [" << b.detail << "]";
    os << "\n";
  }
  for (const auto& p : r.pairs) {
    os << "  pair (" << p.basis_a << ", " << p.basis_b << "): "
       << (p.unbiased ? "unbiased" : "NOT unbiased");
    if (!p.detail.empty()) os << " [" << p.detail << "]";
    os << "\n";
  }
  return os.str();
}

std::string bell_report_to_string(const BellReport& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << " bell family verification\n";
  os << "  orthonormality:          " << (r.orthonormal ? "pass" : "fail") << "\n";
  os << "  maximal entanglement:    " << (r.entangled ? "pass" : "fail") << "\n";
  os << "  within-shift overlap:    " << (r.unbiased_within_shift ? "pass" : "fail") << "\n";
  os << "  across-shift orthogonal: " << (r.orthogonal_across_shift ? "pass" : "fail") << "\n";
  for (const auto& f : r.failures)
    os << "  " << f.check << " (" << f.h_a << "," << f.a_a << "," << f.b_a << ") vs (" << f.h_b
       << "," << f.a_b << "," << f.b_b << "): " << f.detail << "\n";
  return os.str();
}

namespace {

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(s.size() < width ? width - s.size() : 0, ' ');
}

std::string tuple_to_string(const std::vector<int>& tuple) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) os << ",";
    os << tuple[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

std::string field_table_to_string(const std::vector<RepresentationRow>& rows) {
  std::size_t w0 = 5, w1 = 10;
  for (const auto& r : rows) {
    w0 = std::max(w0, r.power_label.size());
    w1 = std::max(w1, r.poly.size());
  }
  std::ostringstream os;
  os << pad("power", w0 + 2) << pad("polynomial", w1 + 2) << "tuple\n";
  for (const auto& r : rows)
    os << pad(r.power_label, w0 + 2) << pad(r.poly, w1 + 2) << tuple_to_string(r.tuple) << "\n";
  return os.str();
}

std::string ring_table_to_string(const std::vector<RingRepresentationRow>& rows) {
  std::size_t w0 = 5, w1 = 10, w2 = 8;
  for (const auto& r : rows) {
    w0 = std::max(w0, r.power_label.size());
    w1 = std::max(w1, r.poly.size());
    w2 = std::max(w2, tuple_to_string(r.tuple_z4).size());
  }
  std::ostringstream os;
  os << pad("power", w0 + 2) << pad("polynomial", w1 + 2) << pad("Z4 tuple", w2 + 2)
     << "Z2 tuple\n";
  for (const auto& r : rows)
    os << pad(r.power_label, w0 + 2) << pad(r.poly, w1 + 2)
       << pad(tuple_to_string(r.tuple_z4), w2 + 2) << tuple_to_string(r.tuple_z2) << "\n";
  return os.str();
}

std::string plane_to_string(const IncidencePlane& p) {
  std::ostringstream os;
  os << "points (" << p.point_labels.size() << "):\n";
  for (std::size_t i = 0; i < p.point_labels.size(); ++i)
    os << "  " << i << ": " << p.point_labels[i] << "\n";
  os << "lines (" << p.lines.size() << "):\n";
  for (const auto& line : p.lines) {
    os << "  {";
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) os << ", ";
      os << p.point_labels.at(line[i]);
    }
    os << "}\n";
  }
  return os.str();
}

std::string lifted_fano_table_to_string(const RingContext& ctx, const LiftedFano& lifted) {
  auto rows = ring_representation_table(ctx);
  const auto& field = lifted.bijection.front().second.context();
  std::size_t w0 = 5, w1 = 10, w2 = 8, w3 = 8;
  for (const auto& r : rows) {
    w0 = std::max(w0, r.power_label.size());
    w1 = std::max(w1, r.poly.size());
    w2 = std::max(w2, tuple_to_string(r.tuple_z4).size());
    w3 = std::max(w3, tuple_to_string(r.tuple_z2).size());
  }
  std::ostringstream os;
  os << pad("power", w0 + 2) << pad("polynomial", w1 + 2) << pad("Z4 tuple", w2 + 2)
     << pad("Z2 tuple", w3 + 2) << "GF(8) power\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string gf_label = "0";
    if (i > 0) {
      long k = field->log(lifted.bijection[i - 1].second);
      gf_label = k == 0 ? "1" : (k == 1 ? "a" : "a^" + std::to_string(k));
    }
    os << pad(rows[i].power_label, w0 + 2) << pad(rows[i].poly, w1 + 2)
       << pad(tuple_to_string(rows[i].tuple_z4), w2 + 2)
       << pad(tuple_to_string(rows[i].tuple_z2), w3 + 2) << gf_label << "\n";
  }
  return os.str();
}

std::string bell_family_to_string(const BellFamily& f) {
  std::ostringstream os;
  os << "bell family: dim " << f.dim() << ", " << f.shift_count() << " shifts, "
     << f.layer_count() << " partial bases per shift, route " << f.route() << "\n";
  const auto& sets = f.sets();
  for (std::size_t h = 0; h < sets.size(); ++h) {
    for (std::size_t a = 0; a < sets[h].size(); ++a) {
      os << "h=" << h << " a=" << a << ":\n";
      for (const auto& v : sets[h][a]) os << "  " << vector_to_string(v) << "\n";
    }
  }
  return os.str();
}

}  // namespace mubkit
