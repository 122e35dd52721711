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

#include "mubkit/geometry.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "mubkit/integers.hpp"

namespace mubkit {

namespace {

std::string power_label(const char* symbol, long k) {
  if (k == 0) return "1";
  if (k == 1) return symbol;
  return std::string(symbol) + "^" + std::to_string(k);
}

}  // namespace

IncidencePlane projective_plane(unsigned long q, long cap) {
  auto [p, e] = prime_power(q);
  if (p == 0) throw std::invalid_argument("projective_plane: order must be a prime power");
  if (cap < 1 || static_cast<long>(q) > cap)
    throw std::invalid_argument("projective_plane: order exceeds the configured cap");
  auto field = FieldContext::create(static_cast<int>(p), static_cast<int>(e));
  const long n = field->size();

  // Canonical representatives of nonzero vectors modulo scalars: the first
  // nonzero coordinate (from the left) is 1.
  std::vector<std::array<long, 3>> points;
  for (long y = 0; y < n; ++y)
    for (long z = 0; z < n; ++z) points.push_back({1, y, z});
  for (long z = 0; z < n; ++z) points.push_back({0, 1, z});
  points.push_back({0, 0, 1});

  auto dot_is_zero = [&](const std::array<long, 3>& u, const std::array<long, 3>& v) {
    FieldElement acc = field->zero();
    for (int i = 0; i < 3; ++i) acc = acc + field->element(u[i]) * field->element(v[i]);
    return acc.is_zero();
  };

  IncidencePlane plane;
  for (const auto& pt : points) {
    std::string label = "(" + std::to_string(pt[0]) + "," + std::to_string(pt[1]) + "," +
                        std::to_string(pt[2]) + ")";
    plane.point_labels.push_back(std::move(label));
  }
  // Lines carry the same canonical forms; incidence is vanishing of the dot
  // form. Element indices name field elements here (0 -> 0, k+1 -> alpha^k),
  // which is immaterial to the incidence structure.
  for (const auto& form : points) {
    std::vector<std::size_t> line;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (dot_is_zero(form, points[i])) line.push_back(i);
    std::sort(line.begin(), line.end());
    plane.lines.push_back(std::move(line));
  }
  return plane;
}

IncidencePlane fano_from_gf8() {
  auto field = FieldContext::create(2, 3);
  IncidencePlane plane;
  // Points are the seven nonzero elements, in power order 1, a, a^2, ...
  for (long i = 1; i < field->size(); ++i)
    plane.point_labels.push_back(power_label("a", i - 1));
  for (long i = 1; i < field->size(); ++i) {
    for (long j = i + 1; j < field->size(); ++j) {
      for (long k = j + 1; k < field->size(); ++k) {
        FieldElement sum = field->element(i) + field->element(j) + field->element(k);
        if (sum.is_zero())
          plane.lines.push_back({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1),
                                 static_cast<std::size_t>(k - 1)});
      }
    }
  }
  return plane;
}

LiftedFano lifted_fano(const RingContextPtr& ctx) {
  if (!ctx || ctx->degree() != 3)
    throw std::invalid_argument("lifted_fano: a GR(4^3) context is required");
  auto field = FieldContext::create_with_modulus(2, ctx->binary_modulus());
  LiftedFano out;

  const auto& teich = ctx->teichmuller_set();
  // Nonzero Teichmuller elements in xi-power order; reduction mod 2 lands in
  // GF(8) on the matching binary modulus.
  std::set<long> image;
  for (std::size_t i = 1; i < teich.size(); ++i) {
    FieldElement projected = field->from_coeffs(teich[i].mod2());
    if (projected.is_zero()) throw std::logic_error("lifted_fano: projection hit zero");
    image.insert(field->index_of(projected));
    out.bijection.emplace_back(teich[i], projected);
  }
  if (image.size() != 7) throw std::logic_error("lifted_fano: projection is not a bijection");

  IncidencePlane fano = fano_from_gf8();
  // Lines in the Teichmuller set are the preimages of the Fano lines. Point
  // order here follows xi powers; the projection maps xi-power index to the
  // alpha-power index of the reduction.
  std::vector<std::size_t> alpha_index_of(out.bijection.size());
  for (std::size_t i = 0; i < out.bijection.size(); ++i)
    alpha_index_of[i] = static_cast<std::size_t>(field->index_of(out.bijection[i].second) - 1);

  for (std::size_t i = 0; i < out.bijection.size(); ++i)
    out.plane.point_labels.push_back(power_label("xi", static_cast<long>(i)));
  for (const auto& line : fano.lines) {
    std::vector<std::size_t> lifted;
    for (std::size_t point = 0; point < alpha_index_of.size(); ++point)
      if (std::find(line.begin(), line.end(), alpha_index_of[point]) != line.end())
        lifted.push_back(point);
    std::sort(lifted.begin(), lifted.end());
    out.plane.lines.push_back(std::move(lifted));
  }
  return out;
}

PlaneReport verify_plane_axioms(const IncidencePlane& p) {
  PlaneReport report;
  report.point_count = p.point_labels.size();
  report.line_count = p.lines.size();
  const std::size_t n = report.point_count;

  std::vector<std::vector<char>> on_line(p.lines.size(), std::vector<char>(n, 0));
  for (std::size_t l = 0; l < p.lines.size(); ++l)
    for (std::size_t pt : p.lines[l]) {
      if (pt >= n) {
        report.failures.push_back("line references a missing point");
        return report;
      }
      on_line[l][pt] = 1;
    }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      int count = 0;
      for (std::size_t l = 0; l < p.lines.size(); ++l)
        if (on_line[l][i] && on_line[l][j]) ++count;
      if (count != 1) {
        report.failures.push_back("points " + std::to_string(i) + " and " + std::to_string(j) +
                                  " lie on " + std::to_string(count) + " common lines");
        if (report.failures.size() > 8) return report;
      }
    }
  }

  for (std::size_t l = 0; l < p.lines.size(); ++l) {
    for (std::size_t m = l + 1; m < p.lines.size(); ++m) {
      int count = 0;
      for (std::size_t pt = 0; pt < n; ++pt)
        if (on_line[l][pt] && on_line[m][pt]) ++count;
      if (count != 1) {
        report.failures.push_back("lines " + std::to_string(l) + " and " + std::to_string(m) +
                                  " meet in " + std::to_string(count) + " points");
        if (report.failures.size() > 8) return report;
      }
    }
  }

  // Four points, no three collinear.
  bool quad = false;
  for (std::size_t a = 0; a < n && !quad; ++a)
    for (std::size_t b = a + 1; b < n && !quad; ++b)
      for (std::size_t c = b + 1; c < n && !quad; ++c)
        for (std::size_t e = c + 1; e < n && !quad; ++e) {
          bool collinear = false;
          for (std::size_t l = 0; l < p.lines.size() && !collinear; ++l) {
            int inside = on_line[l][a] + on_line[l][b] + on_line[l][c] + on_line[l][e];
            if (inside >= 3) collinear = true;
          }
          if (!collinear) quad = true;
        }
  if (!quad) report.failures.push_back("no quadrilateral (four points, no three collinear)");

  if (!p.lines.empty()) {
    std::size_t per_line = p.lines.front().size();
    bool uniform = true;
    for (const auto& line : p.lines)
      if (line.size() != per_line) uniform = false;
    if (!uniform) {
      report.failures.push_back("lines have unequal sizes");
    } else if (per_line >= 1) {
      report.order = static_cast<long>(per_line) - 1;
      auto expected = static_cast<std::size_t>(report.order * report.order + report.order + 1);
      if (report.point_count != expected)
        report.failures.push_back("point count differs from order^2 + order + 1");
      if (report.line_count != expected)
        report.failures.push_back("line count differs from order^2 + order + 1");
    }
  }

  report.pass = report.failures.empty();
  return report;
}

namespace {

bool extend_isomorphism(const IncidencePlane& a, const IncidencePlane& b,
                        const std::vector<std::set<std::size_t>>& lines_a,
                        const std::set<std::vector<std::size_t>>& line_set_b,
                        std::vector<long>& image, std::vector<char>& used, std::size_t next) {
  const std::size_t n = a.point_labels.size();
  if (next == n) {
    for (const auto& line : lines_a) {
      std::vector<std::size_t> mapped;
      for (std::size_t pt : line) mapped.push_back(static_cast<std::size_t>(image[pt]));
      std::sort(mapped.begin(), mapped.end());
      if (!line_set_b.count(mapped)) return false;
    }
    return true;
  }
  for (std::size_t candidate = 0; candidate < n; ++candidate) {
    if (used[candidate]) continue;
    image[next] = static_cast<long>(candidate);
    used[candidate] = 1;
    // Prune: every fully mapped line must land on a line of b.
    bool feasible = true;
    for (const auto& line : lines_a) {
      bool complete = true;
      std::vector<std::size_t> mapped;
      for (std::size_t pt : line) {
        if (image[pt] < 0) {
          complete = false;
          break;
        }
        mapped.push_back(static_cast<std::size_t>(image[pt]));
      }
      if (complete) {
        std::sort(mapped.begin(), mapped.end());
        if (!line_set_b.count(mapped)) {
          feasible = false;
          break;
        }
      }
    }
    if (feasible && extend_isomorphism(a, b, lines_a, line_set_b, image, used, next + 1))
      return true;
    used[candidate] = 0;
    image[next] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_plane_isomorphism(const IncidencePlane& a,
                                                               const IncidencePlane& b) {
  if (a.point_labels.size() != b.point_labels.size() || a.lines.size() != b.lines.size())
    return std::nullopt;
  std::vector<std::set<std::size_t>> lines_a;
  for (const auto& line : a.lines) lines_a.emplace_back(line.begin(), line.end());
  std::set<std::vector<std::size_t>> line_set_b;
  for (const auto& line : b.lines) {
    std::vector<std::size_t> sorted = line;
    std::sort(sorted.begin(), sorted.end());
    line_set_b.insert(std::move(sorted));
  }
  std::vector<long> image(a.point_labels.size(), -1);
  std::vector<char> used(a.point_labels.size(), 0);
  if (!extend_isomorphism(a, b, lines_a, line_set_b, image, used, 0)) return std::nullopt;
  std::vector<std::size_t> out;
  out.reserve(image.size());
  for (long i : image) out.push_back(static_cast<std::size_t>(i));
  return out;
}

}  // namespace mubkit
