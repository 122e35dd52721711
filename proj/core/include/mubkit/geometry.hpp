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

#ifndef MUBKIT_GEOMETRY_HPP
#define MUBKIT_GEOMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "mubkit/finite_field.hpp"
#include "mubkit/galois_ring.hpp"

namespace mubkit {

/// Point-line incidence structure. Lines are sets of point indices, sorted
/// ascending; point labels are free-form (algebraic element names when the
/// plane was built from a field or ring).
struct IncidencePlane {
  std::vector<std::string> point_labels;
  std::vector<std::vector<std::size_t>> lines;
};

/// Desarguesian plane PG(2, q): points and lines are the nonzero vectors of
/// GF(q)^3 up to scalars (canonical representative: first nonzero coordinate
/// equals 1), incidence by vanishing of the dot form.
IncidencePlane projective_plane(unsigned long q, long cap = 128);

/// Fano plane on the seven nonzero GF(8) elements: lines are the triples with
/// tuple sum zero.
IncidencePlane fano_from_gf8();

struct LiftedFano {
  /// Bijection between the nonzero Teichmuller elements of GR(4^3) and the
  /// nonzero GF(8) elements, by reduction mod 2. Pairs are
  /// (ring element, field element), in xi-power order.
  std::vector<std::pair<RingElement, FieldElement>> bijection;
  IncidencePlane plane;  // lines are the preimages of the Fano lines
};

/// Requires a GR(4^3) context (the degree-3 lift).
LiftedFano lifted_fano(const RingContextPtr& ctx);

struct PlaneReport {
  bool pass = false;
  long order = -1;  // d with d+1 points per line
  std::size_t point_count = 0;
  std::size_t line_count = 0;
  std::vector<std::string> failures;
};

/// Exhaustive projective plane axioms: two points on exactly one line, two
/// lines meet in exactly one point, a quadrilateral exists; plus order
/// extraction and d^2+d+1 count reconciliation.
PlaneReport verify_plane_axioms(const IncidencePlane& p);

/// Incidence-preserving point bijection, found by backtracking search.
std::optional<std::vector<std::size_t>> find_plane_isomorphism(const IncidencePlane& a,
                                                               const IncidencePlane& b);

}  // namespace mubkit

#endif
