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

#ifndef MUBKIT_RENDER_HPP
#define MUBKIT_RENDER_HPP

#include <string>
#include <vector>

#include "mubkit/cyclotomic.hpp"
#include "mubkit/entangle.hpp"
#include "mubkit/finite_field.hpp"
#include "mubkit/galois_ring.hpp"
#include "mubkit/geometry.hpp"
#include "mubkit/mub.hpp"
#include "mubkit/state.hpp"

namespace mubkit {

/// Fixed text grammar for cyclotomic integers: integer-coefficient monomials
/// in "z{N}" joined by " + " / " - ", ascending powers, e.g. "1 - 2*z12^3".
/// The zero element renders as "0".
std::string cyclo_to_string(const CyclotomicInt& a);

std::string vector_to_string(const StateVector& v);
std::string basis_to_string(const Basis& b);
std::string mub_set_to_string(const MubSet& s);
std::string matrix_to_string(const ExactMatrix& m);

std::string mub_report_to_string(const MubReport& r);
std::string bell_report_to_string(const BellReport& r);

std::string field_table_to_string(const std::vector<RepresentationRow>& rows);
std::string ring_table_to_string(const std::vector<RingRepresentationRow>& rows);

std::string plane_to_string(const IncidencePlane& p);
std::string bell_family_to_string(const BellFamily& f);

/// Side-by-side comparison table for the lifted Fano plane: each cyclic-group
/// element of GR(4^3) next to its reduction in GF(8)*.
std::string lifted_fano_table_to_string(const RingContext& ctx, const LiftedFano& lifted);

}  // namespace mubkit

#endif
