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

#ifndef MUBKIT_ZPOLY_HPP
#define MUBKIT_ZPOLY_HPP

#include <string>
#include <vector>

namespace mubkit::zpoly {

// Polynomials over Z_n with small coefficients, ascending degree,
// coefficients normalized into [0, n). Used as the carrier for field and
// ring residue arithmetic; lengths stay at desk scale.
using Poly = std::vector<int>;

/// Drop trailing zeros.
Poly trim(Poly a);

long degree(const Poly& a);  // -1 for zero

Poly add(const Poly& a, const Poly& b, int n);
Poly sub(const Poly& a, const Poly& b, int n);
Poly mul(const Poly& a, const Poly& b, int n);
Poly scalar_mul(int k, const Poly& a, int n);

/// Remainder of a modulo a monic divisor, coefficients mod n.
Poly mod(Poly a, const Poly& divisor, int n);

/// mul followed by mod, padded to deg(divisor) coefficients.
Poly mulmod(const Poly& a, const Poly& b, const Poly& divisor, int n);

bool is_zero(const Poly& a);

/// Compact table style, ascending degree: "1+3x+2x^2".
std::string to_string(const Poly& a);

}  // namespace mubkit::zpoly

#endif
