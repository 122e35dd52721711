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

#ifndef MUBKIT_INTEGERS_HPP
#define MUBKIT_INTEGERS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mubkit {

// Coefficients of cyclotomic integers are unbounded: products of inner
// products and squared moduli grow past machine range well inside the
// supported dimension cap.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Euler totient of n (n >= 1).
unsigned long euler_phi(unsigned long n);

bool is_prime(unsigned long n);

/// Prime factorization, ascending primes: n = prod p_i^{e_i}.
std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long n);

/// If n = p^k for a prime p and k >= 1, returns (p, k); otherwise (0, 0).
std::pair<unsigned long, unsigned> prime_power(unsigned long n);

unsigned long lcm_ul(unsigned long a, unsigned long b);

/// All divisors of n, ascending.
std::vector<unsigned long> divisors(unsigned long n);

}  // namespace mubkit

#endif
