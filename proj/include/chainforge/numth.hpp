/* Copyright (C) 2026 the chainforge authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#ifndef CHAINFORGE_NUMTH_HPP
#define CHAINFORGE_NUMTH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace chainforge {

// Elementary number theory at desk scale (trial division throughout).

bool is_prime(std::uint64_t n);

/// (prime, exponent) pairs, ascending primes; factorize(1) = {}.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/// All divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m);

/// Inverse of a modulo m; requires gcd(a, m) = 1.  inv_mod(a, 1) = 0.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

/// Multiplicative order of q modulo n; requires gcd(q, n) = 1.
/// ord_mod(q, 1) = 1 (trivial group).
std::uint64_t ord_mod(std::uint64_t q, std::uint64_t n);

/// b^e, throwing Error("SizeExceeded") as soon as the value passes limit.
std::uint64_t checked_pow(std::uint64_t b, std::uint64_t e, std::uint64_t limit);

/// Largest v with 2^v | n (n > 0).
int two_adic_valuation(std::uint64_t n);

/// Decomposes a prime power q = p^alpha; throws Error("NonPrime") otherwise.
std::pair<std::uint64_t, int> prime_power_decompose(std::uint64_t q);

}  // namespace chainforge

#endif
