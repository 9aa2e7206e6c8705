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

#ifndef CHAINFORGE_FACTOR_HPP
#define CHAINFORGE_FACTOR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "chainforge/cyclo.hpp"
#include "chainforge/gf.hpp"
#include "chainforge/ring.hpp"

namespace chainforge {

struct FieldFactor {
  std::int64_t rep;
  FieldPoly h;
};

/// Monic irreducible factorization of X^n - 1 over F_q, one factor per
/// cyclotomic coset, ordered by ascending representative.
/// Errors: NotCoprime.
std::vector<FieldFactor> factor_unity_field(const FieldSpec& field,
                                            std::int64_t n);

struct RingFactor {
  std::int64_t rep;
  RingPoly g;
};

/// Unique monic basic irreducible lift with residue(g_i) = h_i and
/// prod g_i = X^n - 1 exactly in R[X].  The nilpotent family embeds the
/// field factors verbatim; Galois rings step p-adically level by level.
/// Errors: BadFactorization (inputs violate the precondition).
std::vector<RingFactor> hensel_lift(const RingSpec& ring,
                                    const std::vector<FieldFactor>& hs);

/// One coset's worth of the triple (h_i, g_i, f_i).
struct FactorEntry {
  std::int64_t rep;
  FieldPoly h;  // factor of X^n - 1 over F_q
  RingPoly g;   // factor of X^n - 1 over R
  RingPoly f;   // factor of X^n - r0 over R
};

/// The full lifted picture for one (ring, n, mu): r0 = 1 + mu gamma,
/// delta^n r0 = 1, f_i = delta^{-deg g_i} g_i(delta X).  All product and
/// residue identities are asserted at construction.
struct LiftedFactorization {
  RingSpec ring;
  std::int64_t n = 0;
  CosetTable cosets;
  RingElem mu, r0, delta;
  std::vector<FactorEntry> entries;  // ascending representative

  const FactorEntry& entry(std::int64_t rep) const;
};

/// Errors: NotCoprime; NotUnit(mu); BadFactorization.
LiftedFactorization factor_xn_minus_r0(
    const RingSpec& ring, std::int64_t n,
    std::optional<RingElem> mu = std::nullopt);

/// Bezout certificate u a + v b = 1 over R, found by lifting the
/// field-level identity (coprimality transfers through the residue map).
/// Errors: NotCoprime (residues share a factor).
std::pair<RingPoly, RingPoly> coprime_bezout(const RingPoly& a,
                                             const RingPoly& b);

/// a * b reduced modulo X^n - 1 (exponent folding).
RingPoly mulmod_xn_minus_1(const RingPoly& a, const RingPoly& b,
                           std::int64_t n);

}  // namespace chainforge

#endif
