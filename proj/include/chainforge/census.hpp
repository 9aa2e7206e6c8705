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

#ifndef CHAINFORGE_CENSUS_HPP
#define CHAINFORGE_CENSUS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chainforge/code.hpp"

namespace chainforge {

/// Self-dual cyclic codes of length n over R exist iff t is even
/// (independent of n).
bool selfdual_exists(const RingSpec& ring);

/// Evaluation of the equivalent nontriviality conditions:
///   (ii)  |Delta_n| > 0
///   (iii) q^i != -1 (mod n) for every i in [1, ord_n(q)]
///   (iv)  some monic irreducible factor h of X^n - 1 has h != h*
///   (v)   some monic basic irreducible factor g over a supplied even-t
///         ring has g != g* (associate test), cross-checked per factor
///         against the field level
/// (iv) computes the actual factorization and is evaluated only when the
/// extension F_{q^e} fits the word-size bound and a fixed work budget;
/// cond_iv is empty otherwise.  Any disagreement among evaluated
/// conditions throws Error("ConditionMismatch").
struct NontrivialReport {
  bool exists = false;
  bool cond_ii = false;
  bool cond_iii = false;
  std::optional<bool> cond_iv;
  std::optional<bool> cond_v;
};

/// True iff condition (iv) would be evaluated for this pair.
bool nontrivial_field_check_feasible(std::int64_t q, std::int64_t n);

NontrivialReport nontrivial_exists(const FieldSpec& field, std::int64_t n,
                                   const RingSpec* ring = nullptr);

/// 0 for odd t, else (t+1)^{|Delta_n|/2}.
mpz_class selfdual_count(int t, std::int64_t q, std::int64_t n);

/// Streams the (t+1)^{|Delta_n|/2} self-dual codes: t/2 on Omega_n, and
/// k / t-k over each Delta pair, pairs keyed by their smaller
/// representative, odometer order.  Errors: OddNilpotency.
class SelfDualEnumerator {
 public:
  explicit SelfDualEnumerator(std::shared_ptr<const LiftedFactorization> fact);

  mpz_class total() const;
  std::optional<CyclicCode> next();

 private:
  std::shared_ptr<const LiftedFactorization> fact_;
  std::vector<std::size_t> pair_lo_, pair_hi_;  // indices into entries
  std::vector<int> odometer_;
  bool done_ = false;
};

/// The explicit irreducible factor list of X^{2^m} - 1 over odd F_q:
/// root powers when 4 | q - 1, the trinomial H-set construction when
/// 4 | q + 1.  Errors: EvenQ.
std::vector<FieldPoly> factor_power_of_two(const FieldSpec& field, int m);

/// H_1, ..., H_a for q = 3 (mod 4); |H_i| = 2^{i-1} is asserted.
std::vector<std::vector<FieldElem>> trinomial_h_sets(const FieldSpec& field);

/// |Omega_{2^m}| closed form: 1 for m = 0; 2 for m = 1 or 4 | q - 1;
/// 2^{min(m,a)-1} + 1 otherwise, 2^a || q + 1.
std::int64_t omega_power_of_two_value(std::int64_t q, int m);

/// |Omega_n| with its derivation trace.  route_steps uses the tags
/// stripped(l), power_of_two, prime_power, two_primes, reduction_2m,
/// brute; detail carries the instantiated parameters.
struct OmegaDerivation {
  std::int64_t q = 0;
  std::int64_t n = 0;
  std::int64_t value = 0;
  std::vector<std::string> route_steps;
  std::string detail;
};

/// Reference oracle: fixed points of the coset pairing.
OmegaDerivation omega_brute(std::int64_t q, std::int64_t n);

/// Decision chain: strip odd primes with odd order, then dispatch on the
/// shape of what remains; falls back to brute (recorded in the route)
/// where the closed forms do not reach.
OmegaDerivation omega_closed(std::int64_t q, std::int64_t n);

/// (#q-cosets mod n', #q^2-cosets mod n'); asserts the second equals
/// 2s - 1.  Requires n' odd with every prime divisor of even order.
/// Errors: HypothesisViolated.
std::pair<std::int64_t, std::int64_t> coset_doubling_check(std::int64_t q,
                                                           std::int64_t nprime);

struct CensusRecord {
  std::int64_t q = 0;
  std::int64_t n = 0;
  int t = 0;
  std::int64_t omega = 0;
  std::int64_t delta_half = 0;
  mpz_class selfdual_count;
  bool nontrivial = false;
  std::string route;
};

CensusRecord census_record(std::int64_t q, int t, std::int64_t n);

}  // namespace chainforge

#endif
