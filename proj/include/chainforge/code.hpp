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

#ifndef CHAINFORGE_CODE_HPP
#define CHAINFORGE_CODE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "chainforge/factor.hpp"

namespace chainforge {

/// Cyclic code of length n over R, stored as its exponent vector
/// k: I -> [0, t] against a shared lifted factorization; the generator
/// prod f_i^{k_i} and every predicate are derived from the exponents.
class CyclicCode {
 public:
  CyclicCode() = default;
  CyclicCode(std::shared_ptr<const LiftedFactorization> fact,
             std::vector<int> exps);

  const LiftedFactorization& fact() const { return *fact_; }
  const std::shared_ptr<const LiftedFactorization>& fact_ptr() const {
    return fact_;
  }
  /// Exponents in ascending-representative order.
  const std::vector<int>& exponents() const { return k_; }
  int exponent_at(std::int64_t rep) const;

  /// Same ambient (ring, n, r0) and same exponent vector.
  bool operator==(const CyclicCode& o) const;
  bool operator!=(const CyclicCode& o) const { return !(*this == o); }

 private:
  std::shared_ptr<const LiftedFactorization> fact_;
  std::vector<int> k_;
};

/// Errors: ExponentOutOfRange; BadIndexSet (keys differ from I).
CyclicCode make_code(std::shared_ptr<const LiftedFactorization> fact,
                     const std::map<std::int64_t, int>& exponents);
CyclicCode make_code(std::shared_ptr<const LiftedFactorization> fact,
                     const std::vector<int>& rep_order_exponents);

/// prod f_i^{k_i} reduced modulo X^n - 1.
RingPoly generator_poly(const CyclicCode& c);

/// |C| = q^{sum (t - k_i) deg f_i}.
mpz_class cardinality(const CyclicCode& c);
std::int64_t cardinality_log_q(const CyclicCode& c);

/// C-perp: exponent at rep j is t - k_{j'}.
CyclicCode dual(const CyclicCode& c);

/// k_i + k_{i'} = t for every i.
bool is_self_dual(const CyclicCode& c);

/// a contains b iff k_i(a) <= k_i(b) for all i.
/// Errors: MismatchedAmbient.
bool contains(const CyclicCode& a, const CyclicCode& b);

/// contains(dual(c), c), i.e. k_i + k_{i'} >= t for all i.
bool is_self_orthogonal(const CyclicCode& c);

}  // namespace chainforge

#endif
