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

#ifndef CHAINFORGE_CYCLO_HPP
#define CHAINFORGE_CYCLO_HPP

#include <cstdint>
#include <vector>

namespace chainforge {

/// q-cyclotomic cosets modulo n together with the reciprocal pairing
/// i -> i' (the coset of -i) and the fixed/moved partition Omega/Delta.
/// Representatives are the least coset elements, ascending.
struct CosetTable {
  std::int64_t n = 0;
  std::int64_t q = 0;
  std::vector<std::int64_t> reps;
  std::vector<std::int64_t> coset_of;               // residue -> representative
  std::vector<std::vector<std::int64_t>> cosets;    // aligned with reps, sorted
  std::vector<std::int64_t> pairing;                // aligned with reps, value = rep'
  std::vector<std::int64_t> omega;                  // reps with i' == i
  std::vector<std::int64_t> delta;                  // reps with i' != i

  std::size_t rep_index(std::int64_t rep) const;
  std::int64_t paired(std::int64_t rep) const;
  const std::vector<std::int64_t>& coset(std::int64_t rep) const;
};

/// Errors: NotCoprime; NonPrime (q not a prime power).
CosetTable coset_table(std::int64_t q, std::int64_t n);

/// sum_{d | n} phi(d) / ord_d(q); equals the number of cosets.
std::int64_t irreducible_factor_count(std::int64_t q, std::int64_t n);

}  // namespace chainforge

#endif
