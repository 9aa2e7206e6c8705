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

#include "chainforge/cyclo.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "chainforge/error.hpp"
#include "chainforge/numth.hpp"

namespace chainforge {

std::size_t CosetTable::rep_index(std::int64_t rep) const {
  auto it = std::lower_bound(reps.begin(), reps.end(), rep);
  if (it == reps.end() || *it != rep)
    raise("BadIndexSet", std::to_string(rep) + " is not a coset representative");
  return static_cast<std::size_t>(it - reps.begin());
}

std::int64_t CosetTable::paired(std::int64_t rep) const {
  return pairing[rep_index(rep)];
}

const std::vector<std::int64_t>& CosetTable::coset(std::int64_t rep) const {
  return cosets[rep_index(rep)];
}

CosetTable coset_table(std::int64_t q, std::int64_t n) {
  if (n < 1) raise("NotCoprime", "n must be positive");
  prime_power_decompose(static_cast<std::uint64_t>(q));
  if (std::gcd(q, n) != 1)
    raise("NotCoprime", "gcd(q, n) = " + std::to_string(std::gcd(q, n)));

  CosetTable t;
  t.n = n;
  t.q = q;
  t.coset_of.assign(static_cast<std::size_t>(n), -1);
  const std::int64_t qm = q % n;
  for (std::int64_t i = 0; i < n; ++i) {
    if (t.coset_of[i] != -1) continue;
    std::vector<std::int64_t> orbit;
    std::int64_t x = i;
    do {
      orbit.push_back(x);
      t.coset_of[x] = i;  // i is minimal: orbit values are visited unmarked
      x = static_cast<std::int64_t>(
          mul_mod(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(qm),
                  static_cast<std::uint64_t>(n)));
    } while (x != i);
    std::sort(orbit.begin(), orbit.end());
    t.reps.push_back(i);
    t.cosets.push_back(std::move(orbit));
  }

  t.pairing.resize(t.reps.size());
  for (std::size_t k = 0; k < t.reps.size(); ++k) {
    std::int64_t neg = (n - t.reps[k]) % n;
    t.pairing[k] = t.coset_of[neg];
    if (t.pairing[k] == t.reps[k])
      t.omega.push_back(t.reps[k]);
    else
      t.delta.push_back(t.reps[k]);
  }
  return t;
}

std::int64_t irreducible_factor_count(std::int64_t q, std::int64_t n) {
  if (n < 1) raise("NotCoprime", "n must be positive");
  prime_power_decompose(static_cast<std::uint64_t>(q));
  if (std::gcd(q, n) != 1)
    raise("NotCoprime", "gcd(q, n) = " + std::to_string(std::gcd(q, n)));
  std::int64_t total = 0;
  for (std::uint64_t d : divisors(static_cast<std::uint64_t>(n)))
    total += static_cast<std::int64_t>(
        euler_phi(d) / ord_mod(static_cast<std::uint64_t>(q), d));
  return total;
}

}  // namespace chainforge
