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

#ifndef CHAINFORGE_ORACLE_HPP
#define CHAINFORGE_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "chainforge/code.hpp"

namespace chainforge {

/// An explicit codeword set at tiny scale; words are radix-|R| encodings
/// of length-n vectors, sorted ascending.
struct CodewordSet {
  RingSpec ring;
  std::int64_t n = 0;
  std::vector<std::uint64_t> words;
};

/// |R|^n cap for explicit enumeration; CHAINFORGE_MAX_ORACLE overrides
/// the default 2^22.
std::uint64_t oracle_bound();

/// R-span of the cyclic shifts of the generator polynomial, computed to
/// closure; |words| equals the cardinality formula.
/// Errors: BoundExceeded.
CodewordSet span(const CyclicCode& c);
CodewordSet span(const CyclicCode& c, std::uint64_t bound);

/// Exact annihilator under the Euclidean inner product.
/// Errors: BoundExceeded.
CodewordSet brute_dual(const CodewordSet& s);
CodewordSet brute_dual(const CodewordSet& s, std::uint64_t bound);

struct CheckResult {
  std::string check;
  std::string instance;
  bool pass = false;
  std::string detail;
};

struct InstanceReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// Full battery for one (ring, n): factorization identities, Bezout
/// certificates, structural dual vs. brute-force dual over all exponent
/// vectors when (t+1)^|I| <= 512 (else 100 vectors from a fixed seeded
/// stream), census equality, and the odd-t exhaustive scan.
/// Errors: BoundExceeded (instance too large for the oracle).
InstanceReport verify_instance(const RingSpec& ring, std::int64_t n);
InstanceReport verify_instance(const RingSpec& ring, std::int64_t n,
                               std::uint64_t bound);

}  // namespace chainforge

#endif
