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

#ifndef CHAINFORGE_JSON_IO_HPP
#define CHAINFORGE_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "chainforge/census.hpp"
#include "chainforge/cyclo.hpp"
#include "chainforge/factor.hpp"
#include "chainforge/oracle.hpp"

namespace chainforge {

nlohmann::json to_json(const CosetTable& t);
nlohmann::json to_json(const LiftedFactorization& lf);
/// {ring, n, exponents, dual_exponents, cardinality_log_q, self_dual}
nlohmann::json code_json(const CyclicCode& c);
nlohmann::json to_json(const InstanceReport& rep);

/// One JSONL row, fields in the documented order; counts as decimal
/// strings (they may exceed 64 bits).
std::string census_jsonl_row(const CensusRecord& rec);

}  // namespace chainforge

#endif
