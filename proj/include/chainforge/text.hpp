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

#ifndef CHAINFORGE_TEXT_HPP
#define CHAINFORGE_TEXT_HPP

#include <string>
#include <string_view>

#include "chainforge/gf.hpp"
#include "chainforge/ring.hpp"

namespace chainforge {

// Text grammar (see README):
//   field element   alpha = 1: integer in [0, p)
//                   alpha > 1: alpha base-p digits joined by '.', ascending
//   field poly      coefficients joined by ',', ascending degree;
//                   the zero polynomial is a single zero coefficient
//   ring element    Galois: m integers in [0, p^t) joined by '.'
//                   nilpotent: t field elements joined by ';'
//   ring poly       coefficients joined by ',', ascending degree

std::string to_text(const FieldElem& a);
std::string to_text(const FieldPoly& h);
std::string to_text(const RingElem& x);
std::string to_text(const RingPoly& g);

FieldElem parse_field_elem(const FieldSpec& f, std::string_view s);
FieldPoly parse_field_poly(const FieldSpec& f, std::string_view s);
RingElem parse_ring_elem(const RingSpec& r, std::string_view s);
RingPoly parse_ring_poly(const RingSpec& r, std::string_view s);

}  // namespace chainforge

#endif
