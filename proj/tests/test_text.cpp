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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "chainforge/error.hpp"
#include "chainforge/text.hpp"

using namespace chainforge;

TEST_CASE("field polynomial text round trip (seeded samples)") {
  std::uint64_t seed = 0x5eedu;
  auto next = [&] {
    seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    return seed >> 33;
  };
  for (auto [p, a] : {std::pair<std::int64_t, int>{2, 1}, {3, 2}, {5, 1}}) {
    FieldSpec f = make_field(p, a);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::uint32_t> enc(1 + next() % 6);
      for (auto& c : enc) c = static_cast<std::uint32_t>(next() % f.q());
      FieldPoly h(f, std::move(enc));
      CHECK(parse_field_poly(f, to_text(h)) == h);
    }
  }
}

TEST_CASE("ring polynomial text round trip for both families") {
  std::uint64_t seed = 0xab1eu;
  auto next = [&] {
    seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    return seed >> 33;
  };
  for (const char* spec : {"gr:2,2,1", "gr:3,2,2", "fqu:2,2,2", "fqu:3,1,3"}) {
    RingSpec r = make_ring(spec);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<RingElem> c(1 + next() % 5, r.zero());
      for (auto& x : c) x = r.element_at(next() % r.size());
      RingPoly g(r, std::move(c));
      CHECK(parse_ring_poly(r, to_text(g)) == g);
    }
  }
}

TEST_CASE("documented text forms") {
  FieldSpec f9 = make_field(3, 2);
  CHECK(to_text(f9.from_coeffs({2, 1})) == "2.1");
  CHECK(parse_field_elem(f9, "2.1") == f9.from_coeffs({2, 1}));

  RingSpec gr = make_ring("gr:3,2,2");
  CHECK(to_text(gr.from_coords({3, 1})) == "3.1");

  RingSpec fu = make_ring("fqu:2,2,2");
  RingElem x = fu.from_coords({2, 3});
  CHECK(to_text(x) == "0.1;1.1");
  CHECK(parse_ring_elem(fu, "0.1;1.1") == x);
}

TEST_CASE("parse errors carry the ParseError code") {
  FieldSpec f2 = make_field(2, 1);
  RingSpec z4 = make_ring("gr:2,2,1");
  auto code = [](const std::function<void()>& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return std::string(e.code());
    }
    return std::string();
  };
  CHECK(code([&] { parse_field_poly(f2, "1,x"); }) == "ParseError");
  CHECK(code([&] { parse_field_elem(f2, "3"); }) == "ParseError");
  CHECK(code([&] { parse_ring_elem(z4, "1.2"); }) == "ParseError");
  CHECK(code([&] { parse_ring_elem(z4, "7"); }) == "ParseError");
}
