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
#include "chainforge/oracle.hpp"

using namespace chainforge;

namespace {

std::shared_ptr<const LiftedFactorization> fact_for(const char* spec,
                                                    std::int64_t n) {
  return std::make_shared<LiftedFactorization>(
      factor_xn_minus_r0(make_ring(spec), n));
}

}  // namespace

TEST_CASE("span of the zero and ambient codes") {
  auto fact = fact_for("gr:2,2,1", 3);
  CodewordSet zero = span(make_code(fact, std::vector<int>{2, 2}));
  CHECK(zero.words == std::vector<std::uint64_t>{0});
  CodewordSet ambient = span(make_code(fact, std::vector<int>{0, 0}));
  CHECK(ambient.words.size() == 64);  // 4^3
}

TEST_CASE("span of <2> in Z4, n = 7 is {0,2}^7") {
  auto fact = fact_for("gr:2,2,1", 7);
  CodewordSet s = span(make_code(fact, {1, 1, 1}));
  CHECK(s.words.size() == 128);
  for (std::uint64_t w : s.words) {
    std::uint64_t x = w;
    for (int i = 0; i < 7; ++i) {
      CHECK(x % 4 % 2 == 0);
      x /= 4;
    }
  }
}

TEST_CASE("span size equals the cardinality formula") {
  for (const char* spec : {"gr:2,2,1", "gr:3,2,1", "fqu:2,1,2"}) {
    RingSpec r = make_ring(spec);
    for (std::int64_t n : {1, 2, 3, 4, 5}) {
      if (n % r.p() == 0) continue;
      auto fact = std::make_shared<const LiftedFactorization>(
          factor_xn_minus_r0(r, n));
      std::vector<int> k(fact->entries.size(), 0);
      for (;;) {
        CyclicCode c = make_code(fact, k);
        CHECK(mpz_class(static_cast<unsigned long>(span(c).words.size())) ==
              cardinality(c));
        std::size_t pos = k.size();
        while (pos > 0 && k[pos - 1] == r.t()) k[--pos] = 0;
        if (pos == 0) break;
        ++k[pos - 1];
      }
    }
  }
}

TEST_CASE("brute dual matches the structural dual") {
  auto fact = fact_for("gr:2,2,1", 7);
  for (std::vector<int> k :
       {std::vector<int>{1, 0, 2}, {0, 1, 2}, {2, 0, 0}, {1, 1, 1}}) {
    CyclicCode c = make_code(fact, k);
    CodewordSet sc = span(c);
    CodewordSet bd = brute_dual(sc);
    CodewordSet sd = span(dual(c));
    CHECK(bd.words == sd.words);
    CHECK(sc.words.size() * bd.words.size() == 16384);  // |R|^n
    CHECK(brute_dual(bd).words == sc.words);            // double annihilator
  }
}

TEST_CASE("dual of the zero code is the ambient space") {
  auto fact = fact_for("gr:3,2,1", 2);
  CodewordSet zero = span(make_code(fact, std::vector<int>{2, 2}));
  CHECK(brute_dual(zero).words.size() == 81);
}

TEST_CASE("span respects the oracle bound") {
  auto fact = fact_for("gr:2,2,1", 7);
  CHECK_THROWS_AS(span(make_code(fact, {0, 0, 0}), 1000), Error);
}

TEST_CASE("verify_instance passes on healthy instances") {
  for (auto [spec, n] : {std::pair<const char*, std::int64_t>{"gr:2,2,1", 7},
                         {"gr:3,2,1", 4},
                         {"fqu:2,1,2", 3}}) {
    InstanceReport rep = verify_instance(make_ring(spec), n);
    for (const auto& c : rep.checks) {
      INFO(c.check, " on ", c.instance, ": ", c.detail);
      CHECK(c.pass);
    }
    CHECK(rep.all_pass());
  }
}

TEST_CASE("verify_instance covers the odd-t census") {
  InstanceReport rep = verify_instance(make_ring("gr:2,3,1"), 3);
  bool found = false;
  for (const auto& c : rep.checks)
    if (c.check == "odd_t_no_selfdual") {
      found = true;
      CHECK(c.pass);
    }
  CHECK(found);
  CHECK(rep.all_pass());
}

TEST_CASE("verify_instance census entry for the nilpotent family") {
  InstanceReport rep = verify_instance(make_ring("fqu:2,1,2"), 3);
  bool found = false;
  for (const auto& c : rep.checks)
    if (c.check == "selfdual_census") found = true;
  CHECK(found);
  CHECK(rep.all_pass());
}
