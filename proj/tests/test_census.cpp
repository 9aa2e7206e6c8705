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
#include <numeric>
#include <set>

#include "chainforge/census.hpp"
#include "chainforge/error.hpp"
#include "chainforge/numth.hpp"

using namespace chainforge;

namespace {

std::string error_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

std::shared_ptr<const LiftedFactorization> fact_for(const char* spec,
                                                    std::int64_t n) {
  return std::make_shared<LiftedFactorization>(
      factor_xn_minus_r0(make_ring(spec), n));
}

FieldSpec field_q(std::int64_t q) {
  auto [p, a] = prime_power_decompose(static_cast<std::uint64_t>(q));
  return make_field(static_cast<std::int64_t>(p), a);
}

}  // namespace

TEST_CASE("selfdual existence depends only on the parity of t") {
  CHECK(selfdual_exists(make_ring("gr:2,2,1")));
  CHECK(!selfdual_exists(make_ring("gr:2,3,1")));
  CHECK(!selfdual_exists(make_ring("gr:5,1,1")));
  CHECK(selfdual_exists(make_ring("fqu:3,1,4")));
}

TEST_CASE("nontrivial_exists examples") {
  CHECK(nontrivial_exists(field_q(2), 7).exists);
  CHECK(!nontrivial_exists(field_q(2), 3).exists);
  CHECK(!nontrivial_exists(field_q(7), 1).exists);
  CHECK(error_code([] { nontrivial_exists(field_q(2), 4); }) == "NotCoprime");
}

TEST_CASE("nontrivial_exists evaluates the field-level condition here") {
  auto rep = nontrivial_exists(field_q(2), 7);
  REQUIRE(rep.cond_iv.has_value());
  CHECK(*rep.cond_iv == true);
  auto rep3 = nontrivial_exists(field_q(2), 3);
  REQUIRE(rep3.cond_iv.has_value());
  CHECK(*rep3.cond_iv == false);
}

TEST_CASE("nontrivial_exists condition (v) over sampled rings") {
  RingSpec z4 = make_ring("gr:2,2,1");
  auto rep = nontrivial_exists(field_q(2), 7, &z4);
  REQUIRE(rep.cond_v.has_value());
  CHECK(*rep.cond_v == true);

  RingSpec f4u = make_ring("fqu:2,2,2");
  auto rep2 = nontrivial_exists(field_q(4), 5, &f4u);
  REQUIRE(rep2.cond_v.has_value());
  CHECK(*rep2.cond_v == rep2.cond_ii);

  RingSpec z8 = make_ring("gr:2,3,1");
  CHECK(error_code([&] { nontrivial_exists(field_q(2), 7, &z8); }) ==
        "OddNilpotency");
}

TEST_CASE("selfdual_count examples") {
  CHECK(selfdual_count(2, 2, 7) == 3);
  CHECK(selfdual_count(2, 2, 3) == 1);
  CHECK(selfdual_count(3, 5, 4) == 0);
  CHECK(selfdual_count(2, 2, 15) == 3);
}

TEST_CASE("selfdual_enumerate over Z4, n = 7") {
  SelfDualEnumerator en(fact_for("gr:2,2,1", 7));
  CHECK(en.total() == 3);
  std::vector<std::vector<int>> got;
  while (auto c = en.next()) {
    CHECK(is_self_dual(*c));
    got.push_back(c->exponents());
  }
  CHECK(got == std::vector<std::vector<int>>{{1, 0, 2}, {1, 1, 1}, {1, 2, 0}});
}

TEST_CASE("selfdual_enumerate with an empty Delta") {
  SelfDualEnumerator en(fact_for("gr:2,2,1", 3));
  auto c = en.next();
  REQUIRE(c.has_value());
  CHECK(c->exponents() == std::vector<int>{1, 1});
  CHECK(!en.next().has_value());
}

TEST_CASE("selfdual_enumerate is ring-family independent in shape") {
  SelfDualEnumerator en(fact_for("fqu:2,1,2", 7));
  std::vector<std::vector<int>> got;
  while (auto c = en.next()) got.push_back(c->exponents());
  CHECK(got == std::vector<std::vector<int>>{{1, 0, 2}, {1, 1, 1}, {1, 2, 0}});
}

TEST_CASE("selfdual_enumerate rejects odd t") {
  CHECK(error_code([] { SelfDualEnumerator en(fact_for("gr:2,3,1", 7)); }) ==
        "OddNilpotency");
}

TEST_CASE("enumerator output matches the census count exactly") {
  for (auto [spec, n] : {std::pair<const char*, std::int64_t>{"gr:2,2,1", 15},
                         {"gr:3,2,1", 8},
                         {"gr:2,4,1", 5},
                         {"fqu:2,2,2", 5},
                         {"fqu:3,1,4", 10}}) {
    auto fact = fact_for(spec, n);
    SelfDualEnumerator en(fact);
    mpz_class expected =
        selfdual_count(fact->ring.t(), fact->ring.q(), n);
    CHECK(en.total() == expected);
    std::set<std::vector<int>> seen;
    while (auto c = en.next()) {
      CHECK(is_self_dual(*c));
      CHECK(seen.insert(c->exponents()).second);  // pairwise distinct
    }
    CHECK(mpz_class(static_cast<unsigned long>(seen.size())) == expected);
  }
}

TEST_CASE("H sets for q = 3 (mod 4)") {
  auto h3 = trinomial_h_sets(field_q(3));  // a = 2
  REQUIRE(h3.size() == 2);
  CHECK(h3[0].size() == 1);
  CHECK(h3[1].size() == 2);
  std::set<std::uint32_t> vals;
  for (const auto& x : h3[1]) vals.insert(x.encoded());
  CHECK(vals == std::set<std::uint32_t>{1, 2});  // H_2 = {1, 2}

  auto h7 = trinomial_h_sets(field_q(7));  // a = 3
  REQUIRE(h7.size() == 3);
  CHECK(h7[2].size() == 4);

  CHECK(error_code([] { trinomial_h_sets(field_q(5)); }) ==
        "HypothesisViolated");
}

TEST_CASE("factor_power_of_two examples") {
  FieldSpec f3 = field_q(3);
  auto fs32 = factor_power_of_two(f3, 2);
  std::multiset<std::string> got;
  auto text = [](const FieldPoly& h) {
    std::string s;
    for (int i = 0; i <= h.degree(); ++i)
      s += std::to_string(h.coeff(i).encoded()) + ",";
    return s;
  };
  for (const auto& h : fs32) got.insert(text(h));
  CHECK(got == std::multiset<std::string>{"2,1,", "1,1,", "1,0,1,"});

  auto fs33 = factor_power_of_two(f3, 3);
  got.clear();
  for (const auto& h : fs33) got.insert(text(h));
  CHECK(got == std::multiset<std::string>{"2,1,", "1,1,", "1,0,1,", "2,1,1,",
                                          "2,2,1,"});

  FieldSpec f5 = field_q(5);
  auto fs53 = factor_power_of_two(f5, 3);
  got.clear();
  for (const auto& h : fs53) got.insert(text(h));
  CHECK(got == std::multiset<std::string>{"4,1,", "3,1,", "2,1,", "1,1,",
                                          "3,0,1,", "2,0,1,"});

  CHECK(error_code([] { factor_power_of_two(field_q(2), 3); }) == "EvenQ");
}

TEST_CASE("omega_brute examples") {
  CHECK(omega_brute(2, 15).value == 3);
  CHECK(omega_brute(11, 1).value == 1);
  CHECK(omega_brute(3, 20).value == 5);
}

TEST_CASE("omega_closed anchor values and routes") {
  OmegaDerivation d = omega_closed(3, 20);
  CHECK(d.value == 5);
  CHECK(d.route_steps.back() == "reduction_2m");

  CHECK(omega_closed(2, 15).value == 3);
  CHECK(omega_closed(2, 15).route_steps ==
        std::vector<std::string>{"two_primes"});
  CHECK(omega_closed(2, 33).value == 5);
  CHECK(omega_closed(5, 8).value == 2);
  CHECK(omega_closed(3, 8).value == 3);
  CHECK(omega_closed(3, 8).route_steps ==
        std::vector<std::string>{"power_of_two"});

  OmegaDerivation strip = omega_closed(2, 7);  // ord_7(2) = 3 is odd
  CHECK(strip.value == 1);
  CHECK(strip.route_steps.front() == "stripped(7)");
}

TEST_CASE("eq (7) agrees with brute force for odd q <= 27, m <= 8") {
  for (std::int64_t q = 3; q <= 27; ++q) {
    if (q % 2 == 0 || factorize(static_cast<std::uint64_t>(q)).size() != 1)
      continue;
    for (int m = 0; m <= 8; ++m) {
      std::int64_t n = std::int64_t{1} << m;
      CHECK(omega_power_of_two_value(q, m) == omega_brute(q, n).value);
    }
  }
}

TEST_CASE("power-of-two factor lists are consistent with eq (7)") {
  for (std::int64_t q : {3, 5, 7, 11, 13}) {
    FieldSpec f = field_q(q);
    for (int m = 0; m <= 5; ++m) {
      auto fs = factor_power_of_two(f, m);
      std::int64_t selfrec = 0;
      for (const auto& h : fs)
        if (h == star(h)) ++selfrec;
      CHECK(selfrec == omega_power_of_two_value(q, m));
      CHECK(static_cast<std::int64_t>(fs.size()) ==
            irreducible_factor_count(q, std::int64_t{1} << m));
    }
  }
}

TEST_CASE("Lemma 5.4 / Remark 5.5: prime power omega") {
  for (std::int64_t q : {2, 3, 4, 5, 7, 9}) {
    for (std::int64_t l : {3, 5, 7, 11, 13}) {
      if (l == q || std::gcd(q, l) != 1) continue;
      for (int s = 1; s <= 3; ++s) {
        std::int64_t n = 1;
        for (int i = 0; i < s; ++i) n *= l;
        if (n > 400) break;
        std::int64_t expect =
            ord_mod(static_cast<std::uint64_t>(q),
                    static_cast<std::uint64_t>(l)) %
                        2 ==
                    1
                ? 1
                : irreducible_factor_count(q, n);
        CHECK(omega_brute(q, n).value == expect);
      }
    }
  }
}

TEST_CASE("Lemma 5.6 both directions: stripping an odd prime") {
  for (std::int64_t q : {2, 3, 5}) {
    for (std::int64_t l : {3, 5, 7, 11}) {
      if (std::gcd(q, l) != 1) continue;
      for (std::int64_t n1 : {1, 2, 4, 5, 7, 8}) {
        if (std::gcd(q, n1) != 1 || n1 % l == 0) continue;
        bool ord_odd = ord_mod(static_cast<std::uint64_t>(q),
                               static_cast<std::uint64_t>(l)) %
                           2 ==
                       1;
        std::int64_t omega_n = omega_brute(q, l * n1).value;
        std::int64_t omega_n1 = omega_brute(q, n1).value;
        CHECK((omega_n == omega_n1) == ord_odd);
      }
    }
  }
}

TEST_CASE("coset doubling examples") {
  CHECK(coset_doubling_check(3, 5) == std::pair<std::int64_t, std::int64_t>{2, 3});
  CHECK(coset_doubling_check(2, 3) == std::pair<std::int64_t, std::int64_t>{2, 3});
  CHECK(coset_doubling_check(2, 5) == std::pair<std::int64_t, std::int64_t>{2, 3});
  CHECK(error_code([] { coset_doubling_check(2, 7); }) ==
        "HypothesisViolated");  // ord_7(2) = 3 odd
  CHECK(error_code([] { coset_doubling_check(3, 4); }) ==
        "HypothesisViolated");  // even n'
}

TEST_CASE("omega closed = brute across all forms, n <= 300") {
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
    for (std::int64_t n = 1; n <= 300; ++n) {
      if (std::gcd(q, n) != 1) continue;
      INFO("q=", q, " n=", n);
      CHECK(omega_closed(q, n).value == omega_brute(q, n).value);
    }
  }
}

TEST_CASE("census records") {
  CensusRecord rec = census_record(2, 2, 7);
  CHECK(rec.omega == 1);
  CHECK(rec.delta_half == 1);
  CHECK(rec.selfdual_count == 3);
  CHECK(rec.nontrivial);

  CensusRecord odd = census_record(2, 3, 7);
  CHECK(odd.selfdual_count == 0);
  CHECK(!odd.nontrivial);

  CensusRecord trivial_only = census_record(2, 2, 3);
  CHECK(trivial_only.selfdual_count == 1);
  CHECK(!trivial_only.nontrivial);
}

TEST_CASE("conditions agree on a dense small grid") {
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    FieldSpec f = field_q(q);
    for (std::int64_t n = 1; n <= 60; ++n) {
      if (n % f.p() == 0) continue;
      auto rep = nontrivial_exists(f, n);  // throws ConditionMismatch if wrong
      CHECK(rep.cond_ii == rep.cond_iii);
      if (rep.cond_iv) CHECK(*rep.cond_iv == rep.cond_ii);
    }
  }
}
