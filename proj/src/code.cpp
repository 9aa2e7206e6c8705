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

#include "chainforge/code.hpp"

#include <algorithm>
#include <string>

#include "chainforge/error.hpp"

namespace chainforge {

namespace {

bool same_ambient(const LiftedFactorization& a, const LiftedFactorization& b) {
  return a.ring == b.ring && a.n == b.n && a.r0 == b.r0;
}

void validate_exponents(const LiftedFactorization& f,
                        const std::vector<int>& k) {
  if (k.size() != f.entries.size())
    raise("BadIndexSet", "expected " + std::to_string(f.entries.size()) +
                             " exponents, got " + std::to_string(k.size()));
  for (int v : k)
    if (v < 0 || v > f.ring.t())
      raise("ExponentOutOfRange",
            "exponent " + std::to_string(v) + " outside [0, t]");
}

}  // namespace

CyclicCode::CyclicCode(std::shared_ptr<const LiftedFactorization> fact,
                       std::vector<int> exps)
    : fact_(std::move(fact)), k_(std::move(exps)) {
  validate_exponents(*fact_, k_);
}

int CyclicCode::exponent_at(std::int64_t rep) const {
  return k_[fact_->cosets.rep_index(rep)];
}

bool CyclicCode::operator==(const CyclicCode& o) const {
  return same_ambient(*fact_, *o.fact_) && k_ == o.k_;
}

CyclicCode make_code(std::shared_ptr<const LiftedFactorization> fact,
                     const std::map<std::int64_t, int>& exponents) {
  const auto& reps = fact->cosets.reps;
  if (exponents.size() != reps.size())
    raise("BadIndexSet", "exponent map does not cover the representatives");
  std::vector<int> k;
  k.reserve(reps.size());
  for (std::int64_t rep : reps) {
    auto it = exponents.find(rep);
    if (it == exponents.end())
      raise("BadIndexSet",
            "missing exponent for representative " + std::to_string(rep));
    k.push_back(it->second);
  }
  return CyclicCode(std::move(fact), std::move(k));
}

CyclicCode make_code(std::shared_ptr<const LiftedFactorization> fact,
                     const std::vector<int>& rep_order_exponents) {
  return CyclicCode(std::move(fact), rep_order_exponents);
}

RingPoly generator_poly(const CyclicCode& c) {
  const LiftedFactorization& lf = c.fact();
  RingPoly gen = ring_poly_one(lf.ring);
  for (std::size_t i = 0; i < lf.entries.size(); ++i)
    for (int rep = 0; rep < c.exponents()[i]; ++rep)
      gen = mulmod_xn_minus_1(gen, lf.entries[i].f, lf.n);
  return gen;
}

std::int64_t cardinality_log_q(const CyclicCode& c) {
  const LiftedFactorization& lf = c.fact();
  std::int64_t e = 0;
  for (std::size_t i = 0; i < lf.entries.size(); ++i)
    e += static_cast<std::int64_t>(lf.ring.t() - c.exponents()[i]) *
         lf.entries[i].f.degree();
  return e;
}

mpz_class cardinality(const CyclicCode& c) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(),
                static_cast<unsigned long>(c.fact().ring.q()),
                static_cast<unsigned long>(cardinality_log_q(c)));
  return r;
}

CyclicCode dual(const CyclicCode& c) {
  const LiftedFactorization& lf = c.fact();
  const int t = lf.ring.t();
  std::vector<int> k(c.exponents().size());
  for (std::size_t j = 0; j < k.size(); ++j) {
    std::int64_t paired = lf.cosets.pairing[j];
    k[j] = t - c.exponents()[lf.cosets.rep_index(paired)];
  }
  return CyclicCode(c.fact_ptr(), std::move(k));
}

bool is_self_dual(const CyclicCode& c) {
  const LiftedFactorization& lf = c.fact();
  const int t = lf.ring.t();
  for (std::size_t i = 0; i < c.exponents().size(); ++i) {
    std::int64_t paired = lf.cosets.pairing[i];
    if (c.exponents()[i] + c.exponents()[lf.cosets.rep_index(paired)] != t)
      return false;
  }
  return true;
}

bool contains(const CyclicCode& a, const CyclicCode& b) {
  if (!same_ambient(a.fact(), b.fact()))
    raise("MismatchedAmbient", "codes live in different ambient algebras");
  for (std::size_t i = 0; i < a.exponents().size(); ++i)
    if (a.exponents()[i] > b.exponents()[i]) return false;
  return true;
}

bool is_self_orthogonal(const CyclicCode& c) {
  return contains(dual(c), c);
}

}  // namespace chainforge
