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

#include "chainforge/census.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "chainforge/error.hpp"
#include "chainforge/numth.hpp"

namespace chainforge {

namespace {

constexpr std::uint64_t kExtWordBound = std::uint64_t{1} << 62;
// Work budget for the explicit field-level factorization behind
// condition (iv): roughly n * e^3 coefficient operations.
constexpr std::uint64_t kFieldCheckWorkBudget = 200'000'000;

std::int64_t count_cosets(std::int64_t q, std::int64_t n) {
  return irreducible_factor_count(q, n);
}

}  // namespace

bool selfdual_exists(const RingSpec& ring) { return ring.t() % 2 == 0; }

bool nontrivial_field_check_feasible(std::int64_t q, std::int64_t n) {
  if (n < 1 || std::gcd(q, n) != 1) return false;
  std::uint64_t e = ord_mod(static_cast<std::uint64_t>(q),
                            static_cast<std::uint64_t>(n));
  std::uint64_t qe = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (qe > kExtWordBound / static_cast<std::uint64_t>(q)) return false;
    qe *= static_cast<std::uint64_t>(q);
  }
  return static_cast<std::uint64_t>(n) * e * e * e <= kFieldCheckWorkBudget;
}

NontrivialReport nontrivial_exists(const FieldSpec& field, std::int64_t n,
                                   const RingSpec* ring) {
  const std::int64_t q = field.q();
  if (n < 1) raise("NotCoprime", "n must be positive");
  if (n % field.p() == 0)
    raise("NotCoprime", "n shares the field characteristic");

  NontrivialReport rep;
  CosetTable tab = coset_table(q, n);
  rep.cond_ii = !tab.delta.empty();

  // (iii): no i in [1, ord_n(q)] with q^i = -1 (mod n)
  {
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t minus_one = (un - 1) % un;
    std::uint64_t ord = ord_mod(static_cast<std::uint64_t>(q), un);
    std::uint64_t acc = 1 % un;
    bool found = false;
    for (std::uint64_t i = 1; i <= ord && !found; ++i) {
      acc = mul_mod(acc, static_cast<std::uint64_t>(q) % un, un);
      found = acc == minus_one;
    }
    rep.cond_iii = !found;
  }

  std::vector<FieldFactor> hs;
  if (nontrivial_field_check_feasible(q, n)) {
    hs = factor_unity_field(field, n);
    bool any = false;
    for (const auto& ff : hs)
      if (ff.h != star(ff.h)) {
        any = true;
        break;
      }
    rep.cond_iv = any;
  }

  if (ring != nullptr) {
    if (ring->residue_field() != field)
      raise("MismatchedAmbient", "ring residue field differs from F_q");
    if (ring->t() % 2 != 0)
      raise("OddNilpotency", "condition (v) is stated for even t");
    if (!rep.cond_iv.has_value())
      raise("SizeExceeded",
            "condition (v) needs the field factorization, which is out of "
            "bounds for this (q, n)");
    auto gs = hensel_lift(*ring, hs);
    bool any = false;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      bool g_moved = gs[i].g != star(gs[i].g);
      bool h_moved = hs[i].h != star(hs[i].h);
      if (g_moved != h_moved)
        raise("ConditionMismatch",
              "a lift and its residue disagree about self-reciprocity");
      any = any || g_moved;
    }
    rep.cond_v = any;
  }

  if (rep.cond_ii != rep.cond_iii ||
      (rep.cond_iv && *rep.cond_iv != rep.cond_ii) ||
      (rep.cond_v && *rep.cond_v != rep.cond_ii))
    raise("ConditionMismatch",
          "equivalent nontriviality conditions disagree at q = " +
              std::to_string(q) + ", n = " + std::to_string(n));
  rep.exists = rep.cond_ii;
  return rep;
}

mpz_class selfdual_count(int t, std::int64_t q, std::int64_t n) {
  if (t % 2 != 0) return 0;
  CosetTable tab = coset_table(q, n);
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(t + 1),
                static_cast<unsigned long>(tab.delta.size() / 2));
  return r;
}

SelfDualEnumerator::SelfDualEnumerator(
    std::shared_ptr<const LiftedFactorization> fact)
    : fact_(std::move(fact)) {
  if (fact_->ring.t() % 2 != 0)
    raise("OddNilpotency", "self-dual codes need even t");
  const CosetTable& tab = fact_->cosets;
  for (std::size_t i = 0; i < tab.reps.size(); ++i) {
    std::int64_t rep = tab.reps[i], paired = tab.pairing[i];
    if (rep < paired) {
      pair_lo_.push_back(i);
      pair_hi_.push_back(tab.rep_index(paired));
    }
  }
  odometer_.assign(pair_lo_.size(), 0);
}

mpz_class SelfDualEnumerator::total() const {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(),
                static_cast<unsigned long>(fact_->ring.t() + 1),
                static_cast<unsigned long>(pair_lo_.size()));
  return r;
}

std::optional<CyclicCode> SelfDualEnumerator::next() {
  if (done_) return std::nullopt;
  const int t = fact_->ring.t();
  std::vector<int> k(fact_->entries.size(), t / 2);
  for (std::size_t j = 0; j < pair_lo_.size(); ++j) {
    k[pair_lo_[j]] = odometer_[j];
    k[pair_hi_[j]] = t - odometer_[j];
  }
  CyclicCode code(fact_, std::move(k));
  // advance, last pair fastest
  done_ = true;
  for (std::size_t j = odometer_.size(); j-- > 0;) {
    if (odometer_[j] < t) {
      ++odometer_[j];
      std::fill(odometer_.begin() + j + 1, odometer_.end(), 0);
      done_ = false;
      break;
    }
  }
  if (odometer_.empty()) done_ = true;
  return code;
}

std::vector<std::vector<FieldElem>> trinomial_h_sets(const FieldSpec& field) {
  const std::int64_t q = field.q();
  if (q % 2 == 0) raise("EvenQ", "H sets need odd q");
  if ((q + 1) % 4 != 0)
    raise("HypothesisViolated", "H sets are defined for q = 3 (mod 4)");
  const int a = two_adic_valuation(static_cast<std::uint64_t>(q + 1));
  const std::uint64_t exp = static_cast<std::uint64_t>((q + 1) / 4);
  const FieldElem half = field.from_int(2).inverse();
  const FieldElem one = field.one();

  std::vector<std::vector<FieldElem>> h(a);
  h[0] = {field.zero()};
  auto grow = [&](const std::vector<FieldElem>& prev, bool minus) {
    std::vector<FieldElem> next;
    for (const FieldElem& x : prev) {
      FieldElem base = minus ? (x - one) * half : (x + one) * half;
      FieldElem y = base.pow(exp);
      next.push_back(y);
      next.push_back(-y);
    }
    std::sort(next.begin(), next.end(),
              [](const FieldElem& u, const FieldElem& v) {
                return u.encoded() < v.encoded();
              });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    return next;
  };
  for (int i = 1; i < a; ++i)
    h[i] = grow(h[i - 1], /*minus=*/i == a - 1);
  for (int i = 0; i < a; ++i)
    if (h[i].size() != (std::size_t{1} << i))
      raise("InternalCheckFailed",
            "H_" + std::to_string(i + 1) + " has wrong cardinality");
  return h;
}

namespace {

FieldPoly xn_minus_1(const FieldSpec& f, std::int64_t n) {
  std::vector<std::int64_t> c(n + 1, 0);
  c[0] = -1;
  c[n] = 1;
  return poly_from_ints(f, c);
}

// X^{2^k} * w - 2h X^{2^j} * w' - ... helpers for sparse trinomials
FieldPoly sparse_poly(const FieldSpec& f, int deg,
                      const std::vector<std::pair<int, FieldElem>>& terms) {
  std::vector<std::uint32_t> enc(deg + 1, 0);
  for (const auto& [k, c] : terms) enc[k] = c.encoded();
  return FieldPoly(f, std::move(enc));
}

// Deterministic primitive 2^v-th root of unity in F_q (4 | q - 1).
FieldElem primitive_two_power_root(const FieldSpec& field, int v) {
  const std::int64_t q = field.q();
  const std::uint64_t cof =
      static_cast<std::uint64_t>(q - 1) >> v;
  const std::uint64_t half_order = std::uint64_t{1} << (v - 1);
  for (std::int64_t x = 0; x < q; ++x) {
    FieldElem y = field.elem(static_cast<std::uint32_t>(x)).pow(cof);
    if (y.is_zero()) continue;
    if (y.pow(half_order) != field.one()) return y;  // order exactly 2^v
  }
  raise("InternalCheckFailed", "no primitive 2^v-th root found");
}

}  // namespace

std::vector<FieldPoly> factor_power_of_two(const FieldSpec& field, int m) {
  const std::int64_t q = field.q();
  if (q % 2 == 0) raise("EvenQ", "X^{2^m} - 1 needs odd q");
  if (m < 0) raise("ParseError", "m must be >= 0");

  std::vector<FieldPoly> out;
  const FieldElem one = field.one();
  if (m == 0) {
    out.push_back(sparse_poly(field, 1, {{0, -one}, {1, one}}));
  } else if ((q - 1) % 4 == 0) {
    const int v = two_adic_valuation(static_cast<std::uint64_t>(q - 1));
    FieldElem eta = primitive_two_power_root(field, v);
    if (m <= v) {
      FieldElem delta = eta.pow(std::uint64_t{1} << (v - m));
      FieldElem dk = one;
      for (std::int64_t k = 0; k < (std::int64_t{1} << m); ++k) {
        out.push_back(sparse_poly(field, 1, {{0, -dk}, {1, one}}));
        dk = dk * delta;
      }
    } else {
      FieldElem ek = one;
      for (std::int64_t k = 0; k < (std::int64_t{1} << v); ++k) {
        out.push_back(sparse_poly(field, 1, {{0, -ek}, {1, one}}));
        ek = ek * eta;
      }
      for (int j = 1; j <= m - v; ++j)
        for (std::int64_t i = 1; i < (std::int64_t{1} << v); i += 2)
          out.push_back(sparse_poly(
              field, 1 << j,
              {{0, -eta.pow(static_cast<std::uint64_t>(i))}, {1 << j, one}}));
    }
  } else {
    const int a = two_adic_valuation(static_cast<std::uint64_t>(q + 1));
    auto h = trinomial_h_sets(field);
    const FieldElem two = field.from_int(2);
    out.push_back(sparse_poly(field, 1, {{0, -one}, {1, one}}));
    out.push_back(sparse_poly(field, 1, {{0, one}, {1, one}}));
    const int quad_levels = std::min(m - 1, a - 1);
    for (int i = 1; i <= quad_levels; ++i)
      for (const FieldElem& hh : h[i - 1])
        out.push_back(
            sparse_poly(field, 2, {{0, one}, {1, -(two * hh)}, {2, one}}));
    if (m >= a + 1)
      for (int k = 0; k <= m - a - 1; ++k)
        for (const FieldElem& hh : h[a - 1])
          out.push_back(sparse_poly(field, 1 << (k + 1),
                                    {{0, -one},
                                     {1 << k, -(two * hh)},
                                     {1 << (k + 1), one}}));
  }

  FieldPoly prod = poly_one(field);
  for (const auto& f : out) prod = prod * f;
  if (prod != xn_minus_1(field, std::int64_t{1} << m))
    raise("InternalCheckFailed",
          "explicit factors do not multiply to X^{2^m} - 1");
  for (const auto& f : out)
    if (!is_irreducible(f))
      raise("InternalCheckFailed", "explicit factor is not irreducible");
  return out;
}

std::int64_t omega_power_of_two_value(std::int64_t q, int m) {
  if (m == 0) return 1;
  if (q % 2 == 0) raise("NotCoprime", "2^m with m >= 1 needs odd q");
  if (m == 1 || (q - 1) % 4 == 0) return 2;
  const int a = two_adic_valuation(static_cast<std::uint64_t>(q + 1));
  return (std::int64_t{1} << (std::min(m, a) - 1)) + 1;
}

OmegaDerivation omega_brute(std::int64_t q, std::int64_t n) {
  CosetTable tab = coset_table(q, n);
  OmegaDerivation d;
  d.q = q;
  d.n = n;
  d.value = static_cast<std::int64_t>(tab.omega.size());
  d.route_steps = {"brute"};
  d.detail = "fixed points of the coset pairing";
  return d;
}

namespace {

// |Omega| of an odd modulus all of whose prime divisors have even order
// (the post-stripping odd part); appends its own route step.
std::int64_t omega_odd_part(std::int64_t q, std::int64_t nprime,
                            std::vector<std::string>& steps,
                            std::string& detail) {
  if (nprime == 1) return 1;
  auto fac = factorize(static_cast<std::uint64_t>(nprime));
  if (fac.size() == 1) {
    steps.push_back("prime_power");
    detail += "[prime_power l=" + std::to_string(fac[0].first) +
              " s=" + std::to_string(fac[0].second) + " full-count]";
    return count_cosets(q, nprime);
  }
  if (fac.size() == 2) {
    auto [l1, r1] = fac[0];
    auto [l2, r2] = fac[1];
    std::int64_t lp1 = 1, lp2 = 1;
    for (int i = 0; i < r1; ++i) lp1 *= static_cast<std::int64_t>(l1);
    for (int i = 0; i < r2; ++i) lp2 *= static_cast<std::int64_t>(l2);
    int a1 = two_adic_valuation(
        ord_mod(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(lp1)));
    int a2 = two_adic_valuation(
        ord_mod(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(lp2)));
    steps.push_back("two_primes");
    if (a1 == a2) {
      detail += "[two_primes a1=a2=" + std::to_string(a1) + " case ii.a]";
      return count_cosets(q, nprime);
    }
    detail += "[two_primes a1=" + std::to_string(a1) +
              " a2=" + std::to_string(a2) + " case ii.b]";
    return count_cosets(q, lp1) + count_cosets(q, lp2) - 1;
  }
  steps.push_back("brute");
  detail += "[brute: no closed form in paper for >= 3 odd prime divisors]";
  CosetTable tab = coset_table(q, nprime);
  return static_cast<std::int64_t>(tab.omega.size());
}

}  // namespace

OmegaDerivation omega_closed(std::int64_t q, std::int64_t n) {
  prime_power_decompose(static_cast<std::uint64_t>(q));
  if (n < 1 || std::gcd(q, n) != 1)
    raise("NotCoprime", "gcd(q, n) != 1");

  OmegaDerivation d;
  d.q = q;
  d.n = n;

  // 1. strip odd primes with odd multiplicative order (Lemma 5.6 route)
  std::int64_t cur = n;
  for (auto [l, e] : factorize(static_cast<std::uint64_t>(n))) {
    if (l == 2) continue;
    if (ord_mod(static_cast<std::uint64_t>(q), l) % 2 == 1) {
      for (int i = 0; i < e; ++i) cur /= static_cast<std::int64_t>(l);
      d.route_steps.push_back("stripped(" + std::to_string(l) + ")");
      d.detail += "[stripped l=" + std::to_string(l) + " ord odd]";
    }
  }

  int m = two_adic_valuation(static_cast<std::uint64_t>(cur));
  std::int64_t nprime = cur >> m;

  if (nprime == 1) {
    d.value = omega_power_of_two_value(q, m);
    d.route_steps.push_back("power_of_two");
    d.detail += "[power_of_two m=" + std::to_string(m) + "]";
    return d;
  }

  if (m == 0) {
    d.value = omega_odd_part(q, nprime, d.route_steps, d.detail);
    return d;
  }

  // m >= 1 with a nontrivial odd part: Theorem 5.8 reduction.  The inner
  // |Omega_{n'}| derivation lands in the detail string, not the route.
  std::vector<std::string> sub_steps;
  std::int64_t omega_np = omega_odd_part(q, nprime, sub_steps, d.detail);
  std::int64_t value;
  if (m == 1 || (q - 1) % 4 == 0) {
    value = 2 * omega_np;
    d.detail += "[reduction_2m m=" + std::to_string(m) + " doubling]";
  } else {
    const int a = two_adic_valuation(static_cast<std::uint64_t>(q + 1));
    CosetTable bar = coset_table(q * q, nprime);
    std::int64_t omega_bar = static_cast<std::int64_t>(bar.omega.size());
    // Corollary 5.9 gives the q^2 count in closed form for prime powers;
    // evaluated as a cross-check against the brute pairing.
    auto fac = factorize(static_cast<std::uint64_t>(nprime));
    if (fac.size() == 1) {
      std::int64_t closed_bar =
          two_adic_valuation(ord_mod(static_cast<std::uint64_t>(q),
                                     fac[0].first)) == 1
              ? 1
              : 2 * count_cosets(q, nprime) - 1;
      if (closed_bar != omega_bar)
        raise("ConditionMismatch",
              "Corollary 5.9 tail disagrees with the brute pairing over q^2");
    }
    value = 2 * omega_np +
            (((std::int64_t{1} << (std::min(m, a) - 1)) - 1) *
             (2 * omega_np - omega_bar));
    d.detail += "[reduction_2m m=" + std::to_string(m) +
                " a=" + std::to_string(a) +
                " omega_nprime=" + std::to_string(omega_np) +
                " omega_bar=" + std::to_string(omega_bar) + "]";
  }
  d.route_steps.push_back("reduction_2m");
  d.value = value;
  return d;
}

std::pair<std::int64_t, std::int64_t> coset_doubling_check(
    std::int64_t q, std::int64_t nprime) {
  if (nprime < 1 || nprime % 2 == 0)
    raise("HypothesisViolated", "n' must be odd");
  if (std::gcd(q, nprime) != 1) raise("NotCoprime", "gcd(q, n') != 1");
  for (auto [l, e] : factorize(static_cast<std::uint64_t>(nprime))) {
    (void)e;
    if (ord_mod(static_cast<std::uint64_t>(q), l) % 2 == 1)
      raise("HypothesisViolated",
            "ord_" + std::to_string(l) + "(q) is odd");
  }
  std::int64_t s =
      static_cast<std::int64_t>(coset_table(q, nprime).reps.size());
  std::int64_t s2 =
      static_cast<std::int64_t>(coset_table(q * q, nprime).reps.size());
  if (s2 != 2 * s - 1)
    raise("ConditionMismatch", "q^2 coset count is not 2s - 1");
  return {s, s2};
}

CensusRecord census_record(std::int64_t q, int t, std::int64_t n) {
  CensusRecord rec;
  rec.q = q;
  rec.n = n;
  rec.t = t;
  OmegaDerivation om = omega_closed(q, n);
  rec.omega = om.value;
  std::int64_t total = count_cosets(q, n);
  rec.delta_half = (total - om.value) / 2;
  if (t % 2 == 0) {
    mpz_ui_pow_ui(rec.selfdual_count.get_mpz_t(),
                  static_cast<unsigned long>(t + 1),
                  static_cast<unsigned long>(rec.delta_half));
    rec.nontrivial = rec.delta_half > 0;
  } else {
    rec.selfdual_count = 0;
    rec.nontrivial = false;
  }
  std::string route;
  for (std::size_t i = 0; i < om.route_steps.size(); ++i) {
    if (i) route += "+";
    route += om.route_steps[i];
  }
  rec.route = route;
  return rec;
}

}  // namespace chainforge
