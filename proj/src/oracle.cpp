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

#include "chainforge/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "chainforge/census.hpp"
#include "chainforge/error.hpp"
#include "chainforge/numth.hpp"

namespace chainforge {

namespace {

constexpr std::uint64_t kDefaultBound = std::uint64_t{1} << 22;
// Per-instance budget (word-count scale) for span-backed checks.
constexpr std::uint64_t kSpanWorkBudget = std::uint64_t{1} << 28;

// Fixed-seed linear congruential stream for reproducible sampling.
struct LcgStream {
  std::uint64_t state = 0x9E3779B97F4A7C15ull;
  std::uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  }
};

// Element-index arithmetic for one ring, with tables at small |R|.
struct RingIndexOps {
  RingSpec ring;
  std::uint64_t size = 0;
  bool tables = false;
  std::vector<std::uint32_t> add, mul;

  explicit RingIndexOps(const RingSpec& r) : ring(r), size(r.size()) {
    if (size <= 1024) {
      tables = true;
      add.resize(size * size);
      mul.resize(size * size);
      std::vector<RingElem> elems;
      elems.reserve(size);
      for (std::uint64_t i = 0; i < size; ++i)
        elems.push_back(ring.element_at(i));
      for (std::uint64_t a = 0; a < size; ++a)
        for (std::uint64_t b = 0; b < size; ++b) {
          add[a * size + b] =
              static_cast<std::uint32_t>(ring.index_of(elems[a] + elems[b]));
          mul[a * size + b] =
              static_cast<std::uint32_t>(ring.index_of(elems[a] * elems[b]));
        }
    }
  }

  std::uint64_t add_idx(std::uint64_t a, std::uint64_t b) const {
    if (tables) return add[a * size + b];
    return ring.index_of(ring.element_at(a) + ring.element_at(b));
  }
  std::uint64_t mul_idx(std::uint64_t a, std::uint64_t b) const {
    if (tables) return mul[a * size + b];
    return ring.index_of(ring.element_at(a) * ring.element_at(b));
  }
};

std::uint64_t words_total(const RingSpec& ring, std::int64_t n,
                          std::uint64_t bound) {
  std::uint64_t total = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    if (total > bound / ring.size())
      raise("BoundExceeded", "|R|^n exceeds the oracle bound " +
                                 std::to_string(bound));
    total *= ring.size();
  }
  return total;
}

void decode_word(std::uint64_t w, std::uint64_t R, std::int64_t n,
                 std::uint64_t* digits) {
  for (std::int64_t i = 0; i < n; ++i) {
    digits[i] = w % R;
    w /= R;
  }
}

std::uint64_t encode_word(const std::uint64_t* digits, std::uint64_t R,
                          std::int64_t n) {
  std::uint64_t w = 0;
  for (std::int64_t i = n; i-- > 0;) w = w * R + digits[i];
  return w;
}

}  // namespace

std::uint64_t oracle_bound() {
  if (const char* env = std::getenv("CHAINFORGE_MAX_ORACLE")) {
    char* end = nullptr;
    std::uint64_t v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v >= 2) return v;
    raise("ParseError", "CHAINFORGE_MAX_ORACLE is not a valid bound");
  }
  return kDefaultBound;
}

CodewordSet span(const CyclicCode& c) { return span(c, oracle_bound()); }

CodewordSet span(const CyclicCode& c, std::uint64_t bound) {
  const RingSpec& ring = c.fact().ring;
  const std::int64_t n = c.fact().n;
  const std::uint64_t R = ring.size();
  const std::uint64_t total = words_total(ring, n, bound);
  RingIndexOps ops(ring);

  RingPoly gen = generator_poly(c);
  std::vector<std::uint64_t> base(static_cast<std::size_t>(n), 0);
  for (int i = 0; i <= gen.degree(); ++i)
    base[i] = ring.index_of(gen.coeff(i));

  std::vector<bool> seen(total, false);
  std::vector<std::uint64_t> list{0};
  seen[0] = true;

  std::vector<std::uint64_t> shift(static_cast<std::size_t>(n));
  std::vector<std::uint64_t> sdig(static_cast<std::size_t>(n));
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n));
  for (std::int64_t j = 0; j < n; ++j) {
    for (std::int64_t i = 0; i < n; ++i) shift[(i + j) % n] = base[i];
    std::uint64_t genc = encode_word(shift.data(), R, n);
    if (seen[genc]) {
      // generator already spanned; its multiples add nothing new
      bool all_in = true;
      for (std::uint64_t s = 2; s < R && all_in; ++s) {
        for (std::int64_t i = 0; i < n; ++i)
          out[i] = ops.mul_idx(s, shift[i]);
        all_in = seen[encode_word(out.data(), R, n)];
      }
      if (all_in) continue;
    }
    // scalar multiples of this generator
    std::vector<std::vector<std::uint64_t>> mults(R);
    for (std::uint64_t s = 0; s < R; ++s) {
      mults[s].resize(static_cast<std::size_t>(n));
      for (std::int64_t i = 0; i < n; ++i)
        mults[s][i] = ops.mul_idx(s, shift[i]);
    }
    const std::size_t snapshot = list.size();
    for (std::size_t si = 0; si < snapshot; ++si) {
      decode_word(list[si], R, n, sdig.data());
      for (std::uint64_t s = 1; s < R; ++s) {
        for (std::int64_t i = 0; i < n; ++i)
          out[i] = ops.add_idx(sdig[i], mults[s][i]);
        std::uint64_t w = encode_word(out.data(), R, n);
        if (!seen[w]) {
          seen[w] = true;
          list.push_back(w);
        }
      }
    }
    if (list.size() == total) break;
  }

  std::sort(list.begin(), list.end());
  return CodewordSet{ring, n, std::move(list)};
}

CodewordSet brute_dual(const CodewordSet& s) {
  return brute_dual(s, oracle_bound());
}

CodewordSet brute_dual(const CodewordSet& s, std::uint64_t bound) {
  const RingSpec& ring = s.ring;
  const std::int64_t n = s.n;
  const std::uint64_t R = ring.size();
  const std::uint64_t total = words_total(ring, n, bound);
  RingIndexOps ops(ring);

  // digit cache in a deterministically shuffled order, so that the
  // early-exit inner-product scan hits nonzero words quickly
  std::vector<std::uint64_t> order(s.words.size());
  std::iota(order.begin(), order.end(), 0);
  LcgStream lcg;
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[lcg.next() % i]);
  std::vector<std::uint64_t> wdig(s.words.size() * static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < order.size(); ++k)
    decode_word(s.words[order[k]], R, n, &wdig[k * n]);

  std::vector<std::uint64_t> udig(static_cast<std::size_t>(n));
  std::vector<std::uint64_t> dual;
  for (std::uint64_t u = 0; u < total; ++u) {
    decode_word(u, R, n, udig.data());
    bool ok = true;
    for (std::size_t k = 0; k < order.size() && ok; ++k) {
      std::uint64_t acc = 0;
      const std::uint64_t* w = &wdig[k * n];
      for (std::int64_t i = 0; i < n; ++i)
        acc = ops.add_idx(acc, ops.mul_idx(udig[i], w[i]));
      ok = acc == 0;
    }
    if (ok) dual.push_back(u);
  }
  return CodewordSet{ring, n, std::move(dual)};
}

bool InstanceReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

InstanceReport verify_instance(const RingSpec& ring, std::int64_t n) {
  return verify_instance(ring, n, oracle_bound());
}

InstanceReport verify_instance(const RingSpec& ring, std::int64_t n,
                               std::uint64_t bound) {
  const std::string inst = ring.spec_string() + " n=" + std::to_string(n);
  InstanceReport rep;
  auto add = [&](const std::string& check, bool pass,
                 const std::string& detail) {
    rep.checks.push_back({check, inst, pass, detail});
  };

  const std::uint64_t total = words_total(ring, n, bound);
  auto fact = std::make_shared<LiftedFactorization>(
      factor_xn_minus_r0(ring, n));
  const int t = ring.t();
  const std::size_t nfac = fact->entries.size();

  // product and residue identities
  {
    RingPoly gprod = ring_poly_one(ring), fprod = ring_poly_one(ring);
    for (const auto& e : fact->entries) {
      gprod = gprod * e.g;
      fprod = fprod * e.f;
    }
    RingPoly xn1 = ring_poly_x_pow(ring, static_cast<int>(n)) -
                   ring_poly_one(ring);
    RingPoly xnr0 = ring_poly_x_pow(ring, static_cast<int>(n)) -
                    RingPoly(ring, {fact->r0});
    add("factor_products", gprod == xn1 && fprod == xnr0,
        "prod g_i = X^n - 1 and prod f_i = X^n - r0");
    bool res_ok = true;
    for (const auto& e : fact->entries)
      res_ok = res_ok && residue(e.g) == e.h && residue(e.f) == e.h;
    add("residue_match", res_ok, "residues of g_i and f_i equal h_i");
  }

  // pairwise Bezout certificates
  {
    bool ok = true;
    for (std::size_t i = 0; i < nfac && ok; ++i)
      for (std::size_t j = i + 1; j < nfac && ok; ++j) {
        auto [u, v] = coprime_bezout(fact->entries[i].g, fact->entries[j].g);
        ok = u * fact->entries[i].g + v * fact->entries[j].g ==
             ring_poly_one(ring);
      }
    add("bezout_coprime", ok, "u g_i + v g_j = 1 for every pair");
  }

  // uniqueness negative test: a gamma^{t-1} perturbation breaks the product
  {
    RingElem bump = ring.one();
    for (int i = 0; i + 1 < t; ++i) bump = bump * ring.gamma();
    std::vector<RingElem> pc(fact->entries[0].g.coeffs());
    pc[0] = pc[0] + bump;
    RingPoly perturbed(ring, std::move(pc));
    RingPoly prod = perturbed;
    for (std::size_t i = 1; i < nfac; ++i) prod = prod * fact->entries[i].g;
    RingPoly xn1 = ring_poly_x_pow(ring, static_cast<int>(n)) -
                   ring_poly_one(ring);
    add("lift_uniqueness", prod != xn1,
        "perturbing g_0 by gamma^{t-1} breaks prod g_i = X^n - 1");
  }

  // exponent vectors for the span-backed checks
  std::uint64_t all_vectors = 1;
  bool exhaustive = true;
  for (std::size_t i = 0; i < nfac; ++i) {
    all_vectors *= static_cast<std::uint64_t>(t + 1);
    if (all_vectors > 512) {
      exhaustive = false;
      break;
    }
  }
  std::vector<std::vector<int>> vectors;
  if (exhaustive) {
    std::vector<int> k(nfac, 0);
    for (;;) {
      vectors.push_back(k);
      std::size_t pos = nfac;
      while (pos > 0 && k[pos - 1] == t) k[--pos] = 0;
      if (pos == 0) break;
      ++k[pos - 1];
    }
  } else {
    LcgStream lcg;
    for (int s = 0; s < 100; ++s) {
      std::vector<int> k(nfac);
      for (auto& v : k) v = static_cast<int>(lcg.next() % (t + 1));
      vectors.push_back(k);
    }
  }
  std::string span_note;
  {
    // keep span work within budget; subsample deterministically if needed
    std::uint64_t per_vec = total * static_cast<std::uint64_t>(n);
    std::uint64_t max_vec = std::max<std::uint64_t>(kSpanWorkBudget / per_vec, 3);
    if (vectors.size() > max_vec) {
      span_note = " (subsampled to " + std::to_string(max_vec) +
                  " of " + std::to_string(vectors.size()) +
                  " vectors for the span checks)";
      std::vector<std::vector<int>> keep;
      LcgStream lcg;
      for (std::uint64_t i = 0; i < max_vec; ++i)
        keep.push_back(vectors[lcg.next() % vectors.size()]);
      keep.push_back(std::vector<int>(nfac, 0));  // ambient stays in
      vectors.swap(keep);
    }
  }

  {
    bool dual_ok = true, card_ok = true, sd_ok = true;
    for (const auto& k : vectors) {
      CyclicCode c = make_code(fact, k);
      CodewordSet sc = span(c, bound);
      CyclicCode d = dual(c);
      CodewordSet sd = span(d, bound);
      CodewordSet bd = brute_dual(sc, bound);
      dual_ok = dual_ok && sd.words == bd.words;
      card_ok = card_ok &&
                mpz_class(static_cast<unsigned long>(sc.words.size())) ==
                    cardinality(c) &&
                static_cast<std::uint64_t>(sc.words.size()) *
                        static_cast<std::uint64_t>(sd.words.size()) ==
                    total;
      sd_ok = sd_ok && is_self_dual(c) == (sc.words == sd.words);
    }
    add("dual_oracle", dual_ok,
        "span(dual(c)) = brute_dual(span(c)) on " +
            std::to_string(vectors.size()) + " exponent vectors" + span_note);
    add("cardinality_oracle", card_ok,
        "|span(c)| = |C| and |C| |C-perp| = |R|^n" + span_note);
    add("self_dual_flag", sd_ok,
        "is_self_dual agrees with set equality" + span_note);
  }

  // census equality / Theorem 4.4
  if (t % 2 == 0) {
    SelfDualEnumerator en(fact);
    mpz_class expected = selfdual_count(t, ring.q(), n);
    std::vector<std::vector<int>> seen_vecs;
    bool each_sd = true;
    while (auto c = en.next()) {
      each_sd = each_sd && is_self_dual(*c);
      seen_vecs.push_back(c->exponents());
    }
    std::sort(seen_vecs.begin(), seen_vecs.end());
    bool distinct = std::adjacent_find(seen_vecs.begin(), seen_vecs.end()) ==
                    seen_vecs.end();
    bool count_ok =
        mpz_class(static_cast<unsigned long>(seen_vecs.size())) == expected &&
        en.total() == expected;
    add("selfdual_census", each_sd && distinct && count_ok,
        "enumerator yields exactly (t+1)^{|Delta|/2} distinct self-dual "
        "codes");
    if (exhaustive) {
      std::size_t scan = 0;
      std::vector<int> k(nfac, 0);
      for (;;) {
        if (is_self_dual(make_code(fact, k))) ++scan;
        std::size_t pos = nfac;
        while (pos > 0 && k[pos - 1] == t) k[--pos] = 0;
        if (pos == 0) break;
        ++k[pos - 1];
      }
      add("selfdual_scan",
          mpz_class(static_cast<unsigned long>(scan)) == expected,
          "exhaustive exponent scan finds the same census");
    }
  } else {
    bool none = true;
    std::uint64_t scanned = 0;
    std::vector<int> k(nfac, 0);
    for (;;) {
      none = none && !is_self_dual(make_code(fact, k));
      ++scanned;
      std::size_t pos = nfac;
      while (pos > 0 && k[pos - 1] == t) k[--pos] = 0;
      if (pos == 0 || scanned > 200000) break;
      ++k[pos - 1];
    }
    add("odd_t_no_selfdual", none,
        "odd nilpotency admits no self-dual code (scanned " +
            std::to_string(scanned) + " vectors)");
  }

  return rep;
}

}  // namespace chainforge
