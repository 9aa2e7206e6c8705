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

#include "chainforge/factor.hpp"

#include <numeric>
#include <string>

#include "chainforge/error.hpp"
#include "chainforge/numth.hpp"

namespace chainforge {

namespace {

FieldPoly xn_minus_1_field(const FieldSpec& f, std::int64_t n) {
  std::vector<std::int64_t> c(n + 1, 0);
  c[0] = -1;
  c[n] = 1;
  return poly_from_ints(f, c);
}

RingPoly xn_minus_1_ring(const RingSpec& r, std::int64_t n) {
  std::vector<RingElem> c(n + 1, r.zero());
  c[0] = -r.one();
  c[n] = r.one();
  return RingPoly(r, std::move(c));
}

// Residue-field image of x / gamma^k; requires v(x) >= k.
FieldElem gamma_quotient_residue(const RingElem& x, int k) {
  const RingSpec& r = x.ring();
  if (r.family() == RingFamily::galois) {
    std::int64_t pk = 1;
    for (int i = 0; i < k; ++i) pk *= r.p();
    std::vector<std::int64_t> digits(r.width());
    for (int i = 0; i < r.width(); ++i) {
      std::int64_t v = static_cast<std::int64_t>(x.coords()[i]);
      if (v % pk)
        raise("InternalCheckFailed", "gamma-adic valuation too small");
      digits[i] = (v / pk) % r.p();
    }
    return r.residue_field().from_coeffs(digits);
  }
  for (int i = 0; i < k; ++i)
    if (x.coords()[i])
      raise("InternalCheckFailed", "gamma-adic valuation too small");
  return FieldElem(r.residue_field(), static_cast<std::uint32_t>(x.coords()[k]));
}

FieldPoly gamma_quotient_residue(const RingPoly& e, int k) {
  std::vector<std::uint32_t> enc(e.coeffs().size());
  for (std::size_t i = 0; i < e.coeffs().size(); ++i)
    enc[i] = gamma_quotient_residue(e.coeffs()[i], k).encoded();
  return FieldPoly(e.ring().residue_field(), std::move(enc));
}

}  // namespace

std::vector<FieldFactor> factor_unity_field(const FieldSpec& field,
                                            std::int64_t n) {
  CosetTable tab = coset_table(field.q(), n);
  ExtensionSpec ext = extension_with_nth_root(field, n);
  std::vector<FieldFactor> out;
  out.reserve(tab.reps.size());
  FieldPoly prod = poly_one(field);
  for (std::size_t k = 0; k < tab.reps.size(); ++k) {
    FieldPoly h = minimal_polynomial(ext, tab.cosets[k]);
    prod = prod * h;
    out.push_back({tab.reps[k], std::move(h)});
  }
  if (prod != xn_minus_1_field(field, n))
    raise("InternalCheckFailed", "coset factors do not multiply to X^n - 1");
  return out;
}

std::vector<RingFactor> hensel_lift(const RingSpec& ring,
                                    const std::vector<FieldFactor>& hs) {
  const FieldSpec& fq = ring.residue_field();
  if (hs.empty()) raise("BadFactorization", "no factors given");
  std::int64_t n = 0;
  for (const auto& [rep, h] : hs) {
    (void)rep;
    if (h.field() != fq)
      raise("BadFactorization", "factor is not over the residue field");
    if (!h.is_monic()) raise("BadFactorization", "factor is not monic");
    n += h.degree();
  }
  if (n < 1 || n % ring.p() == 0)
    raise("BadFactorization", "degrees do not sum to a valid length");
  {
    FieldPoly prod = poly_one(fq);
    for (const auto& ff : hs) prod = prod * ff.h;
    if (prod != xn_minus_1_field(fq, n))
      raise("BadFactorization", "product is not X^n - 1 over the residue field");
  }

  std::vector<RingFactor> out;
  out.reserve(hs.size());
  for (const auto& ff : hs) out.push_back({ff.rep, lift(ring, ff.h)});

  if (ring.family() == RingFamily::galois && ring.t() > 1) {
    // Bezout data over F_q: b_i * prod_{j != i} h_j = 1 (mod h_i)
    std::vector<FieldPoly> cof(hs.size());
    for (std::size_t i = 0; i < hs.size(); ++i) {
      FieldPoly others = poly_one(fq);
      for (std::size_t j = 0; j < hs.size(); ++j)
        if (j != i) others = poly_mod(others * hs[j].h, hs[i].h);
      ExtGcd eg = poly_ext_gcd(others, hs[i].h);
      if (eg.g.degree() != 0)
        raise("BadFactorization", "factors are not pairwise coprime");
      cof[i] = poly_mod(eg.u * eg.g.coeff(0).inverse(), hs[i].h);
    }

    const RingPoly target = xn_minus_1_ring(ring, n);
    RingElem gamma_pow = ring.one();
    for (int level = 1; level < ring.t(); ++level) {
      gamma_pow = gamma_pow * ring.gamma();
      RingPoly prod = ring_poly_one(ring);
      for (const auto& rf : out) prod = prod * rf.g;
      RingPoly err = target - prod;
      if (err.is_zero()) break;
      FieldPoly ebar = gamma_quotient_residue(err, level);
      for (std::size_t i = 0; i < hs.size(); ++i) {
        FieldPoly corr = poly_mod(ebar * cof[i], hs[i].h);
        out[i].g = out[i].g + lift(ring, corr) * gamma_pow;
      }
    }
  }

  {
    RingPoly prod = ring_poly_one(ring);
    for (const auto& rf : out) prod = prod * rf.g;
    if (prod != xn_minus_1_ring(ring, n))
      raise("InternalCheckFailed", "lift does not multiply to X^n - 1");
    for (std::size_t i = 0; i < hs.size(); ++i)
      if (residue(out[i].g) != hs[i].h)
        raise("InternalCheckFailed", "lift changed a residue");
  }
  return out;
}

const FactorEntry& LiftedFactorization::entry(std::int64_t rep) const {
  return entries[cosets.rep_index(rep)];
}

LiftedFactorization factor_xn_minus_r0(const RingSpec& ring, std::int64_t n,
                                       std::optional<RingElem> mu) {
  if (n < 1) raise("NotCoprime", "n must be positive");
  if (n % ring.p() == 0)
    raise("NotCoprime",
          "n shares the characteristic " + std::to_string(ring.p()));
  RingElem mu_val = mu.value_or(ring.one());
  if (mu_val.ring() != ring)
    raise("MismatchedAmbient", "mu is not an element of the ring");
  if (!mu_val.is_unit()) raise("NotUnit", "mu must be a unit");

  LiftedFactorization lf;
  lf.ring = ring;
  lf.n = n;
  lf.cosets = coset_table(ring.q(), n);
  lf.mu = mu_val;
  lf.r0 = ring.one() + mu_val * ring.gamma();
  lf.delta = nth_root_in_sylow(lf.r0.inverse(), n);

  auto hs = factor_unity_field(ring.residue_field(), n);
  auto gs = hensel_lift(ring, hs);
  lf.entries.reserve(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    FactorEntry e;
    e.rep = hs[i].rep;
    e.h = hs[i].h;
    e.g = gs[i].g;
    e.f = scale_substitute(gs[i].g, lf.delta);
    lf.entries.push_back(std::move(e));
  }

  // construction-time invariants
  if (lf.delta.pow(static_cast<std::uint64_t>(n)) * lf.r0 != ring.one())
    raise("BadFactorization", "delta^n r0 != 1");
  RingPoly fprod = ring_poly_one(ring);
  for (const auto& e : lf.entries) fprod = fprod * e.f;
  RingPoly xnr0 = ring_poly_x_pow(ring, static_cast<int>(n)) -
                  RingPoly(ring, {lf.r0});
  if (fprod != xnr0)
    raise("BadFactorization", "factors do not multiply to X^n - r0");
  for (std::size_t i = 0; i < lf.entries.size(); ++i) {
    const auto& e = lf.entries[i];
    if (residue(e.f) != e.h || residue(e.g) != e.h)
      raise("BadFactorization", "residue mismatch");
    if (e.h.degree() !=
        static_cast<int>(lf.cosets.cosets[i].size()))
      raise("BadFactorization", "factor degree differs from coset size");
  }
  return lf;
}

std::pair<RingPoly, RingPoly> coprime_bezout(const RingPoly& a,
                                             const RingPoly& b) {
  const RingSpec& r = a.ring();
  ExtGcd eg = poly_ext_gcd(residue(a), residue(b));
  if (eg.g.degree() != 0)
    raise("NotCoprime", "residues share a nontrivial factor");
  FieldElem ginv = eg.g.coeff(0).inverse();
  RingPoly u = lift(r, eg.u * ginv);
  RingPoly v = lift(r, eg.v * ginv);
  const RingPoly one = ring_poly_one(r);
  for (int it = 0; it <= r.t(); ++it) {
    RingPoly rem = one - u * a - v * b;
    if (rem.is_zero()) return {u, v};
    RingPoly boost = one + rem;
    u = u * boost;
    v = v * boost;
  }
  raise("InternalCheckFailed", "Bezout lift did not converge");
}

RingPoly mulmod_xn_minus_1(const RingPoly& a, const RingPoly& b,
                           std::int64_t n) {
  const RingSpec& r = a.ring();
  RingPoly prod = a * b;
  if (prod.degree() < n) return prod;
  std::vector<RingElem> c(static_cast<std::size_t>(n), r.zero());
  for (int i = 0; i <= prod.degree(); ++i)
    c[i % n] = c[i % n] + prod.coeff(i);
  return RingPoly(r, std::move(c));
}

}  // namespace chainforge
