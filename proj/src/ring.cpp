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

#include "chainforge/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "chainforge/error.hpp"
#include "chainforge/numth.hpp"

namespace chainforge {

namespace detail {

struct RingData {
  RingFamily family = RingFamily::galois;
  std::int64_t p = 0;
  int t = 0;
  std::int64_t q = 0;
  int width = 0;  // m (galois) or t (nilpotent)
  FieldSpec residue_field;
  std::uint64_t size = 0;  // q^t

  // galois family
  std::int64_t pt = 0;                   // p^t
  std::vector<std::int64_t> modulus;     // degree-m monic lift, coeffs in [0,p)

  std::string spec_string;
};

}  // namespace detail

using detail::RingData;

namespace {

constexpr std::uint64_t kMaxRingSize = std::uint64_t{1} << 62;
constexpr std::int64_t kMaxCoeffModulus = std::int64_t{1} << 31;

void check_same_ring(const RingSpec& a, const RingSpec& b) {
  if (a != b) raise("MismatchedAmbient", "ring elements from different rings");
}

}  // namespace

RingSpec make_ring(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    raise("ParseError", "ring spec needs 'gr:p,t,m' or 'fqu:p,alpha,t'");
  std::string family = spec.substr(0, colon);
  std::vector<std::int64_t> nums;
  {
    std::stringstream ss(spec.substr(colon + 1));
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        std::size_t used = 0;
        nums.push_back(std::stoll(part, &used));
        if (used != part.size()) raise("ParseError", "bad integer: " + part);
      } catch (const Error&) {
        throw;
      } catch (const std::exception&) {
        raise("ParseError", "bad integer in ring spec: " + part);
      }
    }
  }
  if (nums.size() != 3) raise("ParseError", "ring spec needs three integers");

  auto d = std::make_shared<RingData>();
  if (family == "gr") {
    std::int64_t p = nums[0], t = nums[1], m = nums[2];
    if (!is_prime(static_cast<std::uint64_t>(std::max<std::int64_t>(p, 0))))
      raise("NonPrime", std::to_string(p) + " is not prime");
    if (t < 1 || m < 1) raise("ParseError", "need t >= 1 and m >= 1");
    d->family = RingFamily::galois;
    d->p = p;
    d->t = static_cast<int>(t);
    d->width = static_cast<int>(m);
    d->pt = static_cast<std::int64_t>(checked_pow(
        static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(t),
        static_cast<std::uint64_t>(kMaxCoeffModulus)));
    d->residue_field = make_field(p, static_cast<int>(m));
    d->q = d->residue_field.q();
    d->size = checked_pow(static_cast<std::uint64_t>(d->q),
                          static_cast<std::uint64_t>(t), kMaxRingSize);
    d->modulus = d->residue_field.modulus();  // integer lift, coeffs in [0,p)
    d->spec_string = "gr:" + std::to_string(p) + "," + std::to_string(t) +
                     "," + std::to_string(m);
  } else if (family == "fqu") {
    std::int64_t p = nums[0], alpha = nums[1], t = nums[2];
    if (!is_prime(static_cast<std::uint64_t>(std::max<std::int64_t>(p, 0))))
      raise("NonPrime", std::to_string(p) + " is not prime");
    if (alpha < 1 || t < 1) raise("ParseError", "need alpha >= 1 and t >= 1");
    d->family = RingFamily::nilpotent;
    d->p = p;
    d->t = static_cast<int>(t);
    d->width = static_cast<int>(t);
    d->residue_field = make_field(p, static_cast<int>(alpha));
    d->q = d->residue_field.q();
    d->size = checked_pow(static_cast<std::uint64_t>(d->q),
                          static_cast<std::uint64_t>(t), kMaxRingSize);
    d->spec_string = "fqu:" + std::to_string(p) + "," + std::to_string(alpha) +
                     "," + std::to_string(t);
  } else {
    raise("ParseError", "unknown ring family '" + family + "'");
  }

  RingSpec r;
  r.d_ = std::move(d);
  return r;
}

RingFamily RingSpec::family() const { return d_->family; }
std::int64_t RingSpec::p() const { return d_->p; }
int RingSpec::t() const { return d_->t; }
std::int64_t RingSpec::q() const { return d_->q; }
int RingSpec::width() const { return d_->width; }
const FieldSpec& RingSpec::residue_field() const { return d_->residue_field; }
std::string RingSpec::spec_string() const { return d_->spec_string; }
std::int64_t RingSpec::coeff_modulus() const { return d_->pt; }
std::uint64_t RingSpec::size() const { return d_->size; }

bool RingSpec::operator==(const RingSpec& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  return d_->spec_string == o.d_->spec_string;
}

RingElem RingSpec::zero() const {
  return RingElem(*this, std::vector<std::uint64_t>(d_->width, 0));
}

RingElem RingSpec::one() const {
  std::vector<std::uint64_t> c(d_->width, 0);
  c[0] = 1;
  return RingElem(*this, std::move(c));
}

RingElem RingSpec::gamma() const {
  std::vector<std::uint64_t> c(d_->width, 0);
  if (d_->family == RingFamily::galois) {
    if (d_->t > 1) c[0] = static_cast<std::uint64_t>(d_->p);
    // t = 1: gamma = p = 0, the degenerate field case
  } else {
    if (d_->t > 1) c[1] = 1;
  }
  return RingElem(*this, std::move(c));
}

RingElem RingSpec::from_int(std::int64_t k) const {
  std::vector<std::uint64_t> c(d_->width, 0);
  if (d_->family == RingFamily::galois) {
    std::int64_t v = k % d_->pt;
    if (v < 0) v += d_->pt;
    c[0] = static_cast<std::uint64_t>(v);
  } else {
    c[0] = d_->residue_field.from_int(k).encoded();
  }
  return RingElem(*this, std::move(c));
}

RingElem RingSpec::from_coords(const std::vector<std::uint64_t>& coords) const {
  return RingElem(*this, coords);
}

RingElem RingSpec::element_at(std::uint64_t idx) const {
  const std::uint64_t base = d_->family == RingFamily::galois
                                 ? static_cast<std::uint64_t>(d_->pt)
                                 : static_cast<std::uint64_t>(d_->q);
  std::vector<std::uint64_t> c(d_->width);
  for (int i = 0; i < d_->width; ++i) {
    c[i] = idx % base;
    idx /= base;
  }
  return RingElem(*this, std::move(c));
}

std::uint64_t RingSpec::index_of(const RingElem& x) const {
  const std::uint64_t base = d_->family == RingFamily::galois
                                 ? static_cast<std::uint64_t>(d_->pt)
                                 : static_cast<std::uint64_t>(d_->q);
  std::uint64_t idx = 0;
  for (int i = d_->width - 1; i >= 0; --i) idx = idx * base + x.coords()[i];
  return idx;
}

// ----------------------------------------------------------------- RingElem

RingElem::RingElem(RingSpec r, std::vector<std::uint64_t> coords)
    : r_(std::move(r)), c_(std::move(coords)) {
  const RingData& d = r_.data();
  if (static_cast<int>(c_.size()) != d.width)
    raise("ParseError", "wrong number of element coordinates");
  if (d.family == RingFamily::galois) {
    for (auto& x : c_) x %= static_cast<std::uint64_t>(d.pt);
  } else {
    for (auto& x : c_)
      if (x >= static_cast<std::uint64_t>(d.q))
        raise("ParseError", "residue-field coordinate out of range");
  }
}

bool RingElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint64_t x) { return !x; });
}

bool RingElem::is_unit() const { return !residue(*this).is_zero(); }

int RingElem::valuation() const {
  const RingData& d = r_.data();
  if (d.family == RingFamily::galois) {
    int v = d.t;
    for (std::uint64_t x : c_) {
      if (!x) continue;
      int vx = 0;
      while (x % static_cast<std::uint64_t>(d.p) == 0) {
        x /= static_cast<std::uint64_t>(d.p);
        ++vx;
      }
      v = std::min(v, vx);
    }
    return v;
  }
  for (int i = 0; i < d.t; ++i)
    if (c_[i]) return i;
  return d.t;
}

RingElem RingElem::operator+(const RingElem& o) const {
  check_same_ring(r_, o.r_);
  const RingData& d = r_.data();
  std::vector<std::uint64_t> c(c_.size());
  if (d.family == RingFamily::galois) {
    for (std::size_t i = 0; i < c_.size(); ++i)
      c[i] = (c_[i] + o.c_[i]) % static_cast<std::uint64_t>(d.pt);
  } else {
    const FieldSpec& fq = d.residue_field;
    for (std::size_t i = 0; i < c_.size(); ++i)
      c[i] = fq.add_enc(static_cast<std::uint32_t>(c_[i]),
                        static_cast<std::uint32_t>(o.c_[i]));
  }
  return RingElem(r_, std::move(c));
}

RingElem RingElem::operator-() const {
  const RingData& d = r_.data();
  std::vector<std::uint64_t> c(c_.size());
  if (d.family == RingFamily::galois) {
    for (std::size_t i = 0; i < c_.size(); ++i)
      c[i] = (static_cast<std::uint64_t>(d.pt) - c_[i]) %
             static_cast<std::uint64_t>(d.pt);
  } else {
    const FieldSpec& fq = d.residue_field;
    for (std::size_t i = 0; i < c_.size(); ++i)
      c[i] = fq.neg_enc(static_cast<std::uint32_t>(c_[i]));
  }
  return RingElem(r_, std::move(c));
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator*(const RingElem& o) const {
  check_same_ring(r_, o.r_);
  const RingData& d = r_.data();
  const int w = d.width;
  std::vector<std::uint64_t> c(w, 0);
  if (d.family == RingFamily::galois) {
    const std::uint64_t pt = static_cast<std::uint64_t>(d.pt);
    std::vector<std::uint64_t> acc(2 * w - 1, 0);
    for (int i = 0; i < w; ++i) {
      if (!c_[i]) continue;
      for (int j = 0; j < w; ++j)
        acc[i + j] = (acc[i + j] + c_[i] * o.c_[j]) % pt;
    }
    // reduce by the monic modulus lift
    for (int i = 2 * w - 2; i >= w; --i) {
      std::uint64_t v = acc[i];
      if (!v) continue;
      acc[i] = 0;
      for (int j = 0; j < w; ++j) {
        std::uint64_t sub =
            v * static_cast<std::uint64_t>(d.modulus[j]) % pt;
        acc[i - w + j] = (acc[i - w + j] + pt - sub) % pt;
      }
    }
    for (int i = 0; i < w; ++i) c[i] = acc[i];
  } else {
    const FieldSpec& fq = d.residue_field;
    for (int i = 0; i < w; ++i) {
      if (!c_[i]) continue;
      for (int j = 0; j + i < w; ++j)
        c[i + j] = fq.add_enc(static_cast<std::uint32_t>(c[i + j]),
                              fq.mul_enc(static_cast<std::uint32_t>(c_[i]),
                                         static_cast<std::uint32_t>(o.c_[j])));
    }
  }
  return RingElem(r_, std::move(c));
}

RingElem RingElem::pow(std::uint64_t e) const {
  RingElem r = r_.one(), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

RingElem RingElem::inverse() const {
  if (!is_unit()) raise("NotUnit", "inverse of a non-unit");
  // Newton lift of the residue inverse: z <- z(2 - xz)
  RingElem z = lift(r_, residue(*this).inverse());
  const RingElem two = r_.from_int(2);
  int prec = 1;
  while (prec < r_.t()) {
    z = z * (two - *this * z);
    prec *= 2;
  }
  return z;
}

bool RingElem::operator==(const RingElem& o) const {
  check_same_ring(r_, o.r_);
  return c_ == o.c_;
}

FieldElem residue(const RingElem& x) {
  const RingData& d = x.ring().data();
  if (d.family == RingFamily::galois) {
    std::vector<std::int64_t> digits(d.width);
    for (int i = 0; i < d.width; ++i)
      digits[i] = static_cast<std::int64_t>(x.coords()[i]) % d.p;
    return d.residue_field.from_coeffs(digits);
  }
  return FieldElem(d.residue_field,
                   static_cast<std::uint32_t>(x.coords()[0]));
}

RingElem lift(const RingSpec& r, const FieldElem& a) {
  const RingData& d = r.data();
  if (a.field() != d.residue_field)
    raise("MismatchedAmbient", "element is not from the residue field");
  std::vector<std::uint64_t> c(d.width, 0);
  if (d.family == RingFamily::galois) {
    auto digits = a.coeffs();
    for (int i = 0; i < d.width; ++i)
      c[i] = static_cast<std::uint64_t>(digits[i]);
  } else {
    c[0] = a.encoded();
  }
  return RingElem(r, std::move(c));
}

RingElem nth_root_in_sylow(const RingElem& x, std::int64_t n) {
  const RingSpec& r = x.ring();
  if (n < 1) raise("NotCoprime", "n must be positive");
  if (n % r.p() == 0)
    raise("NotCoprime", "n shares the characteristic " + std::to_string(r.p()));
  if (residue(x) != r.residue_field().one())
    raise("NotInSylow", "element is not in 1 + gamma R");
  // |P| = q^{t-1}; x^|P| = 1 for all x in P
  std::uint64_t pgrp = 1;
  for (int i = 0; i + 1 < r.t(); ++i) pgrp *= static_cast<std::uint64_t>(r.q());
  std::uint64_t w = inv_mod(static_cast<std::uint64_t>(n) % pgrp, pgrp);
  RingElem delta = x.pow(w);
  if (delta.pow(static_cast<std::uint64_t>(n)) != x)
    raise("InternalCheckFailed", "nth root verification failed");
  return delta;
}

// ----------------------------------------------------------------- RingPoly

RingPoly::RingPoly(RingSpec r, std::vector<RingElem> coeffs)
    : r_(std::move(r)), c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool RingPoly::is_monic() const {
  return !c_.empty() && c_.back() == r_.one();
}

bool RingPoly::is_regular() const {
  return std::any_of(c_.begin(), c_.end(),
                     [](const RingElem& e) { return e.is_unit(); });
}

RingElem RingPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return r_.zero();
  return c_[i];
}

RingElem RingPoly::lead() const {
  return c_.empty() ? r_.zero() : c_.back();
}

RingPoly RingPoly::operator+(const RingPoly& o) const {
  check_same_ring(r_, o.r_);
  std::vector<RingElem> c(std::max(c_.size(), o.c_.size()), r_.zero());
  for (std::size_t i = 0; i < c.size(); ++i) {
    RingElem a = i < c_.size() ? c_[i] : r_.zero();
    RingElem b = i < o.c_.size() ? o.c_[i] : r_.zero();
    c[i] = a + b;
  }
  return RingPoly(r_, std::move(c));
}

RingPoly RingPoly::operator-(const RingPoly& o) const {
  check_same_ring(r_, o.r_);
  std::vector<RingElem> c(std::max(c_.size(), o.c_.size()), r_.zero());
  for (std::size_t i = 0; i < c.size(); ++i) {
    RingElem a = i < c_.size() ? c_[i] : r_.zero();
    RingElem b = i < o.c_.size() ? o.c_[i] : r_.zero();
    c[i] = a - b;
  }
  return RingPoly(r_, std::move(c));
}

RingPoly RingPoly::operator*(const RingPoly& o) const {
  check_same_ring(r_, o.r_);
  if (c_.empty() || o.c_.empty()) return RingPoly(r_);
  std::vector<RingElem> c(c_.size() + o.c_.size() - 1, r_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      c[i + j] = c[i + j] + c_[i] * o.c_[j];
  }
  return RingPoly(r_, std::move(c));
}

RingPoly RingPoly::operator*(const RingElem& s) const {
  std::vector<RingElem> c(c_);
  for (auto& x : c) x = x * s;
  return RingPoly(r_, std::move(c));
}

bool RingPoly::operator==(const RingPoly& o) const {
  check_same_ring(r_, o.r_);
  if (c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

RingElem RingPoly::eval(const RingElem& x) const {
  RingElem acc = r_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

RingPoly ring_poly_from_ints(const RingSpec& r,
                             const std::vector<std::int64_t>& coeffs) {
  std::vector<RingElem> c;
  c.reserve(coeffs.size());
  for (std::int64_t k : coeffs) c.push_back(r.from_int(k));
  return RingPoly(r, std::move(c));
}

RingPoly ring_poly_x_pow(const RingSpec& r, int k) {
  std::vector<RingElem> c(k + 1, r.zero());
  c[k] = r.one();
  return RingPoly(r, std::move(c));
}

RingPoly ring_poly_one(const RingSpec& r) { return RingPoly(r, {r.one()}); }

std::pair<RingPoly, RingPoly> divmod(const RingPoly& a, const RingPoly& b) {
  check_same_ring(a.ring(), b.ring());
  if (b.is_zero()) raise("DivisionByZero", "polynomial division by zero");
  if (!b.lead().is_unit())
    raise("NotUnit", "division needs a unit leading coefficient");
  const RingSpec& r = a.ring();
  const int db = b.degree();
  if (a.degree() < db) return {RingPoly(r), a};
  RingElem linv = b.lead().inverse();
  std::vector<RingElem> rem(a.coeffs());
  std::vector<RingElem> quo(a.degree() - db + 1, r.zero());
  for (int i = a.degree(); i >= db; --i) {
    RingElem c = rem[i] * linv;
    quo[i - db] = c;
    if (!c.is_zero())
      for (int j = 0; j <= db; ++j)
        rem[i - db + j] = rem[i - db + j] - c * b.coeff(j);
  }
  rem.resize(db >= 0 ? db : 0, r.zero());
  return {RingPoly(r, std::move(quo)), RingPoly(r, std::move(rem))};
}

RingPoly star(const RingPoly& h) {
  if (!h.is_monic()) raise("ZeroConstantTerm", "star requires a monic input");
  if (!h.coeff(0).is_unit())
    raise("ZeroConstantTerm", "star requires a unit constant term");
  std::vector<RingElem> rev(h.coeffs().rbegin(), h.coeffs().rend());
  RingPoly r(h.ring(), std::move(rev));
  return r * r.lead().inverse();
}

FieldPoly residue(const RingPoly& g) {
  std::vector<std::uint32_t> enc(g.coeffs().size());
  for (std::size_t i = 0; i < g.coeffs().size(); ++i)
    enc[i] = residue(g.coeffs()[i]).encoded();
  return FieldPoly(g.ring().residue_field(), std::move(enc));
}

RingPoly lift(const RingSpec& r, const FieldPoly& h) {
  std::vector<RingElem> c;
  c.reserve(h.raw().size());
  for (int i = 0; i <= h.degree(); ++i) c.push_back(lift(r, h.coeff(i)));
  return RingPoly(r, std::move(c));
}

RingPoly scale_substitute(const RingPoly& g, const RingElem& c) {
  if (!g.is_monic()) raise("NotUnit", "scale_substitute requires monic input");
  if (!c.is_unit()) raise("NotUnit", "substitution scalar must be a unit");
  const RingSpec& r = g.ring();
  const int d = g.degree();
  // coefficient j of c^{-d} g(c X) is g_j c^{j-d}
  RingElem cinv = c.inverse();
  std::vector<RingElem> out(d + 1, r.zero());
  RingElem factor = r.one();
  for (int j = d; j >= 0; --j) {
    out[j] = g.coeff(j) * factor;
    factor = factor * cinv;
  }
  return RingPoly(r, std::move(out));
}

}  // namespace chainforge
