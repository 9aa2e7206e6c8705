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

#include "chainforge/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "chainforge/error.hpp"
#include "chainforge/numth.hpp"

namespace chainforge {

namespace {

constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;
constexpr std::uint64_t kMaxExtSize = std::uint64_t{1} << 62;
// Multiplication tables are built for small fields only; beyond this the
// generic modular-polynomial path is used.
constexpr std::uint64_t kTableLimit = 512;

// ---- bootstrap arithmetic over F_p (plain int vectors mod p) ----
// Needed to select the field modulus before any FieldSpec exists.

using PfPoly = std::vector<std::int64_t>;  // ascending, not auto-trimmed

void pf_trim(PfPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PfPoly pf_mul(const PfPoly& a, const PfPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  PfPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  pf_trim(c);
  return c;
}

// Remainder of a modulo monic f.
PfPoly pf_mod(PfPoly a, const PfPoly& f, std::int64_t p) {
  pf_trim(a);
  const int df = static_cast<int>(f.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= df) {
    std::int64_t c = a.back();
    int shift = static_cast<int>(a.size()) - 1 - df;
    if (c) {
      for (int j = 0; j <= df; ++j) {
        auto& t = a[j + shift];
        t = (t - c * f[j]) % p;
        if (t < 0) t += p;
      }
    }
    a.pop_back();
    pf_trim(a);
  }
  return a;
}

PfPoly pf_pow_mod(PfPoly b, std::uint64_t e, const PfPoly& f, std::int64_t p) {
  PfPoly r{1};
  b = pf_mod(std::move(b), f, p);
  while (e) {
    if (e & 1) r = pf_mod(pf_mul(r, b, p), f, p);
    b = pf_mod(pf_mul(b, b, p), f, p);
    e >>= 1;
  }
  return r;
}

PfPoly pf_gcd(PfPoly a, PfPoly b, std::int64_t p) {
  pf_trim(a);
  pf_trim(b);
  while (!b.empty()) {
    // make b monic before reducing
    std::int64_t linv = inv_mod(static_cast<std::uint64_t>(b.back()), p);
    for (auto& c : b) c = c * linv % p;
    a = pf_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

PfPoly pf_sub(const PfPoly& a, const PfPoly& b, std::int64_t p) {
  PfPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::int64_t av = i < a.size() ? a[i] : 0;
    std::int64_t bv = i < b.size() ? b[i] : 0;
    c[i] = ((av - bv) % p + p) % p;
  }
  pf_trim(c);
  return c;
}

// Rabin test over F_p for a monic polynomial of degree d >= 1.
bool pf_irreducible(const PfPoly& f, std::int64_t p) {
  const int d = static_cast<int>(f.size()) - 1;
  if (d < 1) return false;
  if (f[0] == 0 && d > 1) return false;  // divisible by X
  PfPoly x{0, 1};
  PfPoly xmod = pf_mod(x, f, p);
  // X^{p^d} mod f by iterated p-th powers
  PfPoly z = xmod;
  for (int i = 0; i < d; ++i) z = pf_pow_mod(std::move(z), p, f, p);
  if (pf_sub(z, xmod, p) != PfPoly{}) return false;
  for (auto [r, e] : factorize(static_cast<std::uint64_t>(d))) {
    (void)e;
    int dd = d / static_cast<int>(r);
    PfPoly zz = xmod;
    for (int i = 0; i < dd; ++i) zz = pf_pow_mod(std::move(zz), p, f, p);
    PfPoly g = pf_gcd(pf_sub(zz, xmod, p), f, p);
    if (static_cast<int>(g.size()) - 1 != 0) return false;
  }
  return true;
}

}  // namespace

namespace detail {

struct FieldData {
  std::int64_t p = 0;
  int alpha = 0;
  std::int64_t q = 0;
  std::vector<std::int64_t> modulus;  // alpha+1 ints in [0,p), monic

  bool has_tables = false;
  std::vector<std::uint32_t> add_tab, mul_tab;  // q*q
  std::vector<std::uint32_t> neg_tab, inv_tab;  // q

  std::vector<std::int64_t> decode(std::uint32_t v) const {
    std::vector<std::int64_t> c(alpha);
    for (int i = 0; i < alpha; ++i) {
      c[i] = v % p;
      v = static_cast<std::uint32_t>(v / p);
    }
    return c;
  }

  std::uint32_t encode(const std::vector<std::int64_t>& c) const {
    std::uint64_t v = 0;
    for (int i = alpha - 1; i >= 0; --i) v = v * p + c[i];
    return static_cast<std::uint32_t>(v);
  }

  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const {
    auto ca = decode(a), cb = decode(b);
    for (int i = 0; i < alpha; ++i) ca[i] = (ca[i] + cb[i]) % p;
    return encode(ca);
  }

  std::uint32_t neg_slow(std::uint32_t a) const {
    auto ca = decode(a);
    for (auto& x : ca) x = (p - x) % p;
    return encode(ca);
  }

  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
    auto ca = decode(a), cb = decode(b);
    PfPoly prod = pf_mul(ca, cb, p);
    prod = pf_mod(std::move(prod), modulus, p);
    prod.resize(alpha, 0);
    return encode(prod);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return has_tables ? add_tab[static_cast<std::size_t>(a) * q + b]
                      : add_slow(a, b);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return has_tables ? mul_tab[static_cast<std::size_t>(a) * q + b]
                      : mul_slow(a, b);
  }
  std::uint32_t neg(std::uint32_t a) const {
    return has_tables ? neg_tab[a] : neg_slow(a);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return add(a, neg(b));
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) raise("DivisionByZero", "inverse of zero field element");
    if (has_tables) return inv_tab[a];
    return pow(a, static_cast<std::uint64_t>(q) - 2);
  }
};

struct ExtData {
  FieldSpec base;
  int e = 0;
  std::int64_t n = 0;
  std::uint64_t qe = 0;                 // q^e
  std::vector<std::uint32_t> modulus;   // e+1 encoded coeffs, monic
  FieldPoly modulus_poly;
  ExtElem eta;
};

}  // namespace detail

using detail::ExtData;
using detail::FieldData;

// ---------------------------------------------------------------- FieldSpec

namespace {

std::shared_ptr<const FieldData> build_field_data(std::int64_t p, int alpha) {
  auto d = std::make_shared<FieldData>();
  d->p = p;
  d->alpha = alpha;
  d->q = 1;
  for (int i = 0; i < alpha; ++i) d->q *= p;

  // lexicographically least monic irreducible of degree alpha over F_p
  std::uint64_t total = static_cast<std::uint64_t>(d->q);
  for (std::uint64_t c = 0;; ++c) {
    if (c >= total)
      raise("InternalCheckFailed", "no irreducible modulus found");
    PfPoly cand(alpha + 1, 0);
    std::uint64_t v = c;
    for (int i = 0; i < alpha; ++i) {
      cand[i] = static_cast<std::int64_t>(v % p);
      v /= p;
    }
    cand[alpha] = 1;
    if (pf_irreducible(cand, p)) {
      d->modulus = cand;
      break;
    }
  }

  if (static_cast<std::uint64_t>(d->q) <= kTableLimit) {
    const std::size_t q = static_cast<std::size_t>(d->q);
    d->add_tab.resize(q * q);
    d->mul_tab.resize(q * q);
    d->neg_tab.resize(q);
    d->inv_tab.resize(q);
    for (std::size_t a = 0; a < q; ++a) {
      d->neg_tab[a] = d->neg_slow(static_cast<std::uint32_t>(a));
      for (std::size_t b = 0; b < q; ++b) {
        d->add_tab[a * q + b] = d->add_slow(static_cast<std::uint32_t>(a),
                                            static_cast<std::uint32_t>(b));
        d->mul_tab[a * q + b] = d->mul_slow(static_cast<std::uint32_t>(a),
                                            static_cast<std::uint32_t>(b));
      }
    }
    for (std::size_t a = 1; a < q; ++a)
      for (std::size_t b = 1; b < q; ++b)
        if (d->mul_tab[a * q + b] == 1) {
          d->inv_tab[a] = static_cast<std::uint32_t>(b);
          break;
        }
    d->has_tables = true;
  }
  return d;
}

}  // namespace

FieldSpec make_field(std::int64_t p, int alpha) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
    raise("NonPrime", std::to_string(p) + " is not prime");
  if (alpha < 1) raise("SizeExceeded", "alpha must be >= 1");
  checked_pow(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(alpha),
              kMaxFieldSize);

  static std::mutex mtx;
  static std::map<std::pair<std::int64_t, int>,
                  std::shared_ptr<const FieldData>>
      cache;
  {
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find({p, alpha});
    if (it != cache.end()) {
      FieldSpec f;
      f.d_ = it->second;
      return f;
    }
  }
  auto d = build_field_data(p, alpha);
  std::lock_guard<std::mutex> lk(mtx);
  auto [it, ins] = cache.emplace(std::make_pair(p, alpha), d);
  FieldSpec f;
  f.d_ = it->second;
  return f;
}

std::int64_t FieldSpec::p() const { return d_->p; }
int FieldSpec::alpha() const { return d_->alpha; }
std::int64_t FieldSpec::q() const { return d_->q; }
const std::vector<std::int64_t>& FieldSpec::modulus() const {
  return d_->modulus;
}

bool FieldSpec::operator==(const FieldSpec& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  return d_->p == o.d_->p && d_->alpha == o.d_->alpha;
}

FieldElem FieldSpec::zero() const { return FieldElem(*this, 0); }
FieldElem FieldSpec::one() const { return FieldElem(*this, 1); }

FieldElem FieldSpec::elem(std::uint32_t encoded) const {
  if (encoded >= static_cast<std::uint64_t>(d_->q))
    raise("ParseError", "field element encoding out of range");
  return FieldElem(*this, encoded);
}

FieldElem FieldSpec::from_coeffs(const std::vector<std::int64_t>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != d_->alpha)
    raise("ParseError", "field element needs exactly alpha digits");
  std::vector<std::int64_t> c(coeffs);
  for (auto& x : c) {
    x %= d_->p;
    if (x < 0) x += d_->p;
  }
  return FieldElem(*this, d_->encode(c));
}

FieldElem FieldSpec::from_int(std::int64_t k) const {
  k %= d_->p;
  if (k < 0) k += d_->p;
  std::vector<std::int64_t> c(d_->alpha, 0);
  c[0] = k;
  return FieldElem(*this, d_->encode(c));
}

std::uint32_t FieldSpec::add_enc(std::uint32_t a, std::uint32_t b) const {
  return d_->add(a, b);
}
std::uint32_t FieldSpec::sub_enc(std::uint32_t a, std::uint32_t b) const {
  return d_->sub(a, b);
}
std::uint32_t FieldSpec::mul_enc(std::uint32_t a, std::uint32_t b) const {
  return d_->mul(a, b);
}
std::uint32_t FieldSpec::neg_enc(std::uint32_t a) const { return d_->neg(a); }

// ---------------------------------------------------------------- FieldElem

namespace {
void check_same_field(const FieldSpec& a, const FieldSpec& b) {
  if (a != b) raise("MismatchedAmbient", "field elements from different fields");
}
}  // namespace

std::vector<std::int64_t> FieldElem::coeffs() const {
  return f_.data().decode(v_);
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same_field(f_, o.f_);
  return FieldElem(f_, f_.data().add(v_, o.v_));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same_field(f_, o.f_);
  return FieldElem(f_, f_.data().sub(v_, o.v_));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same_field(f_, o.f_);
  return FieldElem(f_, f_.data().mul(v_, o.v_));
}

FieldElem FieldElem::operator-() const {
  return FieldElem(f_, f_.data().neg(v_));
}

FieldElem FieldElem::inverse() const {
  return FieldElem(f_, f_.data().inv(v_));
}

FieldElem FieldElem::pow(std::uint64_t e) const {
  return FieldElem(f_, f_.data().pow(v_, e));
}

bool FieldElem::operator==(const FieldElem& o) const {
  check_same_field(f_, o.f_);
  return v_ == o.v_;
}

// ---------------------------------------------------------------- FieldPoly

FieldPoly::FieldPoly(FieldSpec f, std::vector<std::uint32_t> enc)
    : f_(std::move(f)), c_(std::move(enc)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool FieldPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

FieldElem FieldPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return f_.zero();
  return FieldElem(f_, c_[i]);
}

FieldElem FieldPoly::lead() const {
  if (c_.empty()) return f_.zero();
  return FieldElem(f_, c_.back());
}

FieldPoly FieldPoly::operator+(const FieldPoly& o) const {
  check_same_field(f_, o.f_);
  const FieldData& d = f_.data();
  std::vector<std::uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint32_t a = i < c_.size() ? c_[i] : 0;
    std::uint32_t b = i < o.c_.size() ? o.c_[i] : 0;
    r[i] = d.add(a, b);
  }
  return FieldPoly(f_, std::move(r));
}

FieldPoly FieldPoly::operator-(const FieldPoly& o) const {
  check_same_field(f_, o.f_);
  const FieldData& d = f_.data();
  std::vector<std::uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint32_t a = i < c_.size() ? c_[i] : 0;
    std::uint32_t b = i < o.c_.size() ? o.c_[i] : 0;
    r[i] = d.sub(a, b);
  }
  return FieldPoly(f_, std::move(r));
}

FieldPoly FieldPoly::operator*(const FieldPoly& o) const {
  check_same_field(f_, o.f_);
  if (c_.empty() || o.c_.empty()) return FieldPoly(f_);
  const FieldData& d = f_.data();
  std::vector<std::uint32_t> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = d.add(r[i + j], d.mul(c_[i], o.c_[j]));
  }
  return FieldPoly(f_, std::move(r));
}

FieldPoly FieldPoly::operator*(const FieldElem& s) const {
  check_same_field(f_, s.field());
  const FieldData& d = f_.data();
  std::vector<std::uint32_t> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = d.mul(c_[i], s.encoded());
  return FieldPoly(f_, std::move(r));
}

bool FieldPoly::operator==(const FieldPoly& o) const {
  check_same_field(f_, o.f_);
  return c_ == o.c_;
}

FieldElem FieldPoly::eval(const FieldElem& x) const {
  const FieldData& d = f_.data();
  std::uint32_t acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;)
    acc = d.add(d.mul(acc, x.encoded()), c_[i]);
  return FieldElem(f_, acc);
}

FieldPoly poly_from_ints(const FieldSpec& f,
                         const std::vector<std::int64_t>& coeffs) {
  std::vector<std::uint32_t> enc(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    enc[i] = f.from_int(coeffs[i]).encoded();
  return FieldPoly(f, std::move(enc));
}

FieldPoly poly_x_pow(const FieldSpec& f, int k) {
  std::vector<std::uint32_t> enc(k + 1, 0);
  enc[k] = 1;
  return FieldPoly(f, std::move(enc));
}

FieldPoly poly_one(const FieldSpec& f) { return FieldPoly(f, {1}); }

std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& a,
                                       const FieldPoly& b) {
  check_same_field(a.field(), b.field());
  if (b.is_zero()) raise("DivisionByZero", "polynomial division by zero");
  const FieldSpec& f = a.field();
  const FieldData& d = f.data();
  std::vector<std::uint32_t> rem(a.raw());
  const auto& bc = b.raw();
  const int db = b.degree();
  std::uint32_t linv = d.inv(bc.back());
  if (a.degree() < db) return {FieldPoly(f), a};
  std::vector<std::uint32_t> quo(a.degree() - db + 1, 0);
  for (int i = a.degree(); i >= db; --i) {
    std::uint32_t c = d.mul(rem[i], linv);
    quo[i - db] = c;
    if (c)
      for (int j = 0; j <= db; ++j)
        rem[i - db + j] = d.sub(rem[i - db + j], d.mul(c, bc[j]));
  }
  rem.resize(db >= 0 ? db : 0);
  return {FieldPoly(f, std::move(quo)), FieldPoly(f, std::move(rem))};
}

FieldPoly poly_mod(const FieldPoly& a, const FieldPoly& b) {
  return divmod(a, b).second;
}

FieldPoly poly_gcd(FieldPoly a, FieldPoly b) {
  while (!b.is_zero()) {
    FieldPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && !a.is_monic()) a = a * a.lead().inverse();
  return a;
}

ExtGcd poly_ext_gcd(const FieldPoly& a, const FieldPoly& b) {
  const FieldSpec& f = a.field();
  FieldPoly r0 = a, r1 = b;
  FieldPoly s0 = poly_one(f), s1 = FieldPoly(f);
  FieldPoly t0 = FieldPoly(f), t1 = poly_one(f);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    FieldPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    FieldPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!r0.is_zero() && !r0.is_monic()) {
    FieldElem linv = r0.lead().inverse();
    r0 = r0 * linv;
    s0 = s0 * linv;
    t0 = t0 * linv;
  }
  return {r0, s0, t0};
}

FieldPoly poly_pow_mod(const FieldPoly& base, std::uint64_t e,
                       const FieldPoly& mod) {
  FieldPoly r = poly_one(base.field());
  FieldPoly b = poly_mod(base, mod);
  while (e) {
    if (e & 1) r = poly_mod(r * b, mod);
    b = poly_mod(b * b, mod);
    e >>= 1;
  }
  return r;
}

bool is_irreducible(const FieldPoly& f) {
  const int d = f.degree();
  if (d < 1) return false;
  const FieldSpec& fs = f.field();
  const std::uint64_t q = static_cast<std::uint64_t>(fs.q());
  FieldPoly x = poly_x_pow(fs, 1);
  FieldPoly z = poly_mod(x, f);
  for (int i = 0; i < d; ++i) z = poly_pow_mod(z, q, f);
  if (!(z - poly_mod(x, f)).is_zero()) return false;
  for (auto [r, e] : factorize(static_cast<std::uint64_t>(d))) {
    (void)e;
    int dd = d / static_cast<int>(r);
    FieldPoly zz = poly_mod(x, f);
    for (int i = 0; i < dd; ++i) zz = poly_pow_mod(zz, q, f);
    FieldPoly g = poly_gcd(zz - x, f);
    if (g.degree() != 0) return false;
  }
  return true;
}

FieldPoly star(const FieldPoly& h) {
  if (!h.is_monic()) raise("ZeroConstantTerm", "star requires a monic input");
  if (h.coeff(0).is_zero())
    raise("ZeroConstantTerm", "star requires a unit constant term");
  std::vector<std::uint32_t> rev(h.raw().rbegin(), h.raw().rend());
  FieldPoly r(h.field(), std::move(rev));
  return r * r.lead().inverse();
}

// ------------------------------------------------------------ ExtensionSpec

namespace {

// Arithmetic helpers on raw ExtElem vectors against an ExtData.
ExtElem ext_mul_impl(const ExtData& d, const ExtElem& a, const ExtElem& b) {
  const FieldData& fd = d.base.data();
  const int e = d.e;
  std::vector<std::uint32_t> acc(2 * e - 1, 0);
  for (int i = 0; i < e; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < e; ++j)
      if (b[j]) acc[i + j] = fd.add(acc[i + j], fd.mul(a[i], b[j]));
  }
  // reduce by the monic modulus
  for (int i = 2 * e - 2; i >= e; --i) {
    std::uint32_t c = acc[i];
    if (!c) continue;
    acc[i] = 0;
    for (int j = 0; j < e; ++j)
      acc[i - e + j] = fd.sub(acc[i - e + j], fd.mul(c, d.modulus[j]));
  }
  acc.resize(e);
  return acc;
}

ExtElem ext_pow_impl(const ExtData& d, ExtElem a, std::uint64_t e) {
  ExtElem r(d.e, 0);
  r[0] = 1;
  while (e) {
    if (e & 1) r = ext_mul_impl(d, r, a);
    a = ext_mul_impl(d, a, a);
    e >>= 1;
  }
  return r;
}

bool ext_is_one_impl(const ExtData& d, const ExtElem& a) {
  if (a[0] != 1) return false;
  for (int i = 1; i < d.e; ++i)
    if (a[i]) return false;
  return true;
}

// Lex-least monic irreducible of degree e over the base, cached per
// (p, alpha, e); this is the expensive part of extension construction.
std::vector<std::uint32_t> ext_modulus(const FieldSpec& base, int e) {
  static std::mutex mtx;
  static std::map<std::tuple<std::int64_t, int, int>,
                  std::vector<std::uint32_t>>
      cache;
  auto key = std::make_tuple(base.p(), base.alpha(), e);
  {
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const std::uint64_t q = static_cast<std::uint64_t>(base.q());
  std::vector<std::uint32_t> enc(e + 1, 0);
  enc[e] = 1;
  for (std::uint64_t c = 0;; ++c) {
    std::uint64_t v = c;
    for (int i = 0; i < e; ++i) {
      enc[i] = static_cast<std::uint32_t>(v % q);
      v /= q;
    }
    if (v) raise("InternalCheckFailed", "no irreducible of requested degree");
    FieldPoly cand(base, enc);
    if (cand.degree() == e && is_irreducible(cand)) break;
  }
  std::lock_guard<std::mutex> lk(mtx);
  cache.emplace(key, enc);
  return enc;
}

}  // namespace

const FieldSpec& ExtensionSpec::base() const { return d_->base; }
int ExtensionSpec::degree() const { return d_->e; }
std::int64_t ExtensionSpec::n() const { return d_->n; }
const ExtElem& ExtensionSpec::eta() const { return d_->eta; }
std::uint64_t ExtensionSpec::order() const { return d_->qe; }

const FieldPoly& ExtensionSpec::modulus() const { return d_->modulus_poly; }

ExtElem ExtensionSpec::zero_elem() const { return ExtElem(d_->e, 0); }

ExtElem ExtensionSpec::one_elem() const {
  ExtElem r(d_->e, 0);
  r[0] = 1;
  return r;
}

ExtElem ExtensionSpec::from_base(const FieldElem& a) const {
  ExtElem r(d_->e, 0);
  r[0] = a.encoded();
  return r;
}

ExtElem ExtensionSpec::element_at(std::uint64_t idx) const {
  const std::uint64_t q = static_cast<std::uint64_t>(d_->base.q());
  ExtElem r(d_->e, 0);
  for (int i = 0; i < d_->e; ++i) {
    r[i] = static_cast<std::uint32_t>(idx % q);
    idx /= q;
  }
  return r;
}

ExtElem ExtensionSpec::mul(const ExtElem& a, const ExtElem& b) const {
  return ext_mul_impl(*d_, a, b);
}

ExtElem ExtensionSpec::add(const ExtElem& a, const ExtElem& b) const {
  const FieldData& fd = d_->base.data();
  ExtElem r(d_->e);
  for (int i = 0; i < d_->e; ++i) r[i] = fd.add(a[i], b[i]);
  return r;
}

ExtElem ExtensionSpec::sub(const ExtElem& a, const ExtElem& b) const {
  const FieldData& fd = d_->base.data();
  ExtElem r(d_->e);
  for (int i = 0; i < d_->e; ++i) r[i] = fd.sub(a[i], b[i]);
  return r;
}

ExtElem ExtensionSpec::pow(const ExtElem& a, std::uint64_t e) const {
  return ext_pow_impl(*d_, a, e);
}

bool ExtensionSpec::is_one(const ExtElem& a) const {
  return ext_is_one_impl(*d_, a);
}

ExtensionSpec extension_with_nth_root(const FieldSpec& base, std::int64_t n) {
  if (n < 1) raise("NotCoprime", "n must be positive");
  if (n % base.p() == 0)
    raise("NotCoprime", "n = " + std::to_string(n) +
                            " shares the field characteristic " +
                            std::to_string(base.p()));

  static std::mutex mtx;
  static std::map<std::tuple<std::int64_t, int, std::int64_t>,
                  std::shared_ptr<const ExtData>>
      cache;
  auto key = std::make_tuple(base.p(), base.alpha(), n);
  {
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) {
      ExtensionSpec s;
      s.d_ = it->second;
      return s;
    }
  }

  auto d = std::make_shared<ExtData>();
  d->base = base;
  d->n = n;
  d->e = static_cast<int>(ord_mod(static_cast<std::uint64_t>(base.q()),
                                  static_cast<std::uint64_t>(n)));
  d->qe = checked_pow(static_cast<std::uint64_t>(base.q()),
                      static_cast<std::uint64_t>(d->e), kMaxExtSize);
  d->modulus = ext_modulus(base, d->e);
  d->modulus_poly = FieldPoly(base, d->modulus);

  const std::uint64_t cofactor = (d->qe - 1) / static_cast<std::uint64_t>(n);
  auto nfac = factorize(static_cast<std::uint64_t>(n));
  for (std::uint64_t idx = 0;; ++idx) {
    if (idx >= d->qe)
      raise("InternalCheckFailed", "no element of exact order n found");
    ExtElem x(d->e, 0);
    std::uint64_t v = idx;
    for (int i = 0; i < d->e; ++i) {
      x[i] = static_cast<std::uint32_t>(v % base.q());
      v /= base.q();
    }
    ExtElem y = ext_pow_impl(*d, x, cofactor);
    if (!ext_is_one_impl(*d, ext_pow_impl(*d, y, static_cast<std::uint64_t>(n))))
      continue;
    bool exact = true;
    for (auto [l, e] : nfac) {
      (void)e;
      if (ext_is_one_impl(*d,
                          ext_pow_impl(*d, y, static_cast<std::uint64_t>(n) / l))) {
        exact = false;
        break;
      }
    }
    if (n == 1 && !ext_is_one_impl(*d, y)) exact = false;
    if (exact) {
      d->eta = y;
      break;
    }
  }

  std::lock_guard<std::mutex> lk(mtx);
  auto [it, ins] = cache.emplace(key, d);
  ExtensionSpec s;
  s.d_ = it->second;
  return s;
}

FieldPoly minimal_polynomial(const ExtensionSpec& ext,
                             const std::vector<std::int64_t>& coset) {
  if (coset.empty()) raise("CoefficientNotInBase", "empty exponent set");
  const int e = ext.degree();
  // prod (X - eta^j): coefficients over the extension, ascending
  std::vector<ExtElem> poly{ext.one_elem()};
  for (std::int64_t j : coset) {
    std::int64_t jj = j % ext.n();
    if (jj < 0) jj += ext.n();
    ExtElem root = ext.pow(ext.eta(), static_cast<std::uint64_t>(jj));
    std::vector<ExtElem> next(poly.size() + 1, ext.zero_elem());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = ext.add(next[i + 1], poly[i]);
      next[i] = ext.sub(next[i], ext.mul(root, poly[i]));
    }
    poly = std::move(next);
  }
  std::vector<std::uint32_t> enc(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    for (int k = 1; k < e; ++k)
      if (poly[i][k])
        raise("CoefficientNotInBase",
              "coefficient escapes the base field; input was not a full "
              "cyclotomic coset");
    enc[i] = poly[i][0];
  }
  return FieldPoly(ext.base(), std::move(enc));
}

}  // namespace chainforge
