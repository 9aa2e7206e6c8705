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

#ifndef CHAINFORGE_GF_HPP
#define CHAINFORGE_GF_HPP

#include <cstdint>
#include <memory>
#include <vector>

namespace chainforge {

namespace detail {
struct FieldData;
struct ExtData;
}  // namespace detail

class FieldElem;
class FieldPoly;

/// F_q = F_p[y]/<modulus> with q = p^alpha.  The modulus is the
/// lexicographically least monic irreducible of degree alpha over F_p
/// (coefficient tuples compared low-degree-first); alpha = 1 gives
/// modulus y, i.e. the prime field.  Immutable and cheap to copy.
class FieldSpec {
 public:
  FieldSpec() = default;

  std::int64_t p() const;
  int alpha() const;
  std::int64_t q() const;
  /// alpha+1 integer coefficients in [0, p), ascending, monic.
  const std::vector<std::int64_t>& modulus() const;

  bool valid() const { return d_ != nullptr; }
  bool operator==(const FieldSpec& o) const;
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  FieldElem zero() const;
  FieldElem one() const;
  /// Element from its canonical encoding sum c_i p^i, 0 <= value < q.
  FieldElem elem(std::uint32_t encoded) const;
  FieldElem from_coeffs(const std::vector<std::int64_t>& coeffs) const;
  /// Integer k mapped into the prime subfield (k mod p).
  FieldElem from_int(std::int64_t k) const;

  // arithmetic directly on encodings, for inner loops
  std::uint32_t add_enc(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub_enc(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul_enc(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_enc(std::uint32_t a) const;

  const detail::FieldData& data() const { return *d_; }

 private:
  friend FieldSpec make_field(std::int64_t, int);
  std::shared_ptr<const detail::FieldData> d_;
};

/// Deterministic construction of F_{p^alpha}.
/// Errors: NonPrime(p), SizeExceeded (p^alpha beyond the word bound).
FieldSpec make_field(std::int64_t p, int alpha);

/// Element of F_q, stored by its canonical integer encoding.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldSpec f, std::uint32_t v) : f_(std::move(f)), v_(v) {}

  const FieldSpec& field() const { return f_; }
  std::uint32_t encoded() const { return v_; }
  /// Representation modulo the field modulus: alpha digits in [0, p).
  std::vector<std::int64_t> coeffs() const;
  bool is_zero() const { return v_ == 0; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inverse() const;  // nonzero only
  FieldElem pow(std::uint64_t e) const;
  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

 private:
  FieldSpec f_;
  std::uint32_t v_ = 0;
};

/// Polynomial over F_q, coefficients ascending, canonical form
/// (no trailing zeros; the zero polynomial has an empty list).
class FieldPoly {
 public:
  FieldPoly() = default;
  explicit FieldPoly(FieldSpec f) : f_(std::move(f)) {}
  FieldPoly(FieldSpec f, std::vector<std::uint32_t> enc);

  const FieldSpec& field() const { return f_; }
  /// degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const;
  FieldElem coeff(int i) const;
  FieldElem lead() const;
  const std::vector<std::uint32_t>& raw() const { return c_; }

  FieldPoly operator+(const FieldPoly& o) const;
  FieldPoly operator-(const FieldPoly& o) const;
  FieldPoly operator*(const FieldPoly& o) const;
  FieldPoly operator*(const FieldElem& s) const;
  bool operator==(const FieldPoly& o) const;
  bool operator!=(const FieldPoly& o) const { return !(*this == o); }

  FieldElem eval(const FieldElem& x) const;

 private:
  FieldSpec f_;
  std::vector<std::uint32_t> c_;
};

/// Polynomial with prime-subfield integer coefficients (each taken
/// mod p), ascending degree; trims trailing zeros.
FieldPoly poly_from_ints(const FieldSpec& f,
                         const std::vector<std::int64_t>& coeffs);
FieldPoly poly_x_pow(const FieldSpec& f, int k);  // X^k
FieldPoly poly_one(const FieldSpec& f);

/// Euclidean division by a polynomial with unit leading coefficient.
std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& a, const FieldPoly& b);
FieldPoly poly_mod(const FieldPoly& a, const FieldPoly& b);
FieldPoly poly_gcd(FieldPoly a, FieldPoly b);  // monic gcd
/// g = gcd(a,b) monic together with u, v such that u*a + v*b = g.
struct ExtGcd {
  FieldPoly g, u, v;
};
ExtGcd poly_ext_gcd(const FieldPoly& a, const FieldPoly& b);
FieldPoly poly_pow_mod(const FieldPoly& base, std::uint64_t e,
                       const FieldPoly& mod);

/// Rabin irreducibility test; deg >= 1 required.
bool is_irreducible(const FieldPoly& f);

/// Monic reciprocal h(0)^{-1} X^{deg h} h(1/X).
/// Requires h monic with h(0) != 0; errors: ZeroConstantTerm.
FieldPoly star(const FieldPoly& h);

/// F_{q^e} over a base F_q, built so that eta has multiplicative order
/// exactly n; e = ord_n(q).  Extension elements are coefficient vectors
/// of length e over the base, each entry an encoded base element.
using ExtElem = std::vector<std::uint32_t>;

class ExtensionSpec {
 public:
  ExtensionSpec() = default;

  const FieldSpec& base() const;
  int degree() const;
  std::int64_t n() const;
  const FieldPoly& modulus() const;
  const ExtElem& eta() const;
  std::uint64_t order() const;  // q^e

  ExtElem zero_elem() const;
  ExtElem one_elem() const;
  ExtElem from_base(const FieldElem& a) const;
  /// Canonical enumeration: coefficient tuples ascending as base-q ints.
  ExtElem element_at(std::uint64_t idx) const;

  ExtElem mul(const ExtElem& a, const ExtElem& b) const;
  ExtElem add(const ExtElem& a, const ExtElem& b) const;
  ExtElem sub(const ExtElem& a, const ExtElem& b) const;
  ExtElem pow(const ExtElem& a, std::uint64_t e) const;
  bool is_one(const ExtElem& a) const;

  bool valid() const { return d_ != nullptr; }

 private:
  friend ExtensionSpec extension_with_nth_root(const FieldSpec&, std::int64_t);
  std::shared_ptr<const detail::ExtData> d_;
};

/// Extension of F_q containing an element of exact order n, with the
/// deterministic eta scan.  Errors: NotCoprime(n, p); SizeExceeded.
ExtensionSpec extension_with_nth_root(const FieldSpec& base, std::int64_t n);

/// prod_{j in coset} (X - eta^j) over F_{q^e}, coefficients verified to
/// lie in the base field and returned over the base.
/// Errors: CoefficientNotInBase (the set was not a q-cyclotomic coset).
FieldPoly minimal_polynomial(const ExtensionSpec& ext,
                             const std::vector<std::int64_t>& coset);

}  // namespace chainforge

#endif
