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

#ifndef CHAINFORGE_RING_HPP
#define CHAINFORGE_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "chainforge/gf.hpp"

namespace chainforge {

namespace detail {
struct RingData;
}

enum class RingFamily { galois, nilpotent };

class RingElem;

/// A concrete finite chain ring: either a Galois ring GR(p^t, m)
/// (gamma = p, residue field F_{p^m}) or a nilpotent extension
/// F_q[u]/<u^t> (gamma = u, residue field F_q).  |R| = q^t.
class RingSpec {
 public:
  RingSpec() = default;

  RingFamily family() const;
  std::int64_t p() const;        // characteristic of the residue field
  int t() const;                 // nilpotency index of gamma
  std::int64_t q() const;        // residue field size
  int width() const;             // coordinates per element (m or t)
  const FieldSpec& residue_field() const;
  std::string spec_string() const;  // canonical "gr:p,t,m" / "fqu:p,alpha,t"
  /// For the Galois family: p^t, the coefficient modulus.
  std::int64_t coeff_modulus() const;
  std::uint64_t size() const;    // |R| = q^t (word-bounded at construction)

  bool valid() const { return d_ != nullptr; }
  bool operator==(const RingSpec& o) const;
  bool operator!=(const RingSpec& o) const { return !(*this == o); }

  RingElem zero() const;
  RingElem one() const;
  RingElem gamma() const;
  RingElem from_int(std::int64_t k) const;
  RingElem from_coords(const std::vector<std::uint64_t>& coords) const;
  /// Canonical enumeration of all |R| elements.
  RingElem element_at(std::uint64_t idx) const;
  std::uint64_t index_of(const RingElem& x) const;

  const detail::RingData& data() const { return *d_; }

 private:
  friend RingSpec make_ring(const std::string&);
  std::shared_ptr<const detail::RingData> d_;
};

/// Grammar: "gr:p,t,m" or "fqu:p,alpha,t".
/// Errors: ParseError; NonPrime; SizeExceeded.
RingSpec make_ring(const std::string& spec);

/// Ring element; Galois family stores m integers in [0, p^t),
/// the nilpotent family stores t encoded residue-field elements.
class RingElem {
 public:
  RingElem() = default;
  RingElem(RingSpec r, std::vector<std::uint64_t> coords);

  const RingSpec& ring() const { return r_; }
  const std::vector<std::uint64_t>& coords() const { return c_; }
  bool is_zero() const;
  bool is_unit() const;
  /// gamma-adic valuation in [0, t]; v(0) = t.
  int valuation() const;

  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator*(const RingElem& o) const;
  RingElem operator-() const;
  RingElem inverse() const;  // Errors: NotUnit
  RingElem pow(std::uint64_t e) const;
  bool operator==(const RingElem& o) const;
  bool operator!=(const RingElem& o) const { return !(*this == o); }

 private:
  RingSpec r_;
  std::vector<std::uint64_t> c_;
};

/// Surjective homomorphism onto the residue field (kernel <gamma>).
FieldElem residue(const RingElem& x);
/// Canonical section: residue(lift(a)) = a.
RingElem lift(const RingSpec& r, const FieldElem& a);

/// The unique delta in the Sylow p-subgroup P = 1 + gamma R with
/// delta^n = x, via x^w, w = n^{-1} mod |P|.
/// Errors: NotInSylow; NotCoprime.
RingElem nth_root_in_sylow(const RingElem& x, std::int64_t n);

/// Polynomial over R, coefficients ascending, canonical form.
class RingPoly {
 public:
  RingPoly() = default;
  explicit RingPoly(RingSpec r) : r_(std::move(r)) {}
  RingPoly(RingSpec r, std::vector<RingElem> coeffs);

  const RingSpec& ring() const { return r_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const;
  /// Some coefficient is a unit (monic implies regular).
  bool is_regular() const;
  RingElem coeff(int i) const;
  RingElem lead() const;
  const std::vector<RingElem>& coeffs() const { return c_; }

  RingPoly operator+(const RingPoly& o) const;
  RingPoly operator-(const RingPoly& o) const;
  RingPoly operator*(const RingPoly& o) const;
  RingPoly operator*(const RingElem& s) const;
  bool operator==(const RingPoly& o) const;
  bool operator!=(const RingPoly& o) const { return !(*this == o); }

  RingElem eval(const RingElem& x) const;

 private:
  RingSpec r_;
  std::vector<RingElem> c_;
};

RingPoly ring_poly_from_ints(const RingSpec& r,
                             const std::vector<std::int64_t>& coeffs);
RingPoly ring_poly_x_pow(const RingSpec& r, int k);
RingPoly ring_poly_one(const RingSpec& r);

/// Euclidean division by a divisor with unit leading coefficient.
std::pair<RingPoly, RingPoly> divmod(const RingPoly& a, const RingPoly& b);

/// Monic reciprocal; requires monic input with unit constant term.
/// Errors: ZeroConstantTerm.
RingPoly star(const RingPoly& h);

/// Coefficient-wise residue map R[X] -> F_q[X].
FieldPoly residue(const RingPoly& g);
RingPoly lift(const RingSpec& r, const FieldPoly& h);

/// g(c X) rescaled monic: c^{-deg g} g(c X); requires g monic, c a unit.
RingPoly scale_substitute(const RingPoly& g, const RingElem& c);

}  // namespace chainforge

#endif
