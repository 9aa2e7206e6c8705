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

#include "chainforge/text.hpp"

#include <vector>

#include "chainforge/error.hpp"

namespace chainforge {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

std::int64_t parse_int(std::string_view s) {
  if (s.empty()) raise("ParseError", "empty integer");
  std::int64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9')
      raise("ParseError", "bad digit in '" + std::string(s) + "'");
    v = v * 10 + (c - '0');
    if (v > (std::int64_t{1} << 62)) raise("ParseError", "integer too large");
  }
  return v;
}

}  // namespace

std::string to_text(const FieldElem& a) {
  const FieldSpec& f = a.field();
  if (f.alpha() == 1) return std::to_string(a.encoded());
  std::string out;
  auto digits = a.coeffs();
  for (int i = 0; i < f.alpha(); ++i) {
    if (i) out += '.';
    out += std::to_string(digits[i]);
  }
  return out;
}

std::string to_text(const FieldPoly& h) {
  const FieldSpec& f = h.field();
  if (h.is_zero()) return to_text(f.zero());
  std::string out;
  for (int i = 0; i <= h.degree(); ++i) {
    if (i) out += ',';
    out += to_text(h.coeff(i));
  }
  return out;
}

std::string to_text(const RingElem& x) {
  const RingSpec& r = x.ring();
  std::string out;
  if (r.family() == RingFamily::galois) {
    for (int i = 0; i < r.width(); ++i) {
      if (i) out += '.';
      out += std::to_string(x.coords()[i]);
    }
  } else {
    for (int i = 0; i < r.width(); ++i) {
      if (i) out += ';';
      out += to_text(FieldElem(r.residue_field(),
                               static_cast<std::uint32_t>(x.coords()[i])));
    }
  }
  return out;
}

std::string to_text(const RingPoly& g) {
  const RingSpec& r = g.ring();
  if (g.is_zero()) return to_text(r.zero());
  std::string out;
  for (int i = 0; i <= g.degree(); ++i) {
    if (i) out += ',';
    out += to_text(g.coeff(i));
  }
  return out;
}

FieldElem parse_field_elem(const FieldSpec& f, std::string_view s) {
  auto digits = split(s, '.');
  if (static_cast<int>(digits.size()) != f.alpha())
    raise("ParseError", "field element needs " + std::to_string(f.alpha()) +
                            " digit(s): '" + std::string(s) + "'");
  std::vector<std::int64_t> c;
  c.reserve(digits.size());
  for (auto d : digits) {
    std::int64_t v = parse_int(d);
    if (v >= f.p()) raise("ParseError", "digit out of range in field element");
    c.push_back(v);
  }
  return f.from_coeffs(c);
}

FieldPoly parse_field_poly(const FieldSpec& f, std::string_view s) {
  std::vector<std::uint32_t> enc;
  for (auto part : split(s, ','))
    enc.push_back(parse_field_elem(f, part).encoded());
  return FieldPoly(f, std::move(enc));
}

RingElem parse_ring_elem(const RingSpec& r, std::string_view s) {
  std::vector<std::uint64_t> coords;
  if (r.family() == RingFamily::galois) {
    auto parts = split(s, '.');
    if (static_cast<int>(parts.size()) != r.width())
      raise("ParseError", "ring element needs " + std::to_string(r.width()) +
                              " coordinate(s): '" + std::string(s) + "'");
    for (auto part : parts) {
      std::int64_t v = parse_int(part);
      if (v >= r.coeff_modulus())
        raise("ParseError", "coordinate out of range [0, p^t)");
      coords.push_back(static_cast<std::uint64_t>(v));
    }
  } else {
    auto parts = split(s, ';');
    if (static_cast<int>(parts.size()) != r.width())
      raise("ParseError", "ring element needs " + std::to_string(r.width()) +
                              " coefficient(s): '" + std::string(s) + "'");
    for (auto part : parts)
      coords.push_back(parse_field_elem(r.residue_field(), part).encoded());
  }
  return r.from_coords(coords);
}

RingPoly parse_ring_poly(const RingSpec& r, std::string_view s) {
  std::vector<RingElem> c;
  for (auto part : split(s, ',')) c.push_back(parse_ring_elem(r, part));
  return RingPoly(r, std::move(c));
}

}  // namespace chainforge
