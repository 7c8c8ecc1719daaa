/*
   Copyright 2026 The exalg authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef EXALG_QUATERNION_HPP
#define EXALG_QUATERNION_HPP

#include <string>

#include "exalg/domain.hpp"
#include "exalg/polynomial.hpp"
#include "exalg/prng.hpp"
#include "exalg/rational.hpp"

namespace exalg {

// a + bi + cj + dk with rational coefficients. The center is Q (= the
// elements with b = c = d = 0), which is the subfield F all matrix code
// flattens over when working in M_n(H).
struct Quaternion {
  Rat a, b, c, d;

  bool operator==(const Quaternion& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator!=(const Quaternion& o) const { return !(*this == o); }
};

class QuaternionRing {
 public:
  using Scalar = Quaternion;
  using Center = RationalField;
  static constexpr bool commutative = false;
  static constexpr std::size_t center_dim = 4;
  static constexpr DomainKind kind = DomainKind::quaternions;

  bool operator==(const QuaternionRing&) const { return true; }
  bool operator!=(const QuaternionRing&) const { return false; }

  Scalar zero() const { return {Rat(0), Rat(0), Rat(0), Rat(0)}; }
  Scalar one() const { return {Rat(1), Rat(0), Rat(0), Rat(0)}; }
  Scalar from_int(long long v) const { return {Rat(v), Rat(0), Rat(0), Rat(0)}; }
  Scalar unit_i() const { return {Rat(0), Rat(1), Rat(0), Rat(0)}; }
  Scalar unit_j() const { return {Rat(0), Rat(0), Rat(1), Rat(0)}; }
  Scalar unit_k() const { return {Rat(0), Rat(0), Rat(0), Rat(1)}; }

  bool is_zero(const Scalar& q) const {
    return q.a == 0 && q.b == 0 && q.c == 0 && q.d == 0;
  }
  bool eq(const Scalar& x, const Scalar& y) const { return x == y; }
  bool is_central(const Scalar& q) const { return q.b == 0 && q.c == 0 && q.d == 0; }

  Scalar add(const Scalar& x, const Scalar& y) const {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  Scalar sub(const Scalar& x, const Scalar& y) const {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  Scalar neg(const Scalar& x) const { return {-x.a, -x.b, -x.c, -x.d}; }
  Scalar mul(const Scalar& x, const Scalar& y) const {
    return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
            x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
            x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
            x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
  }
  Scalar conj(const Scalar& q) const { return {q.a, -q.b, -q.c, -q.d}; }
  Rat norm(const Scalar& q) const {
    return q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d;
  }
  Scalar inv(const Scalar& q) const {
    if (is_zero(q)) throw std::domain_error("inverse of zero quaternion");
    const Rat n = norm(q);
    return {q.a / n, -q.b / n, -q.c / n, -q.d / n};
  }

  Center center() const { return {}; }
  void center_coords(const Scalar& q, Rat* out) const {
    out[0] = q.a;
    out[1] = q.b;
    out[2] = q.c;
    out[3] = q.d;
  }
  Scalar from_center_coords(const Rat* in) const { return {in[0], in[1], in[2], in[3]}; }
  Scalar embed_center(const Rat& c) const { return {c, Rat(0), Rat(0), Rat(0)}; }

  std::string str(const Scalar& q) const {
    return "(" + rational_str(q.a) + "," + rational_str(q.b) + "," + rational_str(q.c) +
           "," + rational_str(q.d) + ")";
  }
  // "(a,b,c,d)" with rational components.
  Scalar parse(std::string_view s) const {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
      throw std::invalid_argument("quaternion literal must be (a,b,c,d)");
    s = s.substr(1, s.size() - 2);
    Rat comp[4];
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
      auto comma = s.find(',', pos);
      if ((i < 3) == (comma == std::string_view::npos))
        throw std::invalid_argument("quaternion literal needs 4 components");
      std::string_view tok =
          comma == std::string_view::npos ? s.substr(pos) : s.substr(pos, comma - pos);
      comp[i] = parse_rational(tok);
      pos = comma + 1;
    }
    return {comp[0], comp[1], comp[2], comp[3]};
  }

  Scalar sample(SplitMix64& g) const {
    return {Rat(g.in_range(-2, 2)), Rat(g.in_range(-2, 2)), Rat(g.in_range(-2, 2)),
            Rat(g.in_range(-2, 2))};
  }

  std::string name() const { return "H"; }
};

inline Quaternion quat_inverse(const Quaternion& q) { return QuaternionRing{}.inv(q); }

// Minimal polynomial of q over the center Q: (x - a) for central q, else
// x^2 - 2a*x + N(q), which is irreducible over Q for non-central q.
inline Polynomial<RationalField> quat_min_poly_over_center(const Quaternion& q) {
  RationalField QQ;
  QuaternionRing H;
  if (H.is_central(q)) return Polynomial<RationalField>(QQ, {-q.a, Rat(1)});
  return Polynomial<RationalField>(QQ, {H.norm(q), Rat(-2) * q.a, Rat(1)});
}

}  // namespace exalg

#endif  // EXALG_QUATERNION_HPP
