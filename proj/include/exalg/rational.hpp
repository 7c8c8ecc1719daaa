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

#ifndef EXALG_RATIONAL_HPP
#define EXALG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "exalg/domain.hpp"
#include "exalg/prng.hpp"

namespace exalg {

// Arbitrary-precision integers and rationals. cpp_rational keeps values in
// lowest terms with positive denominator, so equality is representation
// equality and serialized values are canonical.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt parse_bigint(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("sign without digits");
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("bad integer literal: " + std::string(s));
  return BigInt(std::string(s));
}

// "a" or "a/b"; non-reduced fractions are accepted and canonicalized.
inline Rat parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_bigint(s));
  BigInt num = parse_bigint(s.substr(0, slash));
  BigInt den = parse_bigint(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rat(num, den);
}

inline std::string rational_str(const Rat& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

class RationalField {
 public:
  using Scalar = Rat;
  using Center = RationalField;
  static constexpr bool commutative = true;
  static constexpr std::size_t center_dim = 1;
  static constexpr DomainKind kind = DomainKind::rationals;

  bool operator==(const RationalField&) const { return true; }
  bool operator!=(const RationalField&) const { return false; }

  Scalar zero() const { return Rat(0); }
  Scalar one() const { return Rat(1); }
  Scalar from_int(long long v) const { return Rat(v); }

  bool is_zero(const Scalar& a) const { return a == 0; }
  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }

  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar neg(const Scalar& a) const { return -a; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar inv(const Scalar& a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  Scalar conj(const Scalar& a) const { return a; }

  Center center() const { return {}; }
  void center_coords(const Scalar& a, Scalar* out) const { *out = a; }
  Scalar from_center_coords(const Scalar* in) const { return *in; }
  Scalar embed_center(const Scalar& c) const { return c; }

  std::string str(const Scalar& a) const { return rational_str(a); }
  Scalar parse(std::string_view s) const { return parse_rational(s); }

  // Small integers; exactness makes magnitude a cost, not an accuracy issue.
  Scalar sample(SplitMix64& g) const { return Rat(g.in_range(-2, 2)); }

  std::string name() const { return "Q"; }
};

}  // namespace exalg

#endif  // EXALG_RATIONAL_HPP
