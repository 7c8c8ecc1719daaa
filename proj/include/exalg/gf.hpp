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

#ifndef EXALG_GF_HPP
#define EXALG_GF_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "exalg/domain.hpp"
#include "exalg/prng.hpp"
#include "exalg/rational.hpp"

namespace exalg {

namespace gfdetail {

// Plain modular arithmetic on residues; p < 2^31 keeps products in uint64.
inline std::uint64_t addp(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t subp(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mulp(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;
}
inline std::uint64_t powp(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulp(r, a, p);
    a = mulp(a, a, p);
    e >>= 1;
  }
  return r;
}
inline std::uint64_t invp(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw std::domain_error("inverse of zero in GF(p)");
  // extended Euclid
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

using Residues = std::vector<std::uint64_t>;  // ascending-degree GF(p)[x]

inline void trim(Residues& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
inline int deg(const Residues& f) { return static_cast<int>(f.size()) - 1; }

inline Residues mul(const Residues& f, const Residues& g, std::uint64_t p) {
  if (f.empty() || g.empty()) return {};
  Residues r(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j)
      r[i + j] = addp(r[i + j], mulp(f[i], g[j], p), p);
  }
  trim(r);
  return r;
}

// f mod g and f div g; g nonzero.
inline void divmod(const Residues& f, const Residues& g, std::uint64_t p,
                   Residues& quot, Residues& rem) {
  if (g.empty()) throw std::domain_error("division by zero polynomial");
  rem = f;
  trim(rem);
  quot.assign(rem.size() > g.size() ? rem.size() - g.size() + 1 : 1, 0);
  const std::uint64_t lg_inv = invp(g.back(), p);
  while (deg(rem) >= deg(g)) {
    const std::size_t shift = rem.size() - g.size();
    const std::uint64_t c = mulp(rem.back(), lg_inv, p);
    quot[shift] = addp(quot[shift], c, p);
    for (std::size_t i = 0; i < g.size(); ++i)
      rem[shift + i] = subp(rem[shift + i], mulp(c, g[i], p), p);
    trim(rem);
  }
  trim(quot);
}

inline Residues mulmod(const Residues& f, const Residues& g, const Residues& m,
                       std::uint64_t p) {
  Residues q, r;
  divmod(mul(f, g, p), m, p, q, r);
  return r;
}

// gcd plus Bezout coefficient for f: a*f ≡ gcd (mod m); used for inverses.
inline Residues egcd_inverse(const Residues& f, const Residues& m, std::uint64_t p) {
  Residues r0 = m, r1 = f;
  Residues t0 = {}, t1 = {1};
  trim(r1);
  while (!r1.empty()) {
    Residues q, rem;
    divmod(r0, r1, p, q, rem);
    Residues t2 = t0;
    Residues qt = mul(q, t1, p);
    // t2 = t0 - q*t1
    if (t2.size() < qt.size()) t2.resize(qt.size(), 0);
    for (std::size_t i = 0; i < qt.size(); ++i) t2[i] = subp(t2[i], qt[i], p);
    trim(t2);
    r0 = r1;
    r1 = rem;
    t0 = t1;
    t1 = t2;
  }
  if (deg(r0) != 0) throw std::domain_error("element not invertible");
  const std::uint64_t c = invp(r0[0], p);
  for (auto& x : t0) x = mulp(x, c, p);
  trim(t0);
  return t0;
}

}  // namespace gfdetail

class GFpField {
 public:
  using Scalar = std::uint64_t;  // residue in [0, p)
  using Center = GFpField;
  static constexpr bool commutative = true;
  static constexpr std::size_t center_dim = 1;
  static constexpr DomainKind kind = DomainKind::prime_field;

  explicit GFpField(std::uint64_t p) : p_(p) {
    if (p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("p must be < 2^31");
    if (!is_prime_u64(p)) throw std::invalid_argument("not prime: " + std::to_string(p));
  }

  std::uint64_t p() const { return p_; }
  std::uint64_t order() const { return p_; }

  bool operator==(const GFpField& o) const { return p_ == o.p_; }
  bool operator!=(const GFpField& o) const { return p_ != o.p_; }

  Scalar zero() const { return 0; }
  Scalar one() const { return 1 % p_; }
  Scalar from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Scalar>(r);
  }

  bool is_zero(const Scalar& a) const { return a == 0; }
  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }

  Scalar add(const Scalar& a, const Scalar& b) const { return gfdetail::addp(a, b, p_); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return gfdetail::subp(a, b, p_); }
  Scalar neg(const Scalar& a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return gfdetail::mulp(a, b, p_); }
  Scalar inv(const Scalar& a) const { return gfdetail::invp(a, p_); }
  Scalar pow(const Scalar& a, std::uint64_t e) const { return gfdetail::powp(a, e, p_); }
  Scalar conj(const Scalar& a) const { return a; }

  Center center() const { return *this; }
  void center_coords(const Scalar& a, Scalar* out) const { *out = a; }
  Scalar from_center_coords(const Scalar* in) const { return *in; }
  Scalar embed_center(const Scalar& c) const { return c; }

  std::string str(const Scalar& a) const { return std::to_string(a); }
  Scalar parse(std::string_view s) const {
    BigInt v = parse_bigint(s);
    BigInt r = v % p_;
    if (r < 0) r += p_;
    return r.convert_to<std::uint64_t>();
  }

  Scalar sample(SplitMix64& g) const { return g.below(p_); }

  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

 private:
  std::uint64_t p_;
};

// GF(p^k) as GF(p)[x]/(modulus). Elements are fixed-length coefficient
// vectors of size k, so equality is representation equality. Whether the
// modulus is irreducible is validated by the descriptor layer (the test
// lives with the polynomial machinery); the constructor only checks shape.
class GFextField {
 public:
  using Scalar = std::vector<std::uint64_t>;  // k residues, ascending degree
  using Center = GFextField;
  static constexpr bool commutative = true;
  static constexpr std::size_t center_dim = 1;
  static constexpr DomainKind kind = DomainKind::extension_field;

  GFextField(std::uint64_t p, std::vector<std::uint64_t> modulus)
      : base_(p), modulus_(std::move(modulus)) {
    for (auto& c : modulus_) c %= p;
    if (modulus_.size() < 3 || modulus_.back() != 1)
      throw std::invalid_argument("modulus must be monic of degree >= 2");
  }

  std::uint64_t p() const { return base_.p(); }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  std::size_t ext_degree() const { return modulus_.size() - 1; }

  // p^k, saturating at 2^63 (only used to gate enumerations).
  std::uint64_t order() const {
    std::uint64_t q = 1;
    for (std::size_t i = 0; i < ext_degree(); ++i) {
      if (q > (std::uint64_t{1} << 63) / p()) return std::uint64_t{1} << 63;
      q *= p();
    }
    return q;
  }

  bool operator==(const GFextField& o) const {
    return p() == o.p() && modulus_ == o.modulus_;
  }
  bool operator!=(const GFextField& o) const { return !(*this == o); }

  Scalar zero() const { return Scalar(ext_degree(), 0); }
  Scalar one() const {
    Scalar s(ext_degree(), 0);
    s[0] = 1;
    return s;
  }
  Scalar from_int(long long v) const {
    Scalar s(ext_degree(), 0);
    s[0] = base_.from_int(v);
    return s;
  }
  // Element whose residue polynomial is x (the generator).
  Scalar generator() const {
    Scalar s(ext_degree(), 0);
    s[1] = 1;
    return s;
  }
  // Enumeration by counter: digits of `index` base p, ascending degree.
  Scalar element(std::uint64_t index) const {
    Scalar s(ext_degree(), 0);
    for (std::size_t i = 0; i < s.size() && index; ++i) {
      s[i] = index % p();
      index /= p();
    }
    return s;
  }

  bool is_zero(const Scalar& a) const {
    for (auto c : a)
      if (c) return false;
    return true;
  }
  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }

  Scalar add(const Scalar& a, const Scalar& b) const {
    Scalar r(ext_degree());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = base_.add(a[i], b[i]);
    return r;
  }
  Scalar sub(const Scalar& a, const Scalar& b) const {
    Scalar r(ext_degree());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = base_.sub(a[i], b[i]);
    return r;
  }
  Scalar neg(const Scalar& a) const {
    Scalar r(ext_degree());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = base_.neg(a[i]);
    return r;
  }
  Scalar mul(const Scalar& a, const Scalar& b) const {
    gfdetail::Residues fa(a.begin(), a.end()), fb(b.begin(), b.end());
    gfdetail::trim(fa);
    gfdetail::trim(fb);
    gfdetail::Residues r = gfdetail::mulmod(fa, fb, modulus_residues(), p());
    return pad(r);
  }
  Scalar inv(const Scalar& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero in GF(p^k)");
    gfdetail::Residues fa(a.begin(), a.end());
    gfdetail::trim(fa);
    return pad(gfdetail::egcd_inverse(fa, modulus_residues(), p()));
  }
  Scalar pow(Scalar a, std::uint64_t e) const {
    Scalar r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Scalar conj(const Scalar& a) const { return a; }

  Center center() const { return *this; }
  void center_coords(const Scalar& a, Scalar* out) const { *out = a; }
  Scalar from_center_coords(const Scalar* in) const { return *in; }
  Scalar embed_center(const Scalar& c) const { return c; }

  std::string str(const Scalar& a) const {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(a[i]);
    }
    return s;
  }
  Scalar parse(std::string_view s) const {
    Scalar r(ext_degree(), 0);
    std::size_t pos = 0, idx = 0;
    while (pos <= s.size()) {
      auto comma = s.find(',', pos);
      std::string_view tok =
          comma == std::string_view::npos ? s.substr(pos) : s.substr(pos, comma - pos);
      if (idx >= r.size()) throw std::invalid_argument("too many coefficients");
      r[idx++] = base_.parse(tok);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return r;
  }

  Scalar sample(SplitMix64& g) const {
    Scalar s(ext_degree());
    for (auto& c : s) c = g.below(p());
    return s;
  }

  std::string name() const {
    return "GF(" + std::to_string(p()) + "^" + std::to_string(ext_degree()) + ")";
  }

 private:
  gfdetail::Residues modulus_residues() const {
    gfdetail::Residues m(modulus_.begin(), modulus_.end());
    gfdetail::trim(m);
    return m;
  }
  Scalar pad(const gfdetail::Residues& r) const {
    Scalar s(ext_degree(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) s[i] = r[i];
    return s;
  }

  GFpField base_;
  std::vector<std::uint64_t> modulus_;
};

}  // namespace exalg

#endif  // EXALG_GF_HPP
