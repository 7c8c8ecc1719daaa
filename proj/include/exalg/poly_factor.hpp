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

#ifndef EXALG_POLY_FACTOR_HPP
#define EXALG_POLY_FACTOR_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "exalg/gf.hpp"
#include "exalg/polynomial.hpp"
#include "exalg/prng.hpp"
#include "exalg/rational.hpp"

namespace exalg {

enum class PolyVerdict { irreducible, reducible, unknown };

template <class D>
struct PolyIrreducibility {
  PolyVerdict verdict = PolyVerdict::unknown;
  std::optional<Polynomial<D>> factor;  // proper monic divisor when reducible
  std::string method;
  std::uint64_t certificate_prime = 0;  // set by the mod-p method

  bool irreducible() const { return verdict == PolyVerdict::irreducible; }
};

template <class D>
struct SplitResult {
  bool splits = false;
  // (root, multiplicity) pairs, deterministic order
  std::vector<std::pair<typename D::Scalar, std::size_t>> roots;
  Polynomial<D> nonsplit_part;  // constant iff splits
};

namespace facdetail {

// ---------------------------------------------------------------- finite ---

template <class D>
BigInt field_order_big(const D& dom) {
  if constexpr (D::kind == DomainKind::prime_field) {
    return BigInt(dom.p());
  } else {
    BigInt q = 1;
    for (std::size_t i = 0; i < dom.ext_degree(); ++i) q *= dom.p();
    return q;
  }
}

template <class D>
typename D::Scalar scalar_pow_big(const D& dom, typename D::Scalar a, BigInt e) {
  typename D::Scalar r = dom.one();
  while (e > 0) {
    if ((e & 1) != 0) r = dom.mul(r, a);
    a = dom.mul(a, a);
    e >>= 1;
  }
  return r;
}

// Inverse of the Frobenius x -> x^p on the coefficient field.
template <class D>
typename D::Scalar frob_inverse(const D& dom, const typename D::Scalar& c) {
  if constexpr (D::kind == DomainKind::prime_field) {
    return c;
  } else {
    BigInt e = 1;
    for (std::size_t i = 0; i + 1 < dom.ext_degree(); ++i) e *= dom.p();
    return scalar_pow_big(dom, c, e);
  }
}

// f with f' = 0 has the form g(x^p); returns g with p-th roots of coefficients.
template <class D>
Polynomial<D> pth_root(const Polynomial<D>& f) {
  const D& dom = f.domain();
  const std::uint64_t p = dom.p();
  std::vector<typename D::Scalar> out;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(f.deg()); i += p)
    out.push_back(frob_inverse(dom, f.coeff(i)));
  return Polynomial<D>(dom, std::move(out));
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin's irreducibility test over GF(q).
template <class D>
bool rabin_irreducible(const Polynomial<D>& f_in) {
  const D& dom = f_in.domain();
  Polynomial<D> f = f_in.monic();
  const int d = f.deg();
  if (d <= 0) throw std::invalid_argument("irreducibility of a constant polynomial");
  if (d == 1) return true;
  const BigInt q = field_order_big(dom);
  const Polynomial<D> x = Polynomial<D>::x_power(dom, 1);
  for (std::uint64_t r : prime_divisors(static_cast<std::uint64_t>(d))) {
    BigInt e = 1;
    for (std::uint64_t i = 0; i < d / r; ++i) e *= q;
    Polynomial<D> h = poly_powmod(x, e, f) - (x % f);
    if (poly_gcd(h, f).deg() != 0) return false;
  }
  BigInt e = 1;
  for (int i = 0; i < d; ++i) e *= q;
  Polynomial<D> h = poly_powmod(x, e, f) - (x % f);
  return h.is_zero();
}

// Deterministic ordering used to report factor lists reproducibly.
template <class D>
bool poly_less(const Polynomial<D>& a, const Polynomial<D>& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  const D& dom = a.domain();
  for (int i = a.deg(); i >= 0; --i) {
    const std::string sa = dom.str(a.coeff(i));
    const std::string sb = dom.str(b.coeff(i));
    if (sa != sb) return sa.size() != sb.size() ? sa.size() < sb.size() : sa < sb;
  }
  return false;
}

template <class D>
std::uint64_t poly_hash(const Polynomial<D>& f) {
  std::string bytes = f.domain().name();
  for (int i = 0; i <= f.deg(); ++i) {
    bytes += '|';
    bytes += f.domain().str(f.coeff(i));
  }
  return fnv1a64(bytes.data(), bytes.size());
}

template <class D>
Polynomial<D> random_poly_below(const D& dom, int deg_bound, SplitMix64& g) {
  std::vector<typename D::Scalar> c;
  c.reserve(deg_bound);
  for (int i = 0; i < deg_bound; ++i) c.push_back(dom.sample(g));
  return Polynomial<D>(dom, std::move(c));
}

// Equal-degree splitting: f squarefree monic, all irreducible factors of
// degree d. Appends the factors to `out`.
template <class D>
void edf(const Polynomial<D>& f, int d, SplitMix64& rng,
         std::vector<Polynomial<D>>& out) {
  const D& dom = f.domain();
  if (f.deg() == d) {
    out.push_back(f);
    return;
  }
  const BigInt q = field_order_big(dom);
  Polynomial<D> h(dom);
  while (true) {
    Polynomial<D> a = random_poly_below(dom, f.deg(), rng);
    if (a.deg() < 1) continue;
    Polynomial<D> g1 = poly_gcd(a, f);
    if (g1.deg() > 0 && g1.deg() < f.deg()) {
      h = g1;
      break;
    }
    if (dom.p() == 2) {
      // trace map over GF(2^m): sum of a^(2^i), i < d*m
      std::size_t steps = 0;
      BigInt tmp = q;
      while (tmp > 1) {
        tmp >>= 1;
        ++steps;  // m = log2(q)
      }
      const std::size_t total = static_cast<std::size_t>(d) * steps;
      Polynomial<D> b = a % f;
      Polynomial<D> acc = b;
      for (std::size_t i = 1; i < total; ++i) {
        b = (b * b) % f;
        acc = acc + b;
      }
      Polynomial<D> g2 = poly_gcd(acc, f);
      if (g2.deg() > 0 && g2.deg() < f.deg()) {
        h = g2;
        break;
      }
    } else {
      BigInt e = 1;
      for (int i = 0; i < d; ++i) e *= q;
      e = (e - 1) / 2;
      Polynomial<D> b = poly_powmod(a, e, f);
      Polynomial<D> bm1 = b - Polynomial<D>::constant(dom, dom.one());
      Polynomial<D> g2 = poly_gcd(bm1, f);
      if (g2.deg() > 0 && g2.deg() < f.deg()) {
        h = g2;
        break;
      }
    }
  }
  edf(h, d, rng, out);
  edf((f / h).monic(), d, rng, out);
}

// Distinct-degree factorization of a squarefree monic f; (product, degree).
template <class D>
std::vector<std::pair<Polynomial<D>, int>> ddf(const Polynomial<D>& f_in) {
  const D& dom = f_in.domain();
  const BigInt q = field_order_big(dom);
  std::vector<std::pair<Polynomial<D>, int>> out;
  Polynomial<D> f = f_in;
  Polynomial<D> x = Polynomial<D>::x_power(dom, 1);
  Polynomial<D> h = x % f;
  int d = 0;
  while (f.deg() > 0 && 2 * (d + 1) <= f.deg()) {
    ++d;
    h = poly_powmod(h, q, f);
    Polynomial<D> g = poly_gcd(h - (x % f), f);
    if (g.deg() > 0) {
      out.emplace_back(g, d);
      f = (f / g).monic();
      h = h % f;
    }
  }
  if (f.deg() > 0) out.emplace_back(f, f.deg());
  return out;
}

// Squarefree decomposition in characteristic p: f = prod g_i^{e_i}.
template <class D>
void squarefree_decompose(const Polynomial<D>& f_in, std::size_t mult,
                          std::vector<std::pair<Polynomial<D>, std::size_t>>& out) {
  const D& dom = f_in.domain();
  Polynomial<D> f = f_in.monic();
  if (f.deg() <= 0) return;
  Polynomial<D> fp = f.derivative();
  if (fp.is_zero()) {
    squarefree_decompose(pth_root(f), mult * dom.p(), out);
    return;
  }
  Polynomial<D> c = poly_gcd(f, fp);
  Polynomial<D> w = (f / c).monic();
  std::size_t i = 1;
  while (w.deg() > 0) {
    Polynomial<D> y = poly_gcd(w, c);
    Polynomial<D> fac = (w / y).monic();
    if (fac.deg() > 0) out.emplace_back(fac, mult * i);
    w = y;
    c = (c / y).monic();
    ++i;
  }
  if (c.deg() > 0) squarefree_decompose(pth_root(c), mult * dom.p(), out);
}

}  // namespace facdetail

// Checks the descriptor invariant and builds the extension field.
inline GFextField make_extension_field(std::uint64_t p,
                                       std::vector<std::uint64_t> modulus) {
  GFextField ext(p, modulus);
  GFpField base(p);
  std::vector<std::uint64_t> m = ext.modulus();
  std::vector<GFpField::Scalar> coeffs(m.begin(), m.end());
  Polynomial<GFpField> mod_poly(base, coeffs);
  if (!facdetail::rabin_irreducible(mod_poly))
    throw std::invalid_argument("extension modulus is reducible over GF(p)");
  return ext;
}

// Complete factorization over a finite field: (monic irreducible, multiplicity),
// sorted deterministically. Randomized splitting is seeded from the input so
// identical inputs yield identical outputs.
template <class D>
std::vector<std::pair<Polynomial<D>, std::size_t>> factor_finite(
    const Polynomial<D>& f_in) {
  static_assert(D::kind == DomainKind::prime_field ||
                D::kind == DomainKind::extension_field);
  if (f_in.deg() < 1) throw std::invalid_argument("factorization of a constant");
  std::vector<std::pair<Polynomial<D>, std::size_t>> sqf;
  facdetail::squarefree_decompose(f_in, 1, sqf);
  SplitMix64 rng(facdetail::poly_hash(f_in) ^ 0x5851f42d4c957f2dULL);
  std::vector<std::pair<Polynomial<D>, std::size_t>> out;
  for (const auto& [g, e] : sqf) {
    for (const auto& [prod, d] : facdetail::ddf(g)) {
      std::vector<Polynomial<D>> irr;
      facdetail::edf(prod, d, rng, irr);
      for (auto& h : irr) out.emplace_back(h, e);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return facdetail::poly_less(a.first, b.first);
  });
  return out;
}

namespace facdetail {

// -------------------------------------------------------------- rationals ---

using ZPoly = std::vector<BigInt>;  // ascending degree, trimmed

inline void zp_trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
inline int zp_deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  zp_trim(r);
  return r;
}
inline ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  zp_trim(r);
  return r;
}
inline ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  zp_trim(r);
  return r;
}
inline ZPoly zp_mod_coeffs(ZPoly f, const BigInt& m) {
  for (auto& c : f) {
    c %= m;
    if (c < 0) c += m;
  }
  zp_trim(f);
  return f;
}
inline ZPoly zp_balanced(ZPoly f, const BigInt& m) {
  for (auto& c : f) {
    c %= m;
    if (c < 0) c += m;
    if (c * 2 > m) c -= m;
  }
  zp_trim(f);
  return f;
}

// Division by a monic divisor; exact over Z, or in Z/m when m != 0.
inline void zp_divmod_monic(const ZPoly& f, const ZPoly& g, const BigInt& m,
                            ZPoly& quot, ZPoly& rem) {
  rem = f;
  zp_trim(rem);
  quot.assign(rem.size() > g.size() ? rem.size() - g.size() + 1 : 1, BigInt(0));
  while (zp_deg(rem) >= zp_deg(g)) {
    const std::size_t shift = rem.size() - g.size();
    BigInt c = rem.back();
    quot[shift] += c;
    for (std::size_t i = 0; i < g.size(); ++i) rem[shift + i] -= c * g[i];
    if (m != 0) rem = zp_mod_coeffs(std::move(rem), m);
    zp_trim(rem);
  }
  if (m != 0) {
    quot = zp_mod_coeffs(std::move(quot), m);
    rem = zp_mod_coeffs(std::move(rem), m);
  } else {
    zp_trim(quot);
  }
}

inline BigInt zp_content(const ZPoly& f) {
  BigInt c = 0;
  for (const auto& x : f) c = boost::multiprecision::gcd(c, x);
  return c;
}
inline ZPoly zp_primitive(ZPoly f) {
  zp_trim(f);
  if (f.empty()) return f;
  BigInt c = zp_content(f);
  if (f.back() < 0) c = -c;
  for (auto& x : f) x /= c;
  return f;
}

inline ZPoly to_zpoly(const Polynomial<GFpField>& f, std::uint64_t) {
  ZPoly r;
  for (int i = 0; i <= f.deg(); ++i) r.push_back(BigInt(f.coeff(i)));
  return r;
}

// One quadratic Hensel step: lifts f = g*h with s*g + t*h = 1 from mod m to
// mod m^2 (f, g, h monic; see von zur Gathen & Gerhard, Alg. 15.10).
struct HenselPair {
  ZPoly g, h, s, t;
};

inline HenselPair hensel_step(const ZPoly& f, const HenselPair& in, const BigInt& m) {
  const BigInt m2 = m * m;
  ZPoly e = zp_mod_coeffs(zp_sub(f, zp_mul(in.g, in.h)), m2);
  ZPoly q, r;
  zp_divmod_monic(zp_mod_coeffs(zp_mul(in.s, e), m2), in.h, m2, q, r);
  ZPoly g_new = zp_mod_coeffs(zp_add(in.g, zp_add(zp_mul(in.t, e), zp_mul(q, in.g))), m2);
  ZPoly h_new = zp_mod_coeffs(zp_add(in.h, r), m2);
  ZPoly one{BigInt(1)};
  ZPoly b = zp_mod_coeffs(
      zp_sub(zp_add(zp_mul(in.s, g_new), zp_mul(in.t, h_new)), one), m2);
  ZPoly c, d;
  zp_divmod_monic(zp_mod_coeffs(zp_mul(in.s, b), m2), h_new, m2, c, d);
  ZPoly s_new = zp_mod_coeffs(zp_sub(in.s, d), m2);
  ZPoly t_new =
      zp_mod_coeffs(zp_sub(in.t, zp_add(zp_mul(in.t, b), zp_mul(c, g_new))), m2);
  return {g_new, h_new, s_new, t_new};
}

// Extended Euclid over GF(p): s*a + t*b = 1 for coprime a, b.
inline void bezout_mod_p(const Polynomial<GFpField>& a, const Polynomial<GFpField>& b,
                         Polynomial<GFpField>& s, Polynomial<GFpField>& t) {
  const GFpField& dom = a.domain();
  Polynomial<GFpField> r0 = a, r1 = b;
  Polynomial<GFpField> s0 = Polynomial<GFpField>::constant(dom, dom.one());
  Polynomial<GFpField> s1(dom);
  Polynomial<GFpField> t0(dom);
  Polynomial<GFpField> t1 = Polynomial<GFpField>::constant(dom, dom.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = r1;
    r1 = r;
    Polynomial<GFpField> s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    Polynomial<GFpField> t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0.deg() != 0) throw std::logic_error("bezout: inputs not coprime");
  const auto c = dom.inv(r0.lc());
  s = s0.scaled(c);
  t = t0.scaled(c);
}

// Lifts a list of pairwise-coprime monic factors of monic f from mod p to
// mod `modulus` (= p^(2^j)) via a factor tree.
inline void hensel_lift_list(const ZPoly& f, std::uint64_t p,
                             std::vector<Polynomial<GFpField>> factors_p,
                             const BigInt& modulus, std::vector<ZPoly>& out) {
  if (factors_p.size() == 1) {
    out.push_back(zp_mod_coeffs(f, modulus));
    return;
  }
  const GFpField dom = factors_p.front().domain();
  const std::size_t half = factors_p.size() / 2;
  Polynomial<GFpField> a = Polynomial<GFpField>::constant(dom, dom.one());
  Polynomial<GFpField> b = a;
  for (std::size_t i = 0; i < half; ++i) a = a * factors_p[i];
  for (std::size_t i = half; i < factors_p.size(); ++i) b = b * factors_p[i];
  Polynomial<GFpField> s(dom), t(dom);
  bezout_mod_p(a, b, s, t);
  HenselPair pair{to_zpoly(a, p), to_zpoly(b, p), to_zpoly(s, p), to_zpoly(t, p)};
  BigInt m = p;
  while (m < modulus) {
    pair = hensel_step(zp_mod_coeffs(f, m * m), pair, m);
    m *= m;
  }
  pair.g = zp_mod_coeffs(pair.g, modulus);
  pair.h = zp_mod_coeffs(pair.h, modulus);
  hensel_lift_list(pair.g, p, {factors_p.begin(), factors_p.begin() + half}, modulus,
                   out);
  hensel_lift_list(pair.h, p, {factors_p.begin() + half, factors_p.end()}, modulus,
                   out);
}

inline ZPoly rational_to_primitive_int(const Polynomial<RationalField>& f) {
  BigInt lcm_den = 1;
  for (int i = 0; i <= f.deg(); ++i) {
    BigInt den = boost::multiprecision::denominator(f.coeff(i));
    lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, den) * den;
  }
  ZPoly r;
  for (int i = 0; i <= f.deg(); ++i) {
    Rat c = f.coeff(i) * lcm_den;
    r.push_back(boost::multiprecision::numerator(c));
  }
  return zp_primitive(std::move(r));
}

inline std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace facdetail

// Rational roots with multiplicities, plus the fully deflated remainder.
struct RationalRoots {
  std::vector<std::pair<Rat, std::size_t>> roots;
  Polynomial<RationalField> deflated;
};

inline RationalRoots rational_roots(const Polynomial<RationalField>& f_in) {
  if (f_in.deg() < 1) throw std::invalid_argument("roots of a constant polynomial");
  RationalField QQ;
  RationalRoots out{{}, f_in.monic()};
  Polynomial<RationalField>& f = out.deflated;
  // root 0 first
  std::size_t zero_mult = 0;
  while (f.deg() >= 1 && QQ.is_zero(f.coeff(0))) {
    f = f / Polynomial<RationalField>::x_power(QQ, 1);
    ++zero_mult;
  }
  if (zero_mult) out.roots.emplace_back(Rat(0), zero_mult);
  if (f.deg() < 1) return out;
  facdetail::ZPoly F = facdetail::rational_to_primitive_int(f);
  const std::vector<BigInt> nums = facdetail::positive_divisors(F.front());
  const std::vector<BigInt> dens = facdetail::positive_divisors(F.back());
  std::set<Rat> candidates;
  for (const auto& r : nums)
    for (const auto& s : dens) {
      candidates.insert(Rat(r, s));
      candidates.insert(Rat(-r, s));
    }
  for (const Rat& cand : candidates) {
    std::size_t mult = 0;
    while (f.deg() >= 1 && QQ.is_zero(f.eval(cand))) {
      Polynomial<RationalField> lin(QQ, {-cand, Rat(1)});
      f = f / lin;
      ++mult;
    }
    if (mult) out.roots.emplace_back(cand, mult);
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

namespace facdetail {

// Zassenhaus on the monic transform G(y) = L^(d-1) F(y/L). Returns a monic
// rational factor of F, or nothing if F is irreducible.
inline std::optional<Polynomial<RationalField>> zassenhaus(const ZPoly& F) {
  const int d = zp_deg(F);
  const BigInt L = F.back();
  ZPoly G(F.size());
  {
    BigInt pw = 1;  // L^(d-1-i)
    for (int i = d; i >= 0; --i) {
      G[i] = F[i] * pw;
      if (i > 0) pw *= L;
    }
  }
  // pick a prime where G stays squarefree with the fewest modular factors
  static const std::uint64_t kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                          37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                                          79, 83, 89, 97, 101, 103, 107, 109, 113, 127};
  std::optional<GFpField> best_field;
  std::vector<Polynomial<GFpField>> best_factors;
  int tried = 0;
  for (std::uint64_t p : kPrimes) {
    if (G.back() % p == 0) continue;
    GFpField gf(p);
    std::vector<GFpField::Scalar> c;
    c.reserve(G.size());
    for (const auto& x : G) c.push_back(gf.from_int((x % p).convert_to<long long>()));
    Polynomial<GFpField> Gp(gf, std::move(c));
    if (Gp.deg() != d) continue;
    if (poly_gcd(Gp, Gp.derivative()).deg() != 0) continue;  // not squarefree mod p
    auto factors = factor_finite(Gp.monic());
    std::vector<Polynomial<GFpField>> flat;
    for (auto& [g, e] : factors)
      for (std::size_t i = 0; i < e; ++i) flat.push_back(g);
    if (flat.size() == 1) return std::nullopt;  // irreducible mod p
    if (!best_field || flat.size() < best_factors.size()) {
      best_field = gf;
      best_factors = std::move(flat);
    }
    if (++tried >= 5) break;
  }
  if (!best_field) throw std::logic_error("zassenhaus: no usable prime found");

  // Mignotte-style bound on coefficients of monic factors of G.
  BigInt height = 0;
  for (const auto& x : G) height += boost::multiprecision::abs(x);
  BigInt bound = (BigInt(1) << d) * height;
  const std::uint64_t p = best_field->p();
  BigInt modulus = p;
  while (modulus <= 2 * bound) modulus *= modulus;

  std::vector<ZPoly> lifted;
  hensel_lift_list(zp_mod_coeffs(G, modulus), p, best_factors, modulus, lifted);
  const std::size_t m = lifted.size();

  // subset recombination, smallest subsets first
  const auto advance = [m](std::vector<std::size_t>& idx) {
    const std::size_t s = idx.size();
    for (std::size_t i = s; i-- > 0;) {
      if (idx[i] < m - s + i) {
        ++idx[i];
        for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  for (std::size_t s = 1; 2 * s <= m; ++s) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      ZPoly u{BigInt(1)};
      for (std::size_t i : idx) u = zp_mod_coeffs(zp_mul(u, lifted[i]), modulus);
      u = zp_balanced(std::move(u), modulus);
      if (zp_deg(u) >= 1 && zp_deg(u) < d) {
        ZPoly q, r;
        zp_divmod_monic(G, u, BigInt(0), q, r);
        if (r.empty()) {
          // map back through y = L*x and strip content
          ZPoly w(u.size());
          BigInt pw = 1;
          for (std::size_t i = 0; i < u.size(); ++i) {
            w[i] = u[i] * pw;
            pw *= L;
          }
          w = zp_primitive(std::move(w));
          RationalField QQ;
          std::vector<Rat> wc;
          wc.reserve(w.size());
          for (const auto& x : w) wc.push_back(Rat(x));
          return Polynomial<RationalField>(QQ, std::move(wc)).monic();
        }
      }
    } while (advance(idx));
  }
  return std::nullopt;
}

}  // namespace facdetail

// ---------------------------------------------------------------- public ---

template <class D>
PolyIrreducibility<D> poly_irreducible(const Polynomial<D>& f) {
  if (f.deg() < 1) throw std::invalid_argument("irreducibility of a constant polynomial");
  PolyIrreducibility<D> out;
  if (f.deg() == 1) {
    out.verdict = PolyVerdict::irreducible;
    out.method = "degree-1";
    return out;
  }
  if constexpr (D::kind == DomainKind::prime_field ||
                D::kind == DomainKind::extension_field) {
    if (facdetail::rabin_irreducible(f)) {
      out.verdict = PolyVerdict::irreducible;
      out.method = "rabin";
    } else {
      out.verdict = PolyVerdict::reducible;
      out.method = "rabin";
      out.factor = factor_finite(f).front().first;
    }
    return out;
  } else {
    static_assert(D::kind == DomainKind::rationals,
                  "irreducibility test needs a field domain");
    RationalField QQ;
    Polynomial<RationalField> g = f.monic();
    RationalRoots rr = rational_roots(g);
    if (!rr.roots.empty()) {
      out.verdict = PolyVerdict::reducible;
      out.method = "rational-root";
      out.factor = Polynomial<RationalField>(QQ, {-rr.roots.front().first, Rat(1)});
      return out;
    }
    if (g.deg() <= 3) {
      // no root and degree <= 3 forces irreducibility
      out.verdict = PolyVerdict::irreducible;
      out.method = "rational-root";
      return out;
    }
    Polynomial<RationalField> sq = poly_gcd(g, g.derivative());
    if (sq.deg() >= 1) {
      out.verdict = PolyVerdict::reducible;
      out.method = "squarefree";
      out.factor = sq;
      return out;
    }
    facdetail::ZPoly F = facdetail::rational_to_primitive_int(g);
    // mod-p certificate: p coprime to lc with F squarefree and irreducible mod p
    static const std::uint64_t kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23,
                                            29, 31, 37, 41, 43, 47, 53, 59};
    int usable = 0;
    for (std::uint64_t p : kPrimes) {
      if (F.back() % p == 0) continue;
      GFpField gf(p);
      std::vector<GFpField::Scalar> c;
      c.reserve(F.size());
      for (const auto& x : F) c.push_back(gf.from_int((x % p).convert_to<long long>()));
      Polynomial<GFpField> Fp(gf, std::move(c));
      if (Fp.deg() != g.deg()) continue;
      if (poly_gcd(Fp, Fp.derivative()).deg() != 0) continue;
      if (facdetail::rabin_irreducible(Fp.monic())) {
        out.verdict = PolyVerdict::irreducible;
        out.method = "mod-p";
        out.certificate_prime = p;
        return out;
      }
      if (++usable >= 6) break;
    }
    if (g.deg() > 12) {
      out.verdict = PolyVerdict::unknown;
      out.method = "degree-limit";
      return out;
    }
    auto factor = facdetail::zassenhaus(F);
    if (factor) {
      out.verdict = PolyVerdict::reducible;
      out.method = "zassenhaus";
      out.factor = *factor;
    } else {
      out.verdict = PolyVerdict::irreducible;
      out.method = "zassenhaus";
    }
    return out;
  }
}

template <class D>
SplitResult<D> poly_splits(const Polynomial<D>& f) {
  if (f.deg() < 1) throw std::invalid_argument("splitting of a constant polynomial");
  const D& dom = f.domain();
  SplitResult<D> out{false, {}, f.monic()};
  if constexpr (D::kind == DomainKind::rationals) {
    RationalRoots rr = rational_roots(f);
    out.roots = std::move(rr.roots);
    out.nonsplit_part = rr.deflated;
    out.splits = rr.deflated.deg() == 0;
    return out;
  } else {
    Polynomial<D> g = f.monic();
    std::vector<typename D::Scalar> roots;
    const std::uint64_t q = dom.order();
    if (q <= 10000) {
      for (std::uint64_t v = 0; v < q; ++v) {
        typename D::Scalar e;
        if constexpr (D::kind == DomainKind::prime_field)
          e = v;
        else
          e = dom.element(v);
        if (dom.is_zero(g.eval(e))) roots.push_back(e);
      }
    } else {
      // distinct roots = gcd(f, x^q - x); equal-degree split down to linears
      const BigInt qb = facdetail::field_order_big(dom);
      Polynomial<D> x = Polynomial<D>::x_power(dom, 1);
      Polynomial<D> xq = poly_powmod(x, qb, g);
      Polynomial<D> lin = poly_gcd(xq - (x % g), g);
      if (lin.deg() > 0) {
        SplitMix64 rng(facdetail::poly_hash(g));
        std::vector<Polynomial<D>> linear_factors;
        facdetail::edf(lin, 1, rng, linear_factors);
        for (const auto& lf : linear_factors) roots.push_back(dom.neg(lf.coeff(0)));
      }
    }
    for (const auto& r : roots) {
      Polynomial<D> lin(dom, {dom.neg(r), dom.one()});
      std::size_t mult = 0;
      while (out.nonsplit_part.deg() >= 1) {
        auto [quot, rem] = out.nonsplit_part.divmod(lin);
        if (!rem.is_zero()) break;
        out.nonsplit_part = quot;
        ++mult;
      }
      if (mult) out.roots.emplace_back(r, mult);
    }
    out.splits = out.nonsplit_part.deg() == 0;
    return out;
  }
}

// A monic irreducible polynomial of degree k; deterministic for small fields
// (lexicographic enumeration) and over Q (x^k - 2, Eisenstein at 2).
template <class D>
Polynomial<D> find_irreducible_poly(const D& dom, std::size_t k) {
  if (k < 2) throw std::invalid_argument("find_irreducible_poly needs k >= 2");
  if constexpr (D::kind == DomainKind::rationals) {
    Polynomial<D> f = Polynomial<D>::x_power(dom, k) -
                      Polynomial<D>::constant(dom, dom.from_int(2));
    return f;
  } else {
    const BigInt q = facdetail::field_order_big(dom);
    BigInt count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= q;
    if (count <= 65536) {
      const std::uint64_t total = count.convert_to<std::uint64_t>();
      const std::uint64_t qs = q.convert_to<std::uint64_t>();
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<typename D::Scalar> c(k + 1, dom.zero());
        c[k] = dom.one();
        std::uint64_t rest = idx;
        for (std::size_t i = 0; i < k; ++i) {
          std::uint64_t digit = rest % qs;
          rest /= qs;
          if constexpr (D::kind == DomainKind::prime_field)
            c[i] = digit;
          else
            c[i] = dom.element(digit);
        }
        Polynomial<D> f(dom, std::move(c));
        if (facdetail::rabin_irreducible(f)) return f;
      }
      throw std::logic_error("no irreducible polynomial found (impossible)");
    }
    SplitMix64 rng(0x243f6a8885a308d3ULL ^ (k * 0x9e3779b97f4a7c15ULL));
    while (true) {
      std::vector<typename D::Scalar> c(k + 1, dom.zero());
      c[k] = dom.one();
      for (std::size_t i = 0; i < k; ++i) c[i] = dom.sample(rng);
      Polynomial<D> f(dom, std::move(c));
      if (facdetail::rabin_irreducible(f)) return f;
    }
  }
}

template <class D>
struct KClosedVerdict {
  bool closed;
  Polynomial<D> witness;  // irreducible of degree k when not closed
};

// None of the supported exact domains is k-closed for any k >= 2; the verdict
// carries a constructive witness.
template <class D>
KClosedVerdict<D> is_k_closed(const D& dom, std::size_t k) {
  if (k < 2) throw std::invalid_argument("is_k_closed needs k >= 2");
  return {false, find_irreducible_poly(dom, k)};
}

}  // namespace exalg

#endif  // EXALG_POLY_FACTOR_HPP
