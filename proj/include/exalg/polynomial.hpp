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

#ifndef EXALG_POLYNOMIAL_HPP
#define EXALG_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "exalg/domain.hpp"
#include "exalg/rational.hpp"

namespace exalg {

// Univariate polynomials over a commutative scalar domain. Coefficients are
// stored in ascending degree with no trailing zeros; the zero polynomial is
// the empty sequence.
template <class D>
class Polynomial {
 public:
  static_assert(D::commutative, "polynomials require a commutative domain");
  using S = typename D::Scalar;

  explicit Polynomial(D dom) : dom_(std::move(dom)) {}
  Polynomial(D dom, std::vector<S> coeffs) : dom_(std::move(dom)), c_(std::move(coeffs)) {
    trim();
  }

  static Polynomial from_ints(const D& dom, std::initializer_list<long long> asc) {
    std::vector<S> c;
    c.reserve(asc.size());
    for (long long v : asc) c.push_back(dom.from_int(v));
    return Polynomial(dom, std::move(c));
  }
  static Polynomial x_power(const D& dom, std::size_t k) {
    std::vector<S> c(k + 1, dom.zero());
    c[k] = dom.one();
    return Polynomial(dom, std::move(c));
  }
  static Polynomial constant(const D& dom, const S& v) { return Polynomial(dom, {v}); }

  const D& domain() const { return dom_; }
  const std::vector<S>& coeffs() const { return c_; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && dom_.eq(c_.back(), dom_.one()); }

  S coeff(std::size_t i) const { return i < c_.size() ? c_[i] : dom_.zero(); }
  const S& lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  bool operator==(const Polynomial& o) const {
    if (dom_ != o.dom_ || c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!dom_.eq(c_[i], o.c_[i])) return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial operator+(const Polynomial& o) const {
    check(o);
    std::vector<S> r(std::max(c_.size(), o.c_.size()), dom_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = dom_.add(r[i], o.c_[i]);
    return Polynomial(dom_, std::move(r));
  }
  Polynomial operator-(const Polynomial& o) const {
    check(o);
    std::vector<S> r(std::max(c_.size(), o.c_.size()), dom_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = dom_.sub(r[i], o.c_[i]);
    return Polynomial(dom_, std::move(r));
  }
  Polynomial operator-() const {
    std::vector<S> r = c_;
    for (auto& x : r) x = dom_.neg(x);
    return Polynomial(dom_, std::move(r));
  }
  Polynomial operator*(const Polynomial& o) const {
    check(o);
    if (c_.empty() || o.c_.empty()) return Polynomial(dom_);
    std::vector<S> r(c_.size() + o.c_.size() - 1, dom_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (dom_.is_zero(c_[i])) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        r[i + j] = dom_.add(r[i + j], dom_.mul(c_[i], o.c_[j]));
    }
    return Polynomial(dom_, std::move(r));
  }
  Polynomial scaled(const S& s) const {
    std::vector<S> r = c_;
    for (auto& x : r) x = dom_.mul(x, s);
    return Polynomial(dom_, std::move(r));
  }
  Polynomial shifted(std::size_t k) const {  // multiply by x^k
    if (c_.empty()) return *this;
    std::vector<S> r(c_.size() + k, dom_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return Polynomial(dom_, std::move(r));
  }

  Polynomial monic() const {
    if (c_.empty()) return *this;
    return scaled(dom_.inv(c_.back()));
  }

  // Euclidean division; divisor nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& g) const {
    check(g);
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial rem = *this;
    std::vector<S> quot(deg() >= g.deg() ? deg() - g.deg() + 1 : 0, dom_.zero());
    const S lg_inv = dom_.inv(g.lc());
    while (!rem.is_zero() && rem.deg() >= g.deg()) {
      const std::size_t shift = rem.deg() - g.deg();
      const S c = dom_.mul(rem.lc(), lg_inv);
      quot[shift] = dom_.add(quot[shift], c);
      for (std::size_t i = 0; i < g.c_.size(); ++i)
        rem.c_[shift + i] = dom_.sub(rem.c_[shift + i], dom_.mul(c, g.c_[i]));
      rem.trim();
    }
    return {Polynomial(dom_, std::move(quot)), rem};
  }
  Polynomial operator/(const Polynomial& g) const { return divmod(g).first; }
  Polynomial operator%(const Polynomial& g) const { return divmod(g).second; }
  bool divides(const Polynomial& f) const { return f.divmod(*this).second.is_zero(); }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial(dom_);
    std::vector<S> r(c_.size() - 1, dom_.zero());
    for (std::size_t i = 1; i < c_.size(); ++i) {
      S k = dom_.from_int(static_cast<long long>(i));
      r[i - 1] = dom_.mul(c_[i], k);
    }
    return Polynomial(dom_, std::move(r));
  }

  S eval(const S& x) const {
    S acc = dom_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = dom_.add(dom_.mul(acc, x), c_[i]);
    return acc;
  }

  std::string str(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (dom_.is_zero(c_[i])) continue;
      if (!out.empty()) out += " + ";
      std::string cs = dom_.str(c_[i]);
      if (i == 0) {
        out += cs;
      } else {
        if (cs != "1") out += cs + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (!c_.empty() && dom_.is_zero(c_.back())) c_.pop_back();
  }
  void check(const Polynomial& o) const {
    if (dom_ != o.dom_) throw domain_mismatch("polynomial domains differ");
  }

  D dom_;
  std::vector<S> c_;
};

// Monic greatest common divisor; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
template <class D>
Polynomial<D> poly_gcd(const Polynomial<D>& f, const Polynomial<D>& g) {
  if (f.domain() != g.domain()) throw domain_mismatch("poly_gcd: domains differ");
  Polynomial<D> a = f, b = g;
  while (!b.is_zero()) {
    Polynomial<D> r = a % b;
    a = b;
    b = r;
  }
  return a.is_zero() ? a : a.monic();
}

// base^e mod m with an arbitrary-precision exponent (e.g. q^d in Rabin).
template <class D>
Polynomial<D> poly_powmod(const Polynomial<D>& base, BigInt e, const Polynomial<D>& m) {
  Polynomial<D> result = Polynomial<D>::constant(base.domain(), base.domain().one()) % m;
  Polynomial<D> b = base % m;
  while (e > 0) {
    if ((e & 1) != 0) result = (result * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return result;
}

}  // namespace exalg

#endif  // EXALG_POLYNOMIAL_HPP
