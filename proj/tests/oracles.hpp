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

// Test-only oracles, kept independent of the implementation paths they
// check: Laplace-expansion characteristic polynomials, exhaustive invariant
// subspace enumeration over small finite fields, and trial-division
// polynomial irreducibility.

#ifndef EXALG_TESTS_ORACLES_HPP
#define EXALG_TESTS_ORACLES_HPP

#include <vector>

#include "exalg/matrix.hpp"
#include "exalg/polynomial.hpp"
#include "exalg/prng.hpp"
#include "exalg/subspace.hpp"

namespace exalg::oracles {

// det(xI - A) by cofactor expansion over the polynomial ring; exponential,
// fine for n <= 5.
template <class D>
Polynomial<D> char_poly_laplace(const Matrix<D>& a) {
  const D& dom = a.domain();
  const std::size_t n = a.rows();
  using P = Polynomial<D>;
  std::vector<std::vector<P>> m(n, std::vector<P>(n, P(dom)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<typename D::Scalar> c{dom.neg(a.at(i, j))};
      if (i == j) c.push_back(dom.one());
      m[i][j] = P(dom, c);
    }
  // recursive expansion along the first row with an index mask
  std::vector<std::size_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  struct Rec {
    const std::vector<std::vector<P>>& m;
    const D& dom;
    P run(std::size_t row, std::vector<std::size_t> cols) {
      if (cols.empty()) return P::constant(dom, dom.one());
      P acc(dom);
      for (std::size_t j = 0; j < cols.size(); ++j) {
        std::vector<std::size_t> rest;
        for (std::size_t t = 0; t < cols.size(); ++t)
          if (t != j) rest.push_back(cols[t]);
        P term = m[row][cols[j]] * run(row + 1, rest);
        acc = (j % 2 == 0) ? acc + term : acc - term;
      }
      return acc;
    }
  } rec{m, dom};
  return rec.run(0, cols);
}

// All proper nonzero invariant subspaces over a small finite field,
// enumerated through reduced echelon bases; empty result means the
// collection is irreducible unless it is {0}.
template <class D>
std::vector<Subspace<D>> all_invariant_subspaces(const std::vector<Matrix<D>>& gens,
                                                 const D& dom, std::size_t n) {
  static_assert(D::kind == DomainKind::prime_field ||
                D::kind == DomainKind::extension_field);
  std::vector<typename D::Scalar> elems;
  for (std::uint64_t v = 0; v < dom.order(); ++v) {
    if constexpr (D::kind == DomainKind::prime_field)
      elems.push_back(v);
    else
      elems.push_back(dom.element(v));
  }
  std::vector<Subspace<D>> found;
  for (std::size_t d = 1; d < n; ++d) {
    // pivot column combinations
    std::vector<std::size_t> piv(d);
    for (std::size_t i = 0; i < d; ++i) piv[i] = i;
    while (true) {
      // free positions: row i, columns > piv[i] that are not pivots
      std::vector<std::pair<std::size_t, std::size_t>> free_pos;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t c = piv[i] + 1; c < n; ++c) {
          bool is_piv = false;
          for (std::size_t t = 0; t < d; ++t) is_piv = is_piv || piv[t] == c;
          if (!is_piv) free_pos.emplace_back(i, c);
        }
      std::vector<std::size_t> digits(free_pos.size(), 0);
      while (true) {
        std::vector<std::vector<typename D::Scalar>> rows(
            d, std::vector<typename D::Scalar>(n, dom.zero()));
        for (std::size_t i = 0; i < d; ++i) rows[i][piv[i]] = dom.one();
        for (std::size_t f = 0; f < free_pos.size(); ++f)
          rows[free_pos[f].first][free_pos[f].second] = elems[digits[f]];
        Subspace<D> w(dom, n);
        for (auto& r : rows) w.insert(r);
        bool invariant = w.dim() == d;
        for (const auto& g : gens) {
          if (!invariant) break;
          for (const auto& b : w.basis())
            if (!w.contains(g.apply(b))) {
              invariant = false;
              break;
            }
        }
        if (invariant) found.push_back(std::move(w));
        std::size_t f = 0;
        while (f < digits.size() && ++digits[f] == elems.size()) digits[f++] = 0;
        if (f == digits.size()) break;
        if (digits.empty()) break;
      }
      // next pivot combination
      std::size_t i = d;
      bool advanced = false;
      while (i-- > 0) {
        if (piv[i] < n - d + i) {
          ++piv[i];
          for (std::size_t t = i + 1; t < d; ++t) piv[t] = piv[t - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
  return found;
}

template <class D>
bool brute_force_irreducible(const std::vector<Matrix<D>>& gens, const D& dom,
                             std::size_t n) {
  bool all_zero = true;
  for (const auto& g : gens) all_zero = all_zero && g.is_zero();
  if (all_zero) return false;  // the zero collection is reducible by definition
  if (n == 1) return true;
  return all_invariant_subspaces(gens, dom, n).empty();
}

// Trial division by every monic polynomial of degree <= deg(f)/2.
template <class D>
bool irreducible_by_trial_division(const Polynomial<D>& f_in) {
  static_assert(D::kind == DomainKind::prime_field);
  const D& dom = f_in.domain();
  Polynomial<D> f = f_in.monic();
  const int d = f.deg();
  if (d <= 0) return false;
  if (d == 1) return true;
  for (int deg = 1; 2 * deg <= d; ++deg) {
    std::uint64_t count = 1;
    for (int i = 0; i < deg; ++i) count *= dom.order();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<typename D::Scalar> c(deg + 1, dom.zero());
      c[deg] = dom.one();
      std::uint64_t rest = idx;
      for (int i = 0; i < deg; ++i) {
        c[i] = rest % dom.order();
        rest /= dom.order();
      }
      Polynomial<D> g(dom, c);
      if (f.divmod(g).second.is_zero()) return false;
    }
  }
  return true;
}

template <class D>
Matrix<D> random_matrix(const D& dom, std::size_t n, SplitMix64& rng) {
  Matrix<D> m(dom, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = dom.sample(rng);
  return m;
}

template <class D>
Matrix<D> random_invertible(const D& dom, std::size_t n, SplitMix64& rng) {
  while (true) {
    Matrix<D> m = random_matrix(dom, n, rng);
    if (inverse(m)) return m;
  }
}

template <class D>
Matrix<D> random_strictly_upper(const D& dom, std::size_t n, SplitMix64& rng) {
  Matrix<D> m(dom, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m.at(i, j) = dom.sample(rng);
  return m;
}

}  // namespace exalg::oracles

#endif  // EXALG_TESTS_ORACLES_HPP
