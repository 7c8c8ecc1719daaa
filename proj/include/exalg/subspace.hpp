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

#ifndef EXALG_SUBSPACE_HPP
#define EXALG_SUBSPACE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "exalg/matrix.hpp"

namespace exalg {

// A subspace of the right vector space D^n, kept as a reduced echelon basis.
// Linear combinations put coefficients on the right (v*c), so reduction
// subtracts basis_row * c; over commutative fields this is the usual RREF.
// The reduced form is canonical: equal subspaces have equal bases.
template <class D>
class Subspace {
 public:
  using S = typename D::Scalar;
  using Vec = std::vector<S>;

  Subspace(D dom, std::size_t ambient) : dom_(std::move(dom)), n_(ambient) {}

  static Subspace zero(const D& dom, std::size_t n) { return Subspace(dom, n); }
  static Subspace full(const D& dom, std::size_t n) {
    Subspace s(dom, n);
    for (std::size_t i = 0; i < n; ++i) {
      Vec e(n, dom.zero());
      e[i] = dom.one();
      s.insert(std::move(e));
    }
    return s;
  }
  static Subspace span_of(const D& dom, std::size_t n, const std::vector<Vec>& vecs) {
    Subspace s(dom, n);
    for (const auto& v : vecs) s.insert(v);
    return s;
  }

  const D& domain() const { return dom_; }
  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero_space() const { return rows_.empty(); }
  bool is_full() const { return dim() == n_; }
  bool is_proper_nonzero() const { return dim() > 0 && dim() < n_; }

  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Residual of v after reduction against the basis; zero iff v is a member.
  Vec reduce(Vec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const S c = v[pivots_[i]];
      if (dom_.is_zero(c)) continue;
      for (std::size_t j = 0; j < n_; ++j)
        v[j] = dom_.sub(v[j], dom_.mul(rows_[i][j], c));
    }
    return v;
  }

  // Coordinates of a member vector over the basis rows (right coefficients:
  // v = sum rows[i] * coeff[i]). Throws if v is not in the subspace.
  Vec coordinates(const Vec& v) const {
    Vec coeffs(rows_.size(), dom_.zero());
    Vec w = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const S c = w[pivots_[i]];
      if (dom_.is_zero(c)) continue;
      coeffs[i] = c;
      for (std::size_t j = 0; j < n_; ++j)
        w[j] = dom_.sub(w[j], dom_.mul(rows_[i][j], c));
    }
    for (const auto& x : w)
      if (!dom_.is_zero(x)) throw std::invalid_argument("vector not in subspace");
    return coeffs;
  }

  bool contains(const Vec& v) const {
    Vec r = reduce(v);
    for (const auto& x : r)
      if (!dom_.is_zero(x)) return false;
    return true;
  }

  // Inserts v into the span; returns true if the dimension grew.
  bool insert(Vec v) {
    if (v.size() != n_) throw std::invalid_argument("ambient dimension mismatch");
    v = reduce(std::move(v));
    std::size_t piv = 0;
    while (piv < n_ && dom_.is_zero(v[piv])) ++piv;
    if (piv == n_) return false;
    const S inv = dom_.inv(v[piv]);
    for (std::size_t j = 0; j < n_; ++j) v[j] = dom_.mul(v[j], inv);
    // keep pivot order and re-reduce earlier rows against the new one
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == pos) continue;
      const S c = rows_[i][piv];
      if (dom_.is_zero(c)) continue;
      for (std::size_t j = 0; j < n_; ++j)
        rows_[i][j] = dom_.sub(rows_[i][j], dom_.mul(rows_[pos][j], c));
    }
    return true;
  }

  // Standard coordinates not used as pivots; appending their unit vectors to
  // the basis always completes it to the full space.
  std::vector<std::size_t> completion_coords() const {
    std::vector<bool> used(n_, false);
    for (std::size_t p : pivots_) used[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n_; ++j)
      if (!used[j]) out.push_back(j);
    return out;
  }

  // n x dim matrix with basis vectors as columns.
  Matrix<D> basis_matrix() const {
    Matrix<D> m(dom_, n_, dim());
    for (std::size_t c = 0; c < rows_.size(); ++c)
      for (std::size_t r = 0; r < n_; ++r) m.at(r, c) = rows_[c][r];
    return m;
  }

  bool operator==(const Subspace& o) const {
    return n_ == o.n_ && pivots_ == o.pivots_ && rows_equal(o);
  }

 private:
  bool rows_equal(const Subspace& o) const {
    if (rows_.size() != o.rows_.size()) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (!dom_.eq(rows_[i][j], o.rows_[i][j])) return false;
    return true;
  }

  D dom_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// Smallest subspace containing v and invariant under every generator,
// computed by breadth-first application with echelon insertion.
template <class D>
Subspace<D> spin(const std::vector<typename D::Scalar>& v,
                 const std::vector<Matrix<D>>& gens, const D& dom) {
  Subspace<D> w(dom, v.size());
  w.insert(v);
  bool grew = w.dim() > 0;
  while (grew) {
    grew = false;
    const auto snapshot = w.basis();
    for (const auto& b : snapshot)
      for (const auto& g : gens)
        if (w.insert(g.apply(b))) grew = true;
  }
  return w;
}

// True iff A*w stays inside W for every generator A and basis vector w.
template <class D>
bool is_invariant_subspace(const Subspace<D>& w, const std::vector<Matrix<D>>& gens) {
  for (const auto& g : gens)
    for (const auto& b : w.basis())
      if (!w.contains(g.apply(b))) return false;
  return true;
}

// Annihilator of a dual-side subspace U under the pairing
// <u, v> = sum conj(u_i) v_i: the set {v : <u, v> = 0 for all u in U}.
// If U is invariant under the conjugate-transposed generators, the result is
// invariant under the original ones.
template <class D>
Subspace<D> annihilator(const Subspace<D>& u) {
  const D& dom = u.domain();
  const std::size_t n = u.ambient();
  Matrix<D> k(dom, u.dim(), n);
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) k.at(i, j) = dom.conj(u.basis()[i][j]);
  Subspace<D> out(dom, n);
  for (auto& v : kernel_vectors(k)) out.insert(std::move(v));
  return out;
}

}  // namespace exalg

#endif  // EXALG_SUBSPACE_HPP
