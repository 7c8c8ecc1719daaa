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

#ifndef EXALG_MATRIX_POLY_HPP
#define EXALG_MATRIX_POLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "exalg/matrix.hpp"
#include "exalg/poly_factor.hpp"
#include "exalg/polynomial.hpp"
#include "exalg/subspace.hpp"

namespace exalg {

// Center-subfield coordinates of a matrix, row-major entries, each entry
// expanded to its center_dim coordinates. All F-linear algebra on matrices
// (algebra spans, Krylov dependence, commutant solving) happens here.
template <class D>
std::vector<typename D::Center::Scalar> flatten(const Matrix<D>& m) {
  const D& dom = m.domain();
  std::vector<typename D::Center::Scalar> out(m.rows() * m.cols() * D::center_dim);
  std::size_t k = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      dom.center_coords(m.at(i, j), &out[k]);
      k += D::center_dim;
    }
  return out;
}

template <class D>
Matrix<D> unflatten(const D& dom, std::size_t rows, std::size_t cols,
                    const std::vector<typename D::Center::Scalar>& v) {
  Matrix<D> m(dom, rows, cols);
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      m.at(i, j) = dom.from_center_coords(&v[k]);
      k += D::center_dim;
    }
  return m;
}

namespace mpdetail {

// Echelon span over the center field that also tracks, for each inserted
// vector, its expression over the original insertion sequence. Feeding the
// powers I, A, A^2, ... yields the minimal polynomial at the first dependence.
template <class CF>
class TrackedEchelon {
 public:
  using S = typename CF::Scalar;
  using Vec = std::vector<S>;

  TrackedEchelon(CF dom, std::size_t width) : dom_(std::move(dom)), width_(width) {}

  std::size_t dim() const { return rows_.size(); }

  // Returns the dependency coefficients over the original sequence if v is
  // already in the span (coefficient of the new vector normalized to one),
  // otherwise inserts and returns nothing.
  std::optional<Vec> insert(Vec v) {
    Vec combo(count_ + 1, dom_.zero());
    combo[count_] = dom_.one();
    ++count_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const S c = v[pivots_[i]];
      if (dom_.is_zero(c)) continue;
      for (std::size_t j = 0; j < width_; ++j)
        v[j] = dom_.sub(v[j], dom_.mul(rows_[i][j], c));
      for (std::size_t j = 0; j < combos_[i].size(); ++j)
        combo[j] = dom_.sub(combo[j], dom_.mul(combos_[i][j], c));
    }
    std::size_t piv = 0;
    while (piv < width_ && dom_.is_zero(v[piv])) ++piv;
    if (piv == width_) return combo;
    const S inv = dom_.inv(v[piv]);
    for (auto& x : v) x = dom_.mul(x, inv);
    for (auto& x : combo) x = dom_.mul(x, inv);
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    combos_.insert(combos_.begin() + pos, std::move(combo));
    pivots_.insert(pivots_.begin() + pos, piv);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == pos) continue;
      const S c = rows_[i][piv];
      if (dom_.is_zero(c)) continue;
      for (std::size_t j = 0; j < width_; ++j)
        rows_[i][j] = dom_.sub(rows_[i][j], dom_.mul(rows_[pos][j], c));
      if (combos_[i].size() < combos_[pos].size())
        combos_[i].resize(combos_[pos].size(), dom_.zero());
      for (std::size_t j = 0; j < combos_[pos].size(); ++j)
        combos_[i][j] = dom_.sub(combos_[i][j], dom_.mul(combos_[pos][j], c));
    }
    return std::nullopt;
  }

 private:
  CF dom_;
  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<Vec> rows_;
  std::vector<Vec> combos_;
  std::vector<std::size_t> pivots_;
};

}  // namespace mpdetail

// Least-degree monic f over the center subfield F with f(A) = 0, found as the
// first linear dependence among I, A, A^2, ... in the flattened F-space.
template <class D>
Polynomial<typename D::Center> min_poly(const Matrix<D>& a) {
  if (!a.square()) throw std::invalid_argument("minimal polynomial of a nonsquare matrix");
  const D& dom = a.domain();
  const auto cf = dom.center();
  if (a.rows() == 0)
    return Polynomial<typename D::Center>::constant(cf, cf.one());
  mpdetail::TrackedEchelon<typename D::Center> ech(cf,
                                                   a.rows() * a.cols() * D::center_dim);
  Matrix<D> pw = Matrix<D>::identity(dom, a.rows());
  while (true) {
    auto dep = ech.insert(flatten(pw));
    if (dep) return Polynomial<typename D::Center>(cf, std::move(*dep));
    pw = pw * a;
  }
}

// Division-free Berkowitz characteristic polynomial: monic, degree n,
// valid in every characteristic. Only defined over commutative domains.
template <class D>
Polynomial<D> char_poly(const Matrix<D>& a) {
  static_assert(D::commutative,
                "characteristic polynomial requires a commutative field");
  if (!a.square()) throw std::invalid_argument("char poly of a nonsquare matrix");
  const D& dom = a.domain();
  const std::size_t n = a.rows();
  if (n == 0) return Polynomial<D>::constant(dom, dom.one());
  using S = typename D::Scalar;
  std::vector<S> c{dom.one(), dom.neg(a.at(0, 0))};  // descending coefficients
  for (std::size_t i = 2; i <= n; ++i) {
    // toeplitz column: 1, -a_ii, -(R S), -(R M S), -(R M^2 S), ...
    std::vector<S> t(i + 1, dom.zero());
    t[0] = dom.one();
    t[1] = dom.neg(a.at(i - 1, i - 1));
    std::vector<S> w(i - 1);
    for (std::size_t r = 0; r < i - 1; ++r) w[r] = a.at(r, i - 1);
    for (std::size_t j = 2; j <= i; ++j) {
      S dot = dom.zero();
      for (std::size_t r = 0; r < i - 1; ++r)
        dot = dom.add(dot, dom.mul(a.at(i - 1, r), w[r]));
      t[j] = dom.neg(dot);
      if (j < i) {
        std::vector<S> w2(i - 1, dom.zero());
        for (std::size_t r = 0; r < i - 1; ++r)
          for (std::size_t s = 0; s < i - 1; ++s)
            w2[r] = dom.add(w2[r], dom.mul(a.at(r, s), w[s]));
        w = std::move(w2);
      }
    }
    std::vector<S> c_new(i + 1, dom.zero());
    for (std::size_t k = 0; k <= i; ++k)
      for (std::size_t j = 0; j <= k && j <= i; ++j) {
        if (k - j >= c.size()) continue;
        c_new[k] = dom.add(c_new[k], dom.mul(t[j], c[k - j]));
      }
    c = std::move(c_new);
  }
  std::vector<S> asc(c.rbegin(), c.rend());
  return Polynomial<D>(dom, std::move(asc));
}

// Companion matrix of a monic polynomial: ones on the subdiagonal, negated
// ascending coefficients in the last column.
template <class D>
Matrix<D> companion(const Polynomial<D>& f) {
  if (!f.is_monic()) throw std::invalid_argument("companion matrix needs a monic polynomial");
  if (f.deg() < 1) throw std::invalid_argument("companion matrix needs degree >= 1");
  const D& dom = f.domain();
  const std::size_t n = static_cast<std::size_t>(f.deg());
  Matrix<D> c(dom, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c.at(i + 1, i) = dom.one();
  for (std::size_t i = 0; i < n; ++i) c.at(i, n - 1) = dom.neg(f.coeff(i));
  return c;
}

// f has coefficients in the center subfield; evaluates f(A) by Horner.
template <class D>
Matrix<D> eval_poly_at(const Polynomial<typename D::Center>& f, const Matrix<D>& a) {
  const D& dom = a.domain();
  const std::size_t n = a.rows();
  Matrix<D> acc(dom, n, n);
  for (int i = f.deg(); i >= 0; --i) {
    acc = acc * a;
    const auto c = f.coeff(static_cast<std::size_t>(i));
    if (!f.domain().is_zero(c))
      acc = acc + Matrix<D>::identity(dom, n).scaled_center(c);
  }
  return acc;
}

// Single-matrix irreducibility over a field: A is irreducible iff its
// characteristic polynomial is. A 1x1 matrix counts as irreducible (the
// collection-level reading of a nonzero action on a line).
template <class D>
struct MatrixIrreducibility {
  PolyVerdict verdict = PolyVerdict::unknown;
  std::optional<Subspace<D>> witness;  // invariant subspace when reducible
  Polynomial<D> characteristic;
};

template <class D>
MatrixIrreducibility<D> matrix_is_irreducible(const Matrix<D>& a) {
  static_assert(D::commutative, "matrix irreducibility via char poly needs a field");
  if (!a.square() || a.rows() == 0)
    throw std::invalid_argument("irreducibility of a nonsquare or empty matrix");
  const D& dom = a.domain();
  MatrixIrreducibility<D> out{PolyVerdict::unknown, std::nullopt, char_poly(a)};
  if (a.rows() == 1) {
    out.verdict = PolyVerdict::irreducible;
    return out;
  }
  auto verdict = poly_irreducible(out.characteristic);
  out.verdict = verdict.verdict;
  if (verdict.verdict == PolyVerdict::reducible) {
    Matrix<D> fa = eval_poly_at(*verdict.factor, a);
    Subspace<D> w(dom, a.rows());
    for (auto& v : kernel_vectors(fa)) w.insert(std::move(v));
    if (w.is_full()) {
      // f(A) = 0, so the minimal polynomial has degree < n and any spin is proper
      std::vector<typename D::Scalar> e1(a.rows(), dom.zero());
      e1[0] = dom.one();
      w = spin(e1, std::vector<Matrix<D>>{a}, dom);
    }
    out.witness = std::move(w);
  }
  return out;
}

// Triangularizability with inner eigenvalues in F for one matrix: the
// minimal polynomial over F must split into linear factors over F.
template <class D>
struct SingleTriangularizability {
  bool triangularizable = false;
  Polynomial<typename D::Center> minimal;
  // min-poly roots with their min-poly multiplicities
  std::vector<std::pair<typename D::Center::Scalar, std::size_t>> eigenvalues;
};

template <class D>
SingleTriangularizability<D> f_triangularizable_single(const Matrix<D>& a) {
  SingleTriangularizability<D> out{false, min_poly(a), {}};
  auto split = poly_splits(out.minimal);
  out.triangularizable = split.splits;
  out.eigenvalues = std::move(split.roots);
  return out;
}

}  // namespace exalg

#endif  // EXALG_MATRIX_POLY_HPP
