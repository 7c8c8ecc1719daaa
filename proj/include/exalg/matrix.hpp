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

#ifndef EXALG_MATRIX_HPP
#define EXALG_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exalg/domain.hpp"
#include "exalg/polynomial.hpp"

namespace exalg {

// Dense exact matrix acting on the left of column vectors. Vectors form a
// right vector space over the scalar domain, so elimination multiplies rows
// by inverses on the left and never uses column operations; over the
// commutative fields this is ordinary Gauss-Jordan.
template <class D>
class Matrix {
 public:
  using S = typename D::Scalar;

  Matrix(D dom, std::size_t rows, std::size_t cols)
      : dom_(std::move(dom)), rows_(rows), cols_(cols), a_(rows * cols, dom_.zero()) {}

  static Matrix identity(const D& dom, std::size_t n) {
    Matrix m(dom, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = dom.one();
    return m;
  }
  // E_ij: 1 in place (i, j), zero elsewhere.
  static Matrix unit(const D& dom, std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(dom, n, n);
    m.at(i, j) = dom.one();
    return m;
  }
  static Matrix from_ints(const D& dom, std::size_t rows, std::size_t cols,
                          std::initializer_list<long long> row_major) {
    Matrix m(dom, rows, cols);
    std::size_t k = 0;
    for (long long v : row_major) m.a_[k++] = dom.from_int(v);
    if (k != rows * cols) throw std::invalid_argument("entry count mismatch");
    return m;
  }

  const D& domain() const { return dom_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  S& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const S& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<S>& data() const { return a_; }

  bool operator==(const Matrix& o) const {
    if (dom_ != o.dom_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!dom_.eq(a_[k], o.a_[k])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!dom_.is_zero(x)) return false;
    return true;
  }
  bool is_identity() const {
    if (!square()) return false;
    return *this == identity(dom_, rows_);
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = dom_.add(a_[k], o.a_[k]);
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = dom_.sub(a_[k], o.a_[k]);
    return r;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = dom_.neg(x);
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    if (dom_ != o.dom_) throw domain_mismatch("matrix domains differ");
    if (cols_ != o.rows_) throw std::invalid_argument("inner dimensions disagree");
    Matrix r(dom_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const S& aik = at(i, k);
        if (dom_.is_zero(aik)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) = dom_.add(r.at(i, j), dom_.mul(aik, o.at(k, j)));
      }
    return r;
  }

  Matrix scaled_left(const S& s) const {
    Matrix r = *this;
    for (auto& x : r.a_) x = dom_.mul(s, x);
    return r;
  }
  Matrix scaled_right(const S& s) const {
    Matrix r = *this;
    for (auto& x : r.a_) x = dom_.mul(x, s);
    return r;
  }
  // Scaling by a center-subfield element; side is immaterial.
  Matrix scaled_center(const typename D::Center::Scalar& c) const {
    return scaled_left(dom_.embed_center(c));
  }

  Matrix transpose() const {
    Matrix r(dom_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }
  // Over noncommutative scalars the plain transpose is not an
  // anti-homomorphism; the conjugate transpose is, so dual-module code uses it.
  Matrix conj_transpose() const {
    Matrix r(dom_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = dom_.conj(at(i, j));
    return r;
  }

  Matrix pow(std::size_t k) const {
    if (!square()) throw std::invalid_argument("power of a nonsquare matrix");
    Matrix r = identity(dom_, rows_);
    Matrix b = *this;
    while (k) {
      if (k & 1) r = r * b;
      b = b * b;
      k >>= 1;
    }
    return r;
  }

  std::vector<S> apply(const std::vector<S>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<S> r(rows_, dom_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        r[i] = dom_.add(r[i], dom_.mul(at(i, j), v[j]));
    return r;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? "; " : "";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        s += dom_.str(at(i, j));
      }
    }
    return s + "]";
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (dom_ != o.dom_) throw domain_mismatch("matrix domains differ");
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shapes differ");
  }

  D dom_;
  std::size_t rows_, cols_;
  std::vector<S> a_;
};

template <class D>
struct RrefResult {
  Matrix<D> reduced;
  Matrix<D> transform;  // transform * input = reduced
  std::vector<std::size_t> pivot_cols;

  std::size_t rank() const { return pivot_cols.size(); }
};

// Reduced row echelon form with left row operations (pivots normalized by
// left-multiplying with the pivot inverse), valid over division rings.
// Pivot rows are chosen by lowest row index.
template <class D>
RrefResult<D> rref(const Matrix<D>& m) {
  const D& dom = m.domain();
  RrefResult<D> out{m, Matrix<D>::identity(dom, m.rows()), {}};
  Matrix<D>& r = out.reduced;
  Matrix<D>& w = out.transform;
  std::size_t piv_row = 0;
  for (std::size_t col = 0; col < m.cols() && piv_row < m.rows(); ++col) {
    std::size_t sel = piv_row;
    while (sel < m.rows() && dom.is_zero(r.at(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != piv_row) {
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(piv_row, j));
      for (std::size_t j = 0; j < w.cols(); ++j) std::swap(w.at(sel, j), w.at(piv_row, j));
    }
    const auto inv = dom.inv(r.at(piv_row, col));
    for (std::size_t j = 0; j < r.cols(); ++j)
      r.at(piv_row, j) = dom.mul(inv, r.at(piv_row, j));
    for (std::size_t j = 0; j < w.cols(); ++j)
      w.at(piv_row, j) = dom.mul(inv, w.at(piv_row, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == piv_row || dom.is_zero(r.at(i, col))) continue;
      const auto c = r.at(i, col);
      for (std::size_t j = 0; j < r.cols(); ++j)
        r.at(i, j) = dom.sub(r.at(i, j), dom.mul(c, r.at(piv_row, j)));
      for (std::size_t j = 0; j < w.cols(); ++j)
        w.at(i, j) = dom.sub(w.at(i, j), dom.mul(c, w.at(piv_row, j)));
    }
    out.pivot_cols.push_back(col);
    ++piv_row;
  }
  return out;
}

template <class D>
std::size_t rank(const Matrix<D>& m) {
  return rref(m).rank();
}

// Basis of {x : Mx = 0}; dim = cols - rank. The solutions form a right
// subspace (closed under v -> v*lambda).
template <class D>
std::vector<std::vector<typename D::Scalar>> kernel_vectors(const Matrix<D>& m) {
  const D& dom = m.domain();
  RrefResult<D> e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<typename D::Scalar>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<typename D::Scalar> x(m.cols(), dom.zero());
    x[f] = dom.one();
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
      x[e.pivot_cols[r]] = dom.neg(e.reduced.at(r, f));
    out.push_back(std::move(x));
  }
  return out;
}

template <class D>
std::optional<Matrix<D>> inverse(const Matrix<D>& m) {
  if (!m.square()) throw std::invalid_argument("inverse of a nonsquare matrix");
  RrefResult<D> e = rref(m);
  if (e.rank() != m.rows()) return std::nullopt;
  return e.transform;
}

// P^{-1} A P; throws on singular P.
template <class D>
Matrix<D> conjugate(const Matrix<D>& p, const Matrix<D>& a) {
  auto pinv = inverse(p);
  if (!pinv) throw std::invalid_argument("conjugation by a singular matrix");
  return (*pinv) * a * p;
}

// Block-diagonal assembly; the empty list gives the 0x0 matrix.
template <class D>
Matrix<D> direct_sum(const D& dom, const std::vector<Matrix<D>>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.square()) throw std::invalid_argument("direct_sum needs square blocks");
    if (b.domain() != dom) throw domain_mismatch("direct_sum: domains differ");
    n += b.rows();
  }
  Matrix<D> r(dom, n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) r.at(off + i, off + j) = b.at(i, j);
    off += b.rows();
  }
  return r;
}

struct NilpotencyVerdict {
  bool nilpotent = false;
  std::size_t index = 0;  // least k with A^k = 0 when nilpotent
};

template <class D>
NilpotencyVerdict is_nilpotent(const Matrix<D>& a) {
  if (!a.square()) throw std::invalid_argument("nilpotency of a nonsquare matrix");
  const std::size_t n = a.rows();
  if (a.is_zero()) return {true, n == 0 ? std::size_t{0} : std::size_t{1}};
  Matrix<D> pw = a;
  for (std::size_t k = 1; k <= n; ++k) {
    if (pw.is_zero()) return {true, k};
    if (k < n) pw = pw * a;
  }
  return {pw.is_zero(), pw.is_zero() ? n : 0};
}

}  // namespace exalg

#endif  // EXALG_MATRIX_HPP
