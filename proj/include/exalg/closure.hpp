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

#ifndef EXALG_CLOSURE_HPP
#define EXALG_CLOSURE_HPP

#include <deque>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "exalg/matrix.hpp"
#include "exalg/matrix_poly.hpp"
#include "exalg/subspace.hpp"

namespace exalg {

// F-linear span of n x n matrices, echelonized over the center subfield.
// Over a field this is an F-span of dimension <= n^2; over the quaternions
// the flattening has 4 rational coordinates per entry, so dim <= 4 n^2.
template <class D>
class MatrixSpan {
 public:
  using CF = typename D::Center;

  MatrixSpan(D dom, std::size_t n)
      : dom_(std::move(dom)), n_(n), ech_(dom_.center(), n * n * D::center_dim) {}

  const D& domain() const { return dom_; }
  std::size_t n() const { return n_; }
  std::size_t dim() const { return ech_.dim(); }
  std::size_t full_dim() const { return n_ * n_ * D::center_dim; }
  bool is_full() const { return dim() == full_dim(); }

  bool insert(const Matrix<D>& m) {
    if (m.rows() != n_ || m.cols() != n_)
      throw std::invalid_argument("span: matrix size mismatch");
    if (m.domain() != dom_) throw domain_mismatch("span: domains differ");
    return ech_.insert(flatten(m));
  }

  bool contains(const Matrix<D>& m) const { return ech_.contains(flatten(m)); }
  bool contains_span(const MatrixSpan& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_element(i))) return false;
    return true;
  }

  // i-th element of the canonical reduced basis.
  Matrix<D> basis_element(std::size_t i) const {
    return unflatten(dom_, n_, n_, ech_.basis()[i]);
  }
  std::vector<Matrix<D>> basis() const {
    std::vector<Matrix<D>> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_element(i));
    return out;
  }

 private:
  D dom_;
  std::size_t n_;
  Subspace<CF> ech_;
};

// Echelonized basis of the F-algebra generated by a finite set of matrices,
// closed under multiplication.
template <class D>
class AlgebraBasis {
 public:
  AlgebraBasis(D dom, std::size_t n, bool unital)
      : span_(std::move(dom), n), unital_(unital) {}

  const MatrixSpan<D>& span() const { return span_; }
  MatrixSpan<D>& span() { return span_; }
  const D& domain() const { return span_.domain(); }
  std::size_t n() const { return span_.n(); }
  std::size_t dim() const { return span_.dim(); }
  bool unital() const { return unital_; }
  bool is_full() const { return span_.is_full(); }
  bool contains(const Matrix<D>& m) const { return span_.contains(m); }
  Matrix<D> basis_element(std::size_t i) const { return span_.basis_element(i); }
  std::vector<Matrix<D>> basis() const { return span_.basis(); }

 private:
  MatrixSpan<D> span_;
  bool unital_;
};

// Worklist closure: echelonize the generators (plus I when unital), then
// multiply representatives pairwise in FIFO order, inserting every product
// that is independent, until no product is new. Representatives are the
// reduced vectors at insertion time, so runs are reproducible.
template <class D>
AlgebraBasis<D> close(const std::vector<Matrix<D>>& gens, bool unital, const D& dom,
                      std::size_t n) {
  for (const auto& g : gens) {
    if (g.rows() != n || g.cols() != n)
      throw std::invalid_argument("close: generator size mismatch");
    if (g.domain() != dom) throw domain_mismatch("close: generator domain mismatch");
  }
  AlgebraBasis<D> a(dom, n, unital);
  // representatives are the matrices whose insertion grew the span; products
  // over them cover the span's products by bilinearity
  std::vector<Matrix<D>> reps;
  std::deque<std::pair<std::size_t, std::size_t>> work;
  auto insert = [&](const Matrix<D>& m) {
    if (!a.span().insert(m)) return;
    reps.push_back(m);
    const std::size_t k = reps.size() - 1;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      work.emplace_back(k, i);
      if (i != k) work.emplace_back(i, k);
    }
  };
  if (unital) insert(Matrix<D>::identity(dom, n));
  for (const auto& g : gens) insert(g);
  while (!work.empty()) {
    if (a.is_full()) break;  // no product can add a dimension
    auto [i, j] = work.front();
    work.pop_front();
    insert(reps[i] * reps[j]);
  }
  return a;
}

// Span of all pairwise products {x*y}; not necessarily closed.
template <class D>
MatrixSpan<D> product_space(const MatrixSpan<D>& x, const MatrixSpan<D>& y) {
  if (x.n() != y.n()) throw std::invalid_argument("product_space: sizes differ");
  MatrixSpan<D> out(x.domain(), x.n());
  const auto bx = x.basis();
  const auto by = y.basis();
  for (const auto& a : bx)
    for (const auto& b : by) out.insert(a * b);
  return out;
}

// Dimension sequence of A ⊇ A^2 ⊇ A^3 ⊇ ..., stopping at zero or at the
// first repeat. Requires a multiplicatively closed span (the chain is not
// monotone otherwise).
template <class D>
std::vector<std::size_t> power_chain(const AlgebraBasis<D>& a) {
  std::vector<std::size_t> dims;
  MatrixSpan<D> base = a.span();
  dims.push_back(base.dim());
  if (base.dim() == 0) return dims;
  MatrixSpan<D> prev = base;
  while (true) {
    MatrixSpan<D> next = product_space(prev, base);
    if (!prev.contains_span(next))
      throw std::logic_error("power_chain: span is not multiplicatively closed");
    dims.push_back(next.dim());
    if (next.dim() == 0 || next.dim() == prev.dim()) break;
    prev = std::move(next);
  }
  return dims;
}

struct AlgebraNilpotency {
  bool nilpotent = false;
  std::size_t index = 0;  // least k with A^k = 0
  std::vector<std::size_t> dims;
};

template <class D>
AlgebraNilpotency is_nilpotent_algebra(const AlgebraBasis<D>& a) {
  AlgebraNilpotency out;
  out.dims = power_chain(a);
  out.nilpotent = out.dims.back() == 0;
  out.index = out.nilpotent ? out.dims.size() : 0;
  return out;
}

// N_sigma of a finite set: the span of its nilpotent members.
template <class D>
struct NilpotentSpan {
  MatrixSpan<D> span;
  std::vector<Matrix<D>> witnesses;  // the nilpotent members
};

template <class D>
NilpotentSpan<D> nilpotent_span(const std::vector<Matrix<D>>& c, const D& dom,
                                std::size_t n) {
  NilpotentSpan<D> out{MatrixSpan<D>(dom, n), {}};
  for (const auto& m : c) {
    if (is_nilpotent(m).nilpotent) {
      out.span.insert(m);
      out.witnesses.push_back(m);
    }
  }
  return out;
}

// ----------------------------------------------------------- semigroups ---

template <class D>
std::string matrix_key(const Matrix<D>& m) {
  const D& dom = m.domain();
  std::string key;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      key += dom.str(m.at(i, j));
      key += '|';
    }
  return key;
}

template <class D>
struct SemigroupSet {
  std::vector<Matrix<D>> elems;  // distinct, in discovery order
  bool closed = false;
  bool cap_exceeded = false;
};

// Multiplicative closure as a set of distinct matrices; gives up with
// cap_exceeded once more than `cap` elements appear (infinite semigroups
// exist over Q).
template <class D>
SemigroupSet<D> semigroup_close(const std::vector<Matrix<D>>& gens, std::size_t cap,
                                const D& dom, std::size_t n) {
  if (cap < 1) throw std::invalid_argument("semigroup cap must be >= 1");
  SemigroupSet<D> out;
  std::map<std::string, std::size_t> seen;
  std::deque<std::pair<std::size_t, std::size_t>> work;
  auto insert = [&](const Matrix<D>& m) -> bool {
    auto key = matrix_key(m);
    if (seen.count(key)) return true;
    if (out.elems.size() >= cap) {
      out.cap_exceeded = true;
      return false;
    }
    seen.emplace(std::move(key), out.elems.size());
    out.elems.push_back(m);
    const std::size_t k = out.elems.size() - 1;
    for (std::size_t i = 0; i < out.elems.size(); ++i) {
      work.emplace_back(k, i);
      if (i != k) work.emplace_back(i, k);
    }
    return true;
  };
  for (const auto& g : gens) {
    if (g.rows() != n || g.cols() != n || g.domain() != dom)
      throw std::invalid_argument("semigroup_close: bad generator");
    if (!insert(g)) return out;
  }
  while (!work.empty()) {
    auto [i, j] = work.front();
    work.pop_front();
    if (!insert(out.elems[i] * out.elems[j])) return out;
  }
  out.closed = true;
  return out;
}

// Smallest set containing j_gens with S*J ⊆ J and J*S ⊆ J, for a finite
// closed semigroup S.
template <class D>
SemigroupSet<D> ideal_close(const SemigroupSet<D>& s,
                            const std::vector<Matrix<D>>& j_gens, std::size_t cap) {
  if (!s.closed) throw std::invalid_argument("ideal_close needs a closed semigroup");
  SemigroupSet<D> out;
  std::map<std::string, std::size_t> seen;
  std::deque<std::size_t> work;
  auto insert = [&](const Matrix<D>& m) -> bool {
    auto key = matrix_key(m);
    if (seen.count(key)) return true;
    if (out.elems.size() >= cap) {
      out.cap_exceeded = true;
      return false;
    }
    seen.emplace(std::move(key), out.elems.size());
    out.elems.push_back(m);
    work.push_back(out.elems.size() - 1);
    return true;
  };
  for (const auto& g : j_gens)
    if (!insert(g)) return out;
  while (!work.empty()) {
    const std::size_t j = work.front();
    work.pop_front();
    for (const auto& e : s.elems) {
      if (!insert(e * out.elems[j])) return out;
      if (!insert(out.elems[j] * e)) return out;
    }
  }
  out.closed = true;
  return out;
}

}  // namespace exalg

#endif  // EXALG_CLOSURE_HPP
