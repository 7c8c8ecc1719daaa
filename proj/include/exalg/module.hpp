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

#ifndef EXALG_MODULE_HPP
#define EXALG_MODULE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exalg/closure.hpp"
#include "exalg/matrix.hpp"
#include "exalg/matrix_poly.hpp"
#include "exalg/poly_factor.hpp"
#include "exalg/prng.hpp"
#include "exalg/subspace.hpp"

namespace exalg {

template <class D>
struct IrreducibilityVerdict {
  enum class Status { irreducible, reducible, inconclusive };

  Status status = Status::inconclusive;
  std::optional<Subspace<D>> witness;  // verified invariant subspace when reducible
  bool zero_collection = false;        // reducible because the collection is {0}

  // certificate data; a replay with the same seed reproduces the verdict
  std::string method;
  std::uint64_t seed = 0;
  bool exhaustive = false;  // kernel fully enumerated (or nullity one)
  std::size_t closure_dim = 0;
  std::size_t kernel_vectors_spun = 0;
  bool dual_spin_checked = false;
  std::string note;

  bool irreducible() const { return status == Status::irreducible; }
  bool reducible() const { return status == Status::reducible; }
  bool inconclusive() const { return status == Status::inconclusive; }
};

namespace moddetail {

// All field elements, usable only when the order is small.
template <class D>
std::vector<typename D::Scalar> field_elements(const D& dom) {
  std::vector<typename D::Scalar> out;
  if constexpr (D::kind == DomainKind::prime_field) {
    for (std::uint64_t v = 0; v < dom.order(); ++v) out.push_back(v);
  } else if constexpr (D::kind == DomainKind::extension_field) {
    for (std::uint64_t v = 0; v < dom.order(); ++v) out.push_back(dom.element(v));
  }
  return out;
}

template <class D>
std::vector<Matrix<D>> conj_transpose_all(const std::vector<Matrix<D>>& gens) {
  std::vector<Matrix<D>> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.conj_transpose());
  return out;
}

template <class D>
bool pivot_seq_less(const Subspace<D>& a, const Subspace<D>& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.pivots() < b.pivots();
}

// Norton's criterion driven by one singular nonzero algebra element.
// Returns a definitive verdict. Over small finite fields the kernel is
// enumerated projectively, which makes the criterion complete; a nullity-one
// kernel is complete over every domain.
template <class D>
IrreducibilityVerdict<D> norton(const Matrix<D>& a, const std::vector<Matrix<D>>& gens,
                                const D& dom, std::size_t n, SplitMix64& rng,
                                IrreducibilityVerdict<D> out) {
  using Vec = std::vector<typename D::Scalar>;
  out.method = "norton";
  const auto kernel = kernel_vectors(a);
  const std::size_t nullity = kernel.size();

  std::vector<Vec> to_spin;
  bool exhaustive = nullity == 1;
  if constexpr (D::kind == DomainKind::prime_field ||
                D::kind == DomainKind::extension_field) {
    // projective kernel vectors: leading coefficient one
    const std::uint64_t q = dom.order();
    double count = 0;
    double qp = 1;
    for (std::size_t i = 0; i < nullity; ++i) {
      count += qp;
      qp *= static_cast<double>(q);
    }
    if (count <= 4096.0) {
      exhaustive = true;
      const auto elems = field_elements(dom);
      for (std::size_t lead = 0; lead < nullity; ++lead) {
        const std::size_t tail = nullity - lead - 1;
        std::vector<std::size_t> digits(tail, 0);
        while (true) {
          Vec v = kernel[lead];
          for (std::size_t t = 0; t < tail; ++t) {
            const auto& c = elems[digits[t]];
            if (!dom.is_zero(c))
              for (std::size_t j = 0; j < n; ++j)
                v[j] = dom.add(v[j], dom.mul(kernel[lead + 1 + t][j], c));
          }
          to_spin.push_back(std::move(v));
          std::size_t t = 0;
          while (t < tail && ++digits[t] == elems.size()) digits[t++] = 0;
          if (t == tail) break;
        }
      }
    }
  }
  if (to_spin.empty()) {
    to_spin = kernel;
    if (nullity > 1) {
      // sampled right combinations of the kernel basis
      const auto cf = dom.center();
      for (int trial = 0; trial < 32; ++trial) {
        Vec v(n, dom.zero());
        bool nonzero = false;
        for (std::size_t i = 0; i < nullity; ++i) {
          const auto c = dom.embed_center(cf.sample(rng));
          if (dom.is_zero(c)) continue;
          nonzero = true;
          for (std::size_t j = 0; j < n; ++j)
            v[j] = dom.add(v[j], dom.mul(kernel[i][j], c));
        }
        if (nonzero) to_spin.push_back(std::move(v));
      }
    }
  }

  std::optional<Subspace<D>> best;
  for (const auto& v : to_spin) {
    ++out.kernel_vectors_spun;
    Subspace<D> s = spin(v, gens, dom);
    if (s.is_proper_nonzero() && (!best || pivot_seq_less(s, *best))) best = std::move(s);
  }
  if (best) {
    if (!is_invariant_subspace(*best, gens))
      throw std::logic_error("norton: spin produced a non-invariant subspace");
    out.status = IrreducibilityVerdict<D>::Status::reducible;
    out.witness = std::move(best);
    return out;
  }

  // dual spin of one kernel vector of the conjugate-transposed element
  out.dual_spin_checked = true;
  const auto gens_t = conj_transpose_all(gens);
  const auto dual_kernel = kernel_vectors(a.conj_transpose());
  if (dual_kernel.empty()) throw std::logic_error("norton: dual kernel empty");
  Subspace<D> dual = spin(dual_kernel.front(), gens_t, dom);
  if (dual.is_proper_nonzero()) {
    Subspace<D> w = annihilator(dual);
    if (!w.is_proper_nonzero() || !is_invariant_subspace(w, gens))
      throw std::logic_error("norton: annihilator witness failed verification");
    out.status = IrreducibilityVerdict<D>::Status::reducible;
    out.method = "norton-dual";
    out.witness = std::move(w);
    return out;
  }
  out.status = IrreducibilityVerdict<D>::Status::irreducible;
  out.exhaustive = exhaustive;
  if (!exhaustive) out.note = "kernel sampled, not enumerated";
  return out;
}

}  // namespace moddetail

// Decides irreducibility of the module D^n over the algebra generated by
// `gens`, with a verified witness on the reducible side. The search order is
// deterministic given the seed: full-algebra shortcut, then Norton's
// criterion on the first singular nonzero element found among basis
// elements, pairwise basis products, and seeded random combinations, then
// the division-algebra branch when no singular element exists.
template <class D>
IrreducibilityVerdict<D> is_irreducible(const std::vector<Matrix<D>>& gens, const D& dom,
                                        std::size_t n, std::uint64_t seed = 0) {
  using Verdict = IrreducibilityVerdict<D>;
  Verdict out;
  out.seed = seed;
  SplitMix64 rng(seed ^ 0x9e3779b97f4a7c15ULL);

  std::vector<Matrix<D>> nonzero;
  for (const auto& g : gens) {
    if (g.rows() != n || g.cols() != n || !g.square())
      throw std::invalid_argument("is_irreducible: generator size mismatch");
    if (!g.is_zero()) nonzero.push_back(g);
  }
  if (nonzero.empty()) {
    // the zero collection is reducible by definition
    out.status = Verdict::Status::reducible;
    out.zero_collection = true;
    out.method = "zero-collection";
    out.exhaustive = true;
    if (n >= 2) {
      Subspace<D> w(dom, n);
      std::vector<typename D::Scalar> e1(n, dom.zero());
      e1[0] = dom.one();
      w.insert(std::move(e1));
      out.witness = std::move(w);
    }
    return out;
  }
  if (n == 1) {
    out.status = Verdict::Status::irreducible;
    out.method = "dimension-one";
    out.exhaustive = true;
    return out;
  }

  AlgebraBasis<D> alg = close(nonzero, /*unital=*/false, dom, n);
  out.closure_dim = alg.dim();
  if (alg.is_full()) {
    out.status = Verdict::Status::irreducible;
    out.method = "burnside-full";
    out.exhaustive = true;
    return out;
  }

  // singular-element search: basis, pairwise products, random combinations
  const auto basis = alg.basis();
  auto try_singular = [&](const Matrix<D>& m) -> std::optional<Verdict> {
    if (m.is_zero()) return std::nullopt;
    if (rank(m) == n) return std::nullopt;
    return moddetail::norton(m, nonzero, dom, n, rng, out);
  };
  for (const auto& b : basis)
    if (auto v = try_singular(b)) return *v;
  for (const auto& x : basis)
    for (const auto& y : basis)
      if (auto v = try_singular(x * y)) return *v;
  const auto cf = dom.center();
  for (int trial = 0; trial < 64; ++trial) {
    Matrix<D> m(dom, n, n);
    for (const auto& b : basis) {
      const auto c = cf.sample(rng);
      if (!cf.is_zero(c)) m = m + b.scaled_center(c);
    }
    if (auto v = try_singular(m)) return *v;
  }

  // division-algebra branch: no singular element was found. If every element
  // of the unital closure has an irreducible minimal polynomial over F, the
  // natural module is free over a division algebra and irreducibility is
  // equivalent to one spin being full. A basis element with a reducible
  // minimal polynomial instead hands us a singular element f(b) to run
  // Norton's criterion on.
  AlgebraBasis<D> unital = close(nonzero, /*unital=*/true, dom, n);
  for (const auto& b : unital.basis()) {
    const auto m = min_poly(b);
    const auto pv = poly_irreducible(m);
    if (pv.verdict == PolyVerdict::unknown) {
      out.status = Verdict::Status::inconclusive;
      out.method = "division-algebra";
      out.note = "minimal-polynomial irreducibility unknown (degree cap over Q)";
      return out;
    }
    if (pv.verdict == PolyVerdict::reducible) {
      Matrix<D> fb = eval_poly_at(*pv.factor, b);
      if (fb.is_zero() || rank(fb) == n)
        throw std::logic_error("division branch: f(b) not a proper zero divisor");
      return moddetail::norton(fb, nonzero, dom, n, rng, out);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<typename D::Scalar> ei(n, dom.zero());
    ei[i] = dom.one();
    Subspace<D> s = spin(ei, nonzero, dom);
    if (s.is_proper_nonzero()) {
      if (!is_invariant_subspace(s, nonzero))
        throw std::logic_error("division branch: spin witness failed verification");
      out.status = Verdict::Status::reducible;
      out.method = "division-algebra";
      out.witness = std::move(s);
      return out;
    }
  }
  out.status = Verdict::Status::irreducible;
  out.method = "division-algebra";
  out.exhaustive = true;
  return out;
}

// ---------------------------------------------------------------- chains ---

template <class D>
struct ChainResult {
  bool inconclusive = false;
  std::vector<Subspace<D>> members;     // proper members, strictly ascending
  std::vector<std::size_t> dims;        // 0, ..., n
  std::vector<std::size_t> quotient_dims;
  std::string note;
};

namespace moddetail {

// Change of basis [W | completion]; the first dim(W) columns span W.
template <class D>
Matrix<D> adapted_basis(const Subspace<D>& w) {
  const D& dom = w.domain();
  const std::size_t n = w.ambient();
  Matrix<D> p(dom, n, n);
  std::size_t col = 0;
  for (const auto& v : w.basis()) {
    for (std::size_t i = 0; i < n; ++i) p.at(i, col) = v[i];
    ++col;
  }
  for (std::size_t j : w.completion_coords()) {
    p.at(j, col) = dom.one();
    ++col;
  }
  return p;
}

template <class D>
void chain_recurse(const std::vector<Matrix<D>>& gens, const D& dom, std::size_t m,
                   std::uint64_t seed, std::uint64_t& counter, ChainResult<D>& result,
                   // maps a vector in current coordinates to ambient coordinates
                   const std::vector<std::vector<typename D::Scalar>>& frame,
                   const Subspace<D>& offset, std::size_t ambient_n,
                   std::vector<Subspace<D>>& collected) {
  if (m == 0) return;
  const std::uint64_t sub_seed = SplitMix64::for_trial(seed, counter++).next();
  auto verdict = is_irreducible(gens, dom, m, sub_seed);
  if (verdict.inconclusive()) {
    result.inconclusive = true;
    result.note = verdict.note;
    return;
  }
  if (verdict.irreducible() || m == 1 || !verdict.witness) return;

  const Subspace<D>& w = *verdict.witness;
  Matrix<D> p = adapted_basis(w);
  auto pinv_opt = inverse(p);
  if (!pinv_opt) throw std::logic_error("chain: adapted basis not invertible");
  const Matrix<D>& pinv = *pinv_opt;
  const std::size_t d = w.dim();

  std::vector<Matrix<D>> sub_gens, quot_gens;
  for (const auto& g : gens) {
    Matrix<D> c = pinv * g * p;
    for (std::size_t i = d; i < m; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (!dom.is_zero(c.at(i, j)))
          throw std::logic_error("chain: witness subspace not invariant");
    Matrix<D> top(dom, d, d), bottom(dom, m - d, m - d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) top.at(i, j) = c.at(i, j);
    for (std::size_t i = d; i < m; ++i)
      for (std::size_t j = d; j < m; ++j) bottom.at(i - d, j - d) = c.at(i, j);
    sub_gens.push_back(std::move(top));
    quot_gens.push_back(std::move(bottom));
  }

  // frames for the two halves: columns of P mapped through the current frame
  auto lift_column = [&](std::size_t col) {
    std::vector<typename D::Scalar> v(ambient_n, dom.zero());
    for (std::size_t r = 0; r < m; ++r) {
      const auto& c = p.at(r, col);
      if (dom.is_zero(c)) continue;
      for (std::size_t i = 0; i < ambient_n; ++i)
        v[i] = dom.add(v[i], dom.mul(frame[r][i], c));
    }
    return v;
  };
  std::vector<std::vector<typename D::Scalar>> sub_frame, quot_frame;
  for (std::size_t c = 0; c < d; ++c) sub_frame.push_back(lift_column(c));
  for (std::size_t c = d; c < m; ++c) quot_frame.push_back(lift_column(c));

  // left part: proper members inside W
  chain_recurse(sub_gens, dom, d, seed, counter, result, sub_frame, offset, ambient_n,
                collected);
  if (result.inconclusive) return;
  // W itself (in ambient coordinates, joined with the offset)
  Subspace<D> w_ambient = offset;
  for (const auto& v : sub_frame) w_ambient.insert(v);
  collected.push_back(w_ambient);
  // right part: members between W and the current space
  chain_recurse(quot_gens, dom, m - d, seed, counter, result, quot_frame, w_ambient,
                ambient_n, collected);
}

}  // namespace moddetail

// Maximal chain of invariant subspaces with irreducible quotient actions,
// found by recursively splitting along reducibility witnesses. The recursion
// keeps everything in the one matrix type by choosing echelon-completion
// complements rather than abstract quotients.
template <class D>
ChainResult<D> composition_chain(const std::vector<Matrix<D>>& gens, const D& dom,
                                 std::size_t n, std::uint64_t seed = 0) {
  ChainResult<D> result;
  std::vector<std::vector<typename D::Scalar>> frame;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<typename D::Scalar> e(n, dom.zero());
    e[i] = dom.one();
    frame.push_back(std::move(e));
  }
  std::uint64_t counter = 0;
  std::vector<Subspace<D>> collected;
  moddetail::chain_recurse(gens, dom, n, seed, counter, result, frame,
                           Subspace<D>::zero(dom, n), n, collected);
  if (result.inconclusive) return result;
  result.members = std::move(collected);
  result.dims.push_back(0);
  for (const auto& s : result.members) result.dims.push_back(s.dim());
  result.dims.push_back(n);
  for (std::size_t i = 1; i < result.dims.size(); ++i)
    result.quotient_dims.push_back(result.dims[i] - result.dims[i - 1]);
  return result;
}

// ------------------------------------------------------- triangularization ---

template <class D>
struct TriangularizationReport {
  enum class Status { triangularized, obstructed, inconclusive };

  Status status = Status::inconclusive;
  std::vector<std::size_t> chain_dims;
  std::optional<Matrix<D>> p;
  std::vector<Matrix<D>> triangular_forms;
  // per generator, the diagonal of P^{-1} A P (inner eigenvalues)
  std::vector<std::vector<typename D::Scalar>> inner_eigenvalues;
  std::size_t obstruction_dim = 0;  // first irreducible quotient of dim >= 2
  std::string note;
};

namespace moddetail {

// One new basis column per chain step; deterministic because chain members
// carry canonical echelon bases.
template <class D>
Matrix<D> chain_adapted_basis(const std::vector<Subspace<D>>& members, const D& dom,
                              std::size_t n) {
  Matrix<D> p(dom, n, n);
  Subspace<D> acc(dom, n);
  std::size_t col = 0;
  auto add_new_rows = [&](const Subspace<D>& s) {
    for (const auto& v : s.basis()) {
      if (acc.contains(v)) continue;
      for (std::size_t i = 0; i < n; ++i) p.at(i, col) = v[i];
      acc.insert(v);
      ++col;
    }
  };
  for (const auto& s : members) add_new_rows(s);
  add_new_rows(Subspace<D>::full(dom, n));
  if (col != n) throw std::logic_error("chain basis incomplete");
  return p;
}

}  // namespace moddetail

template <class D>
TriangularizationReport<D> triangularize(const std::vector<Matrix<D>>& gens,
                                         const D& dom, std::size_t n,
                                         std::uint64_t seed = 0) {
  TriangularizationReport<D> report;
  auto chain = composition_chain(gens, dom, n, seed);
  if (chain.inconclusive) {
    report.status = TriangularizationReport<D>::Status::inconclusive;
    report.note = chain.note;
    return report;
  }
  report.chain_dims = chain.dims;
  for (std::size_t i = 0; i < chain.quotient_dims.size(); ++i) {
    if (chain.quotient_dims[i] >= 2) {
      report.status = TriangularizationReport<D>::Status::obstructed;
      report.obstruction_dim = chain.quotient_dims[i];
      report.note = "irreducible quotient of dimension " +
                    std::to_string(chain.quotient_dims[i]) + " above chain member of dim " +
                    std::to_string(chain.dims[i]);
      return report;
    }
  }
  Matrix<D> p = moddetail::chain_adapted_basis(chain.members, dom, n);
  auto pinv = inverse(p);
  if (!pinv) throw std::logic_error("triangularize: chain basis not invertible");
  report.status = TriangularizationReport<D>::Status::triangularized;
  report.p = p;
  for (const auto& g : gens) {
    Matrix<D> t = (*pinv) * g * p;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (!dom.is_zero(t.at(i, j)))
          throw std::logic_error("triangularize: conjugated generator not triangular");
    std::vector<typename D::Scalar> diag;
    for (std::size_t i = 0; i < n; ++i) diag.push_back(t.at(i, i));
    report.triangular_forms.push_back(std::move(t));
    report.inner_eigenvalues.push_back(std::move(diag));
  }
  return report;
}

// Inner eigenvalues of one matrix relative to a given triangularizing chain
// (all quotients one-dimensional). Throws if the chain does not
// triangularize A.
template <class D>
std::vector<typename D::Scalar> inner_eigenvalues(const Matrix<D>& a,
                                                  const std::vector<Subspace<D>>& chain,
                                                  const D& dom) {
  const std::size_t n = a.rows();
  Matrix<D> p = moddetail::chain_adapted_basis(chain, dom, n);
  auto pinv = inverse(p);
  if (!pinv) throw std::invalid_argument("inner_eigenvalues: chain basis singular");
  Matrix<D> t = (*pinv) * a * p;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!dom.is_zero(t.at(i, j)))
        throw std::invalid_argument("chain does not triangularize the matrix");
  std::vector<typename D::Scalar> diag;
  for (std::size_t i = 0; i < n; ++i) diag.push_back(t.at(i, i));
  return diag;
}

// ---------------------------------------------------------------- commutant ---

// Solves X*B = B*X for all generators B by flattening over the center
// subfield; the result is a unital algebra.
template <class D>
AlgebraBasis<D> commutant(const std::vector<Matrix<D>>& gens, const D& dom,
                          std::size_t n) {
  using CF = typename D::Center;
  const CF cf = dom.center();
  const std::size_t width = n * n * D::center_dim;
  // columns: coordinate basis of the X space; rows: stacked commutators
  Matrix<CF> sys(cf, gens.size() * width, width);
  for (std::size_t col = 0; col < width; ++col) {
    std::vector<typename CF::Scalar> unit(width, cf.zero());
    unit[col] = cf.one();
    Matrix<D> u = unflatten(dom, n, n, unit);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      auto commutator = flatten(u * gens[g] - gens[g] * u);
      for (std::size_t r = 0; r < width; ++r) sys.at(g * width + r, col) = commutator[r];
    }
  }
  std::vector<Matrix<D>> solutions;
  for (const auto& v : kernel_vectors(sys)) solutions.push_back(unflatten(dom, n, n, v));
  return close(solutions, /*unital=*/true, dom, n);
}

// ------------------------------------------------------------ hyperinvariant ---

template <class D>
struct HyperinvariantReport {
  enum class Status { none, witness_found, inconclusive };

  Status status = Status::inconclusive;
  std::optional<Subspace<D>> witness;         // invariant under A and its commutant
  Polynomial<typename D::Center> minimal;
  PolyVerdict min_poly_verdict = PolyVerdict::unknown;
  std::size_t commutant_dim = 0;
  bool lemma_consistent = false;  // subspace verdict agrees with min-poly verdict
  std::string note;
};

// A has no nontrivial hyperinvariant subspace iff its minimal polynomial is
// irreducible; both routes are computed and compared, and the witness is
// ker(f(A)) for a proper divisor f when one exists.
template <class D>
HyperinvariantReport<D> hyperinvariant_check(const Matrix<D>& a, const D& dom,
                                             std::uint64_t seed = 0) {
  static_assert(D::commutative, "hyperinvariant check is a field-domain operation");
  if (!a.square() || a.rows() < 2)
    throw std::invalid_argument("hyperinvariant_check needs a square matrix, n > 1");
  const std::size_t n = a.rows();
  HyperinvariantReport<D> report{HyperinvariantReport<D>::Status::inconclusive,
                                 std::nullopt,
                                 min_poly(a),
                                 PolyVerdict::unknown,
                                 0,
                                 false,
                                 ""};
  AlgebraBasis<D> comm = commutant(std::vector<Matrix<D>>{a}, dom, n);
  report.commutant_dim = comm.dim();
  std::vector<Matrix<D>> joint{a};
  for (auto& b : comm.basis()) joint.push_back(std::move(b));
  auto joint_verdict = is_irreducible(joint, dom, n, seed);
  auto pv = poly_irreducible(report.minimal);
  report.min_poly_verdict = pv.verdict;
  if (joint_verdict.inconclusive() || pv.verdict == PolyVerdict::unknown) {
    report.note = "inconclusive irreducibility over Q";
    return report;
  }
  const bool has_hyper = joint_verdict.reducible();
  report.lemma_consistent = has_hyper == (pv.verdict == PolyVerdict::reducible);
  if (pv.verdict == PolyVerdict::reducible) {
    Matrix<D> fa = eval_poly_at(*pv.factor, a);
    Subspace<D> w(dom, n);
    for (auto& v : kernel_vectors(fa)) w.insert(std::move(v));
    if (w.is_proper_nonzero() && is_invariant_subspace(w, joint)) {
      report.witness = std::move(w);
    } else if (joint_verdict.witness) {
      report.witness = joint_verdict.witness;  // fall back to the joint witness
    }
    report.status = HyperinvariantReport<D>::Status::witness_found;
  } else {
    report.status = HyperinvariantReport<D>::Status::none;
  }
  return report;
}

// ------------------------------------------------------ absolute irreducibility ---

template <class D>
struct AbsoluteIrreducibility {
  bool absolutely_irreducible = false;
  std::size_t closure_dim = 0;
  std::size_t commutant_dim = 0;
  IrreducibilityVerdict<D> irreducibility;
};

// Over a field, absolute irreducibility is equivalent to the generated
// algebra being all of M_n(F). The commutant and the plain irreducibility
// verdict are reported alongside for the field audit.
template <class D>
AbsoluteIrreducibility<D> is_absolutely_irreducible(const std::vector<Matrix<D>>& gens,
                                                    const D& dom, std::size_t n,
                                                    std::uint64_t seed = 0) {
  static_assert(D::commutative, "absolute irreducibility is a field-domain operation");
  AbsoluteIrreducibility<D> out;
  AlgebraBasis<D> alg = close(gens, /*unital=*/false, dom, n);
  out.closure_dim = alg.dim();
  out.absolutely_irreducible = alg.is_full();
  out.commutant_dim = commutant(gens, dom, n).dim();
  out.irreducibility = is_irreducible(gens, dom, n, seed);
  return out;
}

// ----------------------------------------------------------------- compress ---

template <class D>
struct Compression {
  Subspace<D> range;                  // R = range(T)
  std::vector<Matrix<D>> compressed;  // T*S restricted to R, in range coordinates
};

// The compression T*S|_R of a family to the range of T; Lemma-style
// invariance: if the family is an irreducible semigroup, the compression is
// irreducible on R.
template <class D>
Compression<D> compress(const Matrix<D>& t, const std::vector<Matrix<D>>& family,
                        const D& dom) {
  if (t.is_zero()) throw std::invalid_argument("compress: T must be nonzero");
  const std::size_t n = t.rows();
  Subspace<D> range(dom, n);
  for (std::size_t j = 0; j < t.cols(); ++j) {
    std::vector<typename D::Scalar> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = t.at(i, j);
    range.insert(std::move(col));
  }
  const std::size_t d = range.dim();
  Compression<D> out{range, {}};
  for (const auto& s : family) {
    Matrix<D> c(dom, d, d);
    for (std::size_t j = 0; j < d; ++j) {
      auto w = t.apply(s.apply(out.range.basis()[j]));
      auto coords = out.range.coordinates(w);  // throws if TS leaves the range
      for (std::size_t i = 0; i < d; ++i) c.at(i, j) = coords[i];
    }
    out.compressed.push_back(std::move(c));
  }
  return out;
}

}  // namespace exalg

#endif  // EXALG_MODULE_HPP
