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

#include <gtest/gtest.h>

#include "exalg/matrix_poly.hpp"
#include "exalg/quaternion.hpp"
#include "oracles.hpp"

namespace exalg {
namespace {

using MQ = Matrix<RationalField>;
using MF = Matrix<GFpField>;
using MH = Matrix<QuaternionRing>;
using PQ = Polynomial<RationalField>;
using PF = Polynomial<GFpField>;

RationalField QQ;
QuaternionRing HH;

TEST(Rref, IdentityAndUnits) {
  auto i3 = MQ::identity(QQ, 3);
  auto e = rref(i3);
  EXPECT_EQ(e.rank(), 3u);
  EXPECT_EQ(e.reduced, i3);
  auto e12 = MQ::unit(QQ, 2, 0, 1);
  auto r = rref(e12);
  EXPECT_EQ(r.rank(), 1u);
  EXPECT_EQ(r.reduced, e12);  // already echelon
}

TEST(Rref, TransformWitness) {
  SplitMix64 rng(5);
  for (int t = 0; t < 40; ++t) {
    auto m = oracles::random_matrix(QQ, 3, rng);
    auto e = rref(m);
    EXPECT_EQ(e.transform * m, e.reduced);
  }
  GFpField f5(5);
  for (int t = 0; t < 40; ++t) {
    auto m = oracles::random_matrix(f5, 4, rng);
    auto e = rref(m);
    EXPECT_EQ(e.transform * m, e.reduced);
  }
}

TEST(Rref, QuaternionExample) {
  // [[1, i], [j, k]]: k != j*i (j*i = -k), so the rank is 2
  MH m(HH, 2, 2);
  m.at(0, 0) = HH.one();
  m.at(0, 1) = HH.unit_i();
  m.at(1, 0) = HH.unit_j();
  m.at(1, 1) = HH.unit_k();
  EXPECT_EQ(rank(m), 2u);
  auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(*inv * m, MH::identity(HH, 2));
  EXPECT_EQ(m * *inv, MH::identity(HH, 2));
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_vectors(MQ(QQ, 3, 3)).size(), 3u);
  EXPECT_TRUE(kernel_vectors(MQ::identity(QQ, 3)).empty());
  auto kv = kernel_vectors(MQ::unit(QQ, 2, 0, 0));
  ASSERT_EQ(kv.size(), 1u);
  EXPECT_EQ(kv[0][0], Rat(0));
  EXPECT_EQ(kv[0][1], Rat(1));
}

TEST(Kernel, RankNullity) {
  SplitMix64 rng(9);
  GFpField f3(3);
  for (int t = 0; t < 50; ++t) {
    auto m = oracles::random_matrix(f3, 4, rng);
    EXPECT_EQ(rank(m) + kernel_vectors(m).size(), 4u);
  }
  for (int t = 0; t < 30; ++t) {
    auto m = oracles::random_matrix(HH, 3, rng);
    EXPECT_EQ(rank(m) + kernel_vectors(m).size(), 3u);
    for (const auto& v : kernel_vectors(m)) {
      auto mv = m.apply(v);
      for (const auto& x : mv) EXPECT_TRUE(HH.is_zero(x));
    }
  }
}

TEST(Companion, Examples) {
  EXPECT_EQ(companion(PQ::from_ints(QQ, {-5, 1})), MQ::from_ints(QQ, 1, 1, {5}));
  EXPECT_EQ(companion(PQ::from_ints(QQ, {1, 0, 1})),
            MQ::from_ints(QQ, 2, 2, {0, -1, 1, 0}));
  GFpField f2(2);
  EXPECT_EQ(companion(PF::from_ints(f2, {1, 1, 1})),
            MF::from_ints(f2, 2, 2, {0, 1, 1, 1}));
  EXPECT_THROW(companion(PQ::from_ints(QQ, {1, 2})), std::invalid_argument);
}

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(MQ::identity(QQ, 2)), PQ::from_ints(QQ, {1, -2, 1}));
  EXPECT_EQ(char_poly(MQ::unit(QQ, 2, 0, 1)), PQ::from_ints(QQ, {0, 0, 1}));
  auto f = PQ::from_ints(QQ, {3, -1, 2, 1});
  EXPECT_EQ(char_poly(companion(f)), f);
}

TEST(CharPoly, BerkowitzMatchesLaplace) {
  SplitMix64 rng(31);
  for (int t = 0; t < 25; ++t) {
    auto m = oracles::random_matrix(QQ, 4, rng);
    EXPECT_EQ(char_poly(m), oracles::char_poly_laplace(m));
  }
  GFpField f2(2);
  for (int t = 0; t < 25; ++t) {
    auto m = oracles::random_matrix(f2, 4, rng);
    EXPECT_EQ(char_poly(m), oracles::char_poly_laplace(m));
  }
  GFextField f4 = make_extension_field(2, {1, 1, 1});
  for (int t = 0; t < 10; ++t) {
    auto m = oracles::random_matrix(f4, 3, rng);
    EXPECT_EQ(char_poly(m), oracles::char_poly_laplace(m));
  }
}

TEST(CharPoly, CayleyHamilton) {
  SplitMix64 rng(37);
  GFpField f7(7);
  for (int t = 0; t < 30; ++t) {
    auto m = oracles::random_matrix(f7, 5, rng);
    EXPECT_TRUE(eval_poly_at(char_poly(m), m).is_zero());
  }
  for (int t = 0; t < 15; ++t) {
    auto m = oracles::random_matrix(QQ, 4, rng);
    EXPECT_TRUE(eval_poly_at(char_poly(m), m).is_zero());
  }
}

TEST(MinPoly, ExamplesAndDivisibility) {
  auto f = PQ::from_ints(QQ, {1, 0, 1});
  EXPECT_EQ(min_poly(companion(f)), f);
  auto scalar = MQ::identity(QQ, 3).scaled_center(Rat(5));
  EXPECT_EQ(min_poly(scalar), PQ::from_ints(QQ, {-5, 1}));
  SplitMix64 rng(41);
  GFpField f3(3);
  for (int t = 0; t < 30; ++t) {
    auto m = oracles::random_matrix(f3, 4, rng);
    auto mp = min_poly(m);
    auto cp = char_poly(m);
    EXPECT_TRUE(mp.divides(cp));
    EXPECT_TRUE(eval_poly_at(mp, m).is_zero());
  }
}

TEST(MinPoly, SimilarityInvariance) {
  SplitMix64 rng(43);
  GFpField f5(5);
  for (int t = 0; t < 20; ++t) {
    auto m = oracles::random_matrix(f5, 4, rng);
    auto p = oracles::random_invertible(f5, 4, rng);
    EXPECT_EQ(min_poly(conjugate(p, m)), min_poly(m));
  }
  for (int t = 0; t < 10; ++t) {
    auto m = oracles::random_matrix(QQ, 3, rng);
    auto p = oracles::random_invertible(QQ, 3, rng);
    EXPECT_EQ(min_poly(conjugate(p, m)), min_poly(m));
  }
}

TEST(MinPoly, QuaternionCenterAgreesWithScalarFormula) {
  SplitMix64 rng(47);
  for (int t = 0; t < 30; ++t) {
    auto q = HH.sample(rng);
    MH m(HH, 1, 1);
    m.at(0, 0) = q;
    EXPECT_EQ(min_poly(m), quat_min_poly_over_center(q));
  }
}

TEST(MatrixIrreducible, Examples) {
  EXPECT_EQ(matrix_is_irreducible(companion(PQ::from_ints(QQ, {1, 0, 1}))).verdict,
            PolyVerdict::irreducible);
  auto d = MQ::from_ints(QQ, 2, 2, {1, 0, 0, 2});
  auto v = matrix_is_irreducible(d);
  EXPECT_EQ(v.verdict, PolyVerdict::reducible);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_TRUE(v.witness->is_proper_nonzero());
  EXPECT_TRUE(is_invariant_subspace(*v.witness, std::vector<MQ>{d}));
  GFpField f2(2);
  EXPECT_EQ(matrix_is_irreducible(companion(PF::from_ints(f2, {1, 1, 1}))).verdict,
            PolyVerdict::irreducible);
  // 1x1 matrices count as irreducible
  EXPECT_EQ(matrix_is_irreducible(MQ::from_ints(QQ, 1, 1, {3})).verdict,
            PolyVerdict::irreducible);
}

TEST(MatrixIrreducible, CyclicVectorStructure) {
  // companion of an irreducible polynomial: every nonzero vector is cyclic
  GFpField f2(2);
  auto c = companion(PF::from_ints(f2, {1, 1, 0, 1}));  // x^3 + x + 1
  for (std::uint64_t mask = 1; mask < 8; ++mask) {
    std::vector<GFpField::Scalar> v{mask & 1, (mask >> 1) & 1, (mask >> 2) & 1};
    EXPECT_TRUE(spin(v, std::vector<MF>{c}, f2).is_full());
  }
}

TEST(Nilpotency, Examples) {
  EXPECT_TRUE(is_nilpotent(MQ::unit(QQ, 2, 0, 1)).nilpotent);
  EXPECT_EQ(is_nilpotent(MQ::unit(QQ, 2, 0, 1)).index, 2u);
  EXPECT_FALSE(is_nilpotent(MQ::identity(QQ, 2)).nilpotent);
  auto ones = MQ::from_ints(QQ, 3, 3, {0, 1, 1, 0, 0, 1, 0, 0, 0});
  auto v = is_nilpotent(ones);
  EXPECT_TRUE(v.nilpotent);
  EXPECT_EQ(v.index, 3u);
}

TEST(Triangularizability, SingleMatrixExamples) {
  EXPECT_FALSE(f_triangularizable_single(companion(PQ::from_ints(QQ, {1, 0, 1})))
                   .triangularizable);
  auto strict = MQ::unit(QQ, 3, 0, 1);
  auto v = f_triangularizable_single(strict);
  EXPECT_TRUE(v.triangularizable);
  ASSERT_EQ(v.eigenvalues.size(), 1u);
  EXPECT_EQ(v.eigenvalues[0].first, Rat(0));
  MH di(HH, 1, 1);
  di.at(0, 0) = HH.unit_i();
  EXPECT_FALSE(f_triangularizable_single(di).triangularizable);
}

TEST(Conjugate, Examples) {
  auto a = MQ::from_ints(QQ, 2, 2, {1, 2, 3, 4});
  EXPECT_EQ(conjugate(MQ::identity(QQ, 2), a), a);
  SplitMix64 rng(53);
  auto p = oracles::random_invertible(QQ, 2, rng);
  EXPECT_EQ(conjugate(p, MQ::identity(QQ, 2)), MQ::identity(QQ, 2));
  auto swap = MQ::from_ints(QQ, 2, 2, {0, 1, 1, 0});
  EXPECT_EQ(conjugate(swap, MQ::unit(QQ, 2, 0, 0)), MQ::unit(QQ, 2, 1, 1));
  EXPECT_THROW(conjugate(MQ(QQ, 2, 2), a), std::invalid_argument);
}

TEST(DirectSum, Examples) {
  auto c = MQ::from_ints(QQ, 1, 1, {3});
  auto d = MQ::from_ints(QQ, 1, 1, {4});
  EXPECT_EQ(direct_sum(QQ, {c, d}), MQ::from_ints(QQ, 2, 2, {3, 0, 0, 4}));
  auto comp = companion(PQ::from_ints(QQ, {1, 0, 1}));
  auto cc = direct_sum(QQ, {comp, comp});
  EXPECT_EQ(cc.rows(), 4u);
  EXPECT_EQ(min_poly(cc), PQ::from_ints(QQ, {1, 0, 1}));
  EXPECT_EQ(direct_sum(QQ, {}).rows(), 0u);
}

TEST(Subspace, CanonicalForm) {
  Subspace<RationalField> a(QQ, 3), b(QQ, 3);
  a.insert({Rat(1), Rat(1), Rat(0)});
  a.insert({Rat(0), Rat(1), Rat(1)});
  b.insert({Rat(1), Rat(0), Rat(-1)});
  b.insert({Rat(0), Rat(1), Rat(1)});
  EXPECT_TRUE(a == b);  // same span, same reduced basis
  EXPECT_TRUE(a.contains(std::vector<Rat>{Rat(2), Rat(3), Rat(1)}));
  EXPECT_FALSE(a.contains(std::vector<Rat>{Rat(0), Rat(0), Rat(1)}));
}

}  // namespace
}  // namespace exalg
