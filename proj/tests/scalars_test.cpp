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

#include "exalg/gf.hpp"
#include "exalg/poly_factor.hpp"
#include "exalg/quaternion.hpp"
#include "exalg/rational.hpp"

namespace exalg {
namespace {

TEST(Rational, ParseCanonicalizes) {
  EXPECT_EQ(rational_str(parse_rational("2/4")), "1/2");
  EXPECT_EQ(rational_str(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(rational_str(parse_rational("5")), "5");
  EXPECT_EQ(rational_str(parse_rational("0/7")), "0");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("a"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rational, EqualityIsRepresentationEquality) {
  EXPECT_EQ(parse_rational("2/4"), parse_rational("1/2"));
  EXPECT_EQ(Rat(3) / 6, Rat(1) / 2);
}

TEST(PrimeCheck, SmallCases) {
  EXPECT_TRUE(is_prime_u64(2));
  EXPECT_TRUE(is_prime_u64(2147483647));  // 2^31 - 1
  EXPECT_FALSE(is_prime_u64(1));
  EXPECT_FALSE(is_prime_u64(4));
  EXPECT_FALSE(is_prime_u64(91));
}

TEST(GFp, ConstructionRejectsBadModuli) {
  EXPECT_THROW(GFpField(4), std::invalid_argument);
  EXPECT_THROW(GFpField(1), std::invalid_argument);
  EXPECT_THROW(GFpField(std::uint64_t{1} << 31), std::invalid_argument);
  EXPECT_NO_THROW(GFpField(2147483647));
}

// sampled field axioms: associativity, distributivity, inverses
template <class D>
void check_field_axioms(const D& dom, int trials) {
  SplitMix64 rng(42);
  for (int t = 0; t < trials; ++t) {
    auto a = dom.sample(rng), b = dom.sample(rng), c = dom.sample(rng);
    EXPECT_TRUE(dom.eq(dom.add(dom.add(a, b), c), dom.add(a, dom.add(b, c))));
    EXPECT_TRUE(dom.eq(dom.mul(dom.mul(a, b), c), dom.mul(a, dom.mul(b, c))));
    EXPECT_TRUE(dom.eq(dom.mul(a, dom.add(b, c)),
                       dom.add(dom.mul(a, b), dom.mul(a, c))));
    EXPECT_TRUE(dom.eq(dom.mul(dom.add(b, c), a),
                       dom.add(dom.mul(b, a), dom.mul(c, a))));
    if (!dom.is_zero(a)) {
      EXPECT_TRUE(dom.eq(dom.mul(a, dom.inv(a)), dom.one()));
      EXPECT_TRUE(dom.eq(dom.mul(dom.inv(a), a), dom.one()));
    }
  }
}

TEST(GFp, FieldAxiomsSampled) {
  check_field_axioms(GFpField(2), 50);
  check_field_axioms(GFpField(7), 100);
  check_field_axioms(GFpField(2147483647), 100);
}

TEST(GFp, ParseReducesToCanonicalResidue) {
  GFpField f7(7);
  EXPECT_EQ(f7.parse("10"), 3u);
  EXPECT_EQ(f7.parse("-1"), 6u);
  EXPECT_EQ(f7.parse("123456789123456789123"), f7.parse("123456789123456789123"));
}

TEST(GFext, BuildAndValidate) {
  GFextField f4 = make_extension_field(2, {1, 1, 1});
  EXPECT_EQ(f4.order(), 4u);
  // x^2 + 1 = (x+1)^2 over GF(2): rejected
  EXPECT_THROW(make_extension_field(2, {1, 0, 1}), std::invalid_argument);
  EXPECT_THROW(GFextField(2, {1, 1}), std::invalid_argument);  // degree 1
  EXPECT_THROW(GFextField(2, {1, 1, 0}), std::invalid_argument);  // not monic
}

TEST(GFext, FieldAxiomsSampled) {
  check_field_axioms(make_extension_field(2, {1, 1, 1}), 100);        // GF(4)
  check_field_axioms(make_extension_field(3, {1, 0, 1}), 100);        // GF(9)
  check_field_axioms(make_extension_field(2, {1, 1, 0, 1}), 100);     // GF(8)
}

TEST(GFext, GeneratorArithmetic) {
  GFextField f4 = make_extension_field(2, {1, 1, 1});
  auto w = f4.generator();
  auto w2 = f4.mul(w, w);
  // w^2 = w + 1 under x^2 + x + 1
  EXPECT_TRUE(f4.eq(w2, f4.add(w, f4.one())));
  // w^3 = 1
  EXPECT_TRUE(f4.eq(f4.mul(w2, w), f4.one()));
  EXPECT_TRUE(f4.eq(f4.inv(w), w2));
}

TEST(GFext, ParseRoundTrip) {
  GFextField f9 = make_extension_field(3, {1, 0, 1});
  auto e = f9.parse("2,1");
  EXPECT_EQ(f9.str(e), "2,1");
  EXPECT_THROW(f9.parse("1,2,0"), std::invalid_argument);
}

TEST(Quaternion, NormIsMultiplicative) {
  QuaternionRing h;
  SplitMix64 rng(7);
  for (int t = 0; t < 100; ++t) {
    auto p = h.sample(rng), q = h.sample(rng);
    EXPECT_EQ(h.norm(h.mul(p, q)), h.norm(p) * h.norm(q));
  }
}

TEST(Quaternion, InverseExamples) {
  QuaternionRing h;
  EXPECT_TRUE(h.eq(quat_inverse(h.one()), h.one()));
  EXPECT_TRUE(h.eq(quat_inverse(h.unit_i()), h.neg(h.unit_i())));
  Quaternion one_plus_i{Rat(1), Rat(1), Rat(0), Rat(0)};
  Quaternion expected{Rat(1) / 2, Rat(-1) / 2, Rat(0), Rat(0)};
  EXPECT_TRUE(h.eq(quat_inverse(one_plus_i), expected));
  EXPECT_THROW(quat_inverse(h.zero()), std::domain_error);
}

TEST(Quaternion, AssociativityAndDistributivitySampled) {
  QuaternionRing h;
  SplitMix64 rng(11);
  for (int t = 0; t < 100; ++t) {
    auto a = h.sample(rng), b = h.sample(rng), c = h.sample(rng);
    EXPECT_TRUE(h.eq(h.mul(h.mul(a, b), c), h.mul(a, h.mul(b, c))));
    EXPECT_TRUE(h.eq(h.mul(a, h.add(b, c)), h.add(h.mul(a, b), h.mul(a, c))));
    EXPECT_TRUE(h.eq(h.mul(h.add(a, b), c), h.add(h.mul(a, c), h.mul(b, c))));
    if (!h.is_zero(a)) {
      EXPECT_TRUE(h.eq(h.mul(a, h.inv(a)), h.one()));
      EXPECT_TRUE(h.eq(h.mul(h.inv(a), a), h.one()));
    }
  }
}

TEST(Quaternion, CenterIsQ) {
  QuaternionRing h;
  EXPECT_TRUE(h.is_central(h.from_int(3)));
  EXPECT_FALSE(h.is_central(h.unit_i()));
  EXPECT_FALSE(h.is_central(h.unit_j()));
  // ij = k, ji = -k
  EXPECT_TRUE(h.eq(h.mul(h.unit_i(), h.unit_j()), h.unit_k()));
  EXPECT_TRUE(h.eq(h.mul(h.unit_j(), h.unit_i()), h.neg(h.unit_k())));
}

TEST(Quaternion, MinPolyOverCenter) {
  RationalField qq;
  QuaternionRing h;
  EXPECT_EQ(quat_min_poly_over_center(h.from_int(3)),
            (Polynomial<RationalField>::from_ints(qq, {-3, 1})));
  EXPECT_EQ(quat_min_poly_over_center(h.unit_i()),
            (Polynomial<RationalField>::from_ints(qq, {1, 0, 1})));
  Quaternion one_plus_j{Rat(1), Rat(0), Rat(1), Rat(0)};
  EXPECT_EQ(quat_min_poly_over_center(one_plus_j),
            (Polynomial<RationalField>::from_ints(qq, {2, -2, 1})));
}

TEST(Quaternion, MinPolyAnnihilatesAndDoesNotSplit) {
  QuaternionRing h;
  SplitMix64 rng(13);
  for (int t = 0; t < 50; ++t) {
    auto q = h.sample(rng);
    auto f = quat_min_poly_over_center(q);
    // evaluate f at q by Horner with central coefficients
    Quaternion acc = h.zero();
    for (int i = f.deg(); i >= 0; --i)
      acc = h.add(h.mul(acc, q), h.embed_center(f.coeff(i)));
    EXPECT_TRUE(h.is_zero(acc));
    if (!h.is_central(q)) EXPECT_FALSE(poly_splits(f).splits);
  }
}

}  // namespace
}  // namespace exalg
