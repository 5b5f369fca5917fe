/*
   Copyright 2026 The superpsi authors

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

#include "support.hpp"

using namespace superpsi;
using superpsi::testing::randomField;

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
    EXPECT_EQ(Rational(6, -4).str(), "-3/2");
    EXPECT_EQ(Rational(4, 2).str(), "2");
    EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_THROW(Rational::parse("1/0"), division_by_zero);
    EXPECT_THROW(Rational::parse("one"), parse_error);
    EXPECT_THROW(Rational(1) / Rational(0), division_by_zero);
}

TEST(FieldValue, MinimalPolynomials) {
    EXPECT_EQ(sqrt3() * sqrt3(), FieldValue(3));
    EXPECT_EQ(imagUnit() * imagUnit(), FieldValue(-1));
    const FieldValue a = FieldValue(1) + imagUnit() * sqrt3(), b = FieldValue(1) - imagUnit() * sqrt3();
    EXPECT_EQ(a * b, FieldValue(4));
    EXPECT_EQ(makeField(1, 2, 3, 4), FieldValue(1) + FieldValue(2) * imagUnit() + FieldValue(3) * sqrt3() +
                                         FieldValue(4) * imagUnit() * sqrt3());
}

TEST(FieldValue, DivisionByZero) {
    EXPECT_THROW(FieldValue(1) / FieldValue(0), division_by_zero);
    EXPECT_THROW(FieldValue(0).inverse(), division_by_zero);
}

TEST(FieldValue, AxiomsOnRandomTriples) {
    Sampler S(11);
    for (int t = 0; t < 1000; ++t) {
        FieldValue x = randomField(S), y = randomField(S), z = randomField(S);
        ASSERT_EQ((x * y) * z, x * (y * z));
        ASSERT_EQ((x + y) + z, x + (y + z));
        ASSERT_EQ(x * (y + z), x * y + x * z);
        ASSERT_EQ(x * y, y * x);
        if (!x.is_zero()) ASSERT_EQ(x * x.inverse(), FieldValue(1));
    }
}

TEST(Pochhammer, Examples) {
    EXPECT_EQ(pochhammer(Rational(5), 2), Rational(20));
    EXPECT_EQ(pochhammer(Rational(7, 3), 0), Rational(1));
    EXPECT_EQ(pochhammer(Rational(1, 2), 2), Rational(-1, 4));
}

TEST(Pochhammer, Additivity) {
    Sampler S(12);
    for (int t = 0; t < 200; ++t) {
        Rational x = S.rational(15);
        int r = S.integer(0, 10), s = S.integer(0, 10);
        ASSERT_EQ(pochhammer(x, r + s), pochhammer(x, r) * pochhammer(x - r, s));
    }
}

TEST(GenBinomial, Examples) {
    EXPECT_EQ(genBinomial(Rational(1), 1), Rational(1));
    EXPECT_EQ(genBinomial(Rational(1, 2), 2), Rational(-1, 8));
    EXPECT_EQ(genBinomial(Rational(-7, 5), 0), Rational(1));
    Sampler S(13);
    for (int t = 0; t < 100; ++t) {
        Rational z = S.rational(12);
        int j = S.integer(0, 8);
        ASSERT_EQ(genBinomial(z, j) * pochhammer(Rational(j), j), pochhammer(z, j));
    }
}

TEST(FloorCeilFrac, Examples) {
    auto a = floorCeilFrac(Rational(3, 2));
    EXPECT_EQ(a.floor, 1);
    EXPECT_EQ(a.ceil, 2);
    EXPECT_EQ(a.frac, Rational(1, 2));
    auto b = floorCeilFrac(Rational(-3, 2));
    EXPECT_EQ(b.floor, -2);
    EXPECT_EQ(b.ceil, -1);
    EXPECT_EQ(b.frac, Rational(1, 2));
    auto c = floorCeilFrac(Rational(2));
    EXPECT_EQ(c.floor, 2);
    EXPECT_EQ(c.ceil, 2);
    EXPECT_EQ(c.frac, Rational(0));
}
