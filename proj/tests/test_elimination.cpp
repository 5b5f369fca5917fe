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
using R = Rational;

namespace {

R ev(const MPoly& f, const R& g, const R& d, const R& g1, const R& d1) { return f.eval({g, d, g1, d1}); }

InvariantValue familyValue(const TaggedPoly& t, const Rational& n, const R& g, const R& d) {
    GammaPoint pt{g, d, std::nullopt};
    const R base = n + t.shift;
    if (t.family == "I0") return invariantI(0, base, pt);
    if (t.family == "I1") return invariantI(1, base + R(1, 2), pt);
    return invariantJ(base, pt);
}

}  // namespace

TEST(Elimination, FifteenEquationsVanishOnDiagonal) {
    Sampler S(81);
    R n = S.nonResonant(15, 9);
    auto sys = clearedEquations(n);
    ASSERT_EQ(sys.polys.size(), 15u);
    for (int t = 0; t < 10; ++t) {
        R g = S.rational(9), d = S.rational(9);
        for (auto& e : sys.polys) ASSERT_TRUE(ev(e.poly, g, d, g, d).is_zero()) << e.family << e.shift;
    }
}

TEST(Elimination, ClearedEquationsDetectEqualInvariants) {
    Sampler S(82);
    R n = S.nonResonant(15, 9);
    auto sys = clearedEquations(n);
    int hits = 0;
    for (int t = 0; t < 40; ++t) {
        R g = S.rational(9), d = S.rational(9), g1 = S.rational(9), d1 = S.rational(9);
        for (auto& e : sys.polys) {
            auto a = familyValue(e, n, g, d), b = familyValue(e, n, g1, d1);
            if (!a.defined || !b.defined) continue;
            ASSERT_EQ(ev(e.poly, g, d, g1, d1).is_zero(), a.value == b.value);
        }
        // a second point on the I0 level conic at shift 0
        auto a = invariantI(0, n, GammaPoint{g, d, std::nullopt});
        if (!a.defined) continue;
        Conic c = pencilConic(Family::I0, n, a.value);
        if (c.degenerate) continue;
        R gt = gammaTilde6(n, GammaPoint{g, d, std::nullopt}), m = S.rational(4);
        R lin = 2 * c.A * gt + c.B * d + c.D + m * (c.B * gt + 2 * c.C * d + c.E), quad = c.A + c.B * m + c.C * m * m;
        if (quad.is_zero()) continue;
        R tt = -lin / quad, d2 = d + m * tt, g2 = gt + tt + 2 * N6(n) * d2;
        auto b = invariantI(0, n, GammaPoint{g2, d2, std::nullopt});
        if (!b.defined) continue;
        ASSERT_EQ(b.value, a.value);
        ASSERT_TRUE(ev(sys.polys[0].poly, g, d, g2, d2).is_zero());
        ++hits;
    }
    EXPECT_GT(hits, 10);
}

TEST(Elimination, AntisymmetricUnderSwap) {
    Sampler S(83);
    for (int p = 0; p < 2; ++p) {
        auto sys = clearedEquations(S.nonResonant(15, 9), p);
        for (int t = 0; t < 5; ++t) {
            R g = S.rational(9), d = S.rational(9), g1 = S.rational(9), d1 = S.rational(9);
            for (auto& e : sys.polys) ASSERT_EQ(ev(e.poly, g, d, g1, d1), -ev(e.poly, g1, d1, g, d));
        }
    }
}

TEST(Elimination, DifferenceDegreeSchedule) {
    auto R4 = differenceReduce(clearedEquations(R(2, 7)));
    for (const char* f : {"I0", "I1", "J0"}) {
        std::vector<int> sched;
        for (int k = 0; k <= 4; ++k) sched.push_back(maxDegree(R4, f, k));
        EXPECT_EQ(sched, (std::vector<int>{4, 4, 4, 4, 3})) << f;
    }
    Sampler S(84);
    for (int t = 0; t < 5; ++t) {
        R g = S.rational(9), d = S.rational(9);
        for (auto& e : R4.polys) ASSERT_TRUE(ev(e.poly, g, d, g, d).is_zero());
    }
}

TEST(Elimination, ParityOneReflection) {
    Sampler S(85);
    R n = S.nonResonant(15, 9);
    auto odd = clearedEquations(n, 1), even = clearedEquations(-n - R(13, 2), 0);
    ASSERT_EQ(odd.polys.size(), even.polys.size());
    for (int t = 0; t < 5; ++t) {
        R g = S.rational(9), d = S.rational(9), g1 = S.rational(9), d1 = S.rational(9);
        for (size_t i = 0; i < odd.polys.size(); ++i)
            ASSERT_EQ(ev(odd.polys[i].poly, g, d, g1, d1), ev(even.polys[i].poly, g, -d, g1, -d1));
    }
}

TEST(Elimination, SamplesReproducibleAndHonorFixedN) {
    auto a = lge15Samples(4, 9, std::nullopt, 0), b = lge15Samples(4, 9, std::nullopt, 0);
    ASSERT_EQ(a.size(), 4u);
    for (size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].n, b[i].n);
        EXPECT_EQ(a[i].s, b[i].s);
        EXPECT_EQ(a[i].delta, b[i].delta);
        EXPECT_TRUE(lge15SampleOk(a[i].n, 0, a[i].s, a[i].delta));
    }
    for (auto& x : lge15Samples(3, 9, R(5, 3), 1)) EXPECT_EQ(x.n, R(5, 3));
    EXPECT_THROW(lge15Samples(1, 9, R(-3), 0), resonant_spec);
}

TEST(Elimination, GenericTrialIsUnique) {
    for (int p = 0; p < 2; ++p) {
        auto reps = verifyLge15(1, 10 + p, std::nullopt, p, 1);
        ASSERT_EQ(reps.size(), 1u);
        auto& r = reps[0];
        EXPECT_FALSE(r.degenerate);
        EXPECT_TRUE(r.unique) << "p=" << p << " n=" << r.n << " solutions=" << r.solutions.size();
        bool diag = false;
        for (auto& s : r.solutions) diag |= s.gamma1 == r.gamma && s.delta1 == r.delta;
        EXPECT_TRUE(diag);
        EXPECT_EQ(r.degreesBefore, (std::vector<int>{4, 4, 4}));
        EXPECT_EQ(r.degreesAfter, (std::vector<int>{3, 3, 3}));
    }
}
