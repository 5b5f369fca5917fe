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
using superpsi::testing::randomPoly;
using K = FieldValue;
using P = SuperPoly<K>;

namespace {

PsiSymbol<K> single(const K& lambda, const K& mu, int order2, int parity, std::vector<P> coeffs) {
    auto T = zeroSymbol<K>(lambda, mu, K(order2), parity, static_cast<int>(coeffs.size()));
    T.coeffs = std::move(coeffs);
    return T;
}

PsiSymbol<K> randomDifferential(Sampler& S, const K& lambda, const K& mu, int order2) {
    auto T = zeroSymbol<K>(lambda, mu, K(order2), order2 & 1, order2 + 1);
    for (auto& c : T.coeffs) c = randomPoly<K>(S, 2);
    return T;
}

// failures of the representation law under a sign convention
int reprLawFailures(SignConvention conv) {
    Sampler S(31);
    int bad = 0;
    for (int pT = 0; pT < 2; ++pT) {
        auto T = zeroSymbol<K>(K(Rational(1, 3)), K(Rational(5, 7)), K(Rational(3, 5)), pT, 4);
        for (auto& c : T.coeffs) c = randomPoly<K>(S, 2);
        for (int a = 0; a <= 3; ++a)
            for (int ea = 0; ea < 2; ++ea)
                for (int b = 0; b <= 3; ++b)
                    for (int eb = 0; eb < 2; ++eb) {
                        P F = P::monomial(a, ea), G = P::monomial(b, eb);
                        try {
                            K s = (ea & eb) ? K(-1) : K(1);
                            auto lhs = lieAction(F, lieAction(G, T, conv), conv) -
                                       s * lieAction(G, lieAction(F, T, conv), conv);
                            auto rhs = lieAction(inverseX(bracket(contactOf(F), contactOf(G))), T, conv);
                            bad += !(lhs == rhs);
                        } catch (const filtration_violation&) {
                            ++bad;
                        }
                    }
    }
    return bad;
}

}  // namespace

TEST(Compose, Examples) {
    const K lam(Rational(1, 3)), mu(Rational(2, 5)), nu(Rational(-1, 2));
    auto d2 = single(mu, nu, 2, 0, {P(K(1)), P(), P()});
    auto x = single(lam, mu, 0, 0, {P::x(1), P(), P()});
    auto r = normalOrderCompose(d2, x, 3);
    EXPECT_EQ(r.coeffs[0], P::x(1));
    EXPECT_TRUE(r.coeffs[1].is_zero());
    EXPECT_EQ(r.coeffs[2], P(K(-1)));

    auto d = single(mu, nu, 1, 1, {P(K(1)), P()});
    auto xi = single(lam, mu, 0, 0, {P::xi(0), P()});
    auto s = normalOrderCompose(d, xi, 2);
    EXPECT_EQ(s.order2, K(1));
    EXPECT_EQ(s.parity, 1);
    EXPECT_EQ(s.coeffs[0], P::xi(0, K(-1)));
    EXPECT_EQ(s.coeffs[1], P(K(1)));
}

TEST(Compose, AgreesWithApplicationOnDensities) {
    Sampler S(32);
    for (int t = 0; t < 50; ++t) {
        const K lam(S.rational(5)), mu(S.rational(5)), nu(S.rational(5));
        const int a = S.integer(0, 3), b = S.integer(0, 3);
        auto Sy = randomDifferential(S, mu, nu, a), Ty = randomDifferential(S, lam, mu, b);
        auto C = normalOrderCompose(padded(Sy, a + b + 1), padded(Ty, a + b + 1), a + b + 1);
        P G = randomPoly<K>(S, 4);
        ASSERT_EQ(applyToDensity(C, G), applyToDensity(Sy, applyToDensity(Ty, G)));
    }
}

TEST(Compose, Associative) {
    Sampler S(33);
    for (int t = 0; t < 20; ++t) {
        const K l0(S.rational(5)), l1(S.rational(5)), l2(S.rational(5)), l3(S.rational(5));
        auto A = superpsi::testing::randomSymbol<K>(S, l2, l3, K(S.rational(6)), S.integer(0, 1), 4);
        auto B = superpsi::testing::randomSymbol<K>(S, l1, l2, K(S.rational(6)), S.integer(0, 1), 4);
        auto C = superpsi::testing::randomSymbol<K>(S, l0, l1, K(S.rational(6)), S.integer(0, 1), 4);
        ASSERT_EQ(normalOrderCompose(normalOrderCompose(A, B, 4), C, 4),
                  normalOrderCompose(A, normalOrderCompose(B, C, 4), 4));
    }
}

TEST(ApplyToDensity, Examples) {
    const K lam(Rational(1, 4)), mu(Rational(3, 4));
    EXPECT_EQ(applyToDensity(single(lam, mu, 1, 1, {P(K(1))}), P::xi(0)), P(K(1)));
    Sampler S(34);
    P G = randomPoly<K>(S, 3);
    EXPECT_EQ(applyToDensity(identitySymbol<K>(lam, 3), G), G);
    EXPECT_EQ(applyToDensity(single(lam, mu, 2, 0, {P(K(1))}), P::x(2)), P::x(1, K(-2)));
    EXPECT_THROW(applyToDensity(single(lam, mu, -1, 1, {P(K(1))}), G), not_differential);
    EXPECT_THROW(applyToDensity(single(lam, mu, 0, 0, {P(K(1)), P(K(1))}), G), not_differential);
}

TEST(LieAction, Examples) {
    Sampler S(35);
    auto T = superpsi::testing::randomSymbol<K>(S, K(Rational(2, 3)), K(Rational(-1, 5)), K(Rational(7, 3)), 1, 5);
    auto R = lieAction(P(K(1)), T);
    for (int j = 0; j < T.depth(); ++j) EXPECT_EQ(R.coeffs[j], T.coeffs[j].dx());
    for (int a = 0; a <= 3; ++a)
        for (int e = 0; e < 2; ++e) EXPECT_TRUE(lieAction(P::monomial(a, e), identitySymbol<K>(K(Rational(3, 7)), 4)).is_zero());
}

TEST(LieAction, SignConventionSelfTest) {
    EXPECT_EQ(reprLawFailures(SignConvention::super), 0);
    EXPECT_GT(reprLawFailures(SignConvention::plain), 0);
}

TEST(LieAction, PrincipalSymbolIsDensityAction) {
    Sampler S(36);
    for (int t = 0; t < 30; ++t) {
        const K lam(S.rational(5)), mu(S.rational(5)), o2(S.rational(6));
        auto T = superpsi::testing::randomSymbol<K>(S, lam, mu, o2, S.integer(0, 1), 3);
        P F = P::monomial(S.integer(0, 3), S.integer(0, 1));
        const K weight = mu - lam - o2 * K(Rational(1, 2));
        ASSERT_EQ(symbolAt(lieAction(F, T), 0), densityAction(F, weight, symbolAt(T, 0)));
    }
}

TEST(Conjugate, Examples) {
    const K lam(Rational(1, 3)), mu(Rational(4, 3));
    auto c = conjugateSymbol(single(lam, mu, 1, 1, {P(K(1))}));
    EXPECT_EQ(c.coeffs[0], P(K(-1)));
    EXPECT_EQ(c.lambda, K(Rational(1, 2)) - mu);
    EXPECT_EQ(c.mu, K(Rational(1, 2)) - lam);
    auto half = zeroSymbol<K>(lam, mu, K(Rational(1, 2)), 0, 1);
    half.coeffs[0] = P(K(1));
    EXPECT_THROW(conjugateSymbol(half), phase_outside_field);
}

TEST(Conjugate, TwiceIsScalarAndIntertwines) {
    Sampler S(37);
    for (int t = 0; t < 20; ++t) {
        const int o2 = S.integer(-4, 4), p = S.integer(0, 1);
        auto T = superpsi::testing::randomSymbol<K>(S, K(S.rational(5)), K(S.rational(5)), K(o2), p, 4);
        const K sign = ((o2 + p) & 1) ? K(-1) : K(1);
        ASSERT_EQ(conjugateSymbol(conjugateSymbol(T)), sign * T);
        for (int a = 0; a <= 2; ++a)
            for (int e = 0; e < 2; ++e) {
                P F = P::monomial(a, e);
                ASSERT_EQ(conjugateSymbol(lieAction(F, T)), lieAction(F, conjugateSymbol(T)));
            }
    }
}

TEST(SymbolAt, Examples) {
    auto T = single(K(0), K(1), 2, 0, {P(K(1)), P::x(1)});
    EXPECT_EQ(symbolAt(T, 0), P(K(1)));
    EXPECT_EQ(symbolAt(T, 1), P::x(1));
    EXPECT_THROW(symbolAt(T, 2), std::out_of_range);
}

TEST(Bol, Examples) {
    const K lam(Rational(2, 7)), h(Rational(1, 2));
    auto r = bolCompose(single(lam, K(0), 0, 0, {P(K(1)), P()}), BolSide::left);
    EXPECT_EQ(r.lambda, lam);
    EXPECT_EQ(r.mu, h);
    EXPECT_EQ(r.order2, K(1));
    EXPECT_EQ(r.parity, 1);
    EXPECT_EQ(r.coeffs[0], P(K(1)));
    EXPECT_THROW(bolCompose(single(lam, K(1), 0, 0, {P(K(1))}), BolSide::left), symbol_error);

    Sampler S(38);
    auto T = superpsi::testing::randomSymbol<K>(S, h, K(0), K(Rational(5, 3)), 0, 3);
    auto twice = bolCompose(bolCompose(T, BolSide::left), BolSide::right);
    EXPECT_EQ(twice.lambda, K(0));
    EXPECT_EQ(twice.mu, h);
}

TEST(Bol, OddEquivalence) {
    Sampler S(39);
    for (int t = 0; t < 20; ++t) {
        auto T = superpsi::testing::randomSymbol<K>(S, K(S.rational(5)), K(0), K(S.rational(6)), S.integer(0, 1), 4);
        auto U = superpsi::testing::randomSymbol<K>(S, K(Rational(1, 2)), K(S.rational(5)), K(S.rational(6)),
                                                    S.integer(0, 1), 4);
        for (int a = 0; a <= 2; ++a)
            for (int e = 0; e < 2; ++e) {
                P F = P::monomial(a, e);
                const K sign = e ? K(-1) : K(1);
                ASSERT_EQ(bolCompose(lieAction(F, T), BolSide::left), sign * lieAction(F, bolCompose(T, BolSide::left)));
                ASSERT_EQ(bolCompose(lieAction(F, U), BolSide::right), sign * lieAction(F, bolCompose(U, BolSide::right)));
            }
    }
}
