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

ModuleSpec D(R lam, R mu, R k, int p, int l) { return {lam, mu, k, p, l}; }

bool hasProvenance(const Verdict& v, const std::string& s) {
    for (auto& x : v.provenance)
        if (x.find(s) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST(Resonance, Examples) {
    EXPECT_TRUE(isResonant(R(0), 2));
    EXPECT_FALSE(isResonant(R(-1, 2), 2));
    EXPECT_TRUE(isResonant(R(-1, 2), 3));
    EXPECT_TRUE(isResonant(R(-5, 2), 7));
    EXPECT_FALSE(isResonant(R(-3), 7));
    EXPECT_FALSE(isResonant(R(1, 2), 9));
    EXPECT_FALSE(isResonant(R(-1, 4), 9));
    EXPECT_FALSE(isResonant(R(0), 1));
}

TEST(CheckSVC, Examples) {
    ModuleSpec a = D(R(1), R(4), R(5, 2), 1, 6);
    EXPECT_TRUE(checkSVC(a, a.conjugate()).pass);
    auto o = checkSVC(D(R(0), R(3, 2), R(3, 2), 1, 4), D(R(1, 4), R(7, 4), R(3, 2), 1, 4));
    EXPECT_FALSE(o.pass);
    EXPECT_FALSE(o.violated.empty());
    EXPECT_TRUE(checkSVC(D(R(1), R(3), R(1), 0, 3), D(R(5), R(7), R(1), 0, 3)).pass);
}

TEST(Decide, Examples) {
    // length 2 always splits into the same pieces
    EXPECT_TRUE(decide(D(R(1, 3), R(4, 3), R(1, 2), 0, 2), D(R(-2), R(-1), R(1, 2), 0, 2)).equivalent);

    ModuleSpec a = D(R(1), R(4), R(5, 2), 1, 6);
    auto v = decide(a, D(R(2), R(5), R(5, 2), 1, 6));
    EXPECT_FALSE(v.equivalent);
    EXPECT_FALSE(v.violated.empty());
    EXPECT_EQ(a.conjugate(), D(R(-7, 2), R(-1, 2), R(5, 2), 1, 6));
    v = decide(a, a.conjugate());
    EXPECT_TRUE(v.equivalent);
    EXPECT_EQ(v.parity, 0);
    EXPECT_TRUE(v.flags.empty());

    v = decide(a, D(R(1), R(5), R(5, 2), 1, 6));
    EXPECT_FALSE(v.equivalent);
    EXPECT_TRUE(hasProvenance(v, "composition series"));

    v = decide(D(R(1), R(3), R(2), 0, 4), D(R(2), R(4), R(2), 0, 4));
    EXPECT_TRUE(v.outOfScope);
}

TEST(Decide, OracleRatiosOnConjugates) {
    Sampler S(71);
    for (int t = 0; t < 20; ++t) {
        const int l = S.integer(3, 7), p = S.integer(0, 1);
        ModuleSpec a = specFromInvariants(S.rational(9), S.rational(9), S.nonResonant(l, 9), p, l);
        auto o = genericOracle(a, a.conjugate());
        ASSERT_TRUE(o.equivalent);
        for (auto& [lvl, r] : o.eRatios) ASSERT_EQ(r * r, R(1)) << "level " << lvl;
    }
}

TEST(Decide, HighLength) {
    ModuleSpec a = specFromInvariants(R(2, 3), R(5, 7), R(1, 3), 0, 10);
    auto v = decide(a, a.conjugate());
    EXPECT_TRUE(v.equivalent);
    EXPECT_TRUE(hasProvenance(v, "length-7 windows"));
    EXPECT_FALSE(decide(a, specFromInvariants(R(2, 3), R(6, 7), R(1, 3), 0, 10)).equivalent);
    EXPECT_TRUE(decide(specFromInvariants(R(1), R(2), R(-3), 0, 10), specFromInvariants(R(1), R(2), R(-3), 0, 10)).outOfScope);
}

TEST(Decide, Lacunary) {
    ModuleSpec a = specFromInvariants(R(1, 3), R(2), R(1), 0, 4, true);
    auto v = decide(a, a.conjugate());
    EXPECT_TRUE(v.equivalent);
    EXPECT_FALSE(v.outOfScope);
    v = decide(a, specFromInvariants(R(1, 3), R(5, 7), R(1), 0, 4, true));
    EXPECT_FALSE(v.equivalent);
    ModuleSpec m = specFromInvariants(R(1, 3), R(2), R(1), 1, 4, true);
    v = decide(a, m);
    EXPECT_TRUE(v.outOfScope);
    EXPECT_TRUE(v.exploratory);
    EXPECT_THROW(decide(specFromInvariants(R(1), R(2), R(1, 2), 0, 4, true), a), invalid_spec);
}

TEST(KnownEquivalences, Examples) {
    ModuleSpec a = D(R(1), R(4), R(5, 2), 1, 6);
    auto ks = knownEquivalences(a);
    ASSERT_FALSE(ks.empty());
    EXPECT_EQ(ks[0].kind, KnownKind::conjugation);
    EXPECT_EQ(ks[0].partner, D(R(-7, 2), R(-1, 2), R(5, 2), 1, 6));

    ModuleSpec b = D(R(2, 3), R(0), R(1), 0, 5);
    int bols = 0;
    for (auto& k : knownEquivalences(b))
        if (k.kind == KnownKind::bol) {
            ++bols;
            EXPECT_EQ(k.parity, 1);
            EXPECT_EQ(k.partner.n(), b.n());
            EXPECT_EQ(k.partner.p, 1);
            auto v = decide(b, k.partner);
            EXPECT_TRUE(v.equivalent) << k.provenance << ": " << v.violated;
        }
    EXPECT_EQ(bols, 2);

    bool split = false;
    for (auto& k : knownEquivalences(D(R(1, 3), R(7, 3), R(1), 0, 4)))
        split |= k.kind == KnownKind::splitting && !k.isEquivalence;
    EXPECT_TRUE(split);
    split = false;
    for (auto& k : knownEquivalences(D(R(1, 3), R(7, 3), R(1), 1, 4))) split |= k.kind == KnownKind::splitting;
    EXPECT_FALSE(split);
}

TEST(KnownEquivalences, AllEquivalencesAreDecidedEquivalent) {
    Sampler S(72);
    int checked = 0;
    for (int t = 0; t < 200; ++t) {
        const int l = S.integer(3, 7), p = S.integer(0, 1);
        R lam = S.coin() ? R(S.integer(0, 1), 2) : S.rational(6), mu = S.coin() ? R(S.integer(0, 1), 2) : S.rational(6);
        ModuleSpec a{lam, mu, mu - lam - S.nonResonant(l, 6), p, l};
        if (a.resonant()) continue;
        for (auto& k : knownEquivalences(a)) {
            if (!k.isEquivalence || k.partner.resonant()) continue;
            auto v = decide(a, k.partner);
            ASSERT_TRUE(v.equivalent) << kindName(k.kind) << " l=" << l << " " << v.violated;
            ASSERT_EQ(v.parity, k.parity);
            ++checked;
        }
    }
    EXPECT_GT(checked, 200);
}

TEST(Decide, SymmetricAndTransitive) {
    Sampler S(73);
    for (int l : {5, 6, 7})
        for (int p = 0; p < 2; ++p) {
            R n = S.nonResonant(l, 6);
            // small pools so that equivalences actually occur
            std::vector<ModuleSpec> pool;
            for (R s : {R(1, 2), R(-1, 2), R(2)})
                for (R d : {R(1), R(-1, 3), R(1, 2) + n})
                    for (int q = 0; q < 2; ++q) pool.push_back(specFromInvariants(s, d, n, (p + q) & 1, l));
            const size_t m = pool.size();
            std::vector<std::vector<char>> eq(m, std::vector<char>(m));
            for (size_t i = 0; i < m; ++i)
                for (size_t j = 0; j < m; ++j) eq[i][j] = decide(pool[i], pool[j]).equivalent;
            for (size_t i = 0; i < m; ++i) {
                ASSERT_TRUE(eq[i][i]);
                for (size_t j = 0; j < m; ++j) {
                    ASSERT_EQ(eq[i][j], eq[j][i]) << "l=" << l;
                    for (size_t k = 0; k < m; ++k)
                        if (eq[i][j] && eq[j][k]) ASSERT_TRUE(eq[i][k]) << "l=" << l;
                }
            }
        }
}

TEST(Decide, Length6OddClasses) {
    // D^{5/2}: lambda' is lambda or its conjugate
    Sampler S(74);
    for (int t = 0; t < 20; ++t) {
        R delta = R(5, 2) + S.nonResonant(6, 6);
        R lam = S.rational(6);
        ModuleSpec a{lam, lam + delta, R(5, 2), 1, 6};
        for (R lam2 : {lam, R(1, 2) - delta - lam, S.rational(6)}) {
            ModuleSpec b{lam2, lam2 + delta, R(5, 2), 1, 6};
            const bool expect = lam2 == lam || lam2 == R(1, 2) - delta - lam;
            ASSERT_EQ(decide(a, b).equivalent, expect) << "lambda=" << lam << " lambda'=" << lam2;
        }
    }
}
