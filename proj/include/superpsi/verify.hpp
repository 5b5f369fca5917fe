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

#ifndef SUPERPSI_VERIFY_HPP
#define SUPERPSI_VERIFY_HPP

#include "decision.hpp"
#include "psido.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace superpsi {

struct SampleResult {
    bool pass = true;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<SampleResult> samples;

    int passed() const {
        int k = 0;
        for (auto& s : samples) k += s.pass;
        return k;
    }
    bool ok() const { return !samples.empty() && passed() == static_cast<int>(samples.size()); }
    const SampleResult* firstFailure() const {
        for (auto& s : samples)
            if (!s.pass) return &s;
        return nullptr;
    }
    void add(bool pass, std::string detail = {}) { samples.push_back({pass, std::move(detail)}); }
};

class Sampler {
  public:
    explicit Sampler(unsigned long seed) : rng_(seed) {}
    // numerator in [-bound, bound], denominator in [1, bound]
    Rational rational(long bound) {
        std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
        return Rational(num(rng_), den(rng_));
    }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }
    Rational nonResonant(int l, long bound) {
        Rational n;
        do n = rational(bound);
        while (isResonant(n, l));
        return n;
    }
    std::mt19937_64& engine() { return rng_; }

  private:
    std::mt19937_64 rng_;
};

inline std::string describe(const ModuleSpec& s) {
    return "(lambda=" + s.lambda.str() + ", mu=" + s.mu.str() + ", k=" + s.k.str() + ", p=" + std::to_string(s.p) +
           ", l=" + std::to_string(s.l) + (s.lacunary ? ", lac" : "") + ")";
}

// extracted b against the calibrated closed form
inline SuiteReport verifyBcb(int samples, unsigned long seed) {
    SuiteReport rep{"bcb", {}};
    Sampler S(seed);
    for (int r2 = 3; r2 <= 5; ++r2)
        for (int p = 0; p < 2; ++p)
            for (int t = 0; t < samples; ++t) {
                Rational lam = S.rational(20), mu = S.rational(20), m = S.nonResonant(r2 + 1, 20);
                Rational e = extractB(lam, mu, m, r2, p), c = bCalibrated(p, r2, m, lam, mu);
                rep.add(e == c, "r=" + Rational(r2, 2).str() + " p=" + std::to_string(p) + " lambda=" + lam.str() +
                                    " mu=" + mu.str() + " m=" + m.str() + " extracted=" + e.str() + " closed=" + c.str());
            }
    return rep;
}

// [L(F), L(G)] = L([X_F, X_G]) on a random symbol
inline SuiteReport verifyReprLaw(int samples, unsigned long seed, int maxDegree = 3, int depth = 6) {
    using K = Rational;
    using P = SuperPoly<K>;
    SuiteReport rep{"repr-law", {}};
    Sampler S(seed);
    for (int t = 0; t < samples; ++t) {
        const K lam = S.rational(9), mu = S.rational(9), k = S.rational(9);
        for (int pT = 0; pT < 2; ++pT) {
            auto T = zeroSymbol<K>(lam, mu, k * 2, pT, depth);
            for (int j = 0; j < depth; ++j)
                T.coeffs[j] = P::x(S.integer(0, 3), S.rational(5)) + P::xi(S.integer(0, 3), S.rational(5));
            for (int a = 0; a <= maxDegree; ++a)
                for (int ea = 0; ea < 2; ++ea)
                    for (int b = 0; b <= maxDegree; ++b)
                        for (int eb = 0; eb < 2; ++eb) {
                            P F = P::monomial(a, ea), G = P::monomial(b, eb);
                            bool ok;
                            std::string why;
                            try {
                                K s = (ea & eb) ? K(-1) : K(1);
                                auto lhs = lieAction(F, lieAction(G, T)) - s * lieAction(G, lieAction(F, T));
                                auto H = inverseX(bracket(contactOf(F), contactOf(G)));
                                ok = lhs == lieAction(H, T);
                            } catch (const std::exception& e) {
                                ok = false;
                                why = e.what();
                            }
                            rep.add(ok, "F=x^" + std::to_string(a) + "xi^" + std::to_string(ea) + " G=x^" +
                                            std::to_string(b) + "xi^" + std::to_string(eb) + " lambda=" + lam.str() +
                                            " mu=" + mu.str() + " k=" + k.str() + " pT=" + std::to_string(pT) + " " +
                                            why);
                        }
        }
    }
    return rep;
}

// B in absolute indices: B^q_{m+r, m}
inline GTerm<Rational> absB(int q, const Rational& top, const Rational& bottom, const GammaPoint& pt) {
    Rational r2 = (top - bottom) * 2;
    return Bfactor<Rational>(q, static_cast<int>(r2.to_long()), bottom, pt.gamma, pt.delta);
}

inline bool sameTerm(GTerm<Rational> a, GTerm<Rational> b, const GammaPoint& pt) {
    auto x = fromGTerm(a.c, a.gpow, pt.gamma), y = fromGTerm(b.c, b.gpow, pt.gamma);
    return x == y;
}

// the four factorizations at the resonant starts
inline SuiteReport verifyResFacs(int samples, unsigned long seed) {
    SuiteReport rep{"resfacs", {}};
    Sampler S(seed);
    const Rational h(1, 2);
    for (int t = 0; t < samples; ++t) {
        Rational s = S.rational(12), d = S.rational(12);
        GammaPoint pt{s * s * 3, d, s};
        for (int p = 0; p < 2; ++p) {
            auto g = [&](int e, GTerm<Rational> x) { return GTerm<Rational>{x.c, x.gpow + e}; };
            struct Id {
                const char* name;
                GTerm<Rational> lhs, rhs;
            };
            Id ids[4] = {
                {"B^p_{2,0} = g^p B^{p+1}_{2,1/2}", absB(p, 2, 0, pt), g(p, absB(p + 1, 2, h, pt))},
                {"B^p_{5/2,0} = g^p B^{p+1}_{5/2,1/2}", absB(p, Rational(5, 2), 0, pt),
                 g(p, absB(p + 1, Rational(5, 2), h, pt))},
                {"B^p_{1/2,-3/2} = g^{1-p} B^p_{0,-3/2}", absB(p, h, Rational(-3, 2), pt),
                 g(1 - p, absB(p, 0, Rational(-3, 2), pt))},
                {"B^p_{1/2,-2} = g^p B^p_{0,-2}", absB(p, h, -2, pt), g(p, absB(p, 0, -2, pt))},
            };
            for (auto& id : ids)
                rep.add(sameTerm(id.lhs, id.rhs, pt),
                        std::string(id.name) + " p=" + std::to_string(p) + " s=" + s.str() + " delta=" + d.str());
        }
    }
    return rep;
}

// sign rule under gamma^{1/2} -> -gamma^{1/2} and the delta reflection, on extracted values
inline SuiteReport verifySymmetry(int samples, unsigned long seed) {
    SuiteReport rep{"symmetry", {}};
    Sampler S(seed);
    const Rational h(1, 2);
    auto lamOf = [&](const Rational& s, const Rational& d) { return (s + h - d) / 2; };
    for (int t = 0; t < samples; ++t)
        for (int r2 = 3; r2 <= 5; ++r2)
            for (int p = 0; p < 2; ++p) {
                Rational s = S.rational(10), d = S.rational(10), m, ms;
                do {
                    m = S.rational(10);
                    ms = -m - Rational(r2, 2) + h;
                } while (isResonant(m, r2 + 1) || isResonant(ms, r2 + 1));
                const int sign = ((r2 / 2 + (r2 % 2) * p) % 2) ? -1 : 1;
                const std::string tag = "r=" + Rational(r2, 2).str() + " p=" + std::to_string(p) + " s=" + s.str() +
                                        " delta=" + d.str() + " m=" + m.str();
                Rational l1 = lamOf(s, d), l2 = lamOf(-s, d), l3 = lamOf(s, -d);
                Rational b1 = extractB(l1, l1 + d, m, r2, p);
                rep.add(extractB(l2, l2 + d, m, r2, p) == b1 * sign, "sqrt-sign " + tag);
                Rational lhs = extractB(l3, l3 - d, m, r2, p);
                Rational rhs = extractB(l1, l1 + d, ms, r2, (p + 1 + r2) & 1);
                rep.add(lhs == rhs * sign, "delta-reflection " + tag);
            }
    return rep;
}

// a partner for A built in one of several ways, so both verdicts occur
inline ModuleSpec samplePartner(Sampler& S, const ModuleSpec& A, int pb) {
    const Rational n = A.n();
    switch (S.integer(0, 4)) {
        case 0: {
            ModuleSpec B = A.conjugate();
            B.p = pb;
            return B;
        }
        case 1: return specFromInvariants(S.rational(6), S.rational(6), n, pb, A.l);
        case 2: return specFromInvariants(S.rational(6), A.delta(), n, pb, A.l);
        case 3: return specFromInvariants(-A.s(), A.delta(), n, pb, A.l);
        default: return specFromInvariants(S.rational(4), n + Rational(S.integer(0, 5), 2), n, pb, A.l);
    }
}

inline ModuleSpec sampleSpec(Sampler& S, const Rational& n, int p, int l) {
    if (S.integer(0, 3) == 0) return specFromInvariants(S.rational(4), n + Rational(S.integer(0, 5), 2), n, p, l);
    return specFromInvariants(S.rational(6), S.rational(6), n, p, l);
}

inline SuiteReport verifyOracleAgreement(int pairsPerLength, unsigned long seed, std::vector<int> lengths = {4, 5, 6, 7}) {
    SuiteReport rep{"oracle-agreement", {}};
    Sampler S(seed);
    for (int l : lengths)
        for (int t = 0; t < pairsPerLength; ++t) {
            const Rational n = S.nonResonant(l, 10);
            // parity pattern cycles through 00, 11, 01, 10
            const int pa = (t >> 1) & 1, pb = ((t >> 1) ^ t) & 1;
            ModuleSpec A = sampleSpec(S, n, pa, l);
            ModuleSpec B = samplePartner(S, A, pb);
            Verdict c = decideClosedForm(A, B), o = genericOracle(A, B);
            rep.add(c.equivalent == o.equivalent, "l=" + std::to_string(l) + " A=" + describe(A) + " B=" + describe(B) +
                                                      " closed=" + std::to_string(c.equivalent) +
                                                      " oracle=" + std::to_string(o.equivalent));
        }
    return rep;
}

// sources with a Bol partner: mu = 0, lambda = 1/2, mu = 1/2, lambda = 0
inline ModuleSpec sampleKnownSource(Sampler& S, const Rational& n, int p, int l) {
    const Rational h(1, 2), x = S.rational(6);
    switch (S.integer(0, 4)) {
        case 0: return {x, 0, -x - n, p, l};
        case 1: return {h, x, x - h - n, p, l};
        case 2: return {x, h, h - x - n, p, l};
        case 3: return {0, x, x - n, p, l};
        default: return specFromInvariants(S.rational(6), S.rational(6), n, p, l);
    }
}

inline SuiteReport verifySvcNecessity(int pairs, unsigned long seed, int lmin = 4, int lmax = 8) {
    SuiteReport rep{"svc-necessity", {}};
    Sampler S(seed);
    while (static_cast<int>(rep.samples.size()) < pairs) {
        const int l = S.integer(lmin, lmax);
        const Rational n = S.nonResonant(l, 10);
        ModuleSpec A = sampleKnownSource(S, n, S.integer(0, 1), l);
        for (auto& k : knownEquivalences(A)) {
            if (!k.isEquivalence || static_cast<int>(rep.samples.size()) >= pairs) continue;
            auto svc = checkSVC(A, k.partner);
            rep.add(svc.pass, kindName(k.kind) + " A=" + describe(A) + " B=" + describe(k.partner) + " " + svc.violated);
        }
    }
    return rep;
}

// some lacunary edge starts at a pole of C
inline bool lacunaryPole(const Rational& n, int l) {
    for (int p = 0; p < 2; ++p) try {
            bMatrix(specFromInvariants(1, 1, n, p, l, true));
        } catch (const resonant_pole&) {
            return true;
        }
    return false;
}

// lacunary deciders against the b-consistency oracle on the lacunary levels
inline SuiteReport verifyLacunary(int l, int pairs, unsigned long seed) {
    SuiteReport rep{"lacunary-" + std::to_string(l), {}};
    Sampler S(seed);
    for (int t = 0; t < pairs; ++t) {
        Rational n;
        do n = S.nonResonant(l, 10);
        while (n == 0 || n == Rational(1, 2) || lacunaryPole(n, l));
        const int p = t & 1;
        ModuleSpec A = sampleSpec(S, n, p, l);
        A.lacunary = true;
        ModuleSpec B = samplePartner(S, A, p);
        B.lacunary = true;
        Verdict d = decideLacunary(A, B), o = genericOracle(A, B);
        rep.add(!d.outOfScope && d.equivalent == o.equivalent,
                "A=" + describe(A) + " B=" + describe(B) + " decider=" + std::to_string(d.equivalent) +
                    " oracle=" + std::to_string(o.equivalent));
    }
    return rep;
}

inline const std::vector<std::string>& suiteNames() {
    static const std::vector<std::string> names = {"bcb",           "repr-law",   "resfacs",   "symmetry",
                                                   "oracle-agreement", "svc-necessity", "lacunary-3", "lacunary-4"};
    return names;
}

inline SuiteReport runSuite(const std::string& name, int samples, unsigned long seed) {
    if (name == "bcb") return verifyBcb(samples, seed);
    if (name == "repr-law") return verifyReprLaw(samples, seed);
    if (name == "resfacs") return verifyResFacs(samples, seed);
    if (name == "symmetry") return verifySymmetry(samples, seed);
    if (name == "oracle-agreement") return verifyOracleAgreement(samples, seed);
    if (name == "svc-necessity") return verifySvcNecessity(samples, seed);
    if (name == "lacunary-3") return verifyLacunary(3, samples, seed);
    if (name == "lacunary-4") return verifyLacunary(4, samples, seed);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace superpsi

#endif
