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

#ifndef SUPERPSI_ELIMINATION_HPP
#define SUPERPSI_ELIMINATION_HPP

#include "invariants.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <string>
#include <vector>

namespace superpsi {

// variables of the cleared system
enum : int { vGamma = 0, vDelta = 1, vGamma1 = 2, vDelta1 = 3 };

struct TaggedPoly {
    MPoly poly;
    std::string family;  // I0, I1, J0
    int shift = 0;       // i in n + i
    int order = 0;       // number of difference passes
};

struct PolySystem {
    Rational n;
    int p = 0;
    std::vector<TaggedPoly> polys;
    // side condition: the Pochhammer hypothesis at (gamma, delta) and the primed point
    std::string sideCondition;
};

inline MPoly primed(const MPoly& f) {
    // rename (gamma, delta) -> (gamma', delta'); the input uses vars 0, 1 only
    return f.substitute(vGamma, MPoly::var(vGamma1)).substitute(vDelta, MPoly::var(vDelta1));
}

inline MPoly clearedEquation(const BRatio& r, const Rational& base) {
    auto f = symbolicRatio(r, base);
    return f.num * primed(f.den) - primed(f.num) * f.den;
}

// length-15 frame, parity 0; parity 1 goes through the odd-length reflection
inline PolySystem clearedEquations(const Rational& n, int p = 0) {
    if (isResonant(n, 15)) throw invalid_spec("clearedEquations: resonant n");
    if ((p & 1) == 1) {
        auto s = clearedEquations(-n - Rational(13, 2), 0);
        s.n = n;
        s.p = 1;
        // delta -> -delta on both points
        for (auto& t : s.polys)
            t.poly = t.poly.substitute(vDelta, -MPoly::var(vDelta)).substitute(vDelta1, -MPoly::var(vDelta1));
        s.sideCondition = "(delta - n - 1/2)_6 != 0 and (delta' - n - 1/2)_6 != 0";
        return s;
    }
    PolySystem s{n, 0, {}, "(delta - n)_6 != 0 and (delta' - n)_6 != 0"};
    for (int i = 0; i <= 4; ++i) {
        const Rational base = n + i;
        s.polys.push_back({clearedEquation(ratioI(0), base), "I0", i, 0});
        s.polys.push_back({clearedEquation(ratioI(1), base + Rational(1, 2)), "I1", i, 0});
        s.polys.push_back({clearedEquation(ratioJ(0), base), "J0", i, 0});
    }
    return s;
}

// iterated n-differences within each family; keeps the original equations
inline PolySystem differenceReduce(const PolySystem& S) {
    PolySystem out = S;
    for (const char* fam : {"I0", "I1", "J0"}) {
        std::vector<TaggedPoly> row;
        for (auto& t : S.polys)
            if (t.family == fam && t.order == 0) row.push_back(t);
        std::sort(row.begin(), row.end(), [](auto& a, auto& b) { return a.shift < b.shift; });
        for (int order = 1; row.size() > 1; ++order) {
            std::vector<TaggedPoly> next;
            for (size_t k = 0; k + 1 < row.size(); ++k) {
                TaggedPoly d{row[k + 1].poly - row[k].poly, fam, row[k].shift, order};
                next.push_back(d);
                if (!d.poly.is_zero()) out.polys.push_back(d);
            }
            row = std::move(next);
        }
    }
    return out;
}

inline int maxDegree(const PolySystem& S, const std::string& family, int order) {
    int d = -1;
    for (auto& t : S.polys)
        if (t.family == family && t.order == order) d = std::max(d, t.poly.totalDegree());
    return d;
}

struct Solution {
    Rational gamma1, delta1;
};

struct SolveReport {
    std::vector<Solution> solutions;
    UPoly deltaResidual;  // common factor in delta' after removing rational roots
    UPoly gammaResidual;  // same in gamma'
    bool degenerate = false;
    int pairsUsed = 0;
};

inline std::vector<MPoly> substituted(const PolySystem& S, const Rational& gamma, const Rational& delta) {
    std::vector<MPoly> out;
    for (auto& t : S.polys) {
        MPoly q = t.poly.substitute(vGamma, gamma).substitute(vDelta, delta);
        if (!q.is_zero()) out.push_back(std::move(q));
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.totalDegree() < b.totalDegree(); });
    return out;
}

// common factor of pairwise resultants eliminating v, in the remaining variable w
inline UPoly eliminationGcd(const std::vector<MPoly>& polys, int v, int w, int maxPairs, int& used) {
    UPoly g;
    for (size_t a = 0; a < polys.size() && used < maxPairs; ++a)
        for (size_t b = a + 1; b < polys.size() && used < maxPairs; ++b) {
            if (polys[a].degreeIn(v) == 0 && polys[b].degreeIn(v) == 0) continue;
            UPoly r = resultantIn(polys[a], polys[b], v, w);
            ++used;
            if (r.is_zero()) continue;
            g = g.is_zero() ? r.monic() : gcd(g, r);
            if (g.degree() == 1) return g;
        }
    return g;
}

inline UPoly commonUnivariate(const std::vector<MPoly>& polys, int v, int fixedVar, const Rational& x) {
    UPoly g;
    for (auto& f : polys) {
        MPoly q = f.substitute(fixedVar, x);
        if (q.is_zero()) continue;
        UPoly u = q.univariate(v);
        g = g.is_zero() ? u.monic() : gcd(g, u);
        if (g.degree() == 0) break;
    }
    return g;
}

inline SolveReport resultantSolve(const PolySystem& S, const Rational& gamma, const Rational& delta, int maxPairs = 40) {
    SolveReport rep;
    auto polys = substituted(S, gamma, delta);
    // univariate members constrain directly
    int used = 0;
    UPoly gd = eliminationGcd(polys, vGamma1, vDelta1, maxPairs, used);
    UPoly gg = eliminationGcd(polys, vDelta1, vGamma1, maxPairs, used);
    rep.pairsUsed = used;
    if (gd.is_zero() || gg.is_zero()) {
        rep.degenerate = true;
        return rep;
    }
    for (auto& d1 : rationalRoots(gd)) {
        UPoly h = commonUnivariate(polys, vGamma1, vDelta1, d1);
        if (h.is_zero()) {
            rep.degenerate = true;
            continue;
        }
        for (auto& g1 : rationalRoots(h)) rep.solutions.push_back({g1, d1});
    }
    rep.deltaResidual = gd;
    for (auto& r : rationalRoots(gd)) stripRoot(rep.deltaResidual, r);
    rep.gammaResidual = gg;
    for (auto& r : rationalRoots(gg)) stripRoot(rep.gammaResidual, r);
    // every reported root must satisfy the system exactly
    for (auto& s : rep.solutions)
        for (auto& f : polys)
            if (!f.eval({Rational(0), Rational(0), s.gamma1, s.delta1}).is_zero())
                throw std::logic_error("resultantSolve: reported root fails a polynomial");
    return rep;
}

struct TrialReport {
    int trial = 0;
    Rational n, gamma, delta, s;
    int p = 0;
    std::vector<Solution> solutions;
    int deltaResidualDegree = 0, gammaResidualDegree = 0;
    bool degenerate = false;
    bool unique = false;
    double seconds = 0;
    std::vector<int> degreesBefore, degreesAfter;
};

inline Rational randomRational(std::mt19937_64& rng, long numBound, long denBound) {
    std::uniform_int_distribution<long> num(-numBound, numBound), den(1, denBound);
    return Rational(num(rng), den(rng));
}

// random sample avoiding vanishing factors and the splitting Pochhammers
inline bool lge15SampleOk(const Rational& n, int p, const Rational& s, const Rational& delta) {
    GammaPoint pt{s * s * 3, delta, s};
    const Rational h(1, 2);
    Rational poch = p == 0 ? pochhammer(delta - n, 6) : pochhammer(delta - n - h, 6);
    if (poch.is_zero() || pt.gamma.is_zero()) return false;
    for (int i = 0; i <= 6; ++i)
        for (const BRatio& r : {ratioI(0), ratioI(1), ratioJ(0), ratioJ(1)})
            if (!vanishingFactors(r, n + Rational(i, 2), pt).empty()) return false;
    return true;
}

inline TrialReport runLge15Trial(int trial, const Rational& n, int p, const Rational& s, const Rational& delta) {
    auto t0 = std::chrono::steady_clock::now();
    TrialReport r;
    r.trial = trial;
    r.n = n;
    r.p = p;
    r.s = s;
    r.gamma = s * s * 3;
    r.delta = delta;
    auto S = clearedEquations(n, p);
    auto R = differenceReduce(S);
    for (const char* f : {"I0", "I1", "J0"}) {
        r.degreesBefore.push_back(maxDegree(R, f, 0));
        r.degreesAfter.push_back(maxDegree(R, f, 4));
    }
    auto rep = resultantSolve(R, r.gamma, delta);
    r.solutions = rep.solutions;
    r.degenerate = rep.degenerate;
    r.deltaResidualDegree = rep.deltaResidual.degree();
    r.gammaResidualDegree = rep.gammaResidual.degree();
    r.unique = !rep.degenerate && rep.solutions.size() == 1 && rep.solutions[0].gamma1 == r.gamma &&
               rep.solutions[0].delta1 == delta && r.deltaResidualDegree <= 0 && r.gammaResidualDegree <= 0;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

struct Lge15Sample {
    Rational n, s, delta;
};

inline std::vector<Lge15Sample> lge15Samples(int trials, unsigned long seed, std::optional<Rational> fixedN, int p) {
    if (fixedN && isResonant(*fixedN, 15)) throw resonant_spec("n = " + fixedN->str() + " is resonant for length 15");
    std::mt19937_64 rng(seed);
    std::vector<Lge15Sample> out;
    for (int t = 0; t < trials; ++t) {
        Lge15Sample x;
        do {
            x.n = fixedN ? *fixedN : randomRational(rng, 20, 10);
            x.s = randomRational(rng, 12, 6);
            x.delta = randomRational(rng, 12, 6);
        } while (isResonant(x.n, 15) || !lge15SampleOk(x.n, p, x.s, x.delta));
        out.push_back(x);
    }
    return out;
}

inline std::vector<TrialReport> verifyLge15(int trials, unsigned long seed, std::optional<Rational> fixedN = std::nullopt,
                                            int p = 0, int jobs = 1) {
    auto samples = lge15Samples(trials, seed, fixedN, p);
    return parallelMap(trials, jobs, [&](int t) {
        return runLge15Trial(t, samples[t].n, p, samples[t].s, samples[t].delta);
    });
}

}  // namespace superpsi

#endif
