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

#ifndef SUPERPSI_DECISION_HPP
#define SUPERPSI_DECISION_HPP

#include "invariants.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace superpsi {

struct Verdict {
    bool equivalent = false;
    std::optional<int> parity;
    bool outOfScope = false;
    bool exploratory = false;
    // e_{n+i} / e_{root} keyed by 2i, one root per connected component
    std::map<int, Rational> eRatios;
    std::string violated;
    std::vector<std::string> provenance;
    std::vector<std::string> flags;
};

inline Verdict equivalentVerdict(const ModuleSpec& a, const ModuleSpec& b, std::string why) {
    Verdict v;
    v.equivalent = true;
    v.parity = (a.p + b.p) & 1;
    v.provenance.push_back(std::move(why));
    return v;
}

inline Verdict inequivalentVerdict(std::string violated, std::string why) {
    Verdict v;
    v.violated = std::move(violated);
    v.provenance.push_back(std::move(why));
    return v;
}

inline Verdict outOfScopeVerdict(std::string why) {
    Verdict v;
    v.outOfScope = true;
    v.violated = std::move(why);
    v.provenance.push_back("out of scope");
    return v;
}

inline std::string levelName(int i2) { return Rational(i2, 2).str(); }
inline std::string pairName(int i2, int j2) { return "(" + levelName(i2) + "," + levelName(j2) + ")"; }

// levels present in the composition series, as 2i
inline std::vector<int> levels(const ModuleSpec& s) {
    std::vector<int> out;
    if (!s.lacunary) {
        for (int i2 = 0; i2 < s.l; ++i2) out.push_back(i2);
        return out;
    }
    out.push_back(0);
    for (int i2 = 3; i2 <= s.l; ++i2) out.push_back(i2);
    out.push_back(s.l + 3);
    return out;
}

struct BEdge {
    int i2, j2;
    int q;  // parity superscript p + 2j
    Rational b;
};

// b-values on the cocycle edges i - j in {3/2, 2, 5/2}
inline std::vector<BEdge> bMatrix(const ModuleSpec& s, bool audit = false) {
    std::vector<BEdge> out;
    auto lv = levels(s);
    std::set<int> have(lv.begin(), lv.end());
    const Rational n = s.n();
    for (int i2 : lv)
        for (int j2 : lv) {
            int r2 = i2 - j2;
            if (r2 < 3 || r2 > 5) continue;
            if (s.lacunary && !(j2 == 0 || j2 >= 3)) continue;
            int q = (s.p + j2) & 1;
            Rational m = n + Rational(j2, 2);
            Rational b = bCalibrated(q, r2, m, s.lambda, s.mu);
            if (audit) {
                Rational e = extractB(s.lambda, s.mu, m, r2, q);
                if (!(e == b)) throw std::logic_error("audit: extracted b differs from calibrated closed form at " + pairName(i2, j2));
            }
            out.push_back({i2, j2, q, b});
        }
    return out;
}

inline bool sameFrame(const ModuleSpec& a, const ModuleSpec& b) {
    return a.l == b.l && a.n() == b.n() && a.lacunary == b.lacunary;
}

inline void requireFrame(const ModuleSpec& a, const ModuleSpec& b) {
    a.validate();
    b.validate();
    if (!sameFrame(a, b)) throw invalid_spec("specs have different composition series");
}

// scan of e-potentials over the graph of non-zero edges
inline Verdict genericOracle(const ModuleSpec& A, const ModuleSpec& B, bool audit = false) {
    requireFrame(A, B);
    if (!A.lacunary && A.resonant()) return outOfScopeVerdict("resonant n");
    std::vector<BEdge> ea, eb;
    try {
        ea = bMatrix(A, audit);
        eb = bMatrix(B, audit);
    } catch (const resonant_pole&) {
        return outOfScopeVerdict("C coefficient pole");
    }
    const std::string src = audit ? "b-consistency oracle (extraction audit)" : "b-consistency oracle";
    std::map<int, std::vector<std::pair<int, Rational>>> adj;
    for (size_t k = 0; k < ea.size(); ++k) {
        bool za = ea[k].b.is_zero(), zb = eb[k].b.is_zero();
        if (za != zb)
            return inequivalentVerdict("zero pattern differs at " + pairName(ea[k].i2, ea[k].j2), src);
        if (za) continue;
        // e_i = e_j * b' / b
        Rational r = eb[k].b / ea[k].b;
        adj[ea[k].j2].push_back({ea[k].i2, r});
        adj[ea[k].i2].push_back({ea[k].j2, r.inverse()});
    }
    std::map<int, Rational> pot;
    for (int root : levels(A)) {
        if (pot.count(root)) continue;
        pot[root] = Rational(1);
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto& [w, r] : adj[v]) {
                Rational want = pot[v] * r;
                auto it = pot.find(w);
                if (it == pot.end()) {
                    pot[w] = want;
                    stack.push_back(w);
                } else if (!(it->second == want)) {
                    return inequivalentVerdict("inconsistent cycle through " + pairName(std::max(v, w), std::min(v, w)),
                                               src);
                }
            }
        }
    }
    Verdict v = equivalentVerdict(A, B, src);
    v.eRatios = pot;
    return v;
}

struct SvcOutcome {
    bool pass = true;
    std::string violated;
};

// positional zero-pattern match; for mixed parity the p = 0 spec supplies the first list
inline SvcOutcome compareSvc(const std::vector<SvcEntry>& a, const std::vector<SvcEntry>& b) {
    if (a.size() != b.size()) throw std::logic_error("SVC lists of different length");
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k].zero != b[k].zero) return {false, "SVC factor at " + pairName(a[k].i2, a[k].j2) + " vanishes on one side only"};
    return {};
}

inline SvcOutcome checkSVC(const ModuleSpec& A, const ModuleSpec& B) {
    requireFrame(A, B);
    if (A.lacunary) return compareSvc(lacunarySvcFactors(A), lacunarySvcFactors(B));
    return compareSvc(svcFactors(A), svcFactors(B));
}

// basic invariants of the length-7 frame over factor positions (2i, 2j)
using Position = std::pair<int, int>;
using PosExp = std::map<Position, int>;

inline const std::array<PosExp, 3>& length7Basis() {
    static const std::array<PosExp, 3> basis = {
        PosExp{{{5, 0}, 1}, {{4, 1}, 1}, {{5, 1}, -1}, {{4, 0}, -1}},
        PosExp{{{6, 1}, 1}, {{5, 2}, 1}, {{6, 2}, -1}, {{5, 1}, -1}},
        PosExp{{{6, 1}, 1}, {{5, 0}, 1}, {{6, 3}, -1}, {{5, 1}, -1}, {{3, 0}, -1}},
    };
    return basis;
}

inline std::string basisName(const std::array<int, 3>& c) {
    static const char* names[3] = {"I0_n", "I1_{n+1/2}", "J0_n"};
    std::string num, den;
    for (int k = 0; k < 3; ++k) {
        if (c[k] == 0) continue;
        std::string f = names[k];
        if (std::abs(c[k]) > 1) f += "^" + std::to_string(std::abs(c[k]));
        auto& side = c[k] > 0 ? num : den;
        side += (side.empty() ? "" : " ") + f;
    }
    if (num.empty()) num = "1";
    return den.empty() ? "Simp(" + num + ")" : "Simp(" + num + " / " + den + ")";
}

inline PosExp combine(const std::array<int, 3>& c) {
    PosExp out;
    const auto& basis = length7Basis();
    for (int k = 0; k < 3; ++k)
        for (auto& [pos, e] : basis[k]) out[pos] += c[k] * e;
    std::erase_if(out, [](auto& kv) { return kv.second == 0; });
    return out;
}

// factor values at one point; gpow counts powers of gamma^{1/2}
struct FactorSide {
    std::map<Position, GTerm<Rational>> values;
    Rational gamma;
    Rational s;  // gamma^{1/2} / sqrt3

    bool zero(const Position& p) const { return isZero(values.at(p), gamma); }
    // value as coefficient times s^parity
    std::pair<Rational, int> product(const PosExp& e) const {
        Rational c(1);
        int g = 0;
        for (auto& [p, k] : e) {
            auto& t = values.at(p);
            c *= k > 0 ? pow(t.c, k) : pow(t.c, k);
            g += k * t.gpow;
        }
        // gamma^{g/2} = 3^{g/2} s^g
        while (g >= 2) {
            c *= gamma;
            g -= 2;
        }
        while (g < 0) {
            c /= gamma;
            g += 2;
        }
        return {c, g};
    }
};

struct SimpOutcome {
    bool holds = true;
    std::string violated;
    std::vector<Position> vanishing;
    bool listed = true;
    std::vector<std::string> compared;
};

inline SimpOutcome simpEngine(const FactorSide& A, const FactorSide& B) {
    SimpOutcome out;
    std::set<Position> zeros;
    for (auto& [p, v] : A.values)
        if (A.zero(p)) zeros.insert(p);
    out.vanishing.assign(zeros.begin(), zeros.end());
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c) {
                std::array<int, 3> co{a, b, c};
                auto e = combine(co);
                if (e.empty()) continue;
                if (std::any_of(e.begin(), e.end(), [&](auto& kv) { return zeros.count(kv.first) > 0; })) continue;
                auto [ca, ga] = A.product(e);
                auto [cb, gb] = B.product(e);
                if (ga != gb) throw std::logic_error("Simp ratio with unbalanced gamma^{1/2} power");
                bool eq = ga == 0 ? ca == cb : ca * A.s == cb * B.s;
                if (!eq && out.holds) {
                    out.holds = false;
                    out.violated = basisName(co) + " differs: " + ca.str() + " vs " + cb.str();
                }
            }
    return out;
}

struct TableRow {
    std::vector<Position> vanish;
    bool andOr;
    std::vector<std::array<int, 3>> basics;
};

inline const std::vector<TableRow>& length7Table() {
    static const std::vector<TableRow> rows = {
        {{}, false, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}},
        {{{3, 0}, {6, 3}}, true, {{1, 0, 0}, {0, 1, 0}}},
        {{{5, 2}, {6, 2}}, true, {{1, 0, 0}, {0, 0, 1}}},
        {{{4, 0}, {4, 1}}, true, {{0, 1, 0}, {0, 0, 1}}},
        {{{5, 1}}, false, {{-1, 0, 1}, {0, -1, 1}}},
        {{{5, 0}}, false, {{-1, 0, 1}, {0, 1, 0}}},
        {{{6, 1}}, false, {{0, -1, 1}, {1, 0, 0}}},
        {{{5, 0}, {6, 1}}, false, {{-1, -1, 1}}},
        {{{5, 0}, {5, 1}}, false, {{-1, 0, 1}}},
        {{{6, 1}, {5, 1}}, false, {{0, -1, 1}}},
    };
    return rows;
}

inline const TableRow* matchRow(const std::vector<Position>& v) {
    std::set<Position> z(v.begin(), v.end());
    for (auto& r : length7Table()) {
        std::set<Position> rv(r.vanish.begin(), r.vanish.end());
        if (r.andOr ? (!z.empty() && std::includes(rv.begin(), rv.end(), z.begin(), z.end())) : z == rv) return &r;
    }
    return nullptr;
}

inline FactorSide bFactorSide(const ModuleSpec& s) {
    FactorSide f{{}, s.gamma(), s.s()};
    for (auto& e : bMatrix(s)) f.values[{e.i2, e.j2}] = {e.b, 0};
    return f;
}

// B-factors of a parity-0 length-7 frame
inline FactorSide BFactorSide(const Rational& n, const GammaPoint& pt, const Rational& s) {
    FactorSide f{{}, pt.gamma, s};
    for (int i2 = 0; i2 < 7; ++i2)
        for (int j2 = 0; j2 + 3 <= i2; ++j2)
            if (i2 - j2 <= 5) f.values[{i2, j2}] = evalKey<Rational>({j2 & 1, i2, j2}, n, pt.gamma, pt.delta);
    return f;
}

inline Verdict decideClosedForm(const ModuleSpec& A, const ModuleSpec& B);

inline Verdict decideLength6(const ModuleSpec& A, const ModuleSpec& B) {
    const Rational n = A.n();
    const auto pa = GammaPoint::of(A), pb = GammaPoint::of(B);
    const Rational da = A.delta() - n, db = B.delta() - n;
    if (A.p == B.p) {
        const int p = A.p;
        std::vector<Rational> special = p == 0 ? std::vector<Rational>{0, 1, 2}
                                               : std::vector<Rational>{Rational(1, 2), Rational(3, 2)};
        for (auto& v : special)
            if (da == v || db == v) return equivalentVerdict(A, B, "svc; length-6 splitting of delta - n");
        if (!vanishingFactors(ratioI(p), n, pa).empty() || !vanishingFactors(ratioI(p), n, pb).empty())
            return equivalentVerdict(A, B, "svc; length-6 vanishing factor of I^" + std::to_string(p));
        auto ia = invariantI(p, n, pa), ib = invariantI(p, n, pb);
        if (ia == ib) return equivalentVerdict(A, B, "svc; length-6 invariant I^" + std::to_string(p));
        return inequivalentVerdict("I^" + std::to_string(p) + " differs: " + ia.value.str() + " vs " + ib.value.str(),
                                   "length-6 invariant I^" + std::to_string(p));
    }
    const ModuleSpec& Z = A.p == 0 ? A : B;
    const ModuleSpec& O = A.p == 0 ? B : A;
    const auto pz = GammaPoint::of(Z), po = GammaPoint::of(O);
    for (auto [i2, j2] : std::vector<Position>{{5, 0}, {4, 1}, {5, 1}, {4, 0}})
        if (svcEntry(0, i2, j2, n, pz).zero || svcEntry(1, i2, j2, n, po).zero)
            return equivalentVerdict(A, B, "svc; length-6 mixed parity vanishing at " + pairName(i2, j2));
    auto iz = invariantI(0, n, pz), io = invariantI(1, n, po);
    if (iz == io) return equivalentVerdict(A, B, "svc; length-6 mixed parity I^0 = I^1");
    return inequivalentVerdict("I^0 vs I^1 differ: " + iz.value.str() + " vs " + io.value.str(),
                               "length-6 mixed parity invariants");
}

inline Verdict decideLength7Even0(const ModuleSpec& A, const ModuleSpec& B) {
    const Rational n = A.n();
    const Rational da = A.delta() - n, db = B.delta() - n;
    for (int v : {1, 2})
        if (da == v || db == v) return equivalentVerdict(A, B, "svc; length-7 splitting with delta - n in {1, 2}");
    std::vector<std::string> prov;
    if (da == 0 || db == 0) {
        ModuleSpec wa = A, wb = B;
        for (auto* w : {&wa, &wb}) {
            w->k -= Rational(1, 2);
            w->p = 1;
            w->l = 6;
        }
        Verdict sub = decideClosedForm(wa, wb);
        if (sub.equivalent) return equivalentVerdict(A, B, "svc; length-7 reduction to the parity-1 length-6 window");
        prov.push_back("length-7 window at n + 1/2 inequivalent");
    }
    auto fa = BFactorSide(n, GammaPoint::of(A), A.s());
    auto fb = BFactorSide(n, GammaPoint::of(B), B.s());
    auto res = simpEngine(fa, fb);
    const TableRow* row = matchRow(res.vanishing);
    Verdict v;
    if (row) {
        bool rowHolds = true;
        for (auto& c : row->basics) {
            auto e = combine(c);
            for (auto& [p, k] : e)
                if (fa.zero(p)) throw std::logic_error("table basic invariant has a vanishing factor");
            auto [ca, ga] = fa.product(e);
            auto [cb, gb] = fb.product(e);
            bool eq = ga == gb && (ga == 0 ? ca == cb : ca * fa.s == cb * fb.s);
            rowHolds = rowHolds && eq;
        }
        if (rowHolds != res.holds) throw std::logic_error("length-7 table row disagrees with the general Simp rule");
    }
    if (res.holds) {
        v = equivalentVerdict(A, B, "svc; length-7 simplified ratios");
    } else {
        v = inequivalentVerdict(res.violated, "length-7 simplified ratios");
    }
    for (auto& p : prov) v.provenance.push_back(p);
    if (!row) v.flags.push_back("vanishing pattern not listed in the basic-invariant table; general rule applied");
    return v;
}

inline ModuleSpec reflectLength7(const ModuleSpec& s) {
    // parity 1 at n maps to parity 0 at -n - 5/2 with delta negated
    return specFromInvariants(s.s(), -s.delta(), -s.n() - Rational(5, 2), 0, 7);
}

inline Verdict decideLength7(const ModuleSpec& A, const ModuleSpec& B) {
    if (A.p == 0 && B.p == 0) return decideLength7Even0(A, B);
    if (A.p == 1 && B.p == 1) {
        Verdict v = decideLength7Even0(reflectLength7(A), reflectLength7(B));
        v.provenance.insert(v.provenance.begin(), "reflection to parity 0");
        if (v.equivalent) v.parity = 0;
        return v;
    }
    auto res = simpEngine(bFactorSide(A), bFactorSide(B));
    if (res.holds) return equivalentVerdict(A, B, "svc; length-7 mixed parity b-ratios");
    return inequivalentVerdict(res.violated, "length-7 mixed parity b-ratios");
}

inline Verdict decideClosedForm(const ModuleSpec& A, const ModuleSpec& B) {
    requireFrame(A, B);
    if (A.lacunary) throw invalid_spec("decideClosedForm: lacunary specs");
    if (A.l > 7) throw invalid_spec("decideClosedForm: length above 7");
    if (A.resonant()) throw invalid_spec("decideClosedForm: resonant n");
    auto svc = checkSVC(A, B);
    if (!svc.pass) return inequivalentVerdict(svc.violated, "svc");
    if (A.l <= 5) return equivalentVerdict(A, B, A.l <= 3 ? "full splitting" : "svc");
    if (A.l == 6) return decideLength6(A, B);
    return decideLength7(A, B);
}

inline Verdict decideHighLength(const ModuleSpec& A, const ModuleSpec& B) {
    requireFrame(A, B);
    if (A.l < 8) throw invalid_spec("decideHighLength: length below 8");
    if (A.resonant()) return outOfScopeVerdict("resonant n");
    // irrational exceptional starts never occur for rational n
    Verdict windows = equivalentVerdict(A, B, "length-7 windows");
    for (int i2 = 0; i2 <= A.l - 7; ++i2) {
        ModuleSpec wa = A, wb = B;
        for (auto* w : {&wa, &wb}) {
            w->k -= Rational(i2, 2);
            w->p = (w->p + i2) & 1;
            w->l = 7;
        }
        Verdict w = decideClosedForm(wa, wb);
        if (!w.equivalent) {
            windows = inequivalentVerdict("window at " + levelName(i2) + ": " + w.violated, "length-7 windows");
            break;
        }
    }
    Verdict oracle = genericOracle(A, B);
    if (oracle.equivalent != windows.equivalent)
        throw std::logic_error("length-7 windows and the b-consistency oracle disagree");
    if (windows.equivalent) windows.eRatios = oracle.eRatios;
    windows.provenance.push_back("b-consistency oracle agrees");
    return windows;
}

inline Verdict decideLacunary(const ModuleSpec& A, const ModuleSpec& B) {
    requireFrame(A, B);
    if (!A.lacunary) throw invalid_spec("decideLacunary: specs are not lacunary");
    if (isResonant(A.n(), A.l)) return outOfScopeVerdict("resonant n");
    try {
        bMatrix(A);
        bMatrix(B);
    } catch (const resonant_pole&) {
        return outOfScopeVerdict("C coefficient pole in the lacunary window");
    }
    if (A.l >= 5 || A.p != B.p) {
        Verdict v = genericOracle(A, B);
        v.outOfScope = true;
        v.exploratory = true;
        v.provenance.push_back(A.l >= 5 ? "lacunary length above 4" : "lacunary mixed parity");
        return v;
    }
    auto svc = checkSVC(A, B);
    if (!svc.pass) return inequivalentVerdict(svc.violated, "lacunary svc");
    if (A.l <= 3) return equivalentVerdict(A, B, "lacunary svc");
    for (auto* f : {&A, &B})
        for (auto& e : lacunarySvcFactors(*f))
            if (e.zero) return equivalentVerdict(A, B, "lacunary svc; vanishing factor");
    const Rational n = A.n();
    auto ma = invariantM(A.p, n, GammaPoint::of(A)), mb = invariantM(B.p, n, GammaPoint::of(B));
    if (ma == mb) return equivalentVerdict(A, B, "lacunary invariant M^" + std::to_string(A.p));
    return inequivalentVerdict("M^" + std::to_string(A.p) + " differs: " + ma.value.str() + " vs " + mb.value.str(),
                               "lacunary invariant M^" + std::to_string(A.p));
}

inline Verdict decide(const ModuleSpec& A, const ModuleSpec& B) {
    A.validate();
    B.validate();
    if (!sameFrame(A, B)) {
        Verdict v = inequivalentVerdict("composition series differ (l, n or lacunarity)", "composition series");
        return v;
    }
    Verdict v;
    if (A.lacunary) return decideLacunary(A, B);
    if (A.resonant()) return outOfScopeVerdict("resonant n");
    if (A.l <= 7) {
        v = decideClosedForm(A, B);
        Verdict o = genericOracle(A, B);
        if (o.equivalent != v.equivalent) v.flags.push_back("b-consistency oracle disagrees");
        if (v.equivalent) v.eRatios = o.eRatios;
    } else {
        v = decideHighLength(A, B);
    }
    return v;
}

enum class KnownKind { conjugation, bol, duality, splitting };

inline std::string kindName(KnownKind k) {
    switch (k) {
        case KnownKind::conjugation: return "conjugation";
        case KnownKind::bol: return "bol";
        case KnownKind::duality: return "duality";
        case KnownKind::splitting: return "splitting";
    }
    return "?";
}

struct KnownEquivalence {
    ModuleSpec partner;
    int parity;
    KnownKind kind;
    bool isEquivalence;  // false for correspondences and annotations
    std::string provenance;
};

inline std::vector<KnownEquivalence> knownEquivalences(const ModuleSpec& A) {
    A.validate();
    std::vector<KnownEquivalence> out;
    const Rational h(1, 2);
    out.push_back({A.conjugate(), 0, KnownKind::conjugation, true, "conjugation"});
    auto bol = [&](ModuleSpec t, const char* why) {
        out.push_back({t, 1, KnownKind::bol, true, why});
        out.push_back({t.conjugate(), 1, KnownKind::bol, true, why});
    };
    // left and super-right composition with the first Bol operator, and their inverses
    if (A.mu == 0) bol({A.lambda, h, A.k + h, (A.p + 1) & 1, A.l, A.lacunary}, "left Bol composition");
    if (A.lambda == h) bol({Rational(0), A.mu, A.k + h, (A.p + 1) & 1, A.l, A.lacunary}, "right Bol composition");
    if (A.mu == h) bol({A.lambda, Rational(0), A.k - h, (A.p + 1) & 1, A.l, A.lacunary}, "inverse left Bol composition");
    if (A.lambda == 0) bol({h, A.mu, A.k - h, (A.p + 1) & 1, A.l, A.lacunary}, "inverse right Bol composition");
    // dual frame: (N, p, gamma, delta) -> (-N, p + l, gamma, -delta)
    {
        ModuleSpec d{A.mu, A.lambda, A.lambda - A.mu + A.n() - 1 + Rational(A.l, 2), (A.p + A.l) & 1, A.l, A.lacunary};
        out.push_back({d, (A.p + d.p) & 1, KnownKind::duality, false, "dual frame"});
    }
    // canonical splittings: vanishing Pochhammer prefactors
    if (!A.lacunary) {
        const auto pt = GammaPoint::of(A);
        for (auto [i2, j2] : svcPairs(A.l))
            if (svcPochhammer(A.p, i2, j2, A.n(), pt.delta).is_zero()) {
                out.push_back({A, 0, KnownKind::splitting, false,
                               "canonical splitting: Pochhammer prefactor vanishes at " + pairName(i2, j2)});
                break;
            }
    }
    return out;
}

}  // namespace superpsi

#endif
