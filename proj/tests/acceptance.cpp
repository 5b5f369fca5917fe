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

// Acceptance run: one PASS/FAIL line per criterion. All checks are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <superpsi/superpsi.hpp>

using namespace superpsi;
using R = Rational;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

Outcome fromSuite(const SuiteReport& r) {
    std::ostringstream os;
    os << r.suite << " " << r.passed() << "/" << r.samples.size();
    if (auto* f = r.firstFailure()) os << "; first failure: " << f->detail;
    return {r.ok() && !r.samples.empty(), os.str()};
}

Outcome all(std::initializer_list<Outcome> parts) {
    Outcome o;
    for (auto& p : parts) {
        o.pass = o.pass && p.pass;
        o.detail += (o.detail.empty() ? "" : "; ") + p.detail;
    }
    return o;
}

int failures = 0;

void criterion(int id, double limitSeconds, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (sec > limitSeconds) {
        o.pass = false;
        o.detail += "; over time limit";
    }
    failures += !o.pass;
    std::printf("criterion %d: %s (%.1fs, limit %.0fs) %s\n", id, o.pass ? "PASS" : "FAIL", sec, limitSeconds,
                o.detail.c_str());
    std::fflush(stdout);
}

// D^{3/2}: equivalent to the split module (lambda = 0) iff lambda (mu - 1/2) = 0
Outcome d32(unsigned long seed) {
    Sampler S(seed);
    int n = 0, splits = 0;
    while (n < 50) {
        R delta = S.rational(20);
        if (isResonant(delta - R(3, 2), 4)) continue;
        R lam = n % 5 == 0 ? R(0) : n % 5 == 1 ? R(1, 2) - delta : S.rational(20);
        ModuleSpec a{lam, lam + delta, R(3, 2), 1, 4}, split{R(0), delta, R(3, 2), 1, 4};
        const bool expect = (lam * (a.mu - R(1, 2))).is_zero();
        auto v = decide(a, split);
        if (v.equivalent != expect || !v.flags.empty())
            return {false, "D^{3/2} lambda=" + lam.str() + " delta=" + delta.str()};
        splits += expect;
        ++n;
    }
    return {true, "D^{3/2} 50 samples, " + std::to_string(splits) + " split"};
}

// D^2: classes {self-adjoint}, {0, 1/2 - delta}, everything else
Outcome d2(unsigned long seed) {
    Sampler S(seed);
    for (int t = 0; t < 20;) {
        R delta = S.rational(20);
        if (isResonant(delta - 2, 5)) continue;
        ++t;
        R sa = (R(1, 2) - delta) / 2;
        std::vector<R> lams{sa, R(0), R(1, 2) - delta};
        while (lams.size() < 8) {
            R x = S.rational(20);
            if (x != sa && x != 0 && x != R(1, 2) - delta) lams.push_back(x);
        }
        auto cls = [&](const R& x) { return x == sa ? 0 : (x == 0 || x == R(1, 2) - delta) ? 1 : 2; };
        for (auto& x : lams)
            for (auto& y : lams) {
                auto v = decide(ModuleSpec{x, x + delta, R(2), 0, 5}, ModuleSpec{y, y + delta, R(2), 0, 5});
                if (v.equivalent != (cls(x) == cls(y)))
                    return {false, "D^2 delta=" + delta.str() + " lambda=" + x.str() + " lambda'=" + y.str()};
            }
    }
    return {true, "D^2 three classes on 20 delta"};
}

// D^{5/2}: only equality and conjugation
Outcome d52(unsigned long seed) {
    Sampler S(seed);
    for (int t = 0; t < 20;) {
        R delta = S.rational(20), lam = S.rational(20);
        if (isResonant(delta - R(5, 2), 6)) continue;
        ++t;
        ModuleSpec a{lam, lam + delta, R(5, 2), 1, 6};
        for (R y : {lam, R(1, 2) - delta - lam, S.rational(20), lam + 1}) {
            const bool expect = y == lam || y == R(1, 2) - delta - lam;
            if (decide(a, ModuleSpec{y, y + delta, R(5, 2), 1, 6}).equivalent != expect)
                return {false, "D^{5/2} lambda=" + lam.str() + " lambda'=" + y.str()};
        }
    }
    return {true, "D^{5/2} 20 samples"};
}

Outcome identities(unsigned long seed) {
    Sampler S(seed);
    int b = 0, j = 0, m = 0, r = 0;
    for (int t = 0; t < 50; ++t) {
        R s = S.rational(20), d = S.rational(20);
        GammaPoint pt{3 * s * s, d, s};
        for (int p = 0; p < 2; ++p) {
            R n = S.nonResonant(6, 20);
            if (N6(n) * N6(n) == 1) continue;
            B5410(p, n, pt);  // throws unless the difference is divisible by N6^2 - 1
            ++b;
        }
        for (R N : {R(1), R(-3, 2)}) {
            auto v = invariantJ(N - 1, pt);
            if (!v.defined) continue;
            if (v.value != 1 || v.sqrt3parity) return {false, "J0 at N6=" + N.str() + " is " + v.value.str()};
            ++j;
        }
        auto mv = invariantM(1, R(-3, 2), pt);
        if (mv.defined) {
            if (mv.value != 1) return {false, "M1 at N8=0 is " + mv.value.str()};
            ++m;
        }
        auto r1 = invariantR(1, pt);
        auto i1 = invariantI(1, R(-1), pt);
        if (r1.defined && i1.defined && !r1.value.is_zero() && !i1.value.is_zero() && !pt.gamma.is_zero()) {
            if (16 / r1.value - 9 / i1.value != (7 * pt.gamma - 3) / pt.gamma) return {false, "R identity at s=" + s.str()};
            ++r;
        }
    }
    std::ostringstream os;
    os << "B5410 " << b << ", J0 " << j << ", M1 " << m << ", R " << r;
    return {b >= 50 && j >= 50 && m >= 25 && r >= 25, os.str()};
}

Outcome lge15() {
    auto reps = verifyLge15(5, 1);
    Outcome o{true, ""};
    std::ostringstream os;
    for (auto& t : reps) {
        os << "trial " << t.trial << " n=" << t.n << " " << (t.unique ? "unique" : "NOT unique") << " " << t.seconds << "s; ";
        if (!t.unique || t.seconds > 300) o.pass = false;
    }
    o.detail = os.str();
    return o;
}

}  // namespace

int main() {
    criterion(1, 60, [] { return fromSuite(verifyBcb(100, 1)); });
    criterion(2, 30, [] { return fromSuite(verifyReprLaw(10, 2, 3, 6)); });
    criterion(3, 300, [] { return fromSuite(verifyOracleAgreement(300, 3)); });
    criterion(4, 600, [] { return all({d32(4), d2(5), d52(6)}); });
    criterion(5, 300, [] { return all({fromSuite(verifyResFacs(50, 7)), identities(8)}); });
    criterion(6, 300, [] { return fromSuite(verifySymmetry(30, 9)); });
    criterion(7, 1500, lge15);
    criterion(8, 300, [] { return all({fromSuite(verifyLacunary(3, 50, 10)), fromSuite(verifyLacunary(4, 50, 11))}); });
    criterion(9, 300, [] { return fromSuite(verifySvcNecessity(100, 12)); });
    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
