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

#ifndef SUPERPSI_QUANTIZATION_HPP
#define SUPERPSI_QUANTIZATION_HPP

#include "linalg.hpp"
#include "modulespec.hpp"
#include "psido.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <stdexcept>
#include <utility>
#include <vector>

namespace superpsi {

struct resonance_or_degeneracy : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// one weight-space basis element: level j, coefficient x^a xi^eta
struct WeightTriple {
    int j, a, eta;
    friend bool operator==(const WeightTriple&, const WeightTriple&) = default;
};

// monomial generators of the projective subalgebra and their weights, in half-units
enum class SGen { one, xi, x, xix, x2, xix2 };

inline int halfWeight(SGen g) {
    switch (g) {
        case SGen::one: return -2;
        case SGen::xi: return -1;
        case SGen::x: return 0;
        case SGen::xix: return 1;
        case SGen::x2: return 2;
        case SGen::xix2: return 3;
    }
    return 0;
}

template <class K>
SuperPoly<K> generator(SGen g) {
    switch (g) {
        case SGen::one: return SuperPoly<K>(K(1));
        case SGen::xi: return SuperPoly<K>::xi(0);
        case SGen::x: return SuperPoly<K>::x(1);
        case SGen::xix: return SuperPoly<K>::xi(1);
        case SGen::x2: return SuperPoly<K>::x(2);
        case SGen::xix2: return SuperPoly<K>::xi(2);
    }
    return {};
}

// Weight spaces of a subquotient, indexed by h = 2(w - n).
template <class K>
class Quantizer {
public:
    using Vec = std::vector<K>;

    Quantizer(K lambda, K mu, K k, int p, int l) : lambda_(lambda), mu_(mu), order2_(k * K(2)), p_(p & 1), l_(l) {
        if (l < 1) throw std::invalid_argument("Quantizer: length must be positive");
    }
    explicit Quantizer(const ModuleSpec& s) : Quantizer(K(s.lambda), K(s.mu), K(s.k), s.p, s.l) {}

    int length() const { return l_; }
    K n() const { return mu_ - lambda_ - order2_ * K(Rational(1, 2)); }

    std::vector<WeightTriple> weightBasis(int h) const {
        std::vector<WeightTriple> b;
        for (int j = 0; j <= h && j < l_; ++j) b.push_back({j, (h - j) / 2, (h - j) % 2});
        return b;
    }

    PsiSymbol<K> symbolOf(int h, const Vec& v) const {
        auto T = zeroSymbol<K>(lambda_, mu_, order2_, p_, l_);
        auto b = weightBasis(h);
        for (std::size_t i = 0; i < b.size(); ++i)
            if (!isZero(v[i])) T.coeffs[b[i].j] += SuperPoly<K>::monomial(b[i].a, b[i].eta, v[i]);
        return T;
    }

    // coordinates of a symbol that must live in weight space h
    Vec coordinates(int h, const PsiSymbol<K>& T) const {
        auto b = weightBasis(h);
        Vec v(b.size(), K(0));
        for (std::size_t i = 0; i < b.size(); ++i) v[i] = T.coeffs[b[i].j].coeff(b[i].a, b[i].eta);
        PsiSymbol<K> back = symbolOf(h, v);
        if (!(back.coeffs == T.coeffs)) throw std::logic_error("symbol left its weight space");
        return v;
    }

    // matrix of the action of X_g from weight space h to h + halfWeight(g)
    const Matrix<K>& action(SGen g, int h) const {
        auto key = std::make_pair(static_cast<int>(g), h);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        const int h2 = h + halfWeight(g);
        auto src = weightBasis(h);
        const int rows = h2 < 0 ? 0 : static_cast<int>(weightBasis(h2).size());
        Matrix<K> M(rows, static_cast<int>(src.size()));
        const auto F = generator<K>(g);
        for (std::size_t c = 0; c < src.size(); ++c) {
            Vec e(src.size(), K(0));
            e[c] = K(1);
            auto img = lieAction(F, symbolOf(h, e));
            if (rows == 0) {
                if (!img.is_zero()) throw std::logic_error("action below the lowest weight");
                continue;
            }
            auto v = coordinates(h2, img);
            for (int r = 0; r < rows; ++r) M(r, static_cast<int>(c)) = v[r];
        }
        return cache_.emplace(key, std::move(M)).first->second;
    }

    Vec apply(SGen g, int h, const Vec& v) const { return action(g, h) * v; }

    // lowest-weight vector for level j0 normalized to symbol 1
    Vec lowestWeightLift(int j0) const {
        if (j0 < 0 || j0 >= l_) throw std::out_of_range("lowestWeightLift: level out of range");
        const int h = j0;
        Matrix<K> lower = action(SGen::one, h).over(action(SGen::xi, h));
        auto ns = lower.nullspace();
        // weight h has basis indices 0..j0, the last one being level j0
        std::vector<Vec> hits;
        for (auto& v : ns)
            if (!isZero(v[j0])) hits.push_back(v);
        if (ns.size() != 1 || hits.size() != 1)
            throw resonance_or_degeneracy("lowest-weight system is not uniquely solvable");
        Vec v = hits.front();
        K inv = K(1) / v[j0];
        for (auto& c : v) c *= inv;
        return v;
    }

    // CQ of alpha^{n + j0/2} x^a xi^eta, as a vector in weight space j0 + 2a + eta
    const Vec& lift(int j0, int a, int eta) const {
        auto key = std::make_tuple(j0, a, eta);
        if (auto it = lifts_.find(key); it != lifts_.end()) return it->second;
        Vec v;
        if (a == 0 && eta == 0) {
            v = lowestWeightLift(j0);
        } else {
            // raise with X_{xi x}: x^a -> (a/2 + nu) xi x^a, xi x^a -> 1/2 x^{a+1}
            const int pa = eta ? a : a - 1, peta = eta ? 0 : 1;
            const int h = j0 + 2 * pa + peta;
            v = apply(SGen::xix, h, lift(j0, pa, peta));
            const K c = v[j0];
            if (isZero(c)) throw resonance_or_degeneracy("raising operator degenerates on the symbol");
            K inv = K(1) / c;
            for (auto& x : v) x *= inv;
        }
        for (int j = 0; j < j0; ++j)
            if (!isZero(v[j])) throw std::logic_error("lift does not preserve symbols");
        return lifts_.emplace(key, std::move(v)).first->second;
    }

    // coordinates of v (weight space h) in the basis of lifts, indexed by level
    Vec cqCoordinates(int h, Vec v) const {
        auto b = weightBasis(h);
        Vec out(b.size(), K(0));
        for (std::size_t i = 0; i < b.size(); ++i) {
            const K c = v[i];
            out[i] = c;
            if (isZero(c)) continue;
            const auto& L = lift(b[i].j, b[i].a, b[i].eta);
            for (std::size_t t = i; t < b.size(); ++t) v[t] -= c * L[t];
        }
        return out;
    }

    // level-i0 component of X_g acting on CQ(alpha^{n} x^a xi^eta at level j0), in lifted coordinates
    Vec transportedAction(SGen g, int j0, int a, int eta) const {
        const int h = j0 + 2 * a + eta;
        return cqCoordinates(h + halfWeight(g), apply(g, h, lift(j0, a, eta)));
    }

private:
    K lambda_, mu_, order2_;
    int p_, l_;
    mutable std::map<std::pair<int, int>, Matrix<K>> cache_;
    mutable std::map<std::tuple<int, int, int>, Vec> lifts_;
};

struct ExtractWindow {
    int a, eta;  // test density x^a xi^eta
};

// test density for the offset r = r2 / 2
inline ExtractWindow testDensity(int r2) {
    if (r2 < 3) throw std::invalid_argument("extractB: offset must be at least 3/2");
    return {(r2 - 3) / 2, (r2 - 3) % 2};
}

// 2 Dbar^{2r-3}(eps^{2r} G) for the test density
template <class K>
K betaValue(int r2) {
    auto t = testDensity(r2);
    auto G = SuperPoly<K>::monomial(t.a, t.eta);
    if (r2 & 1) G = G.twist();
    auto v = G.Dbar(r2 - 3);
    if (v.degree() > 0 || !v.odd().empty()) throw std::logic_error("beta test value is not a constant");
    K c = v.even(0) * K(2);
    if (isZero(c)) throw std::logic_error("zero beta test value");
    return c;
}

// b^p_{m+r,m}(lambda, mu) with r = r2 / 2
template <class K>
K extractB(const K& lambda, const K& mu, const K& m, int r2, int p) {
    const K k = mu - lambda - m;
    const int l = r2 + 1;
    {
        auto mr = asRational(m);
        if (mr && isResonant(*mr, l)) throw resonance_or_degeneracy("resonant window");
    }
    Quantizer<K> Q(lambda, mu, k, p, l);
    auto t = testDensity(r2);
    auto coords = Q.transportedAction(SGen::xix2, 0, t.a, t.eta);
    return coords[r2] / betaValue<K>(r2);
}

inline Rational extractB(const Rational& lambda, const Rational& mu, const Rational& m, int r2, int p) {
    return extractB<Rational>(lambda, mu, m, r2, p);
}

}  // namespace superpsi

#endif
