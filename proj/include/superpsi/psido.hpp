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

#ifndef SUPERPSI_PSIDO_HPP
#define SUPERPSI_PSIDO_HPP

#include "superpoly.hpp"

#include <stdexcept>
#include <vector>

namespace superpsi {

struct symbol_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// alpha^delta sum_{j<l} T_j Dbar^{order2 - j}_{parity + j}, modulo the tail.
template <class K>
struct PsiSymbol {
    using scalar_type = K;
    using poly_type = SuperPoly<K>;

    K lambda, mu, order2;
    int parity = 0;
    std::vector<poly_type> coeffs;

    int depth() const { return static_cast<int>(coeffs.size()); }
    K delta() const { return mu - lambda; }
    // order and parity of the basis symbol at position j
    K order2At(int j) const { return order2 - K(j); }
    int parityAt(int j) const { return (parity + j) & 1; }

    bool is_zero() const {
        for (auto& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }

    PsiSymbol& operator+=(const PsiSymbol& o) {
        requireSameSpace(o);
        for (int j = 0; j < depth(); ++j) coeffs[j] += o.coeffs[j];
        return *this;
    }
    PsiSymbol& operator-=(const PsiSymbol& o) {
        requireSameSpace(o);
        for (int j = 0; j < depth(); ++j) coeffs[j] -= o.coeffs[j];
        return *this;
    }
    friend PsiSymbol operator+(PsiSymbol a, const PsiSymbol& b) { return a += b; }
    friend PsiSymbol operator-(PsiSymbol a, const PsiSymbol& b) { return a -= b; }
    friend PsiSymbol operator*(const K& c, PsiSymbol a) {
        for (auto& t : a.coeffs) t = t * c;
        return a;
    }
    friend bool operator==(const PsiSymbol& a, const PsiSymbol& b) {
        return a.lambda == b.lambda && a.mu == b.mu && a.order2 == b.order2 && a.parity == b.parity &&
               a.coeffs == b.coeffs;
    }

    void requireSameSpace(const PsiSymbol& o) const {
        if (!(lambda == o.lambda && mu == o.mu && order2 == o.order2 && parity == o.parity && depth() == o.depth()))
            throw symbol_error("symbols live in different spaces");
    }
};

template <class K>
PsiSymbol<K> zeroSymbol(const K& lambda, const K& mu, const K& order2, int parity, int depth) {
    return {lambda, mu, order2, parity & 1, std::vector<SuperPoly<K>>(depth)};
}

template <class K>
PsiSymbol<K> identitySymbol(const K& lambda, int depth) {
    auto s = zeroSymbol<K>(lambda, lambda, K(0), 0, depth);
    if (depth > 0) s.coeffs[0] = SuperPoly<K>(K(1));
    return s;
}

template <class K>
PsiSymbol<K> padded(PsiSymbol<K> s, int depth) {
    s.coeffs.resize(depth);
    return s;
}

template <class K>
SuperPoly<K> symbolAt(const PsiSymbol<K>& T, int j) {
    if (j < 0 || j >= T.depth()) throw std::out_of_range("symbolAt: level out of range");
    return T.coeffs[j];
}

// (-1)^{|T|} T, with |T| the total parity of each term
template <class K>
PsiSymbol<K> parityTwist(PsiSymbol<K> T) {
    for (int j = 0; j < T.depth(); ++j) {
        T.coeffs[j] = T.coeffs[j].twist();
        if (T.parityAt(j)) T.coeffs[j] = -T.coeffs[j];
    }
    return T;
}

template <class K>
struct ShiftTerm {
    int shift;
    SuperPoly<K> coeff;
};

// Dbar^z_q o G = sum_s c_s Dbar^{z-s}_{q+s}, for s < maxShift
template <class K>
std::vector<ShiftTerm<K>> commuteThrough(const K& z, int q, const SuperPoly<K>& G, int maxShift) {
    std::vector<ShiftTerm<K>> out;
    if (G.is_zero() || maxShift <= 0) return out;
    const K halfK(Rational(1, 2));
    if (q == 0) {
        SuperPoly<K> d = G;
        for (int j = 0; 2 * j < maxShift && !d.is_zero(); ++j) {
            K c = genBinomial(z * halfK, j);
            if (j & 1) c = -c;
            if (!isZero(c)) out.push_back({2 * j, d * c});
            d = d.dx();
        }
        return out;
    }
    // Dbar^z_1 = Dbar^{z-1}_0 o Dbar and Dbar o G = Dbar(G) + (-1)^{|G|} G Dbar
    SuperPoly<K> dg = G.Dbar(), tg = G.twist();
    const K w = (z - K(1)) * halfK;
    for (int j = 0; 2 * j < maxShift && !(dg.is_zero() && tg.is_zero()); ++j) {
        K c = genBinomial(w, j);
        if (j & 1) c = -c;
        if (!isZero(c)) {
            if (!tg.is_zero()) out.push_back({2 * j, tg * c});
            if (2 * j + 1 < maxShift && !dg.is_zero()) out.push_back({2 * j + 1, dg * c});
        }
        dg = dg.dx();
        tg = tg.dx();
    }
    return out;
}

// S o T for S: F_mu -> F_nu, T: F_lambda -> F_mu
template <class K>
PsiSymbol<K> normalOrderCompose(const PsiSymbol<K>& S, const PsiSymbol<K>& T, int outDepth) {
    if (!(S.lambda == T.mu)) throw symbol_error("compose: parameter chain mismatch");
    if (outDepth > S.depth() || outDepth > T.depth()) throw symbol_error("compose: depth mismatch");
    auto R = zeroSymbol<K>(T.lambda, S.mu, S.order2 + T.order2, S.parity + T.parity, outDepth);
    for (int a = 0; a < S.depth() && a < outDepth; ++a) {
        if (S.coeffs[a].is_zero()) continue;
        const K z = S.order2At(a);
        const int q = S.parityAt(a);
        for (int b = 0; a + b < outDepth; ++b) {
            for (auto& t : commuteThrough(z, q, T.coeffs[b], outDepth - a - b))
                R.coeffs[a + b + t.shift] += S.coeffs[a] * t.coeff;
        }
    }
    return R;
}

// L_nu(X_F) = -F Dbar^2 + 1/2 D(F) Dbar + nu F', exact, padded to depth
template <class K>
PsiSymbol<K> densityOperator(const SuperPoly<K>& F, const K& nu, int depth) {
    auto L = zeroSymbol<K>(nu, nu, K(2), 0, std::max(depth, 3));
    L.coeffs[0] = -F;
    L.coeffs[1] = F.D() * K(Rational(1, 2));
    L.coeffs[2] = F.dx() * nu;
    return L;
}

template <class K>
bool isIntegral(const K& x, long* out = nullptr) {
    auto r = asRational(x);
    if (!r || !r->is_integer()) return false;
    if (out) *out = r->to_long();
    return true;
}

struct not_differential : std::domain_error {
    not_differential() : std::domain_error("symbol is not a differential operator") {}
};

template <class K>
SuperPoly<K> applyToDensity(const PsiSymbol<K>& T, const SuperPoly<K>& G) {
    SuperPoly<K> out;
    for (int j = 0; j < T.depth(); ++j) {
        if (T.coeffs[j].is_zero()) continue;
        long z;
        if (!isIntegral(T.order2At(j), &z) || z < 0 || (z & 1) != T.parityAt(j)) throw not_differential();
        out += T.coeffs[j] * G.Dbar(static_cast<int>(z));
    }
    return out;
}

enum class SignConvention { plain, super };

struct filtration_violation : std::logic_error {
    filtration_violation() : std::logic_error("contact action left the filtration") {}
};

// L_mu(X_F) o T - s T o L_lambda(X_F); the tail beyond depth cannot reach the kept levels
template <class K>
PsiSymbol<K> lieAction(const SuperPoly<K>& F, const PsiSymbol<K>& T,
                       SignConvention conv = SignConvention::super) {
    const int pf = F.parity();
    if (pf < 0) throw symbol_error("lieAction: F must be parity-homogeneous");
    const int l = T.depth();
    auto Tp = padded(T, l + 2);
    auto A = normalOrderCompose(densityOperator(F, T.mu, l + 2), Tp, l + 2);
    auto Llam = densityOperator(F, T.lambda, l + 2);
    if (pf == 1 && conv == SignConvention::super) {
        auto Tt = parityTwist(Tp);
        // T = T_even + T_odd; the odd part picks up the sign
        auto B = normalOrderCompose(Tt, Llam, l + 2);
        A -= B;
    } else {
        A -= normalOrderCompose(Tp, Llam, l + 2);
    }
    if (!A.coeffs[0].is_zero() || !A.coeffs[1].is_zero()) throw filtration_violation();
    auto R = zeroSymbol<K>(T.lambda, T.mu, T.order2, T.parity, l);
    for (int j = 0; j < l; ++j) R.coeffs[j] = std::move(A.coeffs[j + 2]);
    return R;
}

struct phase_outside_field : std::domain_error {
    phase_outside_field() : std::domain_error("conjugation needs integral order2") {}
};

// (alpha^delta G Dbar^z_q)* = i^{z+q} (-1)^{q|G|} alpha^delta Dbar^z_q o G
template <class K>
PsiSymbol<K> conjugateSymbol(const PsiSymbol<K>& T) {
    long o2;
    if (!isIntegral(T.order2, &o2)) throw phase_outside_field();
    const K half(Rational(1, 2));
    auto R = zeroSymbol<K>(half - T.mu, half - T.lambda, T.order2, T.parity, T.depth());
    for (int j = 0; j < T.depth(); ++j) {
        if (T.coeffs[j].is_zero()) continue;
        const int q = T.parityAt(j);
        const long z = o2 - j;
        const K phase = Phase<K>::ipow(z + q);
        const SuperPoly<K> G = q ? T.coeffs[j].twist() : T.coeffs[j];
        for (auto& t : commuteThrough(K(z), q, G, T.depth() - j)) R.coeffs[j + t.shift] += t.coeff * phase;
    }
    return R;
}

enum class BolSide { left, right };

template <class K>
PsiSymbol<K> bolSymbol(int depth) {
    auto d = zeroSymbol<K>(K(0), K(Rational(1, 2)), K(1), 1, depth);
    d.coeffs[0] = SuperPoly<K>(K(1));
    return d;
}

template <class K>
PsiSymbol<K> bolCompose(const PsiSymbol<K>& T, BolSide side) {
    if (side == BolSide::left) {
        if (!isZero(T.mu)) throw symbol_error("left Bol composition needs mu = 0");
        return normalOrderCompose(bolSymbol<K>(T.depth()), T, T.depth());
    }
    if (!(T.lambda == K(Rational(1, 2)))) throw symbol_error("right Bol composition needs lambda = 1/2");
    return normalOrderCompose(parityTwist(T), bolSymbol<K>(T.depth()), T.depth());
}

template <class K, class To>
PsiSymbol<To> convertSymbol(const PsiSymbol<K>& s) {
    PsiSymbol<To> r{To(s.lambda), To(s.mu), To(s.order2), s.parity, {}};
    for (auto& c : s.coeffs) r.coeffs.push_back(convertPoly<K, To>(c));
    return r;
}

}  // namespace superpsi

#endif
