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

#ifndef SUPERPSI_SUPERPOLY_HPP
#define SUPERPSI_SUPERPOLY_HPP

#include "field.hpp"

#include <algorithm>
#include <vector>

namespace superpsi {

// f0(x) + xi * f1(x), xi^2 = 0.
template <class K>
class SuperPoly {
  public:
    using scalar_type = K;

    SuperPoly() = default;
    SuperPoly(std::vector<K> even, std::vector<K> odd) : e_(std::move(even)), o_(std::move(odd)) { trim(); }
    SuperPoly(const K& c) : e_{c} { trim(); }

    static SuperPoly x(int a = 1, K c = K(1)) {
        std::vector<K> v(a + 1, K(0));
        v[a] = c;
        return SuperPoly(std::move(v), {});
    }
    static SuperPoly xi(int a = 0, K c = K(1)) {
        std::vector<K> v(a + 1, K(0));
        v[a] = c;
        return SuperPoly({}, std::move(v));
    }
    // x^a xi^eta
    static SuperPoly monomial(int a, int eta, K c = K(1)) { return eta ? xi(a, c) : x(a, c); }

    const std::vector<K>& even() const { return e_; }
    const std::vector<K>& odd() const { return o_; }
    K even(std::size_t i) const { return i < e_.size() ? e_[i] : K(0); }
    K odd(std::size_t i) const { return i < o_.size() ? o_[i] : K(0); }
    K coeff(int a, int eta) const { return eta ? odd(a) : even(a); }

    bool is_zero() const { return e_.empty() && o_.empty(); }
    // 0 even, 1 odd, -1 inhomogeneous; zero counts as even
    int parity() const {
        if (o_.empty()) return 0;
        if (e_.empty()) return 1;
        return -1;
    }
    SuperPoly evenPart() const { return SuperPoly(e_, {}); }
    SuperPoly oddPart() const { return SuperPoly({}, o_); }
    int degree() const { return static_cast<int>(std::max(e_.size(), o_.size())) - 1; }

    SuperPoly operator-() const { return *this * K(-1); }
    SuperPoly& operator+=(const SuperPoly& g) {
        add(e_, g.e_);
        add(o_, g.o_);
        trim();
        return *this;
    }
    SuperPoly& operator-=(const SuperPoly& g) { return *this += -g; }
    friend SuperPoly operator+(SuperPoly f, const SuperPoly& g) { return f += g; }
    friend SuperPoly operator-(SuperPoly f, const SuperPoly& g) { return f -= g; }
    friend SuperPoly operator*(SuperPoly f, const K& c) {
        if (isZero(c)) return SuperPoly();
        for (auto& v : f.e_) v *= c;
        for (auto& v : f.o_) v *= c;
        return f;
    }
    friend SuperPoly operator*(const K& c, SuperPoly f) { return std::move(f) * c; }

    // (f0 + xi f1)(g0 + xi g1) = f0 g0 + xi (f0 g1 + f1 g0)
    friend SuperPoly operator*(const SuperPoly& f, const SuperPoly& g) {
        SuperPoly r;
        r.e_ = mul(f.e_, g.e_);
        r.o_ = mul(f.e_, g.o_);
        add(r.o_, mul(f.o_, g.e_));
        r.trim();
        return r;
    }

    friend bool operator==(const SuperPoly& f, const SuperPoly& g) { return f.e_ == g.e_ && f.o_ == g.o_; }

    // parity operator: even part fixed, odd part negated
    SuperPoly twist() const { return SuperPoly(e_, neg(o_)); }

    SuperPoly dx() const { return SuperPoly(deriv(e_), deriv(o_)); }
    // left derivative: d/dxi (f0 + xi f1) = f1
    SuperPoly dxi() const { return SuperPoly(o_, {}); }
    // D = d/dxi + xi d/dx
    SuperPoly D() const { return SuperPoly(o_, deriv(e_)); }
    // Dbar = d/dxi - xi d/dx
    SuperPoly Dbar() const { return SuperPoly(o_, neg(deriv(e_))); }

    SuperPoly dx(int times) const {
        SuperPoly r = *this;
        for (int i = 0; i < times && !r.is_zero(); ++i) r = r.dx();
        return r;
    }
    SuperPoly Dbar(int times) const {
        SuperPoly r = *this;
        for (int i = 0; i < times && !r.is_zero(); ++i) r = r.Dbar();
        return r;
    }

  private:
    std::vector<K> e_, o_;

    void trim() {
        while (!e_.empty() && isZero(e_.back())) e_.pop_back();
        while (!o_.empty() && isZero(o_.back())) o_.pop_back();
    }
    static void add(std::vector<K>& a, const std::vector<K>& b) {
        if (a.size() < b.size()) a.resize(b.size(), K(0));
        for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    }
    static std::vector<K> mul(const std::vector<K>& a, const std::vector<K>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<K> r(a.size() + b.size() - 1, K(0));
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (isZero(a[i])) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        }
        return r;
    }
    static std::vector<K> deriv(const std::vector<K>& a) {
        if (a.size() <= 1) return {};
        std::vector<K> r(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * K(static_cast<long>(i));
        return r;
    }
    static std::vector<K> neg(std::vector<K> a) {
        for (auto& v : a) v = -v;
        return a;
    }
};

template <class K, class To>
SuperPoly<To> convertPoly(const SuperPoly<K>& f) {
    std::vector<To> e, o;
    for (auto& c : f.even()) e.push_back(To(c));
    for (auto& c : f.odd()) o.push_back(To(c));
    return SuperPoly<To>(std::move(e), std::move(o));
}

// Vector field A d/dx + B Dbar in the frame (d/dx, Dbar).
template <class K>
struct VectorField {
    SuperPoly<K> A, B;
    int parity = 0;

    SuperPoly<K> apply(const SuperPoly<K>& g) const { return A * g.dx() + B * g.Dbar(); }

    // the part outside the contact algebra
    SuperPoly<K> tangential() const { return B - K(Rational(1, 2)) * A.D(); }

    friend bool operator==(const VectorField& u, const VectorField& v) { return u.A == v.A && u.B == v.B; }
};

// X_F = F d/dx + 1/2 D(F) Dbar
template <class K>
VectorField<K> contactOf(const SuperPoly<K>& F) {
    int p = F.parity();
    if (p < 0) throw std::invalid_argument("contactOf: generator must be parity-homogeneous");
    return {F, K(Rational(1, 2)) * F.D(), p};
}

struct non_contact : std::domain_error {
    non_contact() : std::domain_error("vector field has nonzero tangential component") {}
};

template <class K>
SuperPoly<K> inverseX(const VectorField<K>& V) {
    if (!V.tangential().is_zero()) throw non_contact();
    return V.A;
}

// super bracket [V, W] = VW - (-1)^{|V||W|} WV, read off from its values on x and xi
template <class K>
VectorField<K> bracket(const VectorField<K>& V, const VectorField<K>& W) {
    const K sign = (V.parity & W.parity) ? K(-1) : K(1);
    auto comm = [&](const SuperPoly<K>& g) { return V.apply(W.apply(g)) - sign * W.apply(V.apply(g)); };
    SuperPoly<K> a = comm(SuperPoly<K>::x(1));
    SuperPoly<K> b = comm(SuperPoly<K>::xi(0));
    // a d/dx + b d/dxi = (a + b xi) d/dx + b Dbar
    return {a + b * SuperPoly<K>::xi(0), b, V.parity ^ W.parity};
}

// L_nu(X_F) on alpha^nu G
template <class K>
SuperPoly<K> densityAction(const SuperPoly<K>& F, const K& nu, const SuperPoly<K>& G) {
    return contactOf(F).apply(G) + nu * (F.dx() * G);
}

}  // namespace superpsi

#endif
