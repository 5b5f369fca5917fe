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

#ifndef SUPERPSI_POLY_HPP
#define SUPERPSI_POLY_HPP

#include "linalg.hpp"
#include "rational.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace superpsi {

// Dense univariate polynomial over Q, lowest degree first.
class UPoly {
public:
    UPoly() = default;
    UPoly(Rational c) : c_{std::move(c)} { trim(); }
    explicit UPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
    static UPoly x() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }
    // x - r
    static UPoly linear(const Rational& r) { return UPoly(std::vector<Rational>{-r, Rational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational operator()(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UPoly operator-() const { return *this * Rational(-1); }
    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UPoly(std::move(r));
    }
    friend UPoly operator*(UPoly a, const Rational& s) {
        for (auto& v : a.c_) v *= s;
        a.trim();
        return a;
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    // quotient and remainder
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.is_zero()) throw division_by_zero();
        std::vector<Rational> r = c_;
        const int dd = d.degree();
        if (degree() < dd) return {UPoly(), *this};
        std::vector<Rational> q(degree() - dd + 1, Rational(0));
        const Rational inv = d.lead().inverse();
        for (int i = degree(); i >= dd; --i) {
            if (r[i].is_zero()) continue;
            Rational f = r[i] * inv;
            q[i - dd] = f;
            for (int j = 0; j <= dd; ++j) r[i - dd + j] -= f * d.c_[j];
        }
        r.resize(dd);
        return {UPoly(std::move(q)), UPoly(std::move(r))};
    }

    UPoly monic() const { return is_zero() ? *this : *this * lead().inverse(); }
    UPoly derivative() const {
        std::vector<Rational> r;
        for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Rational(static_cast<long>(i)));
        return UPoly(std::move(r));
    }

    std::string str(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c_[i].str() + ")";
            if (i > 0) s += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return s;
    }

private:
    std::vector<Rational> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

inline UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// multiplicity of r as a root, and the cofactor
inline int stripRoot(UPoly& f, const Rational& r) {
    int k = 0;
    while (!f.is_zero() && f.degree() > 0 && f(r).is_zero()) {
        f = f.divmod(UPoly::linear(r)).first;
        ++k;
    }
    return k;
}

inline int signOf(const Rational& x) { return x.sign(); }

// number of sign changes of a Sturm chain at x
inline int sturmVariations(const std::vector<UPoly>& chain, const Rational& x) {
    int v = 0, last = 0;
    for (auto& p : chain) {
        int s = signOf(p(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

inline std::vector<UPoly> sturmChain(const UPoly& f) {
    std::vector<UPoly> ch{f, f.derivative()};
    while (!ch.back().is_zero() && ch.back().degree() > 0) {
        auto r = ch[ch.size() - 2].divmod(ch.back()).second;
        if (r.is_zero()) break;
        ch.push_back(-r);
    }
    return ch;
}

// Cauchy bound on the absolute value of the roots
inline Rational rootBound(const UPoly& f) {
    Rational m(0);
    for (int i = 0; i < f.degree(); ++i) m = std::max(m, abs(f.coeff(i) / f.lead()));
    return m + 1;
}

// all rational roots, each once
inline std::vector<Rational> rationalRoots(UPoly f) {
    std::vector<Rational> out;
    if (f.is_zero()) throw std::invalid_argument("rationalRoots of the zero polynomial");
    if (f.degree() <= 0) return out;
    // square-free part keeps the Sturm count simple
    f = f.divmod(gcd(f, f.derivative())).first;
    // scale to a primitive integer polynomial to read the leading coefficient
    mpz_class den = 1;
    for (auto& c : f.coeffs()) den = lcm(den, c.den());
    f = f * Rational(den);
    mpz_class g = 0;
    for (auto& c : f.coeffs()) g = gcd(g, c.num());
    f = f * Rational(mpz_class(1), g);
    const mpz_class an = abs(f.lead().num());
    auto chain = sturmChain(f);
    const Rational B = rootBound(f);
    // isolate with bisection until each interval is narrower than 1/an
    std::vector<std::pair<Rational, Rational>> work{{-B, B}};
    const Rational width(mpz_class(1), an);
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        if (f(a).is_zero()) {
            out.push_back(a);
            a = a + width / 4;
            if (a >= b) continue;
        }
        int cnt = sturmVariations(chain, a) - sturmVariations(chain, b);
        if (cnt == 0) continue;
        if (b - a < width) {
            // any rational root y / an with y integer lies here
            mpz_class lo = (a * Rational(an)).floor(), hi = (b * Rational(an)).ceil();
            for (mpz_class y = lo; y <= hi; ++y) {
                Rational r(y, an);
                if (r > a && r <= b && f(r).is_zero()) out.push_back(r);
            }
            continue;
        }
        Rational mid = (a + b) / 2;
        work.push_back({a, mid});
        work.push_back({mid, b});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Sparse polynomial over Q in up to four variables.
class MPoly {
public:
    static constexpr int kVars = 4;
    using Exp = std::array<int, kVars>;

    MPoly() = default;
    MPoly(Rational c) {
        if (!c.is_zero()) t_[Exp{}] = std::move(c);
    }
    MPoly(long c) : MPoly(Rational(c)) {}
    static MPoly var(int v) {
        MPoly p;
        Exp e{};
        e[v] = 1;
        p.t_[e] = Rational(1);
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    const std::map<Exp, Rational>& terms() const { return t_; }

    int totalDegree() const {
        int d = -1;
        for (auto& [e, c] : t_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
        return d;
    }
    int degreeIn(int v) const {
        int d = -1;
        for (auto& [e, c] : t_) d = std::max(d, e[v]);
        return d;
    }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    MPoly& operator+=(const MPoly& o) {
        for (auto& [e, c] : o.t_) {
            auto& slot = t_[e];
            slot += c;
            if (slot.is_zero()) t_.erase(e);
        }
        return *this;
    }
    MPoly& operator-=(const MPoly& o) { return *this += -o; }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r;
        for (auto& [ea, ca] : a.t_)
            for (auto& [eb, cb] : b.t_) {
                Exp e;
                for (int i = 0; i < kVars; ++i) e[i] = ea[i] + eb[i];
                auto& slot = r.t_[e];
                slot += ca * cb;
                if (slot.is_zero()) r.t_.erase(e);
            }
        return r;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }

    // replace variable v by the polynomial q
    MPoly substitute(int v, const MPoly& q) const {
        MPoly r;
        std::map<int, MPoly> powers{{0, MPoly(1)}};
        auto pw = [&](int k) -> const MPoly& {
            if (!powers.count(k)) {
                MPoly acc = MPoly(1);
                for (int i = 0; i < k; ++i) acc *= q;
                powers[k] = acc;
            }
            return powers[k];
        };
        for (auto& [e, c] : t_) {
            Exp e2 = e;
            e2[v] = 0;
            MPoly mono;
            mono.t_[e2] = c;
            r += mono * pw(e[v]);
        }
        return r;
    }
    MPoly substitute(int v, const Rational& x) const { return substitute(v, MPoly(x)); }

    Rational eval(const std::array<Rational, kVars>& x) const {
        Rational acc(0);
        for (auto& [e, c] : t_) {
            Rational m = c;
            for (int i = 0; i < kVars; ++i)
                if (e[i]) m *= pow(x[i], e[i]);
            acc += m;
        }
        return acc;
    }

    // as a univariate polynomial in v, all other exponents must be zero
    UPoly univariate(int v) const {
        std::vector<Rational> c(std::max(degreeIn(v) + 1, 0), Rational(0));
        for (auto& [e, k] : t_) {
            for (int i = 0; i < kVars; ++i)
                if (i != v && e[i] != 0) throw std::invalid_argument("MPoly is not univariate");
            c[e[v]] = k;
        }
        return UPoly(std::move(c));
    }

    // coefficient polynomials of v^k
    std::vector<MPoly> coefficientsIn(int v) const {
        std::vector<MPoly> out(std::max(degreeIn(v) + 1, 0));
        for (auto& [e, c] : t_) {
            Exp e2 = e;
            e2[v] = 0;
            MPoly m;
            m.t_[e2] = c;
            out[e[v]] += m;
        }
        return out;
    }

    std::string str(const std::array<const char*, kVars>& names = {"g", "d", "g1", "d1"}) const {
        if (t_.empty()) return "0";
        std::string s;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            if (!s.empty()) s += " + ";
            s += "(" + it->second.str() + ")";
            for (int i = 0; i < kVars; ++i)
                if (it->first[i]) s += std::string("*") + names[i] + (it->first[i] > 1 ? "^" + std::to_string(it->first[i]) : "");
        }
        return s;
    }

private:
    std::map<Exp, Rational> t_;
};

inline MPoly pow(const MPoly& p, int k) {
    MPoly r(1);
    for (int i = 0; i < k; ++i) r *= p;
    return r;
}

// Sylvester resultant of two univariate polynomials
inline Rational resultant(const UPoly& f, const UPoly& g) {
    const int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return Rational(0);
    if (m == 0 && n == 0) return Rational(1);
    Matrix<Rational> S(m + n, m + n);
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) S(r, r + i) = f.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) S(n + r, r + i) = g.coeff(n - i);
    return determinant(S);
}

// resultant with respect to variable v of two polynomials in variables {v, w}, as a polynomial in w
inline UPoly resultantIn(const MPoly& f, const MPoly& g, int v, int w) {
    const int bound = std::max(f.totalDegree(), 0) * std::max(g.totalDegree(), 0);
    std::vector<Rational> xs, ys;
    // interpolation needs bound + 1 points where the leading coefficients in v stay nonzero
    const auto lf = f.coefficientsIn(v), lg = g.coefficientsIn(v);
    if (lf.empty() || lg.empty()) return UPoly();
    for (long t = 0; static_cast<int>(xs.size()) <= bound; ++t) {
        Rational x(t % 2 ? -(t + 1) / 2 : t / 2);
        auto fv = f.substitute(w, x).univariate(v);
        auto gv = g.substitute(w, x).univariate(v);
        if (fv.degree() != f.degreeIn(v) || gv.degree() != g.degreeIn(v)) continue;
        xs.push_back(x);
        ys.push_back(resultant(fv, gv));
    }
    // Lagrange interpolation
    UPoly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        UPoly basis(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * UPoly::linear(xs[j]);
            denom *= xs[i] - xs[j];
        }
        acc = acc + basis * (ys[i] / denom);
    }
    return acc;
}

}  // namespace superpsi

#endif
