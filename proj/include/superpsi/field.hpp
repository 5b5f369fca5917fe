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

#ifndef SUPERPSI_FIELD_HPP
#define SUPERPSI_FIELD_HPP

#include "rational.hpp"

#include <optional>
#include <sstream>

namespace superpsi {

// a + b*sqrt(D) over a base field B; D must not be a square in B.
template <class B, long D>
class QuadExt {
  public:
    using base_type = B;
    static constexpr long radicand = D;

    QuadExt() = default;
    template <std::integral I>
    QuadExt(I v) : a_(v), b_(0) {}
    QuadExt(const Rational& r) requires(!std::same_as<B, Rational>) : a_(r), b_(0) {}
    QuadExt(const B& a) : a_(a), b_(0) {}
    QuadExt(const B& a, const B& b) : a_(a), b_(b) {}

    static QuadExt root() { return QuadExt(B(0), B(1)); }

    const B& re() const { return a_; }
    const B& ir() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    QuadExt conj() const { return QuadExt(a_, -b_); }
    B norm() const { return a_ * a_ - B(D) * b_ * b_; }

    QuadExt operator-() const { return QuadExt(-a_, -b_); }
    QuadExt& operator+=(const QuadExt& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QuadExt& operator-=(const QuadExt& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QuadExt& operator*=(const QuadExt& o) {
        B na = a_ * o.a_ + B(D) * b_ * o.b_;
        B nb = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(na);
        b_ = std::move(nb);
        return *this;
    }
    QuadExt inverse() const {
        if (is_zero()) throw division_by_zero();
        B n = norm();
        return QuadExt(a_ / n, -b_ / n);
    }
    QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

    friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
    friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
    friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
    friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
    friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  private:
    B a_, b_;
};

using GaussianRational = QuadExt<Rational, -1>;
// (a + b i) + (c + d i) sqrt3
using FieldValue = QuadExt<GaussianRational, 3>;
using Sqrt33Value = QuadExt<Rational, 33>;

inline FieldValue makeField(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    return FieldValue(GaussianRational(a, b), GaussianRational(c, d));
}
inline Rational fa(const FieldValue& x) { return x.re().re(); }
inline Rational fb(const FieldValue& x) { return x.re().ir(); }
inline Rational fc(const FieldValue& x) { return x.ir().re(); }
inline Rational fd(const FieldValue& x) { return x.ir().ir(); }

inline const FieldValue& imagUnit() {
    static const FieldValue i(GaussianRational(0, 1));
    return i;
}
inline const FieldValue& sqrt3() {
    static const FieldValue s = FieldValue::root();
    return s;
}

// Scalar traits shared by the generic symbol code.
inline bool isZero(const Rational& x) { return x.is_zero(); }
template <class B, long D>
bool isZero(const QuadExt<B, D>& x) { return x.is_zero(); }

inline std::optional<Rational> asRational(const Rational& x) { return x; }
template <class B, long D>
std::optional<Rational> asRational(const QuadExt<B, D>& x) {
    if (!x.ir().is_zero()) return std::nullopt;
    return asRational(x.re());
}

template <class K>
Rational requireRational(const K& x, const char* what) {
    auto r = asRational(x);
    if (!r) throw std::logic_error(std::string("non-rational value in ") + what);
    return *r;
}

template <class K>
struct Phase;
template <>
struct Phase<Rational> {
    static Rational ipow(long e) {
        e = ((e % 4) + 4) % 4;
        if (e % 2) throw std::domain_error("phase outside field: odd power of i over Q");
        return e == 0 ? Rational(1) : Rational(-1);
    }
};
template <>
struct Phase<FieldValue> {
    static FieldValue ipow(long e) {
        e = ((e % 4) + 4) % 4;
        static const FieldValue v[4] = {FieldValue(1), imagUnit(), FieldValue(-1), -imagUnit()};
        return v[e];
    }
};

inline std::string toString(const Rational& r) { return r.str(); }
template <class B, long D>
std::string toString(const QuadExt<B, D>& x) {
    if (x.ir().is_zero()) return toString(x.re());
    std::ostringstream os;
    os << "(" << toString(x.re()) << ")+(" << toString(x.ir()) << ")*sqrt(" << D << ")";
    return os.str();
}
template <class B, long D>
std::ostream& operator<<(std::ostream& os, const QuadExt<B, D>& x) { return os << toString(x); }

}  // namespace superpsi

#endif
