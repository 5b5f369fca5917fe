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

#ifndef SUPERPSI_RATIONAL_HPP
#define SUPERPSI_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>

namespace superpsi {

struct division_by_zero : std::domain_error {
    division_by_zero() : std::domain_error("division by zero") {}
};

struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Arbitrary precision rational, always canonical (gmp keeps mpq reduced).
class Rational {
  public:
    Rational() = default;
    template <std::integral I>
    Rational(I v) : q_(static_cast<long>(v)) {}
    Rational(long num, long den) {
        if (den == 0) throw division_by_zero();
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw division_by_zero();
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(const mpz_class& v) : q_(v) {}
    explicit Rational(mpq_class v) : q_(std::move(v)) { q_.canonicalize(); }

    // Accepts "p" or "p/q" with optional sign on p.
    static Rational parse(std::string_view s) {
        auto ok_int = [](std::string_view t, bool sign) {
            if (t.empty()) return false;
            std::size_t i = 0;
            if (sign && (t[0] == '-' || t[0] == '+')) ++i;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        auto slash = s.find('/');
        std::string num(s.substr(0, slash));
        std::string den = slash == std::string_view::npos ? "1" : std::string(s.substr(slash + 1));
        if (!ok_int(num, true) || !ok_int(den, false))
            throw parse_error("not a rational: '" + std::string(s) + "'");
        if (num[0] == '+') num.erase(0, 1);
        mpz_class n(num, 10), d(den, 10);
        if (d == 0) throw division_by_zero();
        return Rational(n, d);
    }

    const mpq_class& mpq() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    std::string str() const { return q_.get_str(); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }

    mpz_class floor() const {
        mpz_class r;
        mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }
    mpz_class ceil() const {
        mpz_class r;
        mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }
    long to_long() const {
        if (!is_integer() || !q_.get_num().fits_slong_p()) throw std::range_error("not a machine integer: " + str());
        return q_.get_num().get_si();
    }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw division_by_zero();
        q_ /= o.q_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    Rational inverse() const {
        if (is_zero()) throw division_by_zero();
        return Rational(mpq_class(1) / q_);
    }

  private:
    mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(const Rational& x, int e) {
    if (e < 0) return pow(x.inverse(), -e);
    Rational r(1), b = x;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// (x)_r = x(x-1)...(x-r+1), (x)_0 = 1; generic over any ring with integer embedding.
template <class K>
K pochhammer(const K& x, int r) {
    if (r < 0) throw std::invalid_argument("pochhammer: negative length");
    K acc(1);
    for (int i = 0; i < r; ++i) acc *= x - K(i);
    return acc;
}

template <class K>
K genBinomial(const K& z, int j) {
    K fact(1);
    for (int i = 2; i <= j; ++i) fact *= K(i);
    return pochhammer(z, j) / fact;
}

struct FloorCeilFrac {
    mpz_class floor, ceil;
    Rational frac;
};

inline FloorCeilFrac floorCeilFrac(const Rational& x) {
    mpz_class f = x.floor();
    return {f, x.ceil(), x - Rational(f)};
}

inline Rational half(long n) { return Rational(n, 2); }

}  // namespace superpsi

#endif
