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

#ifndef SUPERPSI_MODULESPEC_HPP
#define SUPERPSI_MODULESPEC_HPP

#include "field.hpp"

#include <stdexcept>

namespace superpsi {

struct invalid_spec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// input outside the non-resonant scope
struct resonant_spec : std::domain_error {
    using std::domain_error::domain_error;
};

// 2n integral and 2 - l <= 2n <= 0
inline bool isResonant(const Rational& n, int l) {
    Rational t = n * 2;
    if (!t.is_integer()) return false;
    long v = t.to_long();
    return 2 - l <= v && v <= 0;
}

struct ModuleSpec {
    Rational lambda, mu, k;
    int p = 0;
    int l = 1;
    bool lacunary = false;

    Rational delta() const { return mu - lambda; }
    Rational n() const { return delta() - k; }
    // lambda + mu - 1/2
    Rational s() const { return lambda + mu - Rational(1, 2); }
    Rational gamma() const { return s() * s() * 3; }
    FieldValue gammaHalf() const { return FieldValue(GaussianRational(0), GaussianRational(s())); }
    Rational N(int len) const { return n() + Rational(len, 4) - Rational(1, 2); }
    Rational N() const { return N(l); }
    bool resonant() const { return isResonant(n(), l); }

    void validate() const {
        if (p != 0 && p != 1) throw invalid_spec("parity must be 0 or 1");
        if (l < 1) throw invalid_spec("length must be positive");
        if (lacunary) {
            Rational nn = n();
            if (nn == 0 || nn == Rational(1, 2)) throw invalid_spec("lacunary module needs n outside {0, 1/2}");
        }
    }

    ModuleSpec conjugate() const {
        return {Rational(1, 2) - mu, Rational(1, 2) - lambda, k, p, l, lacunary};
    }

    friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

// same n, p, l with parameters chosen to realize (gammaHalf / sqrt3, delta)
inline ModuleSpec specFromInvariants(const Rational& s, const Rational& delta, const Rational& n, int p, int l,
                                     bool lacunary = false) {
    // lambda + mu = s + 1/2, mu - lambda = delta
    Rational lam = (s + Rational(1, 2) - delta) / 2;
    return {lam, lam + delta, delta - n, p, l, lacunary};
}

}  // namespace superpsi

#endif
