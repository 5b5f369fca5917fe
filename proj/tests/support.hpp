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

#ifndef SUPERPSI_TESTS_SUPPORT_HPP
#define SUPERPSI_TESTS_SUPPORT_HPP

#include <superpsi/superpsi.hpp>

namespace superpsi::testing {

inline FieldValue randomField(Sampler& S, long bound = 9) {
    return makeField(S.rational(bound), S.rational(bound), S.rational(bound), S.rational(bound));
}

template <class K>
SuperPoly<K> randomPoly(Sampler& S, int degree = 3, bool withOdd = true) {
    std::vector<K> e, o;
    for (int i = 0; i <= degree; ++i) {
        e.push_back(K(S.rational(7)));
        if (withOdd) o.push_back(K(S.rational(7)));
    }
    return SuperPoly<K>(e, o);
}

inline SuperPoly<FieldValue> randomFieldPoly(Sampler& S, int degree = 3) {
    std::vector<FieldValue> e, o;
    for (int i = 0; i <= degree; ++i) {
        e.push_back(randomField(S, 5));
        o.push_back(randomField(S, 5));
    }
    return SuperPoly<FieldValue>(e, o);
}

template <class K>
PsiSymbol<K> randomSymbol(Sampler& S, const K& lambda, const K& mu, const K& order2, int parity, int depth) {
    auto T = zeroSymbol<K>(lambda, mu, order2, parity, depth);
    for (auto& c : T.coeffs) c = randomPoly<K>(S, 2);
    return T;
}

}  // namespace superpsi::testing

#endif
