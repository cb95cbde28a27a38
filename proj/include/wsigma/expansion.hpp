/*
   Copyright 2026 the wsigma authors

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

#ifndef WSIGMA_EXPANSION_HPP
#define WSIGMA_EXPANSION_HPP

#include <algorithm>
#include <type_traits>

#include "wsigma/curve.hpp"
#include "wsigma/errors.hpp"
#include "wsigma/laurent.hpp"
#include "wsigma/rational.hpp"

namespace wsigma {

template <typename T>
struct ChartExpansionT {
    LaurentSeries<T> x;  // leading t^{-r}
    LaurentSeries<T> y;  // leading t^{-s}
};

using ChartExpansion = ChartExpansionT<Rat>;

/*
 * Puiseux-free chart at the point at infinity: solve f(x, y) = 0 together
 * with the parameter constraint x^{i_r} = t y^{i_s} (s i_s - r i_r = 1) by
 * one exact linear correction per order.  The achieved residual order is
 * checked at the end.
 */
template <typename T>
ChartExpansionT<T> expand_at_infinity_t(const WCurve& W, long long order) {
    using LS = LaurentSeries<T>;
    const long long r = W.r(), s = W.s();
    const long long i_s = W.bezout_is(), i_r = W.bezout_ir();
    if (order < 1) throw ValidationError("expansion order must be positive");

    const T one = scalar_traits<T>::one();
    LS X = LS::term(-r, one, -r + order);
    LS Y = LS::term(-s, one, -s + order);
    const LS t = LS::term(1, one, kInfWindow);

    for (long long m = 1; m < order; ++m) {
        const LS Rf = W.f().eval(X, Y);
        const LS Rg = X.pow(i_r) - Y.pow(i_s) * t;
        const T cf = Rf.coeff(m - r * s);
        const T cg = Rg.coeff(m - r * i_r);
        if (scalar_traits<T>::is_zero(cf) && scalar_traits<T>::is_zero(cg)) continue;
        /* unimodular system: correction exponents m-r in x, m-s in y */
        const T alpha = rat_embed<T>::from(Rat(i_s)) * cf + rat_embed<T>::from(Rat(r)) * cg;
        const T beta = rat_embed<T>::from(Rat(i_r)) * cf + rat_embed<T>::from(Rat(s)) * cg;
        X = X + LS::term(m - r, alpha, -r + order);
        Y = Y + LS::term(m - s, beta, -s + order);
    }

    const LS Rf = W.f().eval(X, Y);
    const LS Rg = X.pow(i_r) - Y.pow(i_s) * t;
    if constexpr (std::is_same_v<T, Rat>) {
        if (!Rf.is_zero()) throw NewtonStall("residual order " + std::to_string(Rf.lo()));
        if (!Rg.is_zero()) throw NewtonStall("parameter constraint residual");
    } else {
        double scale = 1.0;
        for (const auto& [k, v] : X.coeffs()) scale = std::max(scale, scalar_traits<T>::norm(v));
        for (const auto& [k, v] : Rf.coeffs())
            if (scalar_traits<T>::norm(v) > 1e-6 * scale)
                throw NewtonStall("numeric residual " + std::to_string(k));
        for (const auto& [k, v] : Rg.coeffs())
            if (scalar_traits<T>::norm(v) > 1e-6 * scale)
                throw NewtonStall("numeric constraint residual " + std::to_string(k));
    }
    return {X, Y};
}

inline ChartExpansion expand_at_infinity(const WCurve& W, long long order) {
    return expand_at_infinity_t<Rat>(W, order);
}

/* t-expansion of a polynomial in (x, y) along the infinity chart */
template <typename T>
LaurentSeries<T> phi_infinity(const XYPoly& p, const ChartExpansionT<T>& ch) {
    return p.eval(ch.x, ch.y);
}

}  // namespace wsigma

#endif  // WSIGMA_EXPANSION_HPP
