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

#ifndef WSIGMA_MONOMIAL_HPP
#define WSIGMA_MONOMIAL_HPP

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "wsigma/curve.hpp"
#include "wsigma/errors.hpp"
#include "wsigma/rational.hpp"
#include "wsigma/semigroup.hpp"

namespace wsigma {

namespace detail {

/* quotient of exact division; remainder must vanish */
inline std::vector<Rat> xpoly_divide_exact(std::vector<Rat> num, const std::vector<Rat>& den) {
    while (!num.empty() && num.back() == 0) num.pop_back();
    std::vector<Rat> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
    while (num.size() >= den.size() && !num.empty()) {
        const size_t shift = num.size() - den.size();
        const Rat c = num.back() / den.back();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        while (!num.empty() && num.back() == 0) num.pop_back();
    }
    if (!num.empty()) throw IdentityFailure("inexact cyclotomic division");
    return q;
}

}  // namespace detail

/* Arithmetic in Q[w] / Phi_r(w), coefficients as dense rational vectors. */
class CyclotomicField {
public:
    explicit CyclotomicField(long long r) : r_(r) {
        if (r < 1) throw ValidationError("cyclotomic order must be positive");
        phi_ = cyclotomic_poly(r);
    }

    long long order() const { return r_; }
    const std::vector<Rat>& modulus() const { return phi_; }

    std::vector<Rat> reduce(std::vector<Rat> p) const {
        while (!p.empty() && p.back() == 0) p.pop_back();
        while (p.size() >= phi_.size()) {
            const size_t shift = p.size() - phi_.size();
            const Rat c = p.back();  // phi is monic
            for (size_t i = 0; i < phi_.size(); ++i) p[shift + i] -= c * phi_[i];
            while (!p.empty() && p.back() == 0) p.pop_back();
        }
        return p;
    }

    std::vector<Rat> w_pow(long long e) const {
        e %= r_;
        if (e < 0) e += r_;
        std::vector<Rat> p(static_cast<size_t>(e) + 1, Rat(0));
        p.back() = Rat(1);
        return reduce(std::move(p));
    }

    static std::vector<Rat> add(std::vector<Rat> a, const std::vector<Rat>& b) {
        if (a.size() < b.size()) a.resize(b.size(), Rat(0));
        for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
        return a;
    }

    std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
        return reduce(detail::xpoly_mul(a, b));
    }

    static std::vector<Rat> scale(std::vector<Rat> a, const Rat& s) {
        if (s == 0) return {};
        for (auto& c : a) c *= s;
        return a;
    }

    static std::vector<Rat> cyclotomic_poly(long long r) {
        /* (w^r - 1) divided by all proper cyclotomic factors */
        std::vector<Rat> num(static_cast<size_t>(r) + 1, Rat(0));
        num[0] = Rat(-1);
        num.back() = Rat(1);
        for (long long d = 1; d < r; ++d)
            if (r % d == 0) num = detail::xpoly_divide_exact(std::move(num), cyclotomic_poly(d));
        return num;
    }

private:
    long long r_;
    std::vector<Rat> phi_;
};

/*
 * Binomial model of the monomial curve of a semigroup <r_1, ..., r_m>:
 * one binomial Z_{r_j}^{fr_j} - Z_{r_1}^{rb_j} per extra generator, where
 * fr_j = r_1/gcd(r_1, r_j) and rb_j = r_j/gcd(r_1, r_j).
 */
struct MonomialCurveData {
    long long r = 0;
    std::vector<long long> gens;    // r_2 .. r_m
    std::vector<long long> rstar;   // gcd(r, r_j)
    std::vector<long long> frak_r;  // r / rstar
    std::vector<long long> rbar;    // r_j / rstar

    std::vector<std::string> binomial_strings() const {
        std::vector<std::string> out;
        for (size_t j = 0; j < gens.size(); ++j) {
            std::ostringstream os;
            os << "Z" << gens[j] << "^" << frak_r[j] << " - Z" << r << "^" << rbar[j];
            out.push_back(os.str());
        }
        return out;
    }
};

inline MonomialCurveData monomial_curve_data(const NumericalSemigroup& H) {
    MonomialCurveData D;
    const auto& gens = H.generators();
    D.r = gens[0];
    for (size_t j = 1; j < gens.size(); ++j) {
        const long long rs = std::gcd(D.r, gens[j]);
        D.gens.push_back(gens[j]);
        D.rstar.push_back(rs);
        D.frak_r.push_back(D.r / rs);
        D.rbar.push_back(gens[j] / rs);
    }
    return D;
}

/*
 * Divided difference (Z^n - Z'^n) / (Z - Z') as a polynomial in (Z, Z');
 * the associated projector is this divided by (n Z^{n-1}).
 */
inline XYPoly divided_difference_poly(long long n) {
    XYPoly p;
    for (long long m = 0; m < n; ++m)
        p.add_term(static_cast<int>(m), static_cast<int>(n - 1 - m), Rat(1));
    return p;
}

/*
 * Projector value p^{(j)} on the fiber pair (z, zeta^a z):
 * (1/fr_j) sum_{m=0}^{fr_j-1} w^{a r_j m}  in  Q[w]/Phi_r(w).
 */
inline std::vector<Rat> trace_projector_value(const CyclotomicField& F,
                                              const MonomialCurveData& D, size_t j,
                                              long long a) {
    std::vector<Rat> acc;
    for (long long m = 0; m < D.frak_r[j]; ++m)
        acc = CyclotomicField::add(std::move(acc), F.w_pow(a * D.gens[j] * m));
    return CyclotomicField::scale(std::move(acc), Rat(1) / Rat(D.frak_r[j]));
}

/*
 * Fiber identity: the product of the projector values over all binomials
 * equals (1/r) sum_i w^{a e_i} over the ordered standard basis, and both
 * collapse to 1 at a = 0 and 0 otherwise.  Exact; throws on failure.
 */
inline void z_substitution_check(const NumericalSemigroup& H) {
    const MonomialCurveData D = monomial_curve_data(H);
    const CyclotomicField F(D.r);
    const StandardBasis sb = standard_basis(H);
    for (long long a = 0; a < D.r; ++a) {
        std::vector<Rat> lhs = {Rat(1)};
        for (size_t j = 0; j < D.gens.size(); ++j)
            lhs = F.mul(lhs, trace_projector_value(F, D, j, a));
        std::vector<Rat> rhs;
        for (long long e : sb.ordered_e)
            rhs = CyclotomicField::add(std::move(rhs), F.w_pow(a * e));
        rhs = CyclotomicField::scale(std::move(rhs), Rat(1) / Rat(D.r));
        const std::vector<Rat> expect = (a == 0) ? std::vector<Rat>{Rat(1)} : std::vector<Rat>{};
        if (lhs != expect || rhs != expect)
            throw IdentityFailure("fiber projector identity failed at a=" + std::to_string(a));
    }
}

}  // namespace wsigma

#endif  // WSIGMA_MONOMIAL_HPP
