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

#ifndef WSIGMA_CURVE_HPP
#define WSIGMA_CURVE_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

#include "wsigma/errors.hpp"
#include "wsigma/laurent.hpp"
#include "wsigma/rational.hpp"
#include "wsigma/semigroup.hpp"

namespace wsigma {

template <typename S>
struct rat_embed {
    static S from(const Rat& q);
};

template <>
struct rat_embed<Rat> {
    static Rat from(const Rat& q) { return q; }
};

template <>
struct rat_embed<cplx> {
    static cplx from(const Rat& q) { return to_cplx(q); }
};

template <typename T>
struct rat_embed<LaurentSeries<T>> {
    static LaurentSeries<T> from(const Rat& q) {
        if (q == 0) return LaurentSeries<T>();
        return LaurentSeries<T>::term(0, rat_embed<T>::from(q), kInfWindow);
    }
};

/* Sparse exact polynomial in (x, y). */
class XYPoly {
public:
    using term_map = std::map<std::pair<int, int>, Rat>;

    XYPoly() = default;

    static XYPoly monomial(int a, int b, const Rat& c) {
        XYPoly p;
        if (c != 0) p.t_.emplace(std::make_pair(a, b), c);
        return p;
    }

    const term_map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(int a, int b, const Rat& c) {
        if (c == 0) return;
        auto key = std::make_pair(a, b);
        auto it = t_.find(key);
        if (it == t_.end()) {
            t_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    friend XYPoly operator+(const XYPoly& a, const XYPoly& b) {
        XYPoly r = a;
        for (const auto& [e, c] : b.t_) r.add_term(e.first, e.second, c);
        return r;
    }

    friend XYPoly operator-(const XYPoly& a, const XYPoly& b) {
        XYPoly r = a;
        for (const auto& [e, c] : b.t_) r.add_term(e.first, e.second, -c);
        return r;
    }

    friend XYPoly operator*(const XYPoly& a, const XYPoly& b) {
        XYPoly r;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_)
                r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }

    XYPoly scaled(const Rat& s) const {
        XYPoly r;
        for (const auto& [e, c] : t_) r.add_term(e.first, e.second, c * s);
        return r;
    }

    XYPoly dx() const {
        XYPoly r;
        for (const auto& [e, c] : t_)
            if (e.first) r.add_term(e.first - 1, e.second, c * e.first);
        return r;
    }

    XYPoly dy() const {
        XYPoly r;
        for (const auto& [e, c] : t_)
            if (e.second) r.add_term(e.first, e.second - 1, c * e.second);
        return r;
    }

    template <typename S>
    S eval(const S& x, const S& y) const {
        /* cache powers to keep series evaluation cheap */
        int amax = 0, bmax = 0;
        for (const auto& [e, c] : t_) {
            amax = std::max(amax, e.first);
            bmax = std::max(bmax, e.second);
        }
        std::vector<S> xp, yp;
        xp.reserve(static_cast<size_t>(amax) + 1);
        yp.reserve(static_cast<size_t>(bmax) + 1);
        for (int i = 0; i <= amax; ++i)
            xp.push_back(i ? xp.back() * x : rat_embed<S>::from(Rat(1)));
        for (int i = 0; i <= bmax; ++i)
            yp.push_back(i ? yp.back() * y : rat_embed<S>::from(Rat(1)));
        S acc = rat_embed<S>::from(Rat(0));
        for (const auto& [e, c] : t_)
            acc = acc + xp[static_cast<size_t>(e.first)] *
                            yp[static_cast<size_t>(e.second)] * rat_embed<S>::from(c);
        return acc;
    }

private:
    term_map t_;
};

/*
 * Plane curve in canonical form  f = y^r + A_1(x) y^{r-1} + ... + A_r(x),
 * deg A_i <= floor(i s / r), with the coefficient of x^s in A_r pinned to -1.
 * Coefficients are keyed as lambda[(i,j)] = coefficient of x^j in A_i
 * (excluding the pinned term).
 */
class WCurve {
public:
    WCurve(long long r, long long s, std::map<std::pair<long long, long long>, Rat> lambda)
        : r_(r), s_(s), lambda_(std::move(lambda)), H_({r, s}) {
        if (r < 2 || s <= r || std::gcd(r, s) != 1) throw NotCoprime("need 2 <= r < s coprime");
        for (const auto& [ij, c] : lambda_) {
            const auto [i, j] = ij;
            if (i < 1 || i > r) throw DegreeBoundViolated("lambda row out of range");
            if (j < 0 || j > (i * s) / r) throw DegreeBoundViolated("deg A_" + std::to_string(i) +
                                                                    " exceeds floor(i s/r)");
            if (i == r && j == s)
                throw DegreeBoundViolated("top coefficient is pinned to -1 and must be omitted");
            (void)c;
        }
        g_ = (r - 1) * (s - 1) / 2;
        d_h_ = (r - 1) * s;
        auto [is, ir] = bezout_pair(r, s);
        i_s_ = is;
        i_r_ = ir;

        f_ = XYPoly::monomial(0, static_cast<int>(r), Rat(1));
        f_.add_term(static_cast<int>(s), 0, Rat(-1));
        for (const auto& [ij, c] : lambda_)
            f_.add_term(static_cast<int>(ij.second), static_cast<int>(r - ij.first), c);
        fx_ = f_.dx();
        fy_ = f_.dy();
    }

    long long r() const { return r_; }
    long long s() const { return s_; }
    long long genus() const { return g_; }
    long long d_h() const { return d_h_; }
    long long bezout_is() const { return i_s_; }
    long long bezout_ir() const { return i_r_; }
    const NumericalSemigroup& semigroup() const { return H_; }
    const std::map<std::pair<long long, long long>, Rat>& lambda() const { return lambda_; }
    const XYPoly& f() const { return f_; }
    const XYPoly& fx() const { return fx_; }
    const XYPoly& fy() const { return fy_; }

    bool pure_superelliptic() const {
        for (const auto& [ij, c] : lambda_)
            if (ij.first != r_ && c != 0) return false;
        return true;
    }

    /* A_i(x) as a dense coefficient vector, including the pinned -x^s in A_r */
    std::vector<Rat> A(long long i) const {
        std::vector<Rat> a(static_cast<size_t>((i * s_) / r_) + 1, Rat(0));
        for (const auto& [ij, c] : lambda_)
            if (ij.first == i) a[static_cast<size_t>(ij.second)] = c;
        if (i == r_) a[static_cast<size_t>(s_)] = Rat(-1);
        return a;
    }

    long long weight(long long a, long long b) const { return -(a * r_ + b * s_); }

    /*
     * Kernel coefficients from the divided difference
     * (f(x,y) - f(x,y')) / (y - y') = sum_k Ups_k(x,y) y'^k.
     */
    XYPoly upsilon(long long k) const {
        /* y^m contributes y^{m-1-k} for k < m; A_i multiplies y-power r-i */
        XYPoly u;
        for (const auto& [e, c] : f_.terms()) {
            const int m = e.second;
            if (m >= 1 && k <= m - 1)
                u.add_term(e.first, m - 1 - static_cast<int>(k), c);
        }
        return u;
    }

    std::string canonical_string() const {
        std::ostringstream os;
        os << "W(" << r_ << "," << s_ << ")";
        for (const auto& [ij, c] : lambda_)
            if (c != 0) os << "[" << ij.first << "," << ij.second << "=" << rat_str(c) << "]";
        return os.str();
    }

private:
    long long r_, s_;
    std::map<std::pair<long long, long long>, Rat> lambda_;
    NumericalSemigroup H_;
    long long g_ = 0, d_h_ = 0, i_s_ = 0, i_r_ = 0;
    XYPoly f_, fx_, fy_;
};

/* monomials x^a y^b (0 <= b < r) ordered by descending weight = ascending -wt */
struct MonomialBasis {
    std::vector<std::pair<long long, long long>> phis;  // (a, b)
    std::vector<long long> weights;                     // -wt
};

inline MonomialBasis phi_basis(const WCurve& W, long long n) {
    MonomialBasis basis;
    const long long r = W.r(), s = W.s();
    for (long long w = 0; static_cast<long long>(basis.phis.size()) <= n; ++w)
        for (long long b = 0; b < r; ++b) {
            if (b * s > w) break;
            if ((w - b * s) % r == 0) {
                basis.phis.emplace_back((w - b * s) / r, b);
                basis.weights.push_back(w);
                break;  // at most one (a,b) per weight when gcd(r,s)=1
            }
        }
    basis.phis.resize(static_cast<size_t>(n) + 1);
    basis.weights.resize(static_cast<size_t>(n) + 1);
    for (size_t i = 0; i <= static_cast<size_t>(n); ++i)
        if (basis.weights[i] != W.semigroup().N(static_cast<long long>(i)))
            throw GapMismatch("phi basis weight differs from element enumeration");
    return basis;
}

/*
 * Structure constants of the y-power module basis: y^i y^j reduced mod f
 * as sum_k a_{ijk}(x) y^k.  Polynomials in x are dense coefficient vectors.
 */
struct ModuleConstants {
    /* a[i][j][k] = coefficient polynomial, 0 <= i,j,k < r */
    std::vector<std::vector<std::vector<std::vector<Rat>>>> a;
};

namespace detail {

inline std::vector<Rat> xpoly_mul(const std::vector<Rat>& p, const std::vector<Rat>& q) {
    if (p.empty() || q.empty()) return {};
    std::vector<Rat> r(p.size() + q.size() - 1, Rat(0));
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
}

inline void xpoly_add(std::vector<Rat>& p, const std::vector<Rat>& q, const Rat& scale) {
    if (p.size() < q.size()) p.resize(q.size(), Rat(0));
    for (size_t i = 0; i < q.size(); ++i) p[i] += q[i] * scale;
}

/* reduce a y-polynomial (index = y power, entry = x-polynomial) mod f */
inline std::vector<std::vector<Rat>> reduce_ypoly(const WCurve& W,
                                                  std::vector<std::vector<Rat>> v) {
    const long long r = W.r();
    while (static_cast<long long>(v.size()) > r) {
        const size_t top = v.size() - 1;
        std::vector<Rat> lead = v[top];
        v.pop_back();
        /* y^r = -sum_i A_i y^{r-i} */
        for (long long i = 1; i <= r; ++i) {
            std::vector<Rat> ai = W.A(i);
            for (auto& c : ai) c = -c;
            const size_t dst = top - static_cast<size_t>(r) + static_cast<size_t>(r - i);
            std::vector<Rat> prod = xpoly_mul(lead, ai);
            if (v.size() <= dst) v.resize(dst + 1);
            xpoly_add(v[dst], prod, Rat(1));
        }
    }
    v.resize(static_cast<size_t>(r));
    return v;
}

}  // namespace detail

inline ModuleConstants module_constants(const WCurve& W) {
    const long long r = W.r();
    ModuleConstants mc;
    mc.a.assign(static_cast<size_t>(r),
                std::vector<std::vector<std::vector<Rat>>>(
                    static_cast<size_t>(r),
                    std::vector<std::vector<Rat>>(static_cast<size_t>(r))));
    for (long long i = 0; i < r; ++i)
        for (long long j = 0; j < r; ++j) {
            std::vector<std::vector<Rat>> v(static_cast<size_t>(i + j) + 1);
            v[static_cast<size_t>(i + j)] = {Rat(1)};
            v = detail::reduce_ypoly(W, std::move(v));
            for (long long k = 0; k < r; ++k) mc.a[static_cast<size_t>(i)][static_cast<size_t>(j)]
                                                  [static_cast<size_t>(k)] = v[static_cast<size_t>(k)];
        }
    return mc;
}

}  // namespace wsigma

#endif  // WSIGMA_CURVE_HPP
