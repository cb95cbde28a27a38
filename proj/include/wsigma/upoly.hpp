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

#ifndef WSIGMA_UPOLY_HPP
#define WSIGMA_UPOLY_HPP

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "wsigma/errors.hpp"
#include "wsigma/rational.hpp"

namespace wsigma {

/* Sparse multivariate polynomial over Q with a fixed variable count. */
class UPoly {
public:
    using term_map = std::map<std::vector<int>, Rat>;

    explicit UPoly(int nvars = 0) : nvars_(nvars) {}

    static UPoly constant(int nvars, const Rat& c) {
        UPoly p(nvars);
        if (c != 0) p.t_.emplace(std::vector<int>(nvars, 0), c);
        return p;
    }

    static UPoly variable(int nvars, int i, int exp = 1) {
        UPoly p(nvars);
        std::vector<int> e(nvars, 0);
        e[static_cast<size_t>(i)] = exp;
        p.t_.emplace(std::move(e), Rat(1));
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return t_.empty(); }
    const term_map& terms() const { return t_; }

    Rat coeff_at(const std::vector<int>& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? Rat(0) : it->second;
    }

    void add_term(const std::vector<int>& e, const Rat& c) {
        if (c == 0) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        UPoly r = a;
        for (const auto& [e, c] : b.t_) r.add_term(e, c);
        return r;
    }

    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        UPoly r = a;
        for (const auto& [e, c] : b.t_) r.add_term(e, -c);
        return r;
    }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        UPoly r(a.nvars_);
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                std::vector<int> e = ea;
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    UPoly scaled(const Rat& s) const {
        UPoly r(nvars_);
        if (s == 0) return r;
        for (const auto& [e, c] : t_) r.t_.emplace(e, c * s);
        return r;
    }

    UPoly pow(int e) const {
        UPoly r = constant(nvars_, Rat(1));
        for (int i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    UPoly derivative(int var) const {
        UPoly r(nvars_);
        for (const auto& [e, c] : t_) {
            const int k = e[static_cast<size_t>(var)];
            if (k == 0) continue;
            std::vector<int> e2 = e;
            --e2[static_cast<size_t>(var)];
            r.add_term(e2, c * k);
        }
        return r;
    }

    Rat eval(const std::vector<Rat>& x) const {
        Rat acc(0);
        for (const auto& [e, c] : t_) {
            Rat m = c;
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i]) m *= rat_pow(x[i], e[i]);
            acc += m;
        }
        return acc;
    }

    cplx eval(const std::vector<cplx>& x) const {
        cplx acc(0, 0);
        for (const auto& [e, c] : t_) {
            cplx m = to_cplx(c);
            for (size_t i = 0; i < e.size(); ++i)
                for (int j = 0; j < e[i]; ++j) m *= x[i];
            acc += m;
        }
        return acc;
    }

    /* substitute variable i -> images[i] (polynomials in a new variable set) */
    UPoly substitute(const std::vector<UPoly>& images, int out_nvars) const {
        UPoly r(out_nvars);
        for (const auto& [e, c] : t_) {
            UPoly m = UPoly::constant(out_nvars, c);
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i]) m = m * images[i].pow(e[i]);
            r = r + m;
        }
        return r;
    }

    std::string to_string(const std::string& var = "u") const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool sep = false;
        for (const auto& [e, c] : t_) {
            if (sep) os << " + ";
            os << rat_str(c);
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i]) {
                    os << "*" << var << (i + 1);
                    if (e[i] > 1) os << "^" << e[i];
                }
            sep = true;
        }
        return os.str();
    }

private:
    int nvars_;
    term_map t_;
};

/* power sum p_m in n variables */
inline UPoly power_sum(int nvars, int m) {
    UPoly p(nvars);
    for (int i = 0; i < nvars; ++i)
        p = p + UPoly::variable(nvars, i, m);
    return p;
}

/* complete homogeneous h_m in n variables */
inline UPoly complete_homogeneous(int nvars, int m) {
    if (m < 0) return UPoly(nvars);
    if (m == 0) return UPoly::constant(nvars, Rat(1));
    /* h_m over v+1 variables = sum_j x_v^j * h_{m-j} over v variables */
    std::vector<UPoly> h(static_cast<size_t>(m) + 1, UPoly(nvars));
    h[0] = UPoly::constant(nvars, Rat(1));
    for (int v = 0; v < nvars; ++v) {
        std::vector<UPoly> nh(static_cast<size_t>(m) + 1, UPoly(nvars));
        for (int d = 0; d <= m; ++d)
            for (int j = 0; j <= d; ++j)
                nh[static_cast<size_t>(d)] =
                    nh[static_cast<size_t>(d)] +
                    (j ? h[static_cast<size_t>(d - j)] * UPoly::variable(nvars, v, j)
                       : h[static_cast<size_t>(d)]);
        h = nh;
    }
    return h[static_cast<size_t>(m)];
}

/* exact determinant by fraction-free elimination on a copy */
inline Rat rat_det(std::vector<std::vector<Rat>> m) {
    const size_t n = m.size();
    Rat det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            const Rat f = m[r][c] / m[c][c];
            for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

}  // namespace wsigma

#endif  // WSIGMA_UPOLY_HPP
