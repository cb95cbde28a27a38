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

#ifndef WSIGMA_CYCLES_HPP
#define WSIGMA_CYCLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "wsigma/curve.hpp"
#include "wsigma/errors.hpp"
#include "wsigma/pointnum.hpp"
#include "wsigma/quadrature.hpp"
#include "wsigma/rational.hpp"

namespace wsigma {

/*
 * Branch locus of the cyclic model y_*^r = p(x).  For r = 2 a linear term is
 * absorbed by completing the square (y = y_* - A_1/2); for r >= 3 only the
 * pure form y^r = -A_r(x) is supported.
 */
struct BranchData {
    std::vector<cplx> roots;   // distinct roots of p, deterministic order
    cplx lead;                 // leading coefficient of p
    std::vector<Rat> y_shift;  // x-polynomial; y = y_* + y_shift(x)
};

inline BranchData branch_data(const WCurve& W) {
    const long long r = W.r();
    BranchData bd;
    std::vector<Rat> p;  // ascending coefficients of p(x), y_*^r = p(x)
    if (W.pure_superelliptic()) {
        p = W.A(r);
        for (auto& c : p) c = -c;
        bd.y_shift.assign(1, Rat(0));
    } else if (r == 2) {
        /* y^2 + A_1 y + A_2 = 0  ->  (y + A_1/2)^2 = A_1^2/4 - A_2 */
        const std::vector<Rat> a1 = W.A(1);
        std::vector<Rat> sq = detail::xpoly_mul(a1, a1);
        for (auto& c : sq) c /= 4;
        p = W.A(2);
        for (auto& c : p) c = -c;
        detail::xpoly_add(p, sq, Rat(1));
        bd.y_shift = a1;
        for (auto& c : bd.y_shift) c = -c / 2;
    } else {
        throw UnsupportedCurveClass("cycle construction needs y^r = p(x) (or r = 2)");
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (static_cast<long long>(p.size()) - 1 != W.s())
        throw UnsupportedCurveClass("branch polynomial degree must equal s");
    bd.lead = to_cplx(p.back());

    std::vector<cplx> coeffs(p.size());
    for (size_t j = 0; j < p.size(); ++j) coeffs[j] = to_cplx(p[p.size() - 1 - j]);
    bd.roots = poly_roots(std::move(coeffs));
    std::sort(bd.roots.begin(), bd.roots.end(), [](const cplx& a, const cplx& b) {
        const double ra = std::round(a.real() * 1e9) / 1e9, rb = std::round(b.real() * 1e9) / 1e9;
        if (ra != rb) return ra < rb;
        return std::round(a.imag() * 1e9) < std::round(b.imag() * 1e9);
    });
    for (size_t i = 0; i < bd.roots.size(); ++i)
        for (size_t j = i + 1; j < bd.roots.size(); ++j)
            if (std::abs(bd.roots[i] - bd.roots[j]) < 1e-9)
                throw SingularAffineModel("branch points collide");

    /* each finite branch point is totally ramified, one more sits over x = inf */
    const long long nb = static_cast<long long>(bd.roots.size());
    if (nb * (r - 1) - (r + 1) != 2 * W.genus() - 2)
        throw RHViolation("branch count inconsistent with genus");
    return bd;
}

inline cplx eval_xpoly_c(const std::vector<Rat>& p, cplx x) {
    cplx v = 0.0;
    for (size_t j = p.size(); j-- > 0;) v = v * x + to_cplx(p[j]);
    return v;
}

/*
 * Complete integrals over the elementary cells c(i, s): the lift of the
 * segment b_i -> b_{i+1} on sheet s minus the lift on sheet s+1, closed up by
 * vanishing arcs at the endpoints.  The substitution x = m + h sin(theta)
 * splits off the endpoint factors so y_* = (rr (h cos theta)^2)^{1/r} stays
 * on one analytic branch along the whole node sequence.
 */
class CycleQuadrature {
public:
    using NumFn = std::function<cplx(cplx, cplx)>;  // numerator against dx/f_y

    explicit CycleQuadrature(const WCurve& W) : W_(W), bd_(branch_data(W)) {
        zeta_ = std::exp(cplx(0.0, 2.0 * M_PI / static_cast<double>(W.r())));
    }

    const BranchData& branch() const { return bd_; }

    long long segment_count() const { return static_cast<long long>(bd_.roots.size()) - 1; }

    /* product of (x - b_k) over the roots away from the active segment */
    cplx rest_eval(cplx x, long long i) const {
        cplx acc = bd_.lead;
        for (size_t k = 0; k < bd_.roots.size(); ++k)
            if (k != static_cast<size_t>(i) && k != static_cast<size_t>(i + 1))
                acc *= (x - bd_.roots[k]);
        return acc;
    }

    std::vector<cplx> integrate_cell(long long i, long long sheet,
                                     const std::vector<NumFn>& numerators) const {
        const long long r = W_.r();
        const auto& rule = tanh_sinh_rule();
        const size_t n = rule.nodes.size();
        const cplx b1 = bd_.roots[static_cast<size_t>(i)];
        const cplx b2 = bd_.roots[static_cast<size_t>(i + 1)];
        const cplx m = (b1 + b2) / 2.0, h = (b2 - b1) / 2.0;

        std::vector<cplx> xs(n), y0(n), dxs(n);
        /* continuous branch of arg(rr) along the ordered node sequence */
        double prev_arg = 0.0;
        const double habs = std::pow(std::abs(h), 2.0 / static_cast<double>(r));
        const cplx hph = std::exp(cplx(0.0, 2.0 * std::arg(h) / static_cast<double>(r)));
        for (size_t k = 0; k < n; ++k) {
            const double th = (M_PI / 2) * rule.nodes[k];
            const cplx x = m + h * std::sin(th);
            const cplx rr = -rest_eval(x, i);
            double a = std::arg(rr);
            if (k > 0) {
                while (a - prev_arg > M_PI) a -= 2 * M_PI;
                while (a - prev_arg < -M_PI) a += 2 * M_PI;
            }
            prev_arg = a;
            const double c = std::cos(th);
            xs[k] = x;
            y0[k] = std::pow(std::abs(rr), 1.0 / static_cast<double>(r)) *
                    std::exp(cplx(0.0, a / static_cast<double>(r))) * habs *
                    std::pow(c, 2.0 / static_cast<double>(r)) * hph;
            dxs[k] = h * c * (M_PI / 2) * rule.weights[k];
        }

        std::vector<cplx> out(numerators.size(), 0.0);
        for (int leg = 0; leg < 2; ++leg) {
            const cplx zs = std::pow(zeta_, static_cast<double>(sheet + leg));
            const double sgn = leg == 0 ? 1.0 : -1.0;
            for (size_t k = 0; k < n; ++k) {
                cplx y = y0[k] * zs;
                if (bd_.y_shift.size() > 1 || bd_.y_shift[0] != 0)
                    y += eval_xpoly_c(bd_.y_shift, xs[k]);
                const cplx hv = W_.fy().eval(xs[k], y);
                const cplx fac = sgn * dxs[k] / hv;
                for (size_t p = 0; p < numerators.size(); ++p)
                    out[p] += numerators[p](xs[k], y) * fac;
            }
        }
        return out;
    }

private:
    WCurve W_;
    BranchData bd_;
    cplx zeta_;
};

/*
 * U with U S0 U^T = [[0, I], [-I, 0]], rows ordered a_1..a_g, b_1..b_g.
 * Greedy pivoting on the least nonzero entry; a pivot block is accepted only
 * once its column pair is cleared, otherwise strictly smaller entries exist
 * and the pivot is reselected, so termination is guaranteed.
 */
inline std::vector<std::vector<long long>> symplectic_reduce(
    std::vector<std::vector<long long>> S) {
    const size_t n = S.size();
    std::vector<std::vector<long long>> U(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i) U[i][i] = 1;

    auto row_op = [&](size_t i, size_t j, long long c) {
        if (c == 0) return;
        for (size_t k = 0; k < n; ++k) S[i][k] += c * S[j][k];
        for (size_t k = 0; k < n; ++k) S[k][i] += c * S[k][j];
        for (size_t k = 0; k < n; ++k) U[i][k] += c * U[j][k];
    };
    auto swap_rc = [&](size_t i, size_t j) {
        if (i == j) return;
        std::swap(S[i], S[j]);
        for (size_t k = 0; k < n; ++k) std::swap(S[k][i], S[k][j]);
        std::swap(U[i], U[j]);
    };

    size_t pos = 0;
    while (pos < n) {
        size_t bi = 0, bj = 0;
        bool found = false;
        for (size_t i = pos; i < n; ++i)
            for (size_t j = pos; j < n; ++j)
                if (S[i][j] != 0 &&
                    (!found || std::llabs(S[i][j]) < std::llabs(S[bi][bj]))) {
                    bi = i;
                    bj = j;
                    found = true;
                }
        if (!found)
            throw SymplecticViolation("intersection form degenerate: cycles do not span");
        swap_rc(pos, bi);
        if (bj == pos) bj = bi;
        swap_rc(pos + 1, bj);
        const long long p = S[pos][pos + 1];
        bool dirty = false;
        for (size_t k = pos + 2; k < n; ++k) {
            long long c = -static_cast<long long>(
                std::llround(static_cast<double>(S[k][pos + 1]) / static_cast<double>(p)));
            row_op(k, pos, c);
            c = static_cast<long long>(
                std::llround(static_cast<double>(S[k][pos]) / static_cast<double>(p)));
            row_op(k, pos + 1, c);
            if (S[k][pos] != 0 || S[k][pos + 1] != 0) dirty = true;
        }
        if (dirty) continue;
        if (std::llabs(p) != 1)
            throw SymplecticViolation("intersection form not unimodular");
        if (p == -1) swap_rc(pos, pos + 1);
        pos += 2;
    }
    std::vector<std::vector<long long>> out;
    for (size_t i = 0; i < n; i += 2) out.push_back(U[i]);
    for (size_t i = 1; i < n; i += 2) out.push_back(U[i]);
    return out;
}

/* reduced homology basis as integer chains of elementary cells */
struct CyclePath {
    struct Piece {
        long long segment = 0;
        long long sheet = 0;
        long long mult = 0;
    };
    std::vector<Piece> pieces;
};

struct CycleSystem {
    std::vector<cplx> branch_points;
    std::vector<std::pair<long long, long long>> elementary;  // (segment, sheet)
    std::vector<CyclePath> cycles;                            // alpha_1..g, beta_1..g
    std::vector<std::vector<long long>> intersection;         // standard symplectic form
    bool flipped = false;  // surface orientation was reversed for Im tau > 0
};

}  // namespace wsigma

#endif  // WSIGMA_CYCLES_HPP
