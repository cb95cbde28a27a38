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

/*
 * Cross-ratio identity: for points P, Q and P1, P2,
 *
 *   Pi = int_Q^P [Sigma(., P1) - Sigma(., P2)] + (w(P)-w(Q)) . int_{P2}^{P1} nu^II
 *
 * satisfies exp(Pi) = sigma(w(P)-w(P1)) sigma(w(Q)-w(P2))
 *                     / (sigma(w(Q)-w(P1)) sigma(w(P)-w(P2))).
 *
 * All paths are routed through the chart at infinity.  The Sigma difference
 * has residue-free expansion there (each factor carries residue -1), so its
 * chart antiderivative is single-valued; nu^II is residue-free outright.
 */

#ifndef WSIGMA_RJFR_HPP
#define WSIGMA_RJFR_HPP

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "wsigma/abel.hpp"
#include "wsigma/sigma.hpp"

namespace wsigma {

/* remove a numerically negligible residue term before integrating */
inline CplxSeries drop_residue(const CplxSeries& s, double tol = 1e-9) {
    const cplx r = s.coeff(-1);
    if (r == cplx(0.0)) return s;
    if (std::abs(r) > tol)
        throw IdentityFailure("unexpected residue " + std::to_string(std::abs(r)));
    return s - CplxSeries::term(-1, r, s.window());
}

struct RjfrResult {
    cplx pi_value = 0.0;  // the path integral Pi
    cplx lhs = 0.0;       // exp(Pi)
    cplx rhs = 0.0;       // sigma cross-ratio
    double rel_err = 0.0;
};

/*
 * Evaluate both sides for the tuple (P, Q, P1, P2) given by x-targets;
 * each point sits on the sheet reached by the canonical path from infinity.
 */
inline RjfrResult rjfr_check(const SigmaContext& ctx, const std::array<cplx, 4>& xs) {
    const PointDiffs& pd = ctx.point_diffs();
    const WCurve& W = pd.curve();
    const long long g = W.genus();

    std::array<AbelResult, 4> ab;
    for (size_t i = 0; i < 4; ++i) ab[i] = abel_from_infinity(pd, xs[i]);
    const AbelResult &P = ab[0], &Q = ab[1], &P1 = ab[2], &P2 = ab[3];

    /* chart expansion of the Sigma difference; each factor has residue -1 */
    const CplxSeries S1 = pd.sigma_series_at(P1.endpoint);
    const CplxSeries S2 = pd.sigma_series_at(P2.endpoint);
    if (std::abs(S1.residue() + 1.0) > 1e-9 || std::abs(S2.residue() + 1.0) > 1e-9)
        throw IdentityFailure("third-kind chart residue is not -1");
    const CplxSeries Fd = drop_residue(S1 - S2).antiderivative();

    std::vector<PointFn> sig_diff = {[&pd, &P1, &P2](cplx x, cplx y) {
        const CPoint pt{x, y};
        return pd.sigma2(pt, P1.endpoint) - pd.sigma2(pt, P2.endpoint);
    }};
    const cplx legP = integrate_segment(W, sig_diff, P.anchor.first, P.anchor.second,
                                        P.endpoint.first).values[0];
    const cplx legQ = integrate_segment(W, sig_diff, Q.anchor.first, Q.anchor.second,
                                        Q.endpoint.first).values[0];
    const cplx sig_part = (eval_series(Fd, P.t_start) + legP) - (eval_series(Fd, Q.t_start) + legQ);

    /* int of nu^II from infinity to P1 resp. P2, composite through the chart */
    std::vector<CplxSeries> FII;
    for (long long i = 0; i < g; ++i)
        FII.push_back(drop_residue(to_cplx_series(pd.basis().nuII()[static_cast<size_t>(i)]))
                          .antiderivative());
    std::vector<PointFn> fnsII;
    for (long long i = 0; i < g; ++i)
        fnsII.push_back([&pd, i](cplx x, cplx y) { return pd.nuII(i, CPoint{x, y}); });
    auto intII = [&](const AbelResult& R) {
        Eigen::VectorXcd v(g);
        for (long long i = 0; i < g; ++i)
            v(i) = eval_series(FII[static_cast<size_t>(i)], R.t_start);
        SegmentResult seg = integrate_segment(W, fnsII, R.anchor.first, R.anchor.second,
                                              R.endpoint.first);
        if (std::abs(seg.y_end - R.endpoint.second) > 1e-8)
            throw PathThroughSingularity("nu^II path landed on a different sheet");
        for (long long i = 0; i < g; ++i) v(i) += seg.values[static_cast<size_t>(i)];
        return v;
    };
    const Eigen::VectorXcd dII = intII(P1) - intII(P2);

    RjfrResult res;
    res.pi_value = sig_part;
    for (long long i = 0; i < g; ++i) res.pi_value += (P.w(i) - Q.w(i)) * dII(i);
    res.lhs = std::exp(res.pi_value);
    res.rhs = (ctx.sigma(P.w - P1.w) * ctx.sigma(Q.w - P2.w)) /
              (ctx.sigma(Q.w - P1.w) * ctx.sigma(P.w - P2.w));
    res.rel_err = std::abs(res.lhs / res.rhs - 1.0);
    return res;
}

}  // namespace wsigma

#endif  // WSIGMA_RJFR_HPP
