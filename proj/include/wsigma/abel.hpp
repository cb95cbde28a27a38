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
 * Abel map: integrates the first-kind basis from the base point at infinity
 * to affine targets.  Near infinity the antiderivative is taken termwise on
 * the chart series; the remaining leg is a straight x-segment integrated with
 * Gauss-Legendre nodes while the fiber sheet is tracked by continuation.
 */

#ifndef WSIGMA_ABEL_HPP
#define WSIGMA_ABEL_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "wsigma/periods.hpp"
#include "wsigma/pointnum.hpp"
#include "wsigma/quadrature.hpp"

namespace wsigma {

using PointFn = std::function<cplx(cplx, cplx)>;

/*
 * Track the fiber root starting at (x0, y0) along the straight segment to x1.
 * Steps double until each move keeps the chosen root well separated from the
 * rest of the fiber (factor-4 gate); ambiguous tracking is refused rather
 * than guessed.
 */
inline cplx continue_fiber(const WCurve& W, cplx x0, cplx y0, cplx x1) {
    for (long long n = 8; n <= 8192; n *= 2) {
        cplx y = y0;
        bool ok = true;
        for (long long k = 1; k <= n; ++k) {
            const cplx x = x0 + (x1 - x0) * (static_cast<double>(k) / static_cast<double>(n));
            const std::vector<cplx> rts = fiber_roots(W, x);
            size_t j = 0;
            double best = std::abs(rts[0] - y);
            for (size_t i = 1; i < rts.size(); ++i) {
                const double d = std::abs(rts[i] - y);
                if (d < best) { best = d; j = i; }
            }
            double sep = std::numeric_limits<double>::infinity();
            for (size_t i = 0; i < rts.size(); ++i)
                if (i != j) sep = std::min(sep, std::abs(rts[i] - rts[j]));
            if (sep < 4.0 * std::abs(rts[j] - y)) { ok = false; break; }
            y = rts[j];
        }
        if (ok) return y;
    }
    throw PathThroughSingularity("fiber tracking lost between x = " + std::to_string(x0.real()) +
                                 "+" + std::to_string(x0.imag()) + "i and target");
}

struct SegmentResult {
    std::vector<cplx> values;
    cplx y_end = 0.0;
};

/* Integrate the given integrands f(x, y) dx over the straight segment x0 -> x1,
   starting on the sheet of y0.  Returns the integrals and the continued y(x1). */
inline SegmentResult integrate_segment(const WCurve& W, const std::vector<PointFn>& fns,
                                       cplx x0, cplx y0, cplx x1) {
    static const QuadratureRule rule = gauss_legendre_rule();
    SegmentResult out;
    out.values.assign(fns.size(), cplx(0.0));
    cplx xprev = x0, yprev = y0;
    const cplx half = (x1 - x0) * 0.5;
    for (size_t q = 0; q < rule.nodes.size(); ++q) {
        const cplx x = x0 + (x1 - x0) * ((rule.nodes[q] + 1.0) * 0.5);
        const cplx y = continue_fiber(W, xprev, yprev, x);
        for (size_t m = 0; m < fns.size(); ++m)
            out.values[m] += rule.weights[q] * fns[m](x, y) * half;
        xprev = x;
        yprev = y;
    }
    out.y_end = continue_fiber(W, xprev, yprev, x1);
    return out;
}

struct AbelResult {
    Eigen::VectorXcd w;   // integral of nu^I from infinity
    CPoint endpoint;      // (x_target, tracked y)
    cplx t_start = 0.0;   // chart parameter of the anchor point
    CPoint anchor;        // anchor (x, y) near infinity
};

/* Abel integral from infinity with an explicit chart anchor t = tA. */
inline AbelResult abel_from_start(const PointDiffs& pd, cplx tA, cplx x_target) {
    const WCurve& W = pd.curve();
    const long long g = W.genus();
    AbelResult res;
    res.t_start = tA;
    res.anchor = pd.chart_point(tA);
    const auto [xA, yA] = res.anchor;

    /* the truncated chart must still satisfy the curve equation at tA */
    const double scale = 1.0 + std::pow(std::abs(xA), static_cast<double>(W.s())) +
                         std::pow(std::abs(yA), static_cast<double>(W.r()));
    if (std::abs(pd.f_at(res.anchor)) > 1e-10 * scale)
        throw PathThroughSingularity("chart anchor off curve; increase series order");

    res.w.resize(g);
    for (long long i = 0; i < g; ++i) {
        /* nu^I is holomorphic at infinity: termwise antiderivative is exact */
        const CplxSeries F = to_cplx_series(pd.basis().nuI()[static_cast<size_t>(i)]).antiderivative();
        res.w(i) = eval_series(F, tA);
    }

    std::vector<PointFn> fns;
    for (long long i = 0; i < g; ++i)
        fns.push_back([&pd, i](cplx x, cplx y) { return pd.nuI(i, CPoint{x, y}); });
    SegmentResult seg = integrate_segment(W, fns, xA, yA, x_target);
    for (long long i = 0; i < g; ++i) res.w(i) += seg.values[static_cast<size_t>(i)];
    res.endpoint = CPoint{x_target, seg.y_end};
    return res;
}

/*
 * Default anchor: |t| = t_chart on the ray that drops the anchor near the
 * direction of the target, keeping the connecting segment away from the
 * branch locus for generic targets.
 */
inline AbelResult abel_from_infinity(const PointDiffs& pd, cplx x_target, double t_chart = 0.2) {
    const cplx i1(0.0, 1.0);
    const cplx tA = t_chart * std::exp(-i1 * (std::arg(x_target) / static_cast<double>(pd.curve().r())));
    return abel_from_start(pd, tA, x_target);
}

/* Sum of single-point Abel images (the degree-k Abel map on x-targets). */
inline Eigen::VectorXcd abel_map(const PointDiffs& pd, const std::vector<cplx>& xs) {
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(pd.curve().genus());
    for (const cplx& x : xs) w += abel_from_infinity(pd, x).w;
    return w;
}

/*
 * Shifted Abel map.  On the symmetric-semigroup tier handled here the shift
 * divisor is supported at the base point, so the shift vanishes identically;
 * the entry point is kept so callers can stay shift-correct.
 */
inline Eigen::VectorXcd abel_map_shifted(const PointDiffs& pd, const std::vector<cplx>& xs) {
    return abel_map(pd, xs);
}

/* Normalized Jacobian coordinate z = (2 omega')^{-1} w. */
inline Eigen::VectorXcd reduced_coordinates(const PeriodMatrices& m, const Eigen::VectorXcd& w) {
    return (2.0 * m.omega1).fullPivLu().solve(w);
}

/* Real coordinates (m, n) solving w = 2 omega' m + 2 omega'' n. */
inline Eigen::VectorXd lattice_coordinates(const PeriodMatrices& m, const Eigen::VectorXcd& w) {
    const long long g = m.omega1.rows();
    Eigen::MatrixXd A(2 * g, 2 * g);
    A.block(0, 0, g, g) = (2.0 * m.omega1).real();
    A.block(0, g, g, g) = (2.0 * m.omega2).real();
    A.block(g, 0, g, g) = (2.0 * m.omega1).imag();
    A.block(g, g, g, g) = (2.0 * m.omega2).imag();
    Eigen::VectorXd b(2 * g);
    b.head(g) = w.real();
    b.tail(g) = w.imag();
    return A.fullPivLu().solve(b);
}

/* Distance of a coordinate vector from the half-integer lattice (2-torsion). */
inline double half_lattice_distance(const Eigen::VectorXd& mn) {
    double worst = 0.0;
    for (long long i = 0; i < mn.size(); ++i) {
        const double v = 2.0 * mn(i);
        worst = std::max(worst, std::abs(v - std::round(v)));
    }
    return worst;
}

}  // namespace wsigma

#endif  // WSIGMA_ABEL_HPP
