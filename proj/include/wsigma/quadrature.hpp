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

#ifndef WSIGMA_QUADRATURE_HPP
#define WSIGMA_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "wsigma/errors.hpp"
#include "wsigma/rational.hpp"

namespace wsigma {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/*
 * Tanh-sinh rule on (-1, 1).  The double-exponential decay of the weights
 * absorbs algebraic endpoint singularities, which is what the branch-point
 * segments need.  441 nodes reach ~1e-13 absolute on those integrands.
 */
inline const QuadratureRule& tanh_sinh_rule() {
    static const QuadratureRule rule = [] {
        constexpr int N = 220;
        constexpr double U = 3.9;
        QuadratureRule r;
        const double du = 2.0 * U / (2 * N);
        for (int k = -N; k <= N; ++k) {
            const double u = k * du;
            const double snh = (M_PI / 2) * std::sinh(u);
            r.nodes.push_back(std::tanh(snh));
            r.weights.push_back(du * (M_PI / 2) * std::cosh(u) /
                                (std::cosh(snh) * std::cosh(snh)));
        }
        return r;
    }();
    return rule;
}

/* 96-point Gauss-Legendre rule on [-1, 1], nodes by Newton on P_96 */
inline const QuadratureRule& gauss_legendre_rule() {
    static const QuadratureRule rule = [] {
        constexpr int n = 96;
        QuadratureRule r;
        r.nodes.resize(n);
        r.weights.resize(n);
        for (int k = 0; k < (n + 1) / 2; ++k) {
            double x = std::cos(M_PI * (k + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int j = 2; j <= n; ++j) {
                    const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            const double w = 2.0 / ((1.0 - x * x) * dp * dp);
            r.nodes[k] = -x;
            r.weights[k] = w;
            r.nodes[n - 1 - k] = x;
            r.weights[n - 1 - k] = w;
        }
        return r;
    }();
    return rule;
}

/*
 * Residue of f at c: (1/2 pi i) oint f dz over |z - c| = radius by the
 * trapezoid rule, which is spectrally accurate on circles.  A second pass at
 * half the radius guards against a nearby second pole or a branch cut.
 */
template <typename F>
cplx residue_circle(F&& f, cplx c, double radius = 1e-2, int nodes = 256,
                    double tol = 1e-8) {
    auto once = [&](double rho) {
        cplx acc = 0.0;
        for (int k = 0; k < nodes; ++k) {
            const double th = 2.0 * M_PI * k / nodes;
            const cplx z = c + rho * std::exp(cplx(0.0, th));
            acc += f(z) * (z - c);
        }
        return acc / static_cast<double>(nodes);
    };
    const cplx r1 = once(radius);
    const cplx r2 = once(radius / 2);
    if (std::abs(r1 - r2) > tol * (1.0 + std::abs(r1)))
        throw QuadratureNonConvergence("residue estimates at r and r/2 disagree");
    return r2;
}

}  // namespace wsigma

#endif  // WSIGMA_QUADRATURE_HPP
