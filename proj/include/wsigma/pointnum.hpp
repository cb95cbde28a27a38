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

#ifndef WSIGMA_POINTNUM_HPP
#define WSIGMA_POINTNUM_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "wsigma/curve.hpp"
#include "wsigma/errors.hpp"
#include "wsigma/kleinforms.hpp"
#include "wsigma/laurent.hpp"
#include "wsigma/quadrature.hpp"
#include "wsigma/rational.hpp"

namespace wsigma {

using CPoint = std::pair<cplx, cplx>;  // (x, y) on the curve

inline CplxSeries to_cplx_series(const RatSeries& s) {
    return s.template map<cplx>([](const Rat& v) { return to_cplx(v); });
}

template <typename T>
T eval_series(const LaurentSeries<T>& s, const T& t) {
    /* Horner over the integer exponent range; negative part via 1/t */
    T acc = scalar_traits<T>::zero();
    if (s.is_zero()) return acc;
    const long long lo = s.lo();
    long long prev = -1;
    bool first = true;
    for (auto it = s.coeffs().rbegin(); it != s.coeffs().rend(); ++it) {
        if (first) {
            acc = it->second;
            first = false;
        } else {
            for (long long k = prev; k > it->first; --k) acc = acc * t;
            acc = acc + it->second;
        }
        prev = it->first;
    }
    if (lo > 0) {
        for (long long k = 0; k < lo; ++k) acc = acc * t;
    } else {
        const T ti = scalar_traits<T>::one() / t;
        for (long long k = 0; k < -lo; ++k) acc = acc * ti;
    }
    return acc;
}

/* roots of a dense polynomial, coefficients highest degree first */
inline std::vector<cplx> poly_roots(std::vector<cplx> coeffs) {
    while (!coeffs.empty() && std::abs(coeffs.front()) == 0.0)
        coeffs.erase(coeffs.begin());
    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n < 1) throw RootFindingFailure("polynomial has no roots");
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
    for (int j = 0; j < n; ++j) C(0, j) = -coeffs[static_cast<size_t>(j) + 1] / coeffs[0];
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    if (es.info() != Eigen::Success) throw RootFindingFailure("companion eigensolver failed");
    std::vector<cplx> roots(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        cplx z = es.eigenvalues()(i);
        /* one Newton polish step; skip near-multiple roots where p' ~ 0 */
        for (int it = 0; it < 2; ++it) {
            cplx p = 0.0, dp = 0.0;
            for (const cplx& c : coeffs) {
                dp = dp * z + p;
                p = p * z + c;
            }
            if (std::abs(dp) < 1e-12) break;
            z -= p / dp;
        }
        roots[static_cast<size_t>(i)] = z;
    }
    return roots;
}

/* the r points of the fiber over x, as roots of f(x, .) */
inline std::vector<cplx> fiber_roots(const WCurve& W, cplx x) {
    std::vector<cplx> coeffs{1.0};
    for (long long i = 1; i <= W.r(); ++i) {
        const std::vector<Rat> Ai = W.A(i);
        cplx v = 0.0;
        for (size_t j = Ai.size(); j-- > 0;) v = v * x + to_cplx(Ai[j]);
        coeffs.push_back(v);
    }
    return poly_roots(std::move(coeffs));
}

/*
 * Pointwise evaluators for the differentials and the two-point kernel,
 * driven by the exact basis: every numerator is a short list of monomials
 * c x^a Ups_k over h = f_y.
 */
class PointDiffs {
public:
    struct CTerm {
        cplx c;
        long long a = 0;
        long long k = 0;
    };

    explicit PointDiffs(const WCurve& W, long long order = 0) : W_(W), basis_(W, order) {
        const long long g = W.genus();
        for (long long i = 0; i < g; ++i) {
            nuI_num_.push_back(to_cterms(basis_.nuI_terms(static_cast<size_t>(i))));
            nuII_num_.push_back(to_cterms(basis_.nuII_terms(static_cast<size_t>(i))));
        }
        x_ser_ = to_cplx_series(basis_.chart().x);
        y_ser_ = to_cplx_series(basis_.chart().y);
        dx_ser_ = x_ser_.derivative();
        h_ser_ = to_cplx_series(W.fy().eval(basis_.chart().x, basis_.chart().y));
        hinv_ser_ = h_ser_.inverse();
    }

    const WCurve& curve() const { return W_; }
    const DifferentialBasis& basis() const { return basis_; }
    const CplxSeries& x_series() const { return x_ser_; }
    const CplxSeries& y_series() const { return y_ser_; }

    CPoint chart_point(cplx t) const {
        return {eval_series(x_ser_, t), eval_series(y_ser_, t)};
    }

    cplx fy_at(const CPoint& P) const { return W_.fy().eval(P.first, P.second); }
    cplx fx_at(const CPoint& P) const { return W_.fx().eval(P.first, P.second); }
    cplx f_at(const CPoint& P) const { return W_.f().eval(P.first, P.second); }

    cplx upsilon_at(long long k, const CPoint& P) const {
        return basis_.kernel().upsilon[static_cast<size_t>(k)].eval(P.first, P.second);
    }

    cplx htilde_at(const CPoint& P, cplx yq) const {
        cplx acc = 0.0, yp = 1.0;
        for (long long k = 0; k < W_.r(); ++k) {
            acc += upsilon_at(k, P) * yp;
            yp *= yq;
        }
        return acc;
    }

    cplx eval_num(const std::vector<CTerm>& terms, const CPoint& P) const {
        cplx acc = 0.0;
        for (const auto& t : terms) {
            cplx xp = 1.0;
            for (long long j = 0; j < t.a; ++j) xp *= P.first;
            acc += t.c * xp * upsilon_at(t.k, P);
        }
        return acc;
    }

    const std::vector<CTerm>& nuI_num(long long i) const {
        return nuI_num_[static_cast<size_t>(i)];
    }
    const std::vector<CTerm>& nuII_num(long long i) const {
        return nuII_num_[static_cast<size_t>(i)];
    }

    /* nu^I_i(P) and nu^II_i(P) as coefficients against dx, i zero-based */
    cplx nuI(long long i, const CPoint& P) const {
        return eval_num(nuI_num_[static_cast<size_t>(i)], P) / fy_checked(P);
    }
    cplx nuII(long long i, const CPoint& P) const {
        return eval_num(nuII_num_[static_cast<size_t>(i)], P) / fy_checked(P);
    }

    /* trace kernel p(P, .) = h~(x_P, y_P; y') / h(P); 1 on the diagonal,
       0 across the fiber */
    cplx trace_kernel(const CPoint& P, cplx yq) const {
        return htilde_at(P, yq) / fy_checked(P);
    }

    /* Sigma(P, Q) / dx_P */
    cplx sigma2(const CPoint& P, const CPoint& Q) const {
        if (std::abs(P.first - Q.first) < 1e-12)
            throw CoincidentFiber("Sigma needs x_P != x_Q");
        return htilde_at(P, Q.second) / ((P.first - Q.first) * fy_checked(P));
    }

    /* d_Q Sigma(P, Q) / (dx_P dx_Q) */
    cplx dQsigma(const CPoint& P, const CPoint& Q) const {
        if (std::abs(P.first - Q.first) < 1e-12)
            throw CoincidentFiber("d_Q Sigma needs x_P != x_Q");
        const cplx h = fy_checked(P);
        const cplx ht = htilde_at(P, Q.second);
        cplx dht = 0.0, yp = 1.0;
        for (long long k = 1; k < W_.r(); ++k) {
            dht += static_cast<double>(k) * upsilon_at(k, P) * yp;
            yp *= Q.second;
        }
        const cplx yprime = -fx_at(Q) / fy_checked(Q);
        const cplx dx = P.first - Q.first;
        return ht / (dx * dx * h) + dht * yprime / (dx * h);
    }

    /* Omega(P, Q) = d_Q Sigma + sum_i nu^I_i(P) nu^II_i(Q) */
    cplx omega(const CPoint& P, const CPoint& Q) const {
        cplx val = dQsigma(P, Q);
        for (long long i = 0; i < W_.genus(); ++i) val += nuI(i, P) * nuII(i, Q);
        return val;
    }

    /* Sigma(., Q) pulled back to the infinity chart, dt-coefficient series */
    CplxSeries sigma_series_at(const CPoint& Q) const {
        CplxSeries ht;
        cplx yp = 1.0;
        for (long long k = 0; k < W_.r(); ++k) {
            const CplxSeries ups = basis_.kernel()
                                       .upsilon[static_cast<size_t>(k)]
                                       .eval(x_ser_, y_ser_);
            ht = ht + ups.scaled(yp);
            yp *= Q.second;
        }
        const CplxSeries xdiff = x_ser_ - CplxSeries::term(0, Q.first, kInfWindow);
        return dx_ser_ * ht * xdiff.inverse() * hinv_ser_;
    }

    /*
     * Residue of Sigma(., Q) at a finite point (x0 on the sheet reached from
     * ystart): circle quadrature with the fiber sheet tracked around the
     * contour.  Checked at two radii.
     */
    cplx sigma_residue_at(const CPoint& Q, cplx x0, cplx ystart,
                          double radius = 1e-2, int nodes = 256) const {
        auto once = [&](double rho) {
            cplx acc = 0.0;
            cplx yprev = ystart;
            for (int k = 0; k <= nodes; ++k) {
                const double th = 2.0 * M_PI * k / nodes;
                const cplx z = x0 + rho * std::exp(cplx(0.0, th));
                const std::vector<cplx> rts = fiber_roots(W_, z);
                size_t jbest = 0;
                double dbest = std::abs(rts[0] - yprev);
                for (size_t j = 1; j < rts.size(); ++j) {
                    const double d = std::abs(rts[j] - yprev);
                    if (d < dbest) {
                        dbest = d;
                        jbest = j;
                    }
                }
                const cplx y = rts[jbest];
                if (k < nodes) acc += sigma2({z, y}, Q) * (z - x0);
                yprev = y;
            }
            if (std::abs(yprev - ystart) > 1e-6 * (1.0 + std::abs(ystart)))
                throw QuadratureNonConvergence("sheet failed to close around residue contour");
            return acc / static_cast<double>(nodes);
        };
        const cplx r1 = once(radius);
        const cplx r2 = once(radius / 2);
        if (std::abs(r1 - r2) > 1e-8 * (1.0 + std::abs(r1)))
            throw QuadratureNonConvergence("residue estimates at r and r/2 disagree");
        return r2;
    }

private:
    std::vector<CTerm> to_cterms(const std::vector<DifferentialBasis::NumTerm>& ts) const {
        std::vector<CTerm> out;
        out.reserve(ts.size());
        for (const auto& t : ts) out.push_back({to_cplx(t.c), t.a, t.k});
        return out;
    }

    cplx fy_checked(const CPoint& P) const {
        const cplx h = fy_at(P);
        const double scale =
            1.0 + std::pow(std::abs(P.first), static_cast<double>(W_.s() - 1));
        if (std::abs(h) < 1e-12 * scale)
            throw EvaluationAtRamification("f_y vanishes at evaluation point");
        return h;
    }

    WCurve W_;
    DifferentialBasis basis_;
    std::vector<std::vector<CTerm>> nuI_num_, nuII_num_;
    CplxSeries x_ser_, y_ser_, dx_ser_, h_ser_, hinv_ser_;
};

}  // namespace wsigma

#endif  // WSIGMA_POINTNUM_HPP
