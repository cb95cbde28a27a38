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

#ifndef WSIGMA_PERIODS_HPP
#define WSIGMA_PERIODS_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <future>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "wsigma/curve.hpp"
#include "wsigma/cycles.hpp"
#include "wsigma/errors.hpp"
#include "wsigma/pointnum.hpp"
#include "wsigma/rational.hpp"

namespace wsigma {

struct PeriodMatrices {
    Eigen::MatrixXcd omega1, omega2;  // first kind over alpha / beta cycles
    Eigen::MatrixXcd eta1, eta2;      // second kind, defined with a minus sign
    Eigen::MatrixXcd tau;             // omega1^{-1} omega2
    double legendre_residual = 0.0;   // |omega2 eta1^T - omega1 eta2^T - (pi/2) i 1|_max
    double tau_asymmetry = 0.0;
    double im_tau_min_eig = 0.0;
};

/*
 * Entry (i, j) of omega1 is the integral of the i-th first-kind form over
 * alpha_j, and likewise across the four blocks.  Rows of `rows` express the
 * reduced basis (alpha_1..alpha_g, beta_1..beta_g) over the elementary
 * cycles indexing V's rows; V's columns hold (nu^I_1..g, nu^II_1..g).
 */
inline PeriodMatrices matrices_from_basis(const Eigen::MatrixXcd& V,
                                          const std::vector<std::vector<long long>>& rows) {
    const long long n = V.rows();
    const long long g = n / 2;
    Eigen::MatrixXcd Vred(n, n);
    for (long long i = 0; i < n; ++i) {
        for (long long j = 0; j < n; ++j) {
            cplx acc = 0.0;
            for (long long k = 0; k < n; ++k)
                acc += static_cast<double>(rows[static_cast<size_t>(i)][static_cast<size_t>(k)]) *
                       V(k, j);
            Vred(i, j) = acc;
        }
    }
    PeriodMatrices P;
    P.omega1.resize(g, g);
    P.omega2.resize(g, g);
    P.eta1.resize(g, g);
    P.eta2.resize(g, g);
    for (long long i = 0; i < g; ++i)
        for (long long j = 0; j < g; ++j) {
            P.omega1(i, j) = Vred(j, i) / 2.0;
            P.omega2(i, j) = Vred(g + j, i) / 2.0;
            P.eta1(i, j) = -Vred(j, g + i) / 2.0;
            P.eta2(i, j) = -Vred(g + j, g + i) / 2.0;
        }
    P.tau = P.omega1.fullPivLu().solve(P.omega2);
    P.tau_asymmetry = (P.tau - P.tau.transpose()).cwiseAbs().maxCoeff();
    const Eigen::MatrixXcd leg = P.omega2 * P.eta1.transpose() -
                                 P.omega1 * P.eta2.transpose() -
                                 cplx(0.0, M_PI / 2) * Eigen::MatrixXcd::Identity(g, g);
    P.legendre_residual = leg.cwiseAbs().maxCoeff();
    const Eigen::MatrixXd imtau = (P.tau.imag() + P.tau.imag().transpose()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(imtau);
    P.im_tau_min_eig = es.eigenvalues().minCoeff();
    return P;
}

/* residual of M J M^T = (2 pi / i) J for M = [[2w', 2w''], [2e', 2e'']] */
inline double legendre_matrix_residual(const PeriodMatrices& P) {
    const long long g = P.omega1.rows();
    Eigen::MatrixXcd M(2 * g, 2 * g), J = Eigen::MatrixXcd::Zero(2 * g, 2 * g);
    M.topLeftCorner(g, g) = 2.0 * P.omega1;
    M.topRightCorner(g, g) = 2.0 * P.omega2;
    M.bottomLeftCorner(g, g) = 2.0 * P.eta1;
    M.bottomRightCorner(g, g) = 2.0 * P.eta2;
    J.topRightCorner(g, g) = Eigen::MatrixXcd::Identity(g, g);
    J.bottomLeftCorner(g, g) = -Eigen::MatrixXcd::Identity(g, g);
    const Eigen::MatrixXcd res = M * J * M.transpose() / cplx(0.0, 2.0 * M_PI) + J;
    return res.cwiseAbs().maxCoeff();
}

struct PeriodData {
    std::shared_ptr<PointDiffs> pd;
    CycleSystem cycles;
    Eigen::MatrixXcd V;                     // raw cell integrals [cell][form]
    std::vector<std::vector<long long>> S;  // cell intersections, oriented
    std::vector<std::vector<long long>> U;  // reduced basis rows over cells
    double intersection_error = 0.0;
    bool flipped = false;
    PeriodMatrices mats;
};

namespace detail {

inline std::vector<std::vector<long long>> round_intersections(const Eigen::MatrixXcd& S,
                                                               double& err) {
    const long long n = S.rows();
    std::vector<std::vector<long long>> Sr(static_cast<size_t>(n),
                                           std::vector<long long>(static_cast<size_t>(n), 0));
    err = 0.0;
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            const long long v = std::llround(S(i, j).real());
            Sr[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            err = std::max(err, std::abs(S(i, j) - cplx(static_cast<double>(v), 0.0)));
        }
    return Sr;
}

inline std::vector<std::vector<long long>> negate(std::vector<std::vector<long long>> S) {
    for (auto& row : S)
        for (auto& v : row) v = -v;
    return S;
}

}  // namespace detail

/*
 * Full period pipeline: elementary-cell integrals of both bases, intersection
 * numbers from the residue pairing (the dual of the cycle pairing), integer
 * symplectic reduction, and the orientation choice that puts Im tau in the
 * positive cone.   `numerators` defaults to the W-normalized bases; callers
 * may substitute gauge-equivalent second-kind numerators.
 */
inline PeriodData compute_periods_with(std::shared_ptr<PointDiffs> pd,
                                       const std::vector<CycleQuadrature::NumFn>& numerators,
                                       int threads = 0) {
    const WCurve& W = pd->curve();
    const long long g = W.genus(), r = W.r();
    CycleQuadrature cq(W);
    std::vector<std::pair<long long, long long>> cells;
    for (long long i = 0; i < cq.segment_count(); ++i)
        for (long long s = 0; s < r - 1; ++s) cells.emplace_back(i, s);
    if (static_cast<long long>(cells.size()) != 2 * g)
        throw RHViolation("elementary cycle count differs from 2g");

    const long long n = 2 * g;
    Eigen::MatrixXcd V(n, n);
    std::vector<std::future<std::vector<cplx>>> tasks;
    const size_t batch = threads <= 0 ? cells.size() : static_cast<size_t>(threads);
    for (size_t base = 0; base < cells.size(); base += batch) {
        const size_t end = std::min(cells.size(), base + batch);
        for (size_t m = base; m < end; ++m)
            tasks.push_back(std::async(std::launch::async, [&, m] {
                return cq.integrate_cell(cells[m].first, cells[m].second, numerators);
            }));
        for (size_t m = base; m < end; ++m) {
            const std::vector<cplx> row = tasks[m].get();
            for (long long j = 0; j < n; ++j)
                V(static_cast<long long>(m), j) = row[static_cast<size_t>(j)];
        }
    }

    /* S = (i/2pi) V (-G) V^T with G the duality Gram of the two bases */
    Eigen::MatrixXcd Gm = Eigen::MatrixXcd::Zero(n, n);
    Gm.topRightCorner(g, g) = Eigen::MatrixXcd::Identity(g, g);
    Gm.bottomLeftCorner(g, g) = -Eigen::MatrixXcd::Identity(g, g);
    const Eigen::MatrixXcd Sc = cplx(0.0, 1.0 / (2.0 * M_PI)) * V * (-Gm) * V.transpose();

    PeriodData out;
    out.pd = std::move(pd);
    out.V = V;
    out.S = detail::round_intersections(Sc, out.intersection_error);
    if (out.intersection_error > 1e-6)
        throw SymplecticViolation("cycle intersection numbers are not integral");

    out.U = symplectic_reduce(out.S);
    out.mats = matrices_from_basis(V, out.U);
    if (out.mats.im_tau_min_eig < 0) {
        out.flipped = true;
        out.S = detail::negate(std::move(out.S));
        out.U = symplectic_reduce(out.S);
        out.mats = matrices_from_basis(V, out.U);
    }
    if (out.mats.im_tau_min_eig <= 0)
        throw SymplecticViolation("Im tau is not positive definite in either orientation");
    if (out.mats.legendre_residual > 1e-6)
        throw SymplecticViolation("generalized Legendre residual above 1e-6");

    CycleSystem& cs = out.cycles;
    cs.branch_points = cq.branch().roots;
    cs.elementary = cells;
    cs.flipped = out.flipped;
    for (long long i = 0; i < n; ++i) {
        CyclePath path;
        for (long long m = 0; m < n; ++m) {
            const long long c = out.U[static_cast<size_t>(i)][static_cast<size_t>(m)];
            if (c != 0)
                path.pieces.push_back({cells[static_cast<size_t>(m)].first,
                                       cells[static_cast<size_t>(m)].second, c});
        }
        cs.cycles.push_back(std::move(path));
    }
    cs.intersection.assign(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            long long acc = 0;
            for (long long a = 0; a < n; ++a)
                for (long long b = 0; b < n; ++b)
                    acc += out.U[static_cast<size_t>(i)][static_cast<size_t>(a)] *
                           out.S[static_cast<size_t>(a)][static_cast<size_t>(b)] *
                           out.U[static_cast<size_t>(j)][static_cast<size_t>(b)];
            cs.intersection[static_cast<size_t>(i)][static_cast<size_t>(j)] = acc;
            const long long want = (j == i + g) ? 1 : (i == j + g ? -1 : 0);
            if (acc != want)
                throw SymplecticViolation("reduced intersection is not the standard form");
        }
    return out;
}

inline std::vector<CycleQuadrature::NumFn> standard_numerators(
    const std::shared_ptr<PointDiffs>& pd) {
    const long long g = pd->curve().genus();
    std::vector<CycleQuadrature::NumFn> fns;
    for (long long i = 0; i < g; ++i)
        fns.emplace_back([pd, i](cplx x, cplx y) { return pd->eval_num(pd->nuI_num(i), {x, y}); });
    for (long long i = 0; i < g; ++i)
        fns.emplace_back([pd, i](cplx x, cplx y) { return pd->eval_num(pd->nuII_num(i), {x, y}); });
    return fns;
}

inline PeriodData compute_periods(const WCurve& W, long long order = 0, int threads = 0) {
    auto pd = std::make_shared<PointDiffs>(W, order);
    return compute_periods_with(pd, standard_numerators(pd), threads);
}

inline CycleSystem homology_cycles(const WCurve& W) { return compute_periods(W).cycles; }

inline PeriodMatrices period_matrices(const WCurve& W) { return compute_periods(W).mats; }

/* ---------- small cross-check utilities ---------- */

inline double real_agm(double a, double b) {
    for (int i = 0; i < 200 && std::abs(a - b) > 1e-16 * std::abs(a); ++i) {
        const double m = (a + b) / 2;
        b = std::sqrt(a * b);
        a = m;
    }
    return a;
}

/* modular reduction of a genus-1 period ratio to |Re| <= 1/2, |tau| >= 1 */
inline cplx fundamental_domain(cplx t) {
    for (int i = 0; i < 200; ++i) {
        t = cplx(t.real() - std::round(t.real()), t.imag());
        if (std::abs(t) < 1.0 - 1e-12)
            t = -1.0 / t;
        else
            break;
    }
    return t;
}

/*
 * Random element of Sp(2g, Z) as a short word in the standard generators,
 * for basis-independence checks.
 */
inline std::vector<std::vector<long long>> random_symplectic(long long g, std::mt19937_64& rng) {
    const long long n = 2 * g;
    std::vector<std::vector<long long>> T(static_cast<size_t>(n),
                                          std::vector<long long>(static_cast<size_t>(n), 0));
    for (long long i = 0; i < n; ++i) T[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    auto mul = [&](const std::vector<std::vector<long long>>& A) {
        std::vector<std::vector<long long>> R(static_cast<size_t>(n),
                                              std::vector<long long>(static_cast<size_t>(n), 0));
        for (long long i = 0; i < n; ++i)
            for (long long j = 0; j < n; ++j) {
                long long acc = 0;
                for (long long k = 0; k < n; ++k)
                    acc += T[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                           A[static_cast<size_t>(k)][static_cast<size_t>(j)];
                R[static_cast<size_t>(i)][static_cast<size_t>(j)] = acc;
            }
        T = R;
    };
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<long long> pick(0, g - 1);
    std::uniform_int_distribution<long long> coef(-2, 2);
    for (int step = 0; step < 8; ++step) {
        std::vector<std::vector<long long>> Gmat(
            static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
        for (long long i = 0; i < n; ++i) Gmat[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
        const long long i = pick(rng), j = pick(rng);
        const long long c = coef(rng);
        switch (kind(rng)) {
            case 0: /* alpha_i += c beta_i, symmetric partner below */
                Gmat[static_cast<size_t>(i)][static_cast<size_t>(g + i)] = c;
                break;
            case 1:
                Gmat[static_cast<size_t>(g + i)][static_cast<size_t>(i)] = c;
                break;
            default: /* GL(g) block action: alpha_i += c alpha_j, beta_j -= c beta_i */
                if (i != j) {
                    Gmat[static_cast<size_t>(i)][static_cast<size_t>(j)] = c;
                    Gmat[static_cast<size_t>(g + j)][static_cast<size_t>(g + i)] = -c;
                }
                break;
        }
        mul(Gmat);
    }
    return T;
}

/* T J T^T == J over the integers */
inline bool is_symplectic(const std::vector<std::vector<long long>>& T) {
    const long long n = static_cast<long long>(T.size());
    const long long g = n / 2;
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            /* (T J T^T)_{ij}: J row a carries +1 at a+g (a < g), -1 at a-g */
            long long acc = 0;
            for (long long a = 0; a < n; ++a) {
                const long long sgn = a < g ? 1 : -1;
                const long long bcol = a < g ? a + g : a - g;
                acc += sgn * T[static_cast<size_t>(i)][static_cast<size_t>(a)] *
                       T[static_cast<size_t>(j)][static_cast<size_t>(bcol)];
            }
            const long long want = (j == i + g) ? 1 : (i == j + g ? -1 : 0);
            if (acc != want) return false;
        }
    return true;
}

}  // namespace wsigma

#endif  // WSIGMA_PERIODS_HPP
