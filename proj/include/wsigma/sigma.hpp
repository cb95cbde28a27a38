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
 * Sigma function of a W-curve:
 *
 *   sigma(u) = rescale * eps * exp(u^t kappa u / 2) * theta[dX]((2 omega')^{-1} u; tau) / D,
 *
 * kappa = eta' omega'^{-1}, D the natural-index theta derivative at the
 * origin, dX the half characteristic on which theta vanishes along the Abel
 * images of degree g-1 divisors.  The normalization makes the lowest
 * weighted-degree Taylor block equal to the Schur polynomial of the
 * semigroup diagram with leading coefficient exactly one.
 */

#ifndef WSIGMA_SIGMA_HPP
#define WSIGMA_SIGMA_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "wsigma/abel.hpp"
#include "wsigma/periods.hpp"
#include "wsigma/schur.hpp"
#include "wsigma/theta.hpp"

namespace wsigma {

/* default scan targets; Abel images of these x-values pin the characteristic */
inline std::vector<cplx> default_scan_targets(long long g) {
    static const std::vector<cplx> pool = {
        cplx(1.9, 0.8), cplx(-1.7, 1.0), cplx(1.5, -1.4), cplx(-1.3, -1.6)};
    const size_t n = static_cast<size_t>(std::max<long long>(2, g + 1));
    return std::vector<cplx>(pool.begin(), pool.begin() + std::min(n, pool.size()));
}

/*
 * Pick the half characteristic: theta[d](C w) must vanish on Abel images of
 * degree g-1 divisors.  All 4^g half characteristics are tried; the winner
 * must be decisive (best below 1e-7, runner-up above 1e-3).
 */
inline ThetaCharacteristic scan_characteristic(const PeriodData& P,
                                               const std::vector<Eigen::VectorXcd>& samples) {
    const long long g = P.mats.omega1.rows();
    const Eigen::MatrixXcd C = (2.0 * P.mats.omega1).fullPivLu().inverse();
    std::vector<Eigen::VectorXcd> Z;
    if (samples.empty()) {
        Z.push_back(Eigen::VectorXcd::Zero(g));
    } else {
        for (const auto& w : samples) Z.push_back(C * w);
    }
    std::vector<std::pair<double, std::vector<int>>> rows;
    const long long total = 1LL << (2 * g);
    for (long long mask = 0; mask < total; ++mask) {
        std::vector<int> bits(static_cast<size_t>(2 * g));
        for (long long b = 0; b < 2 * g; ++b) bits[static_cast<size_t>(b)] = (mask >> (2 * g - 1 - b)) & 1;
        ThetaCharacteristic chr = zero_characteristic(g);
        for (long long i = 0; i < g; ++i) {
            chr.delta2(i) = 0.5 * bits[static_cast<size_t>(i)];
            chr.delta1(i) = 0.5 * bits[static_cast<size_t>(g + i)];
        }
        ThetaFunction th(P.mats.tau, chr);
        double worst = 0.0;
        for (const auto& z : Z) worst = std::max(worst, std::abs(th.value(z)));
        rows.emplace_back(worst, bits);
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!(rows[0].first < 1e-7 && rows[1].first > 1e-3))
        throw AmbiguousCharacteristic("vanishing scan winner " + std::to_string(rows[0].first) +
                                      ", runner-up " + std::to_string(rows[1].first));
    ThetaCharacteristic chr = zero_characteristic(g);
    for (long long i = 0; i < g; ++i) {
        chr.delta2(i) = 0.5 * rows[0].second[static_cast<size_t>(i)];
        chr.delta1(i) = 0.5 * rows[0].second[static_cast<size_t>(g + i)];
    }
    return chr;
}

class SigmaContext {
public:
    SigmaContext(PeriodData P, ThetaCharacteristic chr)
        : P_(std::move(P)), chr_(std::move(chr)) {
        const long long g = P_.mats.omega1.rows();
        C_ = (2.0 * P_.mats.omega1).fullPivLu().inverse();
        kappa_ = P_.mats.omega1.transpose().fullPivLu().solve(P_.mats.eta1.transpose()).transpose();
        const double asym = (kappa_ - kappa_.transpose()).cwiseAbs().maxCoeff();
        if (asym > 1e-9)
            throw IdentityFailure("eta' omega'^{-1} asymmetric: " + std::to_string(asym));
        theta_.emplace(P_.mats.tau, chr_);

        const NumericalSemigroup& H = P_.pd->curve().semigroup();
        EpsilonReport rep = epsilon_sign(H, 0);
        epsilon_ = rep.sign;
        natural_.clear();
        for (long long Li : rep.natural) natural_.push_back(static_cast<int>(Li - 1));

        normalization_ = theta_u(Eigen::VectorXcd::Zero(g), natural_);
        if (std::abs(normalization_) < 1e-10)
            throw AmbiguousCharacteristic("natural theta derivative vanishes at the origin");

        /* rescale: force the leading Schur coefficient (monomial u_natural)
           to its exact rational value */
        UPoly s = schur_in_u(H);
        std::vector<int> anchor(static_cast<size_t>(g), 0);
        anchor[static_cast<size_t>(natural_[0])] = 1;
        const Rat ac = s.coeff_at(anchor);
        if (ac == 0) throw IdentityFailure("Schur anchor coefficient vanishes");
        rescale_ = to_cplx(ac) / static_cast<double>(epsilon_);
    }

    static SigmaContext from_scan(const PeriodData& P, std::vector<cplx> xs_scan = {}) {
        const long long g = P.mats.omega1.rows();
        if (xs_scan.empty()) xs_scan = default_scan_targets(g);
        std::vector<Eigen::VectorXcd> samples;
        if (g == 1) {
            samples.push_back(Eigen::VectorXcd::Zero(1));
        } else {
            std::vector<Eigen::VectorXcd> ws;
            for (const cplx& x : xs_scan) ws.push_back(abel_from_infinity(*P.pd, x).w);
            if (g == 2) {
                samples = ws;
            } else {
                for (size_t i = 0; i < ws.size(); ++i)
                    for (size_t j = i + 1; j < ws.size(); ++j) samples.push_back(ws[i] + ws[j]);
            }
        }
        return SigmaContext(P, scan_characteristic(P, samples));
    }

    const PeriodData& periods() const { return P_; }
    const PointDiffs& point_diffs() const { return *P_.pd; }
    const ThetaCharacteristic& characteristic() const { return chr_; }
    const ThetaFunction& theta() const { return *theta_; }
    const Eigen::MatrixXcd& reduction() const { return C_; }     // z = C u
    const Eigen::MatrixXcd& quadratic_form() const { return kappa_; }
    int epsilon() const { return epsilon_; }
    const std::vector<int>& natural() const { return natural_; }
    cplx normalization() const { return normalization_; }
    cplx rescale() const { return rescale_; }
    long long genus() const { return P_.mats.omega1.rows(); }

    /* theta as a function of u through z = C u, with u-space derivatives */
    cplx theta_u(const Eigen::VectorXcd& u, const std::vector<int>& u_dirs) const {
        const Eigen::VectorXcd z = C_ * u;
        const ThetaFunction& th = *theta_;
        const long long g = u.size();
        if (u_dirs.empty()) return th.value(z);
        if (u_dirs.size() == 1) {
            cplx acc(0.0);
            for (long long i = 0; i < g; ++i)
                acc += C_(i, u_dirs[0]) * th.derivative(z, {static_cast<int>(i)});
            return acc;
        }
        if (u_dirs.size() == 2) {
            cplx acc(0.0);
            for (long long i = 0; i < g; ++i)
                for (long long j = 0; j < g; ++j)
                    acc += C_(i, u_dirs[0]) * C_(j, u_dirs[1]) *
                           th.derivative(z, {static_cast<int>(i), static_cast<int>(j)});
            return acc;
        }
        throw ValidationError("theta_u: derivative order above two");
    }

    cplx sigma(const Eigen::VectorXcd& u) const {
        const cplx quad = 0.5 * bilinear(u, kappa_, u);
        return rescale_ * static_cast<double>(epsilon_) * std::exp(quad) *
               theta_->value(C_ * u) / normalization_;
    }

    /* period lattice vector 2 omega' l' + 2 omega'' l'' */
    Eigen::VectorXcd lattice_vector(const Eigen::VectorXd& lp, const Eigen::VectorXd& lpp) const {
        return 2.0 * (P_.mats.omega1 * lp + P_.mats.omega2 * lpp);
    }

    Eigen::VectorXcd eta_vector(const Eigen::VectorXd& lp, const Eigen::VectorXd& lpp) const {
        return 2.0 * (P_.mats.eta1 * lp + P_.mats.eta2 * lpp);
    }

    /*
     * translation law sigma(u + l) = chi(l) exp((u + l/2).eta_l) sigma(u);
     * chi is the eighth-root character of the half characteristic.
     */
    cplx translation_factor(const Eigen::VectorXcd& u, const Eigen::VectorXd& lp,
                            const Eigen::VectorXd& lpp) const {
        const Eigen::VectorXcd ell = lattice_vector(lp, lpp);
        const Eigen::VectorXcd etaell = eta_vector(lp, lpp);
        cplx L(0.0);
        for (long long i = 0; i < u.size(); ++i) L += (u(i) + 0.5 * ell(i)) * etaell(i);
        const double ch = 2.0 * (lp.dot(chr_.delta2) - lpp.dot(chr_.delta1)) + lp.dot(lpp);
        const cplx chi = std::exp(cplx(0.0, M_PI) * ch);
        return std::exp(L) * chi;
    }

private:
    static cplx bilinear(const Eigen::VectorXcd& a, const Eigen::MatrixXcd& M,
                         const Eigen::VectorXcd& b) {
        cplx acc(0.0);
        for (long long i = 0; i < a.size(); ++i)
            for (long long j = 0; j < b.size(); ++j) acc += a(i) * M(i, j) * b(j);
        return acc;
    }

    PeriodData P_;
    ThetaCharacteristic chr_;
    std::optional<ThetaFunction> theta_;
    Eigen::MatrixXcd C_;
    Eigen::MatrixXcd kappa_;
    int epsilon_ = 1;
    std::vector<int> natural_;
    cplx normalization_ = 0.0;
    cplx rescale_ = 1.0;
};

/*
 * Taylor coefficients through dense grid sampling on the polytorus |u_i| = rho
 * and an exact discrete Fourier transform; coefficients are reliable for
 * |a| well below N.
 */
class TaylorGrid {
public:
    TaylorGrid(const std::function<cplx(const Eigen::VectorXcd&)>& f, long long g,
               long long N = 16, double rho = 0.4)
        : g_(g), N_(N), rho_(rho) {
        size_t total = 1;
        for (long long i = 0; i < g; ++i) total *= static_cast<size_t>(N);
        vals_.resize(total);
        std::vector<long long> idx(static_cast<size_t>(g), 0);
        Eigen::VectorXcd u(g);
        for (size_t flat = 0; flat < total; ++flat) {
            size_t rest = flat;
            for (long long i = g - 1; i >= 0; --i) {
                idx[static_cast<size_t>(i)] = static_cast<long long>(rest % static_cast<size_t>(N));
                rest /= static_cast<size_t>(N);
            }
            for (long long i = 0; i < g; ++i)
                u(i) = rho * std::exp(cplx(0.0, 2.0 * M_PI * static_cast<double>(idx[static_cast<size_t>(i)]) /
                                                    static_cast<double>(N)));
            vals_[flat] = f(u);
        }
        /* DFT along each axis: C[k] = sum_n vals[n] exp(-2 pi i k n / N) / N */
        for (long long axis = g - 1; axis >= 0; --axis) dft_axis(axis);
    }

    cplx coeff(const std::vector<int>& a) const {
        size_t flat = 0;
        long long deg = 0;
        for (long long i = 0; i < g_; ++i) {
            const long long ai = a[static_cast<size_t>(i)];
            deg += ai;
            flat = flat * static_cast<size_t>(N_) + static_cast<size_t>(((ai % N_) + N_) % N_);
        }
        return vals_[flat] / std::pow(rho_, static_cast<double>(deg));
    }

private:
    void dft_axis(long long axis) {
        size_t stride = 1;
        for (long long i = axis + 1; i < g_; ++i) stride *= static_cast<size_t>(N_);
        const size_t n = static_cast<size_t>(N_);
        std::vector<cplx> tw(n * n);
        for (size_t k = 0; k < n; ++k)
            for (size_t m = 0; m < n; ++m)
                tw[k * n + m] = std::exp(cplx(0.0, -2.0 * M_PI * static_cast<double>(k * m % n) /
                                                       static_cast<double>(n)));
        std::vector<cplx> line(n);
        const size_t total = vals_.size();
        for (size_t base = 0; base < total; ++base) {
            /* visit each 1-d line once: base must have index 0 along axis */
            if ((base / stride) % n != 0) continue;
            for (size_t k = 0; k < n; ++k) line[k] = vals_[base + k * stride];
            for (size_t k = 0; k < n; ++k) {
                cplx acc(0.0);
                for (size_t m = 0; m < n; ++m) acc += line[m] * tw[k * n + m];
                vals_[base + k * stride] = acc / static_cast<double>(n);
            }
        }
    }

    long long g_, N_;
    double rho_;
    std::vector<cplx> vals_;
};

/* descending gap weights: the u_i coordinate carries weight gap(g-i) */
inline std::vector<long long> u_weights(const NumericalSemigroup& H) {
    const long long g = H.genus();
    std::vector<long long> w;
    for (long long i = 0; i < g; ++i) w.push_back(H.gap(g - 1 - i));
    return w;
}

/* smallest Sato weight i*s - j*r over the nonzero curve moduli */
inline long long moduli_weight_floor(const WCurve& W) {
    long long best = std::numeric_limits<long long>::max();
    for (const auto& [ij, c] : W.lambda()) {
        if (c == 0) continue;
        const long long wt = ij.first * W.s() - ij.second * W.r();
        if (wt == 0) continue;  // the pinned -x^s term is not a modulus
        best = std::min(best, wt);
    }
    return best;
}

struct SchurFitReport {
    long long weight = 0;        // weighted degree |Lambda| of the leading block
    long long cutoff = 0;        // weights probed strictly below this bound
    double block_error = 0.0;    // worst deviation from the Schur coefficient
    double off_block_max = 0.0;  // worst stray coefficient below the cutoff
};

/*
 * Fit the Taylor expansion of sigma and compare the lowest weighted-degree
 * block against the Schur polynomial of the diagram.  Coefficients of weight
 * above |Lambda| but below the first modulus weight must vanish.
 */
inline SchurFitReport schur_fit(const SigmaContext& ctx) {
    const NumericalSemigroup& H = ctx.point_diffs().curve().semigroup();
    const long long g = ctx.genus();
    UPoly s = schur_in_u(H);
    const std::vector<long long> w = u_weights(H);
    const long long wLam = young_diagram(H).weight();
    const long long margin = moduli_weight_floor(ctx.point_diffs().curve());
    SchurFitReport rep;
    rep.weight = wLam;
    rep.cutoff = margin == std::numeric_limits<long long>::max()
                     ? std::numeric_limits<long long>::max()
                     : wLam + margin;

    TaylorGrid grid([&ctx](const Eigen::VectorXcd& u) { return ctx.sigma(u); }, g);
    std::vector<int> a(static_cast<size_t>(g), 0);
    while (true) {
        long long total = 0, wt = 0;
        for (long long i = 0; i < g; ++i) {
            total += a[static_cast<size_t>(i)];
            wt += a[static_cast<size_t>(i)] * w[static_cast<size_t>(i)];
        }
        if (total <= 6 && wt < rep.cutoff) {
            const cplx c = grid.coeff(a);
            if (wt == wLam) {
                const cplx expect = to_cplx(s.coeff_at(a));
                rep.block_error = std::max(rep.block_error, std::abs(c - expect));
            } else {
                rep.off_block_max = std::max(rep.off_block_max, std::abs(c));
            }
        }
        long long i = g - 1;
        while (i >= 0 && a[static_cast<size_t>(i)] == 6) { a[static_cast<size_t>(i)] = 0; --i; }
        if (i < 0) break;
        ++a[static_cast<size_t>(i)];
    }
    return rep;
}

/*
 * Classical genus-one expansion around u = 0 for y^2 = 4x^3 - g2 x - g3:
 * sigma(u) = u + O(u^5), computed by the standard quadratic recursion on the
 * log-series.  Returned as coefficients S[k] of u^k.
 */
inline std::vector<double> sigma_classical_series(double g2, double g3, int deg = 45) {
    const int K = deg / 2 + 2;
    std::map<int, double> c;
    c[2] = g2 / 20.0;
    c[3] = g3 / 28.0;
    for (int k = 4; k <= K; ++k) {
        double acc = 0.0;
        for (int m = 2; m <= k - 2; ++m) acc += c[m] * c[k - m];
        c[k] = 3.0 / ((2 * k + 1) * (k - 3)) * acc;
    }
    std::vector<double> L(static_cast<size_t>(deg + 1), 0.0);
    for (const auto& [k, ck] : c)
        if (2 * k <= deg) L[static_cast<size_t>(2 * k)] = -ck / (2.0 * k * (2.0 * k - 1.0));
    std::vector<double> E(static_cast<size_t>(deg + 1), 0.0);
    E[0] = 1.0;
    for (int n = 1; n <= deg; ++n) {
        double acc = 0.0;
        for (int m = 1; m <= n; ++m) acc += m * L[static_cast<size_t>(m)] * E[static_cast<size_t>(n - m)];
        E[static_cast<size_t>(n)] = acc / n;
    }
    std::vector<double> S(static_cast<size_t>(deg + 2), 0.0);
    for (int n = 0; n <= deg; ++n) S[static_cast<size_t>(n + 1)] = E[static_cast<size_t>(n)];
    return S;
}

}  // namespace wsigma

#endif  // WSIGMA_SIGMA_HPP
