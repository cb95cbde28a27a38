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
 * Riemann theta function with half-integer characteristics,
 *
 *   theta[d''; d'](z, tau) = sum_n exp(pi i (n+d'')^t tau (n+d'')
 *                                      + 2 pi i (n+d'')^t (z+d')),
 *
 * where d'' multiplies tau.  Evaluation truncates the lattice sum to an
 * ellipsoid centered at the Gaussian peak; integer points are enumerated by
 * recursive coordinate bounding on the Cholesky factor of Im tau.  Terms are
 * accumulated in a fixed-order pairwise tree so results are reproducible
 * bit-for-bit across runs.
 */

#ifndef WSIGMA_THETA_HPP
#define WSIGMA_THETA_HPP

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "wsigma/errors.hpp"
#include "wsigma/pointnum.hpp"

namespace wsigma {

namespace detail {

inline cplx pairwise_sum(std::vector<cplx> v) {
    if (v.empty()) return cplx(0.0);
    size_t n = v.size();
    while (n > 1) {
        size_t h = 0;
        for (size_t i = 0; i + 1 < n; i += 2) v[h++] = v[i] + v[i + 1];
        if (n % 2) v[h++] = v[n - 1];
        n = h;
    }
    return v[0];
}

}  // namespace detail

struct ThetaCharacteristic {
    Eigen::VectorXd delta1;  // added to z
    Eigen::VectorXd delta2;  // multiplies tau

    /* parity of the characteristic: 4 d'.d'' mod 2 (0 even, 1 odd) */
    int parity() const {
        const long long p = std::llround(4.0 * delta1.dot(delta2));
        return static_cast<int>(((p % 2) + 2) % 2);
    }
};

inline ThetaCharacteristic zero_characteristic(long long g) {
    return ThetaCharacteristic{Eigen::VectorXd::Zero(g), Eigen::VectorXd::Zero(g)};
}

class ThetaFunction {
public:
    ThetaFunction(Eigen::MatrixXcd tau, ThetaCharacteristic chr, double rel_tol = 1e-12)
        : tau_(std::move(tau)), chr_(std::move(chr)), tol_(rel_tol) {
        g_ = tau_.rows();
        if (tau_.cols() != g_ || chr_.delta1.size() != g_ || chr_.delta2.size() != g_)
            throw ValidationError("theta: dimension mismatch between tau and characteristic");
        if (!(tol_ > 0)) throw ValidationError("theta: tolerance must be positive");
        Y_ = 0.5 * (tau_.imag() + tau_.imag().transpose());
        Eigen::LLT<Eigen::MatrixXd> llt(Y_);
        if (llt.info() != Eigen::Success) throw NotPositiveDefinite("Im tau");
        U_ = llt.matrixU();
        for (long long i = 0; i < g_; ++i)
            if (!(U_(i, i) > 0)) throw NotPositiveDefinite("Im tau");
        lam_min_ = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(Y_).eigenvalues().minCoeff();
        if (!(lam_min_ > 0)) throw NotPositiveDefinite("Im tau");
    }

    const Eigen::MatrixXcd& tau() const { return tau_; }
    const ThetaCharacteristic& characteristic() const { return chr_; }

    cplx value(const Eigen::VectorXcd& z) const { return evaluate(z, {}, 0.0); }

    /* derivative in the z-coordinates; dirs lists coordinate indices, one per order */
    cplx derivative(const Eigen::VectorXcd& z, const std::vector<int>& dirs) const {
        return evaluate(z, dirs, 0.0);
    }

    Eigen::VectorXcd gradient(const Eigen::VectorXcd& z) const {
        Eigen::VectorXcd out(g_);
        for (long long j = 0; j < g_; ++j) out(j) = evaluate(z, {static_cast<int>(j)}, 0.0);
        return out;
    }

    /* same sum with the truncation radius enlarged; the difference bounds the tail */
    cplx value_widened(const Eigen::VectorXcd& z, double extra_radius = 2.0) const {
        return evaluate(z, {}, extra_radius);
    }

private:
    /*
     * |term| = exp(pi v^t Y v) exp(-pi |U(n + d'' + v)|^2) with
     * v = Y^{-1} Im(z + d'), so the sum runs over the ellipsoid
     * |U(n + d'' + v)| <= R.  R is sized so the discarded tail is below
     * tol relative to the peak term, with margin for the polynomial factors
     * of derivatives up to order two.
     */
    cplx evaluate(const Eigen::VectorXcd& z, const std::vector<int>& dirs, double extra) const {
        if (z.size() != g_) throw ValidationError("theta: argument dimension mismatch");
        if (dirs.size() > 2) throw ValidationError("theta: derivative order above two");
        const Eigen::VectorXd yz = (z + chr_.delta1.cast<cplx>()).imag();
        const Eigen::VectorXd v = Y_.llt().solve(yz);

        double R = 3.0;
        const double logtol = std::log(1.0 / tol_);
        for (int it = 0; it < 4; ++it) {
            double margin = static_cast<double>(g_) * std::log(2.0 * R / std::sqrt(lam_min_) + 3.0) + 4.0;
            margin += 2.0 * std::log(2.0 * M_PI * (R / std::sqrt(lam_min_) + v.norm() + 2.0) + 1.0);
            R = std::sqrt((logtol + margin) / M_PI);
        }
        R += extra;

        const Eigen::VectorXd center = chr_.delta2 + v;  // m = n + center
        std::vector<cplx> terms;
        std::vector<double> m(static_cast<size_t>(g_), 0.0);
        enumerate(static_cast<long long>(g_) - 1, R * R, center, z, dirs, m, terms);
        return detail::pairwise_sum(std::move(terms));
    }

    void enumerate(long long i, double rem2, const Eigen::VectorXd& center,
                   const Eigen::VectorXcd& z, const std::vector<int>& dirs,
                   std::vector<double>& m, std::vector<cplx>& terms) const {
        if (i < 0) {
            terms.push_back(term_value(m, center, z, dirs));
            return;
        }
        double t = 0.0;
        for (long long j = i + 1; j < g_; ++j) t += U_(i, j) * m[static_cast<size_t>(j)];
        const double rad = std::sqrt(std::max(rem2, 0.0));
        const double uii = U_(i, i);
        const double mlo = (-rad - t) / uii;
        const double mhi = (rad - t) / uii;
        const long long nlo = static_cast<long long>(std::ceil(mlo - center(i) - 1e-12));
        const long long nhi = static_cast<long long>(std::floor(mhi - center(i) + 1e-12));
        for (long long n = nlo; n <= nhi; ++n) {
            m[static_cast<size_t>(i)] = static_cast<double>(n) + center(i);
            const double ri = uii * m[static_cast<size_t>(i)] + t;
            const double used = ri * ri;
            if (used > rem2 + 1e-9) continue;
            enumerate(i - 1, rem2 - used, center, z, dirs, m, terms);
        }
        m[static_cast<size_t>(i)] = 0.0;
    }

    cplx term_value(const std::vector<double>& m, const Eigen::VectorXd& center,
                    const Eigen::VectorXcd& z, const std::vector<int>& dirs) const {
        /* lattice point n + d'' recovered from m = n + center */
        Eigen::VectorXd p(g_);
        for (long long i = 0; i < g_; ++i) {
            const double ni = std::round(m[static_cast<size_t>(i)] - center(i));
            p(i) = ni + chr_.delta2(i);
        }
        cplx E(0.0);
        for (long long a = 0; a < g_; ++a) {
            cplx rowsum(0.0);
            for (long long b = 0; b < g_; ++b) rowsum += tau_(a, b) * p(b);
            E += p(a) * rowsum;
        }
        const cplx ipi(0.0, M_PI);
        cplx phase(0.0);
        for (long long a = 0; a < g_; ++a) phase += p(a) * (z(a) + chr_.delta1(a));
        cplx val = std::exp(ipi * E + 2.0 * ipi * phase);
        for (int d : dirs) val *= cplx(0.0, 2.0 * M_PI) * p(d);
        return val;
    }

    Eigen::MatrixXcd tau_;
    ThetaCharacteristic chr_;
    double tol_;
    long long g_ = 0;
    Eigen::MatrixXd Y_;
    Eigen::MatrixXd U_;
    double lam_min_ = 0.0;
};

/* Direct box-truncated sum, used as a cross-check oracle in the test suite. */
inline cplx theta_box_reference(const Eigen::MatrixXcd& tau, const ThetaCharacteristic& chr,
                                const Eigen::VectorXcd& z, long long R = 8,
                                const std::vector<int>& dirs = {}) {
    const long long g = tau.rows();
    std::vector<long long> n(static_cast<size_t>(g), -R);
    cplx acc(0.0);
    const cplx ipi(0.0, M_PI);
    while (true) {
        Eigen::VectorXd p(g);
        for (long long i = 0; i < g; ++i) p(i) = static_cast<double>(n[static_cast<size_t>(i)]) + chr.delta2(i);
        cplx E(0.0);
        for (long long a = 0; a < g; ++a)
            for (long long b = 0; b < g; ++b) E += p(a) * tau(a, b) * p(b);
        cplx phase(0.0);
        for (long long a = 0; a < g; ++a) phase += p(a) * (z(a) + chr.delta1(a));
        cplx val = std::exp(ipi * E + 2.0 * ipi * phase);
        for (int d : dirs) val *= cplx(0.0, 2.0 * M_PI) * p(d);
        acc += val;
        long long i = g - 1;
        while (i >= 0 && n[static_cast<size_t>(i)] == R) { n[static_cast<size_t>(i)] = -R; --i; }
        if (i < 0) break;
        ++n[static_cast<size_t>(i)];
    }
    return acc;
}

}  // namespace wsigma

#endif  // WSIGMA_THETA_HPP
