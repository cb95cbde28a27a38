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
 * Verification suites: each runs a property of the assembled analytic data
 * (periods, theta, sigma) on deterministic pseudo-random samples and reports
 * residuals against pinned tolerances.  Suites never weaken tolerances; a
 * failing row is reported as such.
 */

#ifndef WSIGMA_VERIFY_HPP
#define WSIGMA_VERIFY_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "wsigma/rjfr.hpp"
#include "wsigma/sigma.hpp"

namespace wsigma {

struct CheckRow {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckRow> rows;

    bool pass() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
};

namespace detail {

/* deterministic normals independent of the standard library's distributions */
class SampleStream {
public:
    explicit SampleStream(std::uint64_t seed) : eng_(seed) {}

    double uniform() {  // in (0, 1)
        const std::uint64_t x = eng_();
        return (static_cast<double>(x >> 11) + 0.5) * 0x1p-53;
    }

    double normal() {
        if (have_) {
            have_ = false;
            return spare_;
        }
        const double u1 = uniform(), u2 = uniform();
        const double m = std::sqrt(-2.0 * std::log(u1));
        spare_ = m * std::sin(2.0 * M_PI * u2);
        have_ = true;
        return m * std::cos(2.0 * M_PI * u2);
    }

    cplx normal_c() { return cplx(normal(), normal()); }

    /* x in an annulus clear of small branch loci */
    cplx annulus(double r0 = 1.7, double r1 = 2.6) {
        const double r = r0 + (r1 - r0) * uniform();
        const double a = 2.0 * M_PI * uniform();
        return r * std::exp(cplx(0.0, a));
    }

    Eigen::VectorXcd small_u(long long g, double scale = 0.3) {
        Eigen::VectorXcd u(g);
        for (long long i = 0; i < g; ++i) u(i) = scale * normal_c();
        return u;
    }

private:
    std::mt19937_64 eng_;
    bool have_ = false;
    double spare_ = 0.0;
};

}  // namespace detail

inline SuiteReport verify_legendre(const PeriodData& P) {
    SuiteReport rep{"legendre", {}};
    const PeriodMatrices& m = P.mats;
    rep.rows.push_back({"legendre_relation", m.legendre_residual, 1e-6,
                        m.legendre_residual <= 1e-6});
    const double full = legendre_matrix_residual(m);
    rep.rows.push_back({"full_matrix_relation", full, 1e-6, full <= 1e-6});
    rep.rows.push_back({"tau_symmetry", m.tau_asymmetry, 1e-9, m.tau_asymmetry <= 1e-9});
    const double neg = std::max(0.0, -m.im_tau_min_eig);
    rep.rows.push_back({"im_tau_positive", neg, 0.0, m.im_tau_min_eig > 0});
    rep.rows.push_back({"cycle_intersection", P.intersection_error, 1e-6,
                        P.intersection_error <= 1e-6});
    return rep;
}

inline SuiteReport verify_parity(const SigmaContext& ctx, int nsamples = 50,
                                 double tol = 1e-9, std::uint64_t seed = 11) {
    detail::SampleStream rng(seed);
    const long long g = ctx.genus();
    const long long wLam = young_diagram(ctx.point_diffs().curve().semigroup()).weight();
    const double sign = (wLam % 2 == 0) ? 1.0 : -1.0;
    double worst = 0.0;
    for (int k = 0; k < nsamples; ++k) {
        const Eigen::VectorXcd u = rng.small_u(g);
        const cplx a = ctx.sigma(u), b = ctx.sigma(-u);
        worst = std::max(worst, std::abs(b - sign * a) / std::max(1.0, std::abs(a)));
    }
    SuiteReport rep{"parity", {}};
    rep.rows.push_back({"parity_sign", worst, tol, worst <= tol});
    return rep;
}

inline SuiteReport verify_translation(const SigmaContext& ctx, int nsamples = 20,
                                      double tol = 1e-8, std::uint64_t seed = 12) {
    detail::SampleStream rng(seed);
    const long long g = ctx.genus();
    std::vector<Eigen::VectorXcd> us;
    for (int k = 0; k < nsamples; ++k) us.push_back(rng.small_u(g));
    SuiteReport rep{"translation", {}};
    for (long long j = 0; j < g; ++j) {
        for (int which = 0; which < 2; ++which) {
            Eigen::VectorXd lp = Eigen::VectorXd::Zero(g), lpp = Eigen::VectorXd::Zero(g);
            (which == 0 ? lp : lpp)(j) = 1.0;
            const Eigen::VectorXcd ell = ctx.lattice_vector(lp, lpp);
            double worst = 0.0;
            for (const auto& u : us) {
                const cplx lhs = ctx.sigma(u + ell);
                const cplx rhs = ctx.sigma(u) * ctx.translation_factor(u, lp, lpp);
                worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
            }
            const std::string name = (which == 0 ? "alpha_" : "beta_") + std::to_string(j + 1);
            rep.rows.push_back({name, worst, tol, worst <= tol});
        }
    }
    return rep;
}

inline SuiteReport verify_schur(const SigmaContext& ctx, double tol = 1e-6) {
    const SchurFitReport fit = schur_fit(ctx);
    SuiteReport rep{"schur", {}};
    rep.rows.push_back({"leading_block", fit.block_error, tol, fit.block_error <= tol});
    rep.rows.push_back({"below_moduli_weight", fit.off_block_max, tol, fit.off_block_max <= tol});
    return rep;
}

inline SuiteReport verify_rjfr(const SigmaContext& ctx, int ntuples = 2, double tol = 1e-6,
                               std::uint64_t seed = 15) {
    detail::SampleStream rng(seed);
    SuiteReport rep{"rjfr", {}};
    for (int k = 0; k < ntuples; ++k) {
        std::array<cplx, 4> xs;
        for (size_t i = 0; i < 4;) {
            const cplx cand = rng.annulus(1.9, 2.7);
            bool far = true;
            for (size_t j = 0; j < i; ++j)
                if (std::abs(cand - xs[j]) < 0.3) far = false;
            if (far) xs[i++] = cand;
        }
        const RjfrResult res = rjfr_check(ctx, xs);
        rep.rows.push_back({"tuple_" + std::to_string(k + 1), res.rel_err, tol,
                            res.rel_err <= tol});
    }
    return rep;
}

/*
 * Theta-divisor stratum: on Abel images of g-1 points theta vanishes, while
 * the derivative along the natural index of the once-truncated diagram stays
 * bounded away from zero.
 */
inline SuiteReport verify_kempf(const SigmaContext& ctx, int nsamples = 6,
                                double vanish_tol = 1e-7, double deriv_floor = 1e-3,
                                std::uint64_t seed = 13) {
    const PointDiffs& pd = ctx.point_diffs();
    const NumericalSemigroup& H = pd.curve().semigroup();
    const long long g = ctx.genus();
    detail::SampleStream rng(seed);
    double worst_theta = 0.0;
    double min_deriv = std::numeric_limits<double>::infinity();

    std::vector<int> nat;
    if (g >= 2)
        for (long long Li : natural_index(H, g - 1)) nat.push_back(static_cast<int>(Li - 1));
    else
        nat.push_back(0);

    for (int k = 0; k < nsamples; ++k) {
        Eigen::VectorXcd w = Eigen::VectorXcd::Zero(g);
        for (long long p = 0; p + 1 < g; ++p) w += abel_from_infinity(pd, rng.annulus()).w;
        worst_theta = std::max(worst_theta, std::abs(ctx.theta_u(w, {})));
        min_deriv = std::min(min_deriv, std::abs(ctx.theta_u(w, nat)));
    }
    SuiteReport rep{"kempf", {}};
    rep.rows.push_back({"stratum_vanishing", worst_theta, vanish_tol, worst_theta <= vanish_tol});
    rep.rows.push_back({"natural_derivative_min", min_deriv, deriv_floor,
                        min_deriv > deriv_floor});
    return rep;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"legendre", "parity",  "translation",
                                                   "schur",    "rjfr",    "kempf"};
    return names;
}

inline SuiteReport run_suite(const SigmaContext& ctx, const std::string& name) {
    if (name == "legendre") return verify_legendre(ctx.periods());
    if (name == "parity") return verify_parity(ctx);
    if (name == "translation") return verify_translation(ctx);
    if (name == "schur") return verify_schur(ctx);
    if (name == "rjfr") return verify_rjfr(ctx);
    if (name == "kempf") return verify_kempf(ctx);
    throw ValidationError("unknown verification suite: " + name);
}

/* throw if any row failed; message lists the offending rows */
inline void require_pass(const SuiteReport& rep) {
    if (rep.pass()) return;
    std::string msg = rep.suite + ":";
    for (const auto& r : rep.rows)
        if (!r.pass)
            msg += " " + r.name + " residual " + std::to_string(r.residual) + " tol " +
                   std::to_string(r.tolerance) + ";";
    throw SuiteFailure(msg);
}

}  // namespace wsigma

#endif  // WSIGMA_VERIFY_HPP
