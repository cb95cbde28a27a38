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

#include <wsigma/periods.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace wsigma;

using VL = std::vector<long long>;

static WCurve curve23() { return WCurve(2, 3, {{{2, 1}, Rat(1)}}); }
static WCurve curve25() { return WCurve(2, 5, {{{2, 0}, Rat(-1)}}); }
static WCurve curve34() { return WCurve(3, 4, {{{3, 0}, Rat(-1)}}); }

TEST_CASE("square-lattice elliptic curve has period ratio i") {
    PeriodData P = compute_periods(curve23());
    REQUIRE(P.mats.tau.rows() == 1);
    CHECK(std::abs(P.mats.tau(0, 0) - cplx(0.0, 1.0)) < 1e-8);
    /* half period against the arithmetic-geometric mean */
    const double agm = real_agm(std::sqrt(2.0), 1.0);
    CHECK(std::abs(P.mats.omega1(0, 0) - cplx(-M_PI / (2.0 * agm), 0.0)) < 1e-8);
    CHECK(std::abs(real_agm(std::sqrt(2.0), 1.0) - 1.1981402347355923) < 1e-14);
}

TEST_CASE("riemann relations hold on all three reference curves") {
    for (const WCurve& W : {curve23(), curve25(), curve34()}) {
        PeriodData P = compute_periods(W);
        CAPTURE(W.genus());
        CHECK(P.mats.legendre_residual < 1e-6);
        CHECK(legendre_matrix_residual(P.mats) < 1e-6);
        CHECK(P.mats.tau_asymmetry < 1e-9);
        CHECK(P.mats.im_tau_min_eig > 0.0);
        CHECK(P.intersection_error < 1e-6);
        CHECK_FALSE(P.flipped);
        /* kappa = eta1 omega1^{-1} is symmetric */
        Eigen::MatrixXcd kap =
            P.mats.omega1.transpose().fullPivLu().solve(P.mats.eta1.transpose()).transpose();
        CHECK((kap - kap.transpose()).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("frozen intersection data of the genus-2 curve") {
    PeriodData P = compute_periods(curve25());
    CHECK(P.S == std::vector<VL>{{0, 1, 0, 0}, {-1, 0, -1, 0}, {0, 1, 0, -1}, {0, 0, 1, 0}});
    CHECK(std::abs(P.mats.im_tau_min_eig - 0.5878) < 5e-3);
    /* the reduced rows take S to the standard symplectic form */
    const long long n = 4;
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            long long acc = 0;
            for (long long a = 0; a < n; ++a)
                for (long long b = 0; b < n; ++b)
                    acc += P.U[static_cast<size_t>(i)][static_cast<size_t>(a)] *
                           P.S[static_cast<size_t>(a)][static_cast<size_t>(b)] *
                           P.U[static_cast<size_t>(j)][static_cast<size_t>(b)];
            const long long want = (j == i + 2) ? 1 : (i == j + 2 ? -1 : 0);
            CHECK(acc == want);
        }
}

TEST_CASE("trigonal minimum eigenvalue stays bounded away from zero") {
    PeriodData P = compute_periods(curve34());
    CHECK(std::abs(P.mats.im_tau_min_eig - 0.354) < 5e-3);
}

TEST_CASE("thread count does not change the numbers") {
    PeriodData a = compute_periods(curve25(), 0, 1);
    PeriodData b = compute_periods(curve25(), 0, 3);
    CHECK((a.mats.omega1 - b.mats.omega1).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((a.mats.eta2 - b.mats.eta2).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("random symplectic words stay in the group") {
    std::mt19937_64 rng(33);
    for (long long g = 1; g <= 3; ++g)
        for (int rep = 0; rep < 5; ++rep) CHECK(is_symplectic(random_symplectic(g, rng)));
    /* hand-built violation */
    CHECK_FALSE(is_symplectic({{1, 1}, {1, 1}}));
}

TEST_CASE("legendre relation survives a symplectic change of basis") {
    PeriodData P = compute_periods(curve25());
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 3; ++rep) {
        std::vector<VL> T = random_symplectic(2, rng);
        /* rows of the new basis over the elementary cells */
        std::vector<VL> rows(4, VL(4, 0));
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j)
                for (size_t k = 0; k < 4; ++k) rows[i][j] += T[i][k] * P.U[k][j];
        PeriodMatrices M = matrices_from_basis(P.V, rows);
        CHECK(M.legendre_residual < 1e-6);
        CHECK(M.tau_asymmetry < 1e-8);
        CHECK(M.im_tau_min_eig > 0.0);
    }
}

TEST_CASE("fundamental domain reduction") {
    const cplx t(0.3137, 1.618);
    const cplx r1 = fundamental_domain(t + 7.0);
    CHECK(std::abs(r1 - t) < 1e-12);
    const cplx r2 = fundamental_domain(-1.0 / t);
    CHECK(std::abs(r2 - t) < 1e-12);
    const cplx r3 = fundamental_domain(cplx(0.49, 0.02));
    CHECK(std::abs(r3) >= 1.0 - 1e-9);
    CHECK(std::abs(r3.real()) <= 0.5 + 1e-9);
}
