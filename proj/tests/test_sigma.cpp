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

#include <wsigma/sigma.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace wsigma;

static const PeriodData& periods23() {
    static PeriodData P = compute_periods(WCurve(2, 3, {{{2, 1}, Rat(1)}}));
    return P;
}
static const PeriodData& periods25() {
    static PeriodData P = compute_periods(WCurve(2, 5, {{{2, 0}, Rat(-1)}}));
    return P;
}
static const PeriodData& periods34() {
    static PeriodData P = compute_periods(WCurve(3, 4, {{{3, 0}, Rat(-1)}}));
    return P;
}

static Eigen::VectorXcd uvec(std::initializer_list<cplx> vs) {
    Eigen::VectorXcd u(static_cast<long long>(vs.size()));
    long long i = 0;
    for (const cplx& v : vs) u(i++) = v;
    return u;
}

TEST_CASE("characteristic scan lands on the frozen half characteristics") {
    {
        SigmaContext ctx = SigmaContext::from_scan(periods23());
        CHECK(ctx.characteristic().delta2(0) == Catch::Approx(0.5));
        CHECK(ctx.characteristic().delta1(0) == Catch::Approx(0.5));
        CHECK(ctx.characteristic().parity() == 1);
        CHECK(ctx.epsilon() == 1);
        CHECK(std::abs(ctx.rescale() - cplx(1.0, 0.0)) < 1e-12);
        CHECK(std::abs(ctx.normalization() - cplx(1.08643, 0.0)) < 2e-4);
    }
    {
        SigmaContext ctx = SigmaContext::from_scan(periods25());
        CHECK(ctx.characteristic().delta2(0) == Catch::Approx(0.5));
        CHECK(ctx.characteristic().delta2(1) == Catch::Approx(0.5));
        CHECK(ctx.characteristic().delta1(0) == Catch::Approx(0.5));
        CHECK(ctx.characteristic().delta1(1) == Catch::Approx(0.0).margin(1e-12));
        CHECK(ctx.characteristic().parity() == 1);
        CHECK(ctx.epsilon() == -1);
        CHECK(std::abs(ctx.rescale() - cplx(1.0, 0.0)) < 1e-12);
        CHECK(std::abs(ctx.normalization() - cplx(1.53616, 0.782711)) < 2e-4);
    }
    {
        SigmaContext ctx = SigmaContext::from_scan(periods34());
        for (int k = 0; k < 3; ++k)
            CHECK(ctx.characteristic().delta2(k) == Catch::Approx(0.5));
        CHECK(ctx.characteristic().delta1(0) == Catch::Approx(0.5));
        CHECK(ctx.characteristic().delta1(1) == Catch::Approx(0.0).margin(1e-12));
        CHECK(ctx.characteristic().delta1(2) == Catch::Approx(0.0).margin(1e-12));
        CHECK(ctx.epsilon() == 1);
        CHECK(std::abs(ctx.normalization() - cplx(1.1185, -2.33417)) < 2e-4);
    }
}

TEST_CASE("degenerate scan samples are rejected") {
    /* every odd characteristic vanishes at u = 0, so 0 alone cannot decide */
    CHECK_THROWS_AS(
        scan_characteristic(periods25(), {Eigen::VectorXcd::Zero(2)}),
        AmbiguousCharacteristic);
}

TEST_CASE("sigma vanishes at the origin and is normalized there") {
    for (const PeriodData* P : {&periods23(), &periods25(), &periods34()}) {
        SigmaContext ctx = SigmaContext::from_scan(*P);
        const long long g = ctx.genus();
        CHECK(std::abs(ctx.sigma(Eigen::VectorXcd::Zero(g))) < 1e-12);
    }
}

TEST_CASE("elliptic sigma matches the classical function") {
    SigmaContext ctx = SigmaContext::from_scan(periods23());
    const struct {
        cplx u, want;
    } table[] = {
        {{0.31, 0.0}, {0.309952282125, 0.0}},
        {{0.0, 0.42}, {0.0, 0.419782140937}},
        {{0.25, 0.33}, {0.250020266195, 0.330201664273}},
        {{-0.52, 0.11}, {-0.519643642598, 0.109389163565}},
    };
    for (const auto& row : table) {
        const cplx got = ctx.sigma(uvec({row.u}));
        CHECK(std::abs(got - row.want) < 1e-9);
    }
    /* independent series route for y^2 = 4x^3 - 4x */
    std::vector<double> S = sigma_classical_series(4.0, 0.0);
    for (double u0 : {0.05, -0.11, 0.2}) {
        double acc = 0.0, p = 1.0;
        for (size_t k = 0; k < S.size(); ++k) {
            if (k > 0) p *= u0;
            acc += S[k] * (k == 0 ? 1.0 : p);
        }
        CHECK(std::abs(ctx.sigma(uvec({cplx(u0, 0.0)})) - acc) < 1e-12);
    }
}

TEST_CASE("reflection parity follows the diagram weight") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> um(-0.25, 0.25);
    for (const PeriodData* P : {&periods23(), &periods25(), &periods34()}) {
        SigmaContext ctx = SigmaContext::from_scan(*P);
        const long long g = ctx.genus();
        const long long wt = young_diagram(P->pd->curve().semigroup()).weight();
        const double sign = (wt % 2 == 0) ? 1.0 : -1.0;
        for (int rep = 0; rep < 5; ++rep) {
            Eigen::VectorXcd u(g);
            for (long long i = 0; i < g; ++i) u(i) = cplx(um(rng), um(rng));
            const cplx a = ctx.sigma(u), b = ctx.sigma(-u);
            CHECK(std::abs(b - sign * a) < 1e-10 * std::max(1.0, std::abs(a)));
        }
    }
}

TEST_CASE("translation law over the lattice generators") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> um(-0.2, 0.2);
    for (const PeriodData* P : {&periods23(), &periods25()}) {
        SigmaContext ctx = SigmaContext::from_scan(*P);
        const long long g = ctx.genus();
        for (long long k = 0; k < 2 * g; ++k) {
            Eigen::VectorXd lp = Eigen::VectorXd::Zero(g), lpp = Eigen::VectorXd::Zero(g);
            (k < g ? lp(k) : lpp(k - g)) = 1.0;
            for (int rep = 0; rep < 3; ++rep) {
                Eigen::VectorXcd u(g);
                for (long long i = 0; i < g; ++i) u(i) = cplx(um(rng), um(rng));
                const cplx lhs = ctx.sigma(u + ctx.lattice_vector(lp, lpp));
                const cplx rhs = ctx.translation_factor(u, lp, lpp) * ctx.sigma(u);
                CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(lhs)));
            }
        }
    }
}

TEST_CASE("taylor grid recovers polynomial coefficients") {
    auto f = [](const Eigen::VectorXcd& u) {
        return u(0) * u(0) * u(1) + 3.0 + 0.5 * u(1);
    };
    TaylorGrid grid(f, 2);
    CHECK(std::abs(grid.coeff({2, 1}) - 1.0) < 1e-12);
    CHECK(std::abs(grid.coeff({0, 0}) - 3.0) < 1e-12);
    CHECK(std::abs(grid.coeff({0, 1}) - 0.5) < 1e-12);
    CHECK(std::abs(grid.coeff({1, 1})) < 1e-12);
    CHECK(std::abs(grid.coeff({3, 2})) < 1e-12);
}

TEST_CASE("leading taylor block is the schur polynomial") {
    {
        SigmaContext ctx = SigmaContext::from_scan(periods23());
        SchurFitReport rep = schur_fit(ctx);
        CHECK(rep.weight == 1);
        CHECK(rep.cutoff == 5);
        CHECK(rep.block_error < 1e-9);
        CHECK(rep.off_block_max < 1e-9);
    }
    {
        SigmaContext ctx = SigmaContext::from_scan(periods25());
        SchurFitReport rep = schur_fit(ctx);
        CHECK(rep.weight == 3);
        CHECK(rep.cutoff == 13);
        CHECK(rep.block_error < 1e-9);
        CHECK(rep.off_block_max < 1e-9);
    }
    {
        SigmaContext ctx = SigmaContext::from_scan(periods34());
        SchurFitReport rep = schur_fit(ctx);
        CHECK(rep.weight == 5);
        CHECK(rep.cutoff == 17);
        CHECK(rep.block_error < 1e-8);
        CHECK(rep.off_block_max < 1e-8);
    }
}

TEST_CASE("u-weights and moduli floor") {
    CHECK(u_weights(NumericalSemigroup(std::vector<long long>{3, 4})) ==
          std::vector<long long>{5, 2, 1});
    CHECK(moduli_weight_floor(WCurve(2, 3, {{{2, 1}, Rat(1)}})) == 4);
    CHECK(moduli_weight_floor(WCurve(2, 5, {{{2, 0}, Rat(-1)}})) == 10);
    CHECK(moduli_weight_floor(WCurve(3, 4, {{{3, 0}, Rat(-1)}})) == 12);
}

TEST_CASE("sigma is independent of the symplectic basis") {
    const PeriodData& P = periods25();
    SigmaContext ctx = SigmaContext::from_scan(P);
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 2; ++rep) {
        std::vector<std::vector<long long>> T = random_symplectic(2, rng);
        PeriodData Q = P;
        Q.U.assign(4, std::vector<long long>(4, 0));
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j)
                for (size_t k = 0; k < 4; ++k) Q.U[i][j] += T[i][k] * P.U[k][j];
        Q.mats = matrices_from_basis(Q.V, Q.U);
        SigmaContext ctx2 = SigmaContext::from_scan(Q);
        for (const auto& u : {uvec({cplx(0.21, 0.04), cplx(-0.13, 0.09)}),
                              uvec({cplx(-0.17, -0.11), cplx(0.08, 0.19)})}) {
            const cplx a = ctx.sigma(u), b = ctx2.sigma(u);
            CHECK(std::abs(a - b) < 1e-9 * std::max(1.0, std::abs(a)));
        }
    }
}

TEST_CASE("theta in u coordinates differentiates through the reduction") {
    SigmaContext ctx = SigmaContext::from_scan(periods25());
    const Eigen::VectorXcd u = uvec({cplx(0.12, 0.07), cplx(-0.21, 0.05)});
    const double h = 1e-5;
    for (int k = 0; k < 2; ++k) {
        Eigen::VectorXcd up = u, um = u;
        up(k) += h;
        um(k) -= h;
        const cplx fd = (ctx.theta_u(up, {}) - ctx.theta_u(um, {})) / (2.0 * h);
        CHECK(std::abs(ctx.theta_u(u, {k}) - fd) < 1e-7);
    }
}
