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
#include <wsigma/theta.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace wsigma;

static Eigen::MatrixXcd tau_of(long long r, long long s,
                               std::map<std::pair<long long, long long>, Rat> lam) {
    return compute_periods(WCurve(r, s, std::move(lam))).mats.tau;
}

static Eigen::VectorXcd zvec(std::initializer_list<cplx> vs) {
    Eigen::VectorXcd z(static_cast<long long>(vs.size()));
    long long i = 0;
    for (const cplx& v : vs) z(i++) = v;
    return z;
}

TEST_CASE("ellipsoid sum matches the box reference across genera") {
    const Eigen::MatrixXcd t1 = tau_of(2, 3, {{{2, 1}, Rat(1)}});
    const Eigen::MatrixXcd t2 = tau_of(2, 5, {{{2, 0}, Rat(-1)}});
    const Eigen::MatrixXcd t3 = tau_of(3, 4, {{{3, 0}, Rat(-1)}});

    {
        ThetaFunction th(t1, zero_characteristic(1));
        for (const cplx& z0 : {cplx(0.2, 0.1), cplx(-0.7, 0.4), cplx(1.3, -0.2)}) {
            const Eigen::VectorXcd z = zvec({z0});
            CHECK(std::abs(th.value(z) - theta_box_reference(t1, zero_characteristic(1), z)) <
                  1e-12);
        }
    }
    {
        ThetaFunction th(t2, zero_characteristic(2));
        const Eigen::VectorXcd z = zvec({cplx(0.31, 0.12), cplx(-0.25, 0.17)});
        CHECK(std::abs(th.value(z) - theta_box_reference(t2, zero_characteristic(2), z)) <
              1e-12);
        /* first and second direction derivatives against the same box */
        CHECK(std::abs(th.derivative(z, {1}) -
                       theta_box_reference(t2, zero_characteristic(2), z, 8, {1})) < 1e-11);
        CHECK(std::abs(th.derivative(z, {0, 1}) -
                       theta_box_reference(t2, zero_characteristic(2), z, 8, {0, 1})) < 1e-10);
    }
    {
        ThetaFunction th(t3, zero_characteristic(3));
        const Eigen::VectorXcd z = zvec({cplx(0.2, 0.1), cplx(0.1, -0.15), cplx(-0.3, 0.05)});
        CHECK(std::abs(th.value(z) - theta_box_reference(t3, zero_characteristic(3), z)) <
              1e-11);
    }
}

TEST_CASE("integer shifts and reflection fix the zero characteristic") {
    const Eigen::MatrixXcd t2 = tau_of(2, 5, {{{2, 0}, Rat(-1)}});
    ThetaFunction th(t2, zero_characteristic(2));
    const Eigen::VectorXcd z = zvec({cplx(0.4, 0.21), cplx(-0.33, 0.08)});
    for (long long k = 0; k < 2; ++k) {
        Eigen::VectorXcd ze = z;
        ze(k) += 1.0;
        CHECK(std::abs(th.value(ze) - th.value(z)) < 1e-10 * std::abs(th.value(z)));
    }
    CHECK(std::abs(th.value(-z) - th.value(z)) < 1e-10 * std::abs(th.value(z)));
}

TEST_CASE("lemniscatic value against a large direct sum") {
    Eigen::MatrixXcd tau(1, 1);
    tau(0, 0) = cplx(0.0, 1.0);
    ThetaFunction th(tau, zero_characteristic(1));
    /* 10^4-term brute-force sum */
    cplx acc = 0.0;
    for (long long n = -5000; n < 5000; ++n)
        acc += std::exp(cplx(0.0, M_PI) * static_cast<double>(n) * static_cast<double>(n) *
                        tau(0, 0));
    CHECK(std::abs(th.value(zvec({cplx(0.0, 0.0)})) - acc) < 1e-13);
}

TEST_CASE("widened-radius self test") {
    const Eigen::MatrixXcd t2 = tau_of(2, 5, {{{2, 0}, Rat(-1)}});
    ThetaFunction th(t2, zero_characteristic(2));
    const Eigen::VectorXcd z = zvec({cplx(0.9, 0.4), cplx(-1.1, 0.3)});
    CHECK(std::abs(th.value(z) - th.value_widened(z)) < 1e-12 * (1.0 + std::abs(th.value(z))));
}

TEST_CASE("characteristic parity controls the reflection sign") {
    const Eigen::MatrixXcd t2 = tau_of(2, 5, {{{2, 0}, Rat(-1)}});
    ThetaCharacteristic odd{zvec({cplx(0.5, 0.0), cplx(0.0, 0.0)}).real(),
                            zvec({cplx(0.5, 0.0), cplx(0.5, 0.0)}).real()};
    REQUIRE(odd.parity() == 1);
    ThetaFunction th_odd(t2, odd);
    const Eigen::VectorXcd z = zvec({cplx(0.23, 0.11), cplx(-0.31, 0.19)});
    CHECK(std::abs(th_odd.value(-z) + th_odd.value(z)) < 1e-10);
    /* odd characteristics vanish at the origin */
    CHECK(std::abs(th_odd.value(zvec({cplx(0, 0), cplx(0, 0)}))) < 1e-12);

    ThetaCharacteristic even{zvec({cplx(0.5, 0.0), cplx(0.5, 0.0)}).real(),
                             zvec({cplx(0.5, 0.0), cplx(0.5, 0.0)}).real()};
    REQUIRE(even.parity() == 0);
    ThetaFunction th_even(t2, even);
    CHECK(std::abs(th_even.value(-z) - th_even.value(z)) < 1e-10);
}

TEST_CASE("derivatives agree with central differences") {
    const Eigen::MatrixXcd t2 = tau_of(2, 5, {{{2, 0}, Rat(-1)}});
    ThetaFunction th(t2, zero_characteristic(2));
    const Eigen::VectorXcd z = zvec({cplx(0.17, 0.23), cplx(0.4, -0.12)});
    const double h = 1e-5;
    for (int k = 0; k < 2; ++k) {
        Eigen::VectorXcd zp = z, zm = z;
        zp(k) += h;
        zm(k) -= h;
        const cplx fd = (th.value(zp) - th.value(zm)) / (2.0 * h);
        CHECK(std::abs(th.derivative(z, {k}) - fd) < 1e-7);
        CHECK(std::abs(th.gradient(z)(k) - th.derivative(z, {k})) < 1e-14);
    }
}

TEST_CASE("invalid inputs are rejected") {
    Eigen::MatrixXcd bad(1, 1);
    bad(0, 0) = cplx(0.0, -1.0);
    CHECK_THROWS_AS(ThetaFunction(bad, zero_characteristic(1)), NotPositiveDefinite);
    Eigen::MatrixXcd t(1, 1);
    t(0, 0) = cplx(0.3, 2.0);
    CHECK_THROWS_AS(ThetaFunction(t, zero_characteristic(2)), ValidationError);
    CHECK_THROWS_AS(ThetaFunction(t, zero_characteristic(1), -1.0), ValidationError);
    ThetaFunction th(t, zero_characteristic(1));
    CHECK_THROWS_AS(th.value(zvec({cplx(0, 0), cplx(0, 0)})), ValidationError);
    CHECK_THROWS_AS(th.derivative(zvec({cplx(0, 0)}), {0, 0, 0}), ValidationError);
}
