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

#include <wsigma/expansion.hpp>
#include <wsigma/laurent.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace wsigma;

using RS = RatSeries;

static RS geom(long long window) {
    /* 1 - t, to be inverted */
    return RS::term(0, Rat(1), window) + RS::term(1, Rat(-1), window);
}

TEST_CASE("window bookkeeping under ring operations") {
    RS a = RS::term(-2, Rat(1), 5);
    RS b = RS::term(1, Rat(3), 9);
    CHECK((a + b).window() == 5);
    /* product window: each factor is known modulo its window */
    CHECK((a * b).window() == std::min(5 + 1, 9 - 2));
    CHECK(a.truncated(3).window() == 3);
    CHECK(RS().window() == kInfWindow);
    CHECK(RS().is_zero());
    /* coefficients beyond the window are not observable */
    CHECK(a.coeff(4) == 0);
    CHECK_THROWS_AS(a.coeff(5), OrderUnderflow);
    CHECK_THROWS_AS(a.coeff(7), OrderUnderflow);
}

TEST_CASE("inverse multiplies back to one") {
    RS s = geom(12);
    RS inv = s.inverse();
    RS prod = s * inv - RS::one(kInfWindow);
    CHECK_FALSE(prod.window() == kInfWindow);
    for (const auto& [k, c] : prod.coeffs()) CHECK(c == 0);
    /* geometric series coefficients */
    for (long long k = 0; k < 12; ++k) CHECK(inv.coeff(k) == 1);
    /* shifted leading exponent */
    RS u = RS::term(-3, Rat(2), 4) + RS::term(0, Rat(5), 4);
    RS uinv = u.inverse();
    CHECK(uinv.lo() == 3);
    CHECK(uinv.coeff(3) == Rat(1, 2));
    CHECK_THROWS_AS(RS().inverse(), OrderUnderflow);
}

TEST_CASE("pow with negative exponents routes through the inverse") {
    RS s = geom(9);
    CHECK((s.pow(3) * s.pow(-3) - RS::one(kInfWindow)).coeff(4) == 0);
    CHECK(s.pow(0).coeff(0) == 1);
    CHECK(s.pow(2).coeff(1) == -2);
}

TEST_CASE("derivative and antiderivative are mutually inverse away from logs") {
    RS s = RS::term(-3, Rat(2), 6) + RS::term(0, Rat(7), 6) + RS::term(4, Rat(-1, 3), 6);
    RS round = s.antiderivative().derivative() - s;
    for (const auto& [k, c] : round.coeffs()) CHECK(c == 0);
    /* the 1/t term has no series antiderivative */
    RS bad = RS::term(-1, Rat(1), 4);
    CHECK_THROWS_AS(bad.antiderivative(), LogTermError);
    CHECK(bad.residue() == 1);
    CHECK(RS::term(2, Rat(6), 9).antiderivative().coeff(3) == 2);
}

TEST_CASE("chart expansion of the elliptic model") {
    WCurve W(2, 3, {{{2, 1}, Rat(1)}});
    ChartExpansion ch = expand_at_infinity(W, 26);
    CHECK(ch.x.lo() == -2);
    CHECK(ch.y.lo() == -3);
    CHECK(ch.x.coeff(-2) == 1);
    CHECK(ch.x.coeff(2) == 1);
    CHECK(ch.x.coeff(6) == -1);
    CHECK(ch.x.coeff(10) == 2);
    CHECK(ch.x.coeff(14) == -5);
    CHECK(ch.x.coeff(18) == 14);
    CHECK(ch.x.coeff(22) == -42);
    CHECK(ch.y.coeff(-3) == 1);
    CHECK(ch.y.coeff(1) == 1);
    CHECK(ch.y.coeff(5) == -1);
    CHECK(ch.y.coeff(9) == 2);
    /* only exponents congruent to -2 mod 4 appear */
    for (const auto& [k, c] : ch.x.coeffs())
        if (c != 0) CHECK((k + 2) % 4 == 0);
}

TEST_CASE("chart expansion of the genus-2 and trigonal models") {
    {
        WCurve W(2, 5, {{{2, 0}, Rat(-1)}});
        ChartExpansion ch = expand_at_infinity(W, 34);
        CHECK(ch.x.coeff(-2) == 1);
        CHECK(ch.x.coeff(8) == -1);
        CHECK(ch.x.coeff(18) == -4);
        CHECK(ch.x.coeff(28) == -26);
        CHECK(ch.y.coeff(-5) == 1);
        CHECK(ch.y.coeff(5) == -2);
        CHECK(ch.y.coeff(15) == -7);
        CHECK(ch.y.coeff(25) == -44);
    }
    {
        WCurve W(3, 4, {{{3, 0}, Rat(-1)}});
        ChartExpansion ch = expand_at_infinity(W, 44);
        CHECK(ch.x.coeff(-3) == 1);
        CHECK(ch.x.coeff(9) == -1);
        CHECK(ch.x.coeff(21) == -3);
        CHECK(ch.x.coeff(33) == -15);
        CHECK(ch.y.coeff(-4) == 1);
        CHECK(ch.y.coeff(8) == -1);
        CHECK(ch.y.coeff(20) == -3);
        CHECK(ch.y.coeff(32) == -15);
    }
}

TEST_CASE("chart satisfies curve and parameter constraint to the window") {
    WCurve W(3, 4, {{{3, 0}, Rat(-1)}, {{2, 1}, Rat(2, 3)}});
    ChartExpansion ch = expand_at_infinity(W, 30);
    /* the constructor already verifies the residual; re-check both relations */
    RS f = W.f().eval(ch.x, ch.y);
    CHECK(f.is_zero());
    RS g = ch.x.pow(W.bezout_ir()) - ch.y.pow(W.bezout_is()) * RS::term(1, Rat(1), kInfWindow);
    CHECK(g.is_zero());
    /* monomial t-order equals minus the pole weight */
    RS m = phi_infinity(XYPoly::monomial(2, 1, Rat(1)), ch);
    CHECK(m.lo() == W.weight(2, 1));
    CHECK_THROWS_AS(expand_at_infinity(W, 0), ValidationError);
}
