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

#include <wsigma/semigroup.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace wsigma;

using VL = std::vector<long long>;

TEST_CASE("constructor validates generators") {
    CHECK_THROWS_AS(NumericalSemigroup(VL{}), EmptyGenerators);
    CHECK_THROWS_AS(NumericalSemigroup(VL{4, 6}), NonCoprimeGenerators);
    CHECK_THROWS_AS(NumericalSemigroup(VL{0, 3}), ValidationError);
    CHECK_THROWS_AS(NumericalSemigroup(VL{1}), GenusZero);
    CHECK_THROWS_AS(NumericalSemigroup(VL{2, 3, 7}).gap(1), IndexOutOfRange);
}

TEST_CASE("gap sets of the reference semigroups") {
    CHECK(NumericalSemigroup(VL{2, 3}).gaps() == VL{1});
    CHECK(NumericalSemigroup(VL{2, 5}).gaps() == VL{1, 3});
    CHECK(NumericalSemigroup(VL{3, 4}).gaps() == VL{1, 2, 5});
    CHECK(NumericalSemigroup(VL{3, 7, 8}).gaps() == VL{1, 2, 4, 5});
    CHECK(NumericalSemigroup(VL{5, 7, 11}).gaps() == VL{1, 2, 3, 4, 6, 8, 9, 13});
    CHECK(NumericalSemigroup(VL{5, 6, 14}).gaps() == VL{1, 2, 3, 4, 7, 8, 9, 13});
}

TEST_CASE("membership, conductor, element enumeration") {
    NumericalSemigroup H(VL{5, 7, 11});
    CHECK(H.genus() == 8);
    CHECK(H.conductor() == 14);
    CHECK_FALSE(H.contains(13));
    CHECK(H.contains(12));
    CHECK(H.contains(10000));
    /* N(i) runs through the elements in order and settles to i + genus */
    CHECK(H.N(0) == 0);
    CHECK(H.N(1) == 5);
    CHECK(H.N(2) == 7);
    CHECK(H.N(20) == 28);
    /* redundant generators are dropped from the minimal list */
    CHECK(NumericalSemigroup(VL{5, 7, 11, 12, 22}).generators() == VL{5, 7, 11, 12});
}

TEST_CASE("symmetry is equivalent to 2g-1 being a gap") {
    const std::vector<VL> cases = {{2, 3},    {2, 5},    {3, 4},        {3, 7, 8},
                                   {5, 7, 11}, {5, 6, 14}, {4, 9},       {6, 7, 8, 9, 10, 11},
                                   {3, 5},    {7, 8, 9}, {4, 5, 6, 7}, {5, 8, 11, 12}};
    for (const auto& gens : cases) {
        NumericalSemigroup H(gens);
        const auto& gp = H.gaps();
        const bool top_gap =
            std::binary_search(gp.begin(), gp.end(), 2 * H.genus() - 1);
        CHECK(H.is_symmetric() == top_gap);
    }
    CHECK(NumericalSemigroup(VL{2, 3}).is_symmetric());
    CHECK_FALSE(NumericalSemigroup(VL{3, 7, 8}).is_symmetric());
}

TEST_CASE("standard basis holds the least element in each residue class") {
    NumericalSemigroup H(VL{5, 7, 11});
    StandardBasis sb = standard_basis(H);
    CHECK(sb.tilde_e == VL{0, 11, 7, 18, 14});
    CHECK(sb.ordered_e == VL{0, 7, 11, 14, 18});
    for (long long c = 0; c < 5; ++c) {
        CHECK(sb.tilde_e[static_cast<size_t>(c)] % 5 == c);
        /* least member of the class: the element 5 steps down escapes H */
        CHECK(H.contains(sb.tilde_e[static_cast<size_t>(c)]));
        if (sb.tilde_e[static_cast<size_t>(c)] >= 5)
            CHECK_FALSE(H.contains(sb.tilde_e[static_cast<size_t>(c)] - 5));
    }
}

TEST_CASE("Young diagrams of the reference tables") {
    {
        YoungDiagram d = young_diagram(NumericalSemigroup(VL{3, 7, 8}));
        CHECK(d.rows == VL{2, 2, 1, 1});
        CHECK(d.frob_a == VL{0, 3});
        CHECK(d.frob_b == VL{0, 1});
        CHECK(d.hooks == VL{5, 1});
        CHECK(d.rank == 2);
    }
    {
        YoungDiagram d = young_diagram(NumericalSemigroup(VL{5, 7, 11}));
        CHECK(d.rows == VL{6, 3, 3, 2, 1, 1, 1, 1});
        CHECK(d.frob_a == VL{0, 2, 7});
        CHECK(d.frob_b == VL{0, 1, 5});
        CHECK(d.hooks == VL{13, 4, 1});
        CHECK(d.rank == 3);
        CHECK(d.weight() == 18);
    }
    {
        YoungDiagram d = young_diagram(NumericalSemigroup(VL{5, 6, 14}));
        CHECK(d.rows == VL{6, 3, 3, 3, 1, 1, 1, 1});
        CHECK(d.frob_a == VL{1, 2, 7});
        CHECK(d.frob_b == VL{0, 1, 5});
        CHECK(d.hooks == VL{13, 4, 2});
        CHECK(d.rank == 3);
    }
    /* plane-tier diagrams are the staircase hooks */
    CHECK(young_diagram(NumericalSemigroup(VL{2, 3})).rows == VL{1});
    CHECK(young_diagram(NumericalSemigroup(VL{2, 5})).rows == VL{2, 1});
    CHECK(young_diagram(NumericalSemigroup(VL{3, 4})).rows == VL{3, 1, 1});
}

TEST_CASE("diagram round trip recovers the gap set") {
    const std::vector<VL> cases = {{2, 7}, {3, 7, 8}, {5, 7, 11}, {5, 6, 14}, {4, 6, 9}};
    for (const auto& gens : cases) {
        NumericalSemigroup H(gens);
        YoungDiagram d = young_diagram(H);
        NumericalSemigroup H2 = semigroup_from_diagram(d.rows);
        CHECK(H2.gaps() == H.gaps());
    }
    /* rows must be weakly decreasing */
    CHECK_THROWS_AS(diagram_of_rows(VL{1, 2}), ValidationError);
}

TEST_CASE("truncation splits the diagram and closes the gap complement") {
    NumericalSemigroup H(VL{5, 7, 11});
    DiagramTruncation t = truncate_diagram(H, 1);
    CHECK(t.upper == VL{6});
    CHECK(t.lower == VL{3, 3, 2, 1, 1, 1, 1});
    CHECK(t.lower_semigroup.generators() == VL{5, 7, 11, 13});
    CHECK(t.lower_semigroup.gaps() == VL{1, 2, 3, 4, 6, 8, 9});
    /* every gap of the truncation is still a gap of H */
    for (long long v : t.lower_semigroup.gaps()) CHECK_FALSE(H.contains(v));
    /* k = 0 and k = g are the trivial truncations */
    CHECK(truncate_diagram(H, 0).lower == young_diagram(H).rows);
    CHECK(truncate_diagram(H, 8).upper == young_diagram(H).rows);
    CHECK_THROWS_AS(truncate_diagram(H, 9), IndexOutOfRange);
}

TEST_CASE("natural index starts at k+1 and lists gap positions") {
    NumericalSemigroup H(VL{5, 7, 11});
    CHECK(natural_index(H, 0) == VL{1, 5, 8});
    CHECK(natural_index(H, 1) == VL{2, 6});
    CHECK(natural_index(H, 2) == VL{3, 8});
    CHECK(natural_index(NumericalSemigroup(VL{5, 6, 14}), 0) == VL{1, 5, 7});
    CHECK(natural_index(NumericalSemigroup(VL{3, 7, 8}), 0) == VL{1, 4});
    CHECK(natural_index(NumericalSemigroup(VL{2, 3}), 0) == VL{1});
    CHECK(natural_index(NumericalSemigroup(VL{2, 5}), 0) == VL{1});
    CHECK(natural_index(NumericalSemigroup(VL{3, 4}), 0) == VL{1});
    for (long long k = 0; k < 8; ++k) {
        std::vector<long long> L = natural_index(H, k);
        REQUIRE_FALSE(L.empty());
        CHECK(L.front() == k + 1);
        for (size_t i = 0; i + 1 < L.size(); ++i) CHECK(L[i] < L[i + 1]);
    }
    CHECK_THROWS_AS(natural_index(H, 8), IndexOutOfRange);
}

TEST_CASE("bezout pair is minimal and exact") {
    auto [is, ir] = bezout_pair(3, 4);
    CHECK(4 * is - 3 * ir == 1);
    CHECK(is == 1);
    CHECK(ir == 1);
    auto [is2, ir2] = bezout_pair(5, 7);
    CHECK(7 * is2 - 5 * ir2 == 1);
    CHECK(is2 == 3);
    CHECK_THROWS_AS(bezout_pair(4, 6), NotCoprime);
}

TEST_CASE("dual weight sets split the gap data of the kernel degree") {
    {
        DualWeightSets dw = dual_weight_sets(NumericalSemigroup(VL{2, 3}), 3);
        CHECK(dw.Hp == VL{0});
        CHECK(dw.Hps == VL{2});
    }
    {
        DualWeightSets dw = dual_weight_sets(NumericalSemigroup(VL{2, 5}), 5);
        CHECK(dw.Hp == VL{0, 2});
        CHECK(dw.Hps == VL{4, 6});
    }
    {
        DualWeightSets dw = dual_weight_sets(NumericalSemigroup(VL{3, 4}), 8);
        CHECK(dw.Hp == VL{0, 3, 4});
        CHECK(dw.Hps == VL{6, 7, 10});
        /* the sets mirror each other: a + a* = 2 (d_h - r) pairwise */
        for (size_t i = 0; i < dw.Hp.size(); ++i)
            CHECK(dw.Hp[i] + dw.Hps[dw.Hp.size() - 1 - i] == 2 * (8 - 3));
    }
}
