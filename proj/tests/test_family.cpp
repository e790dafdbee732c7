#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <random>

#include "mincode/subset_family.hpp"

using namespace mincode;

namespace {

std::uint32_t mask_of(std::initializer_list<int> elements) {
    std::uint32_t m = 0;
    for (int e : elements) m |= std::uint32_t{1} << (e - 1);
    return m;
}

std::uint32_t range_mask(int lo, int hi) { // elements lo..hi inclusive
    std::uint32_t m = 0;
    for (int e = lo; e <= hi; ++e) m |= std::uint32_t{1} << (e - 1);
    return m;
}

} // namespace

TEST_CASE("family_window_check") {
    SECTION("N=8: intersection 4 is the only admissible value") {
        SubsetFamily fam{8, {range_mask(1, 8), range_mask(5, 12)}};
        CHECK(family_window_check(fam));
        fam.rows[1] = range_mask(4, 11); // intersection 5
        CHECK_FALSE(family_window_check(fam));
        fam.rows[1] = range_mask(6, 13); // intersection 3
        CHECK_FALSE(family_window_check(fam));
    }
    SECTION("N=7: intersections 3 and 4 both pass") {
        CHECK(family_window_check({7, {range_mask(1, 7), range_mask(5, 11)}})); // inter 3
        CHECK(family_window_check({7, {range_mask(1, 7), range_mask(4, 10)}})); // inter 4
        CHECK_FALSE(family_window_check({7, {range_mask(1, 7), range_mask(3, 9)}})); // inter 5
    }
    SECTION("N=6: near-disjoint pair falls below the window") {
        // The ground set {1..11} cannot even hold two disjoint 6-subsets;
        // intersection 1 < (N-1)/2 already fails.
        CHECK_FALSE(family_window_check({6, {range_mask(1, 6), range_mask(6, 11)}}));
        // Intersection 0 fails too (undersized rows, the window is what matters).
        CHECK_FALSE(family_window_check({6, {mask_of({1, 2, 3}), mask_of({4, 5, 6})}}));
    }
    SECTION("complete family needs empty total symmetric difference") {
        // N=2 canonical solution {12, 23, 13}: total xor is empty.
        SubsetFamily good{2, {mask_of({1, 2}), mask_of({2, 3}), mask_of({1, 3})}};
        CHECK(family_window_check(good));
        SubsetFamily bad{2, {mask_of({1, 2}), mask_of({2, 3}), mask_of({1, 2})}};
        CHECK_FALSE(family_window_check(bad));
    }
}

TEST_CASE("abcd_split on the N=8 reference pair") {
    const std::uint32_t p1 = range_mask(1, 8);
    const std::uint32_t p2 = range_mask(5, 12);

    const AbcdSplit s1 = abcd_split(mask_of({1, 2, 5, 6, 9, 10, 13, 14}), p1, p2, 8);
    CHECK(s1.a == 2);
    CHECK(s1.b == 2);
    CHECK(s1.c == 2);
    CHECK(s1.d == 2);

    const AbcdSplit s2 = abcd_split(p1, p1, p2, 8);
    CHECK(s2.a == 4);
    CHECK(s2.b == 4);
    CHECK(s2.c == 0);
    CHECK(s2.d == 0);

    const AbcdSplit s3 = abcd_split(mask_of({3, 4, 5, 6, 11, 12, 13, 14}), p1, p2, 8);
    CHECK(s3.a == 2);
    CHECK(s3.b == 2);
    CHECK(s3.c == 2);
    CHECK(s3.d == 2);

    CHECK_THROWS_AS(abcd_split(p1, p1, range_mask(4, 11), 8), BlockMismatch);
}

TEST_CASE("abcd counts partition the subset") {
    std::mt19937 rng(5);
    const int N = 8;
    const std::uint32_t p1 = range_mask(1, N);
    const std::uint32_t p2 = range_mask(N / 2 + 1, N + N / 2);
    const std::uint32_t ground = (std::uint32_t{1} << (2 * N - 1)) - 1;
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t I = rng() & ground;
        const AbcdSplit s = abcd_split(I, p1, p2, N);
        CHECK(s.a + s.b + s.c + s.d == std::popcount(I));
    }
}

TEST_CASE("structure_check") {
    CHECK(structure_check({2, 2, 2, 2}));
    CHECK(structure_check({3, 2, 3, 2}));
    CHECK_FALSE(structure_check({4, 4, 0, 0})); // a != c
    CHECK_FALSE(structure_check({3, 1, 3, 1})); // |a-b| = 2
    CHECK_FALSE(structure_check({2, 2, 2, 3})); // b != d
}

TEST_CASE("weight_window_check") {
    SECTION("single row sits at the lower edge") {
        for (int N : {2, 4, 6}) {
            SubsetFamily empty{N, {}};
            CHECK(weight_window_check(empty, range_mask(1, N))); // weight 1 + N = N+1
        }
    }
    SECTION("completing row with empty total difference gives the all-rows codeword") {
        // N=2 family {12, 23} + {13}: full sum has weight 3 + 0 = N+1.
        SubsetFamily fam{2, {mask_of({1, 2}), mask_of({2, 3})}};
        CHECK(weight_window_check(fam, mask_of({1, 3})));
    }
    SECTION("five rows with symmetric difference of size 10 blow the cap") {
        // Weight 5 + 10 = 15 > 2N = 12.
        const SubsetFamily fam{6,
                               {mask_of({1, 2, 3, 4, 5, 6}),
                                mask_of({4, 5, 6, 7, 8, 9}),
                                mask_of({1, 2, 3, 4, 10, 11}),
                                mask_of({4, 5, 6, 9, 10, 11}),
                                mask_of({1, 2, 3, 4, 9, 10})}};
        std::uint32_t total = 0;
        for (std::uint32_t r : fam.rows) total ^= r;
        REQUIRE(std::popcount(total) == 10); // sanity: this is the S of size 10
        SubsetFamily first4{6, {fam.rows[0], fam.rows[1], fam.rows[2], fam.rows[3]}};
        CHECK_FALSE(weight_window_check(first4, fam.rows[4]));
    }
}

TEST_CASE("empty total symmetric difference iff all P-columns even") {
    std::mt19937 rng(17);
    const int N = 4;
    for (int trial = 0; trial < 300; ++trial) {
        SubsetFamily fam{N, {}};
        for (int r = 0; r < N + 1; ++r) fam.rows.push_back(rng() & fam.ground_mask());
        std::uint32_t total = 0;
        for (std::uint32_t r : fam.rows) total ^= r;
        bool all_even = true;
        for (int e = 0; e < 2 * N - 1; ++e) {
            int count = 0;
            for (std::uint32_t r : fam.rows) count += (r >> e) & 1;
            if (count % 2 != 0) all_even = false;
        }
        CHECK((total == 0) == all_even);
    }
}

TEST_CASE("assemble_generator") {
    SECTION("smallest instance") {
        const LinearCode code = assemble_generator({1, {mask_of({1}), mask_of({1})}});
        CHECK(code.n() == 3);
        CHECK(code.k() == 2);
        CHECK(code.generator() == std::vector<Row>{{1, 0, 1}, {0, 1, 1}});
    }
    SECTION("row weights and column parity") {
        const SubsetFamily fam{2, {mask_of({1, 2}), mask_of({2, 3}), mask_of({1, 3})}};
        const LinearCode code = assemble_generator(fam);
        CHECK(code.n() == 6);
        CHECK(code.k() == 3);
        for (const Row& row : code.generator()) {
            int w = 0;
            for (auto v : row) w += v;
            CHECK(w == fam.N + 1);
        }
        for (int c = code.k(); c < code.n(); ++c) {
            int w = 0;
            for (const Row& row : code.generator()) w += row[c];
            CHECK(w % 2 == 0);
        }
        CHECK(weight_profile(code).d_min == 3);
    }
    SECTION("incomplete family is rejected") {
        CHECK_THROWS_AS(assemble_generator({2, {mask_of({1, 2})}}), IncompleteFamily);
    }
}
