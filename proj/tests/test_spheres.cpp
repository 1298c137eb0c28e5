#include "oracles.hpp"

#include "bsym/error.hpp"
#include "bsym/spheres.hpp"

#include <doctest.h>

using namespace bsym;

TEST_CASE("published ball sizes") {
    CHECK(ball_size(11, 4, 2, 3) == 23);
    CHECK(ball_size(11, 4, 2, 2) == 78);
    CHECK(sphere_size(11, 3, 2, 3) == 11);
    CHECK(sphere_size(11, 4, 2, 3) == 11);
    CHECK(ball_size(10, 7, 2, 3) == 186);
}

TEST_CASE("radius and length conventions") {
    CHECK(sphere_size(5, 6, 2, 2) == 0);
    CHECK(ball_size(5, 9, 3, 2) == 243);
    CHECK(ball_size(4, 0, 5, 3) == 1);
    // Shorter than the window: every nonzero word has full weight n.
    CHECK(sphere_size(2, 2, 3, 3) == 8);
    CHECK(sphere_size(2, 1, 3, 3) == 0);
    CHECK(ball_size(1, 1, 2, 3) == 2);
    CHECK(ball_size(2, 1, 2, 3) == 1);
    CHECK_THROWS_AS(sphere_table(2, kMaxSphereWindow + 1, 20), CapacityError);
}

TEST_CASE("b = 1 gives Hamming spheres") {
    for (std::uint32_t q : {2u, 3u, 5u})
        for (std::size_t n = 1; n <= 9; ++n)
            for (std::size_t r = 0; r <= n; ++r)
                CHECK(sphere_size(n, r, q, 1) ==
                      binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(r)) * ipow(q - 1, r));
}

TEST_CASE("transfer-matrix spheres agree with word enumeration on small spaces") {
    for (std::uint32_t q : {2u, 3u})
        for (std::size_t b = 1; b <= 4; ++b)
            for (std::size_t n = 1; n <= (q == 2 ? 10u : 6u); ++n) {
                const auto expected = oracle::spheres_by_words(q, b, n);
                const auto table = sphere_table(q, b, n);
                CHECK(table->spheres == expected);
            }
}

TEST_CASE("spheres sum to the space and balls are prefix sums") {
    for (std::size_t n = 1; n <= 16; ++n) {
        const auto t = sphere_table(4, 3, n);
        BigInt sum = 0;
        for (std::size_t r = 0; r <= n; ++r) {
            sum += t->spheres[r];
            CHECK(t->balls[r] == sum);
        }
        CHECK(sum == ipow(4, n));
    }
}
