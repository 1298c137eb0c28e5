#include "oracles.hpp"

#include "bsym/error.hpp"
#include "bsym/metric.hpp"

#include <doctest.h>

#include <random>

using namespace bsym;

namespace {

Word random_word(std::mt19937_64& rng, std::uint32_t q, std::size_t n) {
    std::vector<Symbol> s(n);
    std::uniform_int_distribution<Symbol> pick(0, q - 1);
    for (auto& x : s) x = pick(rng);
    return Word(q, s);
}

}  // namespace

TEST_CASE("windows and weights of a small word") {
    const Word y(2, {1, 0, 0, 1, 0});
    const auto pi = bsym_expand(y, 2);
    REQUIRE(pi.size() == 5);
    CHECK(pi[0] == Window{1, 0});
    CHECK(pi[4] == Window{0, 1});
    CHECK(hamming_weight(y) == 2);
    CHECK(bsym_weight(y, 1) == 2);
    CHECK(bsym_weight(y, 2) == 4);
    CHECK(bsym_weight(y, 3) == 5);
    CHECK(bsym_weight(Word::zero(3, 4), 2) == 0);
}

TEST_CASE("index round trip puts the first symbol highest") {
    const Word w = Word::from_index(3, 4, 5);
    CHECK(w == Word(3, {0, 0, 1, 2}));
    CHECK(w.to_index() == 5);
    CHECK_THROWS_AS(Word::from_index(2, 3, 8), ParameterError);
    CHECK_THROWS_AS(Word(2, {0, 2}), ParameterError);
}

TEST_CASE("window encoding turns b-symbol distance into Hamming distance") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 500; ++t) {
        const std::uint32_t q = 2 + rng() % 3;
        const std::size_t n = 2 + rng() % 8, b = 1 + rng() % n;
        const Word x = random_word(rng, q, n), y = random_word(rng, q, n);
        CHECK(hamming_distance(window_encode(x, b), window_encode(y, b)) == bsym_distance(x, y, b));
    }
    CHECK(window_encode(Word(2, {1, 1, 0}), 2) == Word(4, {3, 2, 1}));
    CHECK_THROWS_AS(window_encode(Word(2, {1, 0}), 3), UnsupportedParametersError);
}

TEST_CASE("mismatched words are rejected") {
    CHECK_THROWS_AS(bsym_distance(Word(2, {0, 1}), Word(2, {0, 1, 1}), 1), DimensionError);
    CHECK_THROWS_AS(bsym_distance(Word(2, {0, 1}), Word(3, {0, 1}), 1), DimensionError);
    CHECK_THROWS_AS(bsym_weight(Word(2, {0, 1}), 0), ParameterError);
}

TEST_CASE("exhaustive metric properties for n <= 5") {
    std::size_t violations = 0;
    for (std::uint32_t q : {2u, 3u}) {
        for (std::size_t n = 1; n <= (q == 2 ? 5u : 4u); ++n) {
            std::uint64_t total = 1;
            for (std::size_t i = 0; i < n; ++i) total *= q;
            for (std::size_t b = 1; b <= n; ++b) {
                for (std::uint64_t i = 0; i < total; ++i) {
                    const Word x = Word::from_index(q, n, i);
                    const std::size_t wx = bsym_weight(x, b);
                    // Sandwich: w_H <= w_b <= min(n, b w_H), and w_b >= b when x != 0 (b <= n).
                    const std::size_t wh = hamming_weight(x);
                    if (wh > wx || wx > std::min(n, b * wh)) ++violations;
                    if (!x.is_zero() && wx < b) ++violations;
                    if (wx != oracle::weight(oracle::symbols(x), b)) ++violations;
                    for (std::uint64_t j = 0; j < total; ++j) {
                        const Word y = Word::from_index(q, n, j);
                        const std::size_t dxy = bsym_distance(x, y, b);
                        if (dxy != bsym_distance(y, x, b)) ++violations;
                        if ((dxy == 0) != (i == j)) ++violations;
                        if (dxy != bsym_weight(x - y, b)) ++violations;
                        if (b == 1 && dxy != hamming_distance(x, y)) ++violations;
                        for (std::uint64_t k = 0; k < total; k += 3) {
                            const Word z = Word::from_index(q, n, k);
                            if (dxy > bsym_distance(x, z, b) + bsym_distance(z, y, b)) ++violations;
                        }
                    }
                }
            }
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("randomized metric properties for n <= 12") {
    std::mt19937_64 rng(20261015);
    std::size_t violations = 0, cases = 0;
    for (; cases < 20000; ++cases) {
        const std::uint32_t q = 2 + rng() % 4;
        const std::size_t n = 1 + rng() % 12, b = 1 + rng() % n;
        const Word x = random_word(rng, q, n), y = random_word(rng, q, n), z = random_word(rng, q, n);
        const std::size_t dxy = bsym_distance(x, y, b);
        if (dxy != oracle::distance(oracle::symbols(x), oracle::symbols(y), b)) ++violations;
        if (dxy > bsym_distance(x, z, b) + bsym_distance(z, y, b)) ++violations;
        if (dxy != bsym_distance(x + z, y + z, b)) ++violations;
        const std::size_t k = rng() % n;
        if (dxy != bsym_distance(x.rotated(k), y.rotated(k), b)) ++violations;
        if (x != y && dxy < b) ++violations;
        const std::size_t wh = hamming_distance(x, y);
        if (wh > dxy || dxy > std::min(n, b * wh)) ++violations;
    }
    CHECK(cases >= 10000);
    CHECK(violations == 0);
}

TEST_CASE("distance distribution and enumerator") {
    Code c(2, 4);
    c.insert(Word(2, {0, 0, 0, 0}));
    c.insert(Word(2, {1, 1, 0, 0}));
    c.insert(Word(2, {0, 0, 1, 1}));
    const auto dist = distance_distribution(c, 2);
    REQUIRE(dist.entries.size() == 5);
    CHECK(dist.entries[0] == 1);
    CHECK(dist.entries[3] == Rational(4, 3));
    CHECK(dist.entries[4] == Rational(2, 3));
    Rational total = 0;
    for (const auto& e : dist.entries) total += e;
    CHECK(total == 3);
    CHECK(min_bsym_distance(c, 2) == 3);

    const auto en = weight_enumerator(c, 2);
    CHECK(en.coefficients == std::vector<std::uint64_t>{1, 0, 0, 2, 0});
    CHECK(en.metric == EnumeratorMetric::BSymbol);
    CHECK(weight_enumerator(c, 1).metric == EnumeratorMetric::Hamming);

    CHECK_THROWS_AS(distance_distribution(Code(2, 3), 1), EmptyCodeError);
    Code single(2, 3);
    single.insert(Word(2, {1, 0, 1}));
    CHECK_THROWS_AS(min_bsym_distance(single, 2), UndefinedDistanceError);
    CHECK_THROWS_AS(single.insert(Word(2, {1, 0, 1})), ParameterError);
    CHECK_THROWS_AS(single.insert(Word(2, {1, 0})), DimensionError);
}

TEST_CASE("boundary window groups on a hand-checked word") {
    // n = 6, l = 3, b = 3, z = 0 0 0 1 0 1
    const Word z(2, {0, 0, 0, 1, 0, 1});
    const auto blocks = boundary_blocks(z, 3, 3);
    CHECK(blocks[0] == 2);  // (z2 z3 z4), (z3 z4 z5)
    CHECK(blocks[1] == 2);  // (z5 z6 z1), (z6 z1 z2)
    CHECK(blocks[2] == 0);  // (z2 z3 z1), (z3 z1 z2)
    CHECK(blocks[3] == 2);  // (z5 z6 z4), (z6 z4 z5)
    CHECK_THROWS_AS(boundary_blocks(z, 2, 3), ParameterError);
}
