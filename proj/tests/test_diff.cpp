#include <doctest.h>

#include <bit>
#include <random>

#include "deltalab/diff.hpp"
#include "deltalab/errors.hpp"
#include "deltalab/orbit.hpp"
#include "deltalab/stream.hpp"

using namespace deltalab;

namespace {

const char* kMorse32 = "01101001100101101001011001101001";
const char* kPeriodDoubling31 = "1011101010111011101110101011101";

BitWord random_word(std::mt19937& rng, std::size_t len) {
    BitWord w;
    for (std::size_t i = 0; i < len; ++i) {
        w.push_back(rng() & 1u);
    }
    return w;
}

// Positionwise window-parity reference.
BitWord block_diff_oracle(std::size_t d, const BitWord& w) {
    BitWord out;
    for (std::size_t i = 0; i + d < w.size(); ++i) {
        bool sum = false;
        for (std::size_t j = 0; j <= d; ++j) {
            sum = (sum != w.get(i + j));
        }
        out.push_back(sum);
    }
    return out;
}

}  // namespace

TEST_CASE("block_diff maps thue-morse to period-doubling") {
    const BitWord m = BitWord::from_string(kMorse32);
    CHECK(block_diff(1, m).str() == kPeriodDoubling31);
    CHECK(first_disagreement(block_diff(1, materialize(named("thue-morse"), 32)),
                             BitWord::from_string(kPeriodDoubling31)) == std::nullopt);
}

TEST_CASE("block_diff base cases and oracle") {
    const BitWord w = BitWord::from_string("110010");
    CHECK(block_diff(0, w) == w);

    // The first 9 sierpinski bits under the 3-term window.
    const BitWord s9 = BitWord::from_string("110000111");
    CHECK(block_diff(2, s9) == block_diff_oracle(2, s9));
    CHECK(block_diff(2, s9).str() == "0100101");

    std::mt19937 rng(211);
    for (std::size_t d = 0; d <= 5; ++d) {
        const BitWord r = random_word(rng, 300 + rng() % 100);
        CHECK(block_diff(d, r) == block_diff_oracle(d, r));
    }

    CHECK(block_diff(4, BitWord::from_string("1011")).empty());
    CHECK_THROWS_AS(block_diff(5, BitWord::from_string("1011")), insufficient_prefix_error);
}

TEST_CASE("iterated differences and the shared sierpinski/mephisto prefix") {
    std::mt19937 rng(223);
    const BitWord w = random_word(rng, 64);
    CHECK(iterate_diff_naive(1, 0, w) == w);

    const BitWord meph = materialize(named("mephisto"), 27);
    const BitWord third = iterate_diff_naive(1, 3, meph);
    REQUIRE(third.size() == 24);
    CHECK(truncate(third, 16).str() == "1100110111100111");

    const BitWord sier = materialize(named("sierpinski"), 45);
    const BitWord second = iterate_diff_naive(1, 2, sier);
    CHECK(truncate(second, 16).str() == "1100110111100111");

    CHECK_THROWS_AS(iterate_diff_naive(2, 3, BitWord::from_string("10101")),
                    insufficient_prefix_error);
}

TEST_CASE("diff_pow2") {
    std::mt19937 rng(227);
    const BitWord w = random_word(rng, 200);
    CHECK(diff_pow2(1, 0, w) == block_diff(1, w));

    // The point-stream window: one stride-8 pass is the 8th iterate, which
    // carries the point straight down; seven naive steps fill the triangle.
    const BitWord delta7 = materialize(point(7), 16);
    CHECK(diff_pow2(1, 3, delta7) == iterate_diff_naive(1, 8, delta7));
    CHECK(diff_pow2(1, 3, delta7).str() == "00000001");
    CHECK(iterate_diff_naive(1, 7, delta7).str() == "111111110");

    const BitWord big = random_word(rng, 512);
    CHECK(diff_pow2(2, 2, big) == iterate_diff_naive(2, 4, big));
    CHECK(diff_pow2(1, 9, big).empty());  // window consumed exactly
    CHECK_THROWS_AS(diff_pow2(1, 10, big), insufficient_prefix_error);
}

TEST_CASE("fast iterate equals naive iterate") {
    std::mt19937 rng(229);
    for (std::size_t d = 1; d <= 3; ++d) {
        const BitWord w = random_word(rng, 256);
        for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{5}, std::size_t{6},
                              std::size_t{13}, std::size_t{31}}) {
            if (d * n <= w.size()) {
                CHECK(iterate_diff_fast(d, n, w) == iterate_diff_naive(d, n, w));
            }
        }
        CHECK(iterate_diff_fast(d, 1, w) == block_diff(d, w));
    }
}

TEST_CASE("triangle_apply") {
    std::mt19937 rng(233);
    const BitWord w = random_word(rng, 128);

    // Row 4 of the order-2 triangle is odd exactly at columns 0, 4, 8.
    const BitWord taps = (w ^ shift(w, 4)) ^ shift(w, 8);
    CHECK(triangle_apply(2, 4, w) == taps);

    CHECK(triangle_apply(3, 0, w) == w);
    CHECK(triangle_apply(0, 5, w) == w);
    CHECK(triangle_apply(1, 6, w) == iterate_diff_naive(1, 6, w));
}

TEST_CASE("four-way operator agreement") {
    std::mt19937 rng(239);
    for (int round = 0; round < 10; ++round) {
        const BitWord w = random_word(rng, 512);
        for (std::size_t d = 1; d <= 3; ++d) {
            BitWord cur = w;
            for (std::size_t n = 1; n <= 20; ++n) {
                cur = block_diff(d, cur);
                CHECK(iterate_diff_fast(d, n, w) == cur);
                CHECK(triangle_apply(d, n, w) == cur);
                if ((n & (n - 1)) == 0) {
                    CHECK(diff_pow2(d, static_cast<std::size_t>(std::countr_zero(n)), w) == cur);
                }
            }
        }
    }
}

TEST_CASE("2^m - 1 iterations collapse to one wide block difference") {
    std::mt19937 rng(241);
    for (std::size_t m = 0; m <= 4; ++m) {
        const std::size_t n = (std::size_t{1} << m) - 1;
        const BitWord w = random_word(rng, 512);
        CHECK(iterate_diff_naive(1, n, w) == block_diff(n, w));
    }
}

TEST_CASE("linearity") {
    std::mt19937 rng(251);
    for (std::size_t d = 0; d <= 3; ++d) {
        const BitWord a = random_word(rng, 400);
        const BitWord b = random_word(rng, 400);
        CHECK(block_diff(d, a ^ b) == (block_diff(d, a) ^ block_diff(d, b)));
    }
}

TEST_CASE("even and odd iterates of thue-morse decompose as zips") {
    const std::size_t window = 512;
    const BitWord m = materialize(named("thue-morse"), 2 * window + 64);
    for (std::size_t n = 1; n <= 8; ++n) {
        const BitWord even = truncate(iterate_diff_naive(1, 2 * n, m), window);
        const BitWord half = iterate_diff_naive(1, n, m);
        CHECK(even == truncate(zip_words(1, 1, half, half), window));

        const BitWord odd = truncate(iterate_diff_naive(1, 2 * n + 1, m), window);
        const BitWord next = iterate_diff_naive(1, n + 1, m);
        CHECK(odd == truncate(zip_words(1, 1, BitWord::zeros(window), next), window));
    }
}

TEST_CASE("orbit matrices") {
    const OrbitMatrix single = build_orbit(named("fibonacci"), 1, 1, 24);
    CHECK(single.row(0) == materialize(named("fibonacci"), 24));

    const OrbitMatrix morse = build_orbit(named("thue-morse"), 1, 400, 400);
    CHECK(morse.rows() == 400);
    CHECK(morse.cols() == 400);
    CHECK(morse.row(0) == materialize(named("thue-morse"), 400));
    // Row consistency: each cell is the window sum of the row above.
    std::mt19937 rng(257);
    for (int probe = 0; probe < 200; ++probe) {
        const std::size_t r = rng() % 399;
        const std::size_t c = rng() % 398;
        CHECK(morse.cell(r + 1, c) == (morse.cell(r, c) != morse.cell(r, c + 1)));
    }

    const OrbitMatrix kai = build_orbit(point(511), 1, 512, 512);
    CHECK(kai.row(0) == materialize(point(511), 512));
    CHECK(kai.row(511) == BitWord::ones(512));

    const OrbitMatrix wide = build_orbit(named("mephisto"), 2, 20, 40);
    for (std::size_t r = 0; r + 1 < wide.rows(); ++r) {
        for (std::size_t c = 0; c + 2 < wide.cols(); c += 3) {
            CHECK(wide.cell(r + 1, c) ==
                  (wide.cell(r, c) != (wide.cell(r, c + 1) != wide.cell(r, c + 2))));
        }
    }

    CHECK_THROWS_AS(build_orbit(named("thue-morse"), 1, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(morse.cell(0, 400), std::out_of_range);
}
