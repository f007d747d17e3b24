#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "deltalab/bignat.hpp"
#include "deltalab/bitword.hpp"
#include "deltalab/pascal.hpp"

using namespace deltalab;

namespace {

std::string row_text(const PascalRow& row) {
    std::string out;
    for (std::size_t k = 0; k < row.entries.size(); ++k) {
        if (k > 0) {
            out += " ";
        }
        out += row.entries[k].str();
    }
    return out;
}

// First min(d*n+1, window) parity bits of row n by running the d+1-term row
// recursion directly, bit by bit.
BitWord parity_recursion_oracle(std::size_t d, std::size_t n, std::size_t window) {
    std::vector<unsigned char> cur{1};
    for (std::size_t t = 1; t <= n; ++t) {
        const std::size_t len = std::min(d * t + 1, window);
        std::vector<unsigned char> next(len, 0);
        for (std::size_t k = 0; k < len; ++k) {
            unsigned char sum = 0;
            for (std::size_t i = 0; i <= d && i <= k; ++i) {
                if (k - i < cur.size()) {
                    sum ^= cur[k - i];
                }
            }
            next[k] = sum;
        }
        cur = std::move(next);
    }
    BitWord out;
    for (unsigned char bit : cur) {
        out.push_back(bit != 0);
    }
    return out;
}

// Square-and-multiply over the exposed GF(2) polynomial primitives.
BitWord poly_pow_oracle(std::size_t d, std::size_t n) {
    const BitWord base = BitWord::ones(d + 1);
    BitWord result = BitWord::from_string("1");
    for (std::size_t bit = 64; bit-- > 0;) {
        result = gf2_poly_square(result);
        if ((n >> bit) & 1u) {
            result = gf2_poly_mul(result, base);
        }
    }
    return result;
}

}  // namespace

TEST_CASE("BigNat basics") {
    CHECK(BigNat(0).str() == "0");
    CHECK(BigNat(1234567890123456789ull).str() == "1234567890123456789");
    CHECK(BigNat::from_decimal("340282366920938463463374607431768211456").str() ==
          "340282366920938463463374607431768211456");
    CHECK(BigNat::pow(3, 6).str() == "729");
    CHECK(BigNat::pow(5, 40).str() == BigNat::from_decimal("9094947017729282379150390625").str());
    CHECK(BigNat(7).odd());
    CHECK(!BigNat(8).odd());
    BigNat a(18446744073709551615ull);
    a += BigNat(1);
    CHECK(a.str() == "18446744073709551616");
}

TEST_CASE("exact rows of the order-2 triangle") {
    CHECK(row_text(pascal_row_exact(2, 0)) == "1");
    CHECK(row_text(pascal_row_exact(2, 1)) == "1 1 1");
    CHECK(row_text(pascal_row_exact(2, 2)) == "1 2 3 2 1");
    CHECK(row_text(pascal_row_exact(2, 3)) == "1 3 6 7 6 3 1");
    CHECK(row_text(pascal_row_exact(2, 4)) == "1 4 10 16 19 16 10 4 1");
    CHECK(row_text(pascal_row_exact(2, 5)) == "1 5 15 30 45 51 45 30 15 5 1");
    CHECK(row_text(pascal_row_exact(2, 6)) == "1 6 21 50 90 126 141 126 90 50 21 6 1");
}

TEST_CASE("order 1 is the binomial triangle") {
    CHECK(row_text(pascal_row_exact(1, 4)) == "1 4 6 4 1");
    CHECK(row_text(pascal_row_exact(1, 6)) == "1 6 15 20 15 6 1");
}

TEST_CASE("row symmetry and row sums") {
    for (std::size_t d = 1; d <= 4; ++d) {
        for (std::size_t n = 0; n <= 40; ++n) {
            const PascalRow row = pascal_row_exact(d, n);
            REQUIRE(row.entries.size() == d * n + 1);
            BigNat sum;
            for (std::size_t k = 0; k < row.entries.size(); ++k) {
                CHECK(row.entries[k] == row.entries[d * n - k]);
                sum += row.entries[k];
            }
            CHECK(sum == BigNat::pow(static_cast<std::uint32_t>(d + 1), n));
        }
    }
}

TEST_CASE("row-length cap guards resource use") {
    CHECK_THROWS_AS(pascal_row_exact(2, 10, 5), std::length_error);
    CHECK_THROWS_AS(parity_row(3, kRowLengthCap, kRowLengthCap), std::length_error);
}

TEST_CASE("parity row examples") {
    CHECK(parity_row(2, 4).bits.str() == "100010001");
    CHECK(parity_row(2, 0).bits.str() == "1");
    CHECK(parity_row(3, 1).bits.str() == "1111");

    const ParityRow big = parity_row(1, 1 << 10);
    REQUIRE(big.bits.size() == (1 << 10) + 1);
    CHECK(big.bits.get(0));
    CHECK(big.bits.get(1 << 10));
    CHECK(popcount(big.bits) == 2);
}

TEST_CASE("parity rows equal exact rows mod 2") {
    for (std::size_t d = 1; d <= 3; ++d) {
        for (std::size_t n = 0; n <= 64; ++n) {
            const PascalRow exact = pascal_row_exact(d, n);
            const ParityRow parity = parity_row(d, n);
            REQUIRE(parity.bits.size() == exact.entries.size());
            for (std::size_t k = 0; k < exact.entries.size(); ++k) {
                CHECK(parity.bits.get(k) == exact.entries[k].odd());
            }
        }
    }
}

TEST_CASE("power-of-two rows: frobenius, square-and-multiply, recursion agree") {
    const std::size_t window = 4096;
    for (std::size_t d = 1; d <= 3; ++d) {
        for (std::size_t m = 0; m <= 12; ++m) {
            const std::size_t n = std::size_t{1} << m;
            const BitWord fast = truncate(parity_row(d, n).bits, window);
            const BitWord slow = truncate(poly_pow_oracle(d, n), window);
            const BitWord rec = parity_recursion_oracle(d, n, window);
            CHECK(fast == slow);
            CHECK(fast == rec);
        }
    }
}

TEST_CASE("power-of-two rows have d+1 spread-out ones") {
    for (std::size_t d = 1; d <= 3; ++d) {
        for (std::size_t m = 0; m <= 10; ++m) {
            const std::size_t n = std::size_t{1} << m;
            const BitWord bits = parity_row(d, n).bits;
            REQUIRE(bits.size() == d * n + 1);
            CHECK(popcount(bits) == d + 1);
            for (std::size_t j = 0; j <= d; ++j) {
                CHECK(bits.get(j * n));
            }
        }
    }
}

TEST_CASE("path counting matches the row recursion") {
    CHECK(path_count_oracle(2, 2, 2).str() == "3");
    for (std::size_t k = 0; k <= 3; ++k) {
        CHECK(path_count_oracle(3, 1, k) == BigNat(1));
    }
    CHECK(path_count_oracle(3, 5, 7) == pascal_row_exact(3, 5).entries[7]);

    for (std::size_t d = 1; d <= 3; ++d) {
        for (std::size_t n = 0; n <= 10; ++n) {
            const PascalRow row = pascal_row_exact(d, n);
            for (std::size_t k = 0; k <= d * n; ++k) {
                CHECK(path_count_oracle(d, n, k) == row.entries[k]);
            }
        }
    }

    CHECK_THROWS_AS(path_count_oracle(1, 65, 0), std::length_error);
    CHECK_THROWS_AS(path_count_oracle(2, 3, 7), std::out_of_range);
}
