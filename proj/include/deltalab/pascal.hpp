#pragma once

#include <cstddef>
#include <vector>

#include "deltalab/bignat.hpp"
#include "deltalab/bitword.hpp"

namespace deltalab {

// Guard against runaway rows; d*n+1 entries must fit under this.
inline constexpr std::size_t kRowLengthCap = std::size_t{1} << 22;

// Row n of the order-d triangle: each entry is the sum of the d+1 entries
// ending at the same column in the previous row. d = 1 is Pascal's triangle.
struct PascalRow {
    std::size_t degree = 1;
    std::size_t index = 0;
    std::vector<BigNat> entries;  // d*n + 1 values
};

// Same row reduced mod 2, as packed bits: the coefficient vector of
// (1 + x + ... + x^d)^n over GF(2).
struct ParityRow {
    std::size_t degree = 1;
    std::size_t index = 0;
    BitWord bits;  // length d*n + 1
};

PascalRow pascal_row_exact(std::size_t d, std::size_t n, std::size_t row_cap = kRowLengthCap);

ParityRow parity_row(std::size_t d, std::size_t n, std::size_t row_cap = kRowLengthCap);

// Number of paths from the root <0,0> to <n,k> in the layered graph whose
// edges go from <t,j> to <t+1,j+i> for 0 <= i <= d. Counted by forward edge
// propagation, deliberately distinct from the row recursion it cross-checks.
BigNat path_count_oracle(std::size_t d, std::size_t n, std::size_t k, std::size_t max_rows = 64);

// Carry-less (GF(2)) polynomial arithmetic on packed coefficient vectors;
// bit i is the coefficient of x^i.
BitWord gf2_poly_mul(const BitWord& a, const BitWord& b);
BitWord gf2_poly_square(const BitWord& a);

}  // namespace deltalab
