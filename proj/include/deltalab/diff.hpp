#pragma once

#include <cstddef>

#include "deltalab/bitword.hpp"

namespace deltalab {

// d+1-block difference: bit i of the result is the mod-2 sum of bits
// i..i+d of the input. Consumes d bits of prefix; d = 0 is the identity.
// Throws insufficient_prefix_error when the word is shorter than d.
BitWord block_diff(std::size_t d, const BitWord& w);

// n-fold application of block_diff(d, .); the reference path.
BitWord iterate_diff_naive(std::size_t d, std::size_t n, const BitWord& w);

// The 2^m-th iterate in one pass: d+1 taps at stride 2^m.
BitWord diff_pow2(std::size_t d, std::size_t m, const BitWord& w);

// n-fold iterate via the binary digits of n, largest power first.
// Bit-identical to the naive path.
BitWord iterate_diff_fast(std::size_t d, std::size_t n, const BitWord& w);

// n-fold iterate as a direct convolution with row n of the order-d
// triangle mod 2: xor of the input shifted by every odd-entry column.
BitWord triangle_apply(std::size_t d, std::size_t n, const BitWord& w);

}  // namespace deltalab
