#include "deltalab/diff.hpp"

#include <bit>
#include <string>

#include "deltalab/errors.hpp"
#include "deltalab/pascal.hpp"

namespace deltalab {

namespace {

void require_prefix(std::size_t need, const BitWord& w, const char* op) {
    if (w.size() < need) {
        throw insufficient_prefix_error(std::string(op) + ": needs " + std::to_string(need) +
                                        " bits, have " + std::to_string(w.size()));
    }
}

// Overflow-safe d * n with a prefix check folded in.
std::size_t window_need(std::size_t d, std::size_t n, const BitWord& w, const char* op) {
    if (d != 0 && n > w.size() / d) {
        throw insufficient_prefix_error(std::string(op) + ": needs " + std::to_string(d) + "*" +
                                        std::to_string(n) + " bits, have " +
                                        std::to_string(w.size()));
    }
    return d * n;
}

}  // namespace

BitWord block_diff(std::size_t d, const BitWord& w) {
    require_prefix(d, w, "block_diff");
    if (d == 0) {
        return w;
    }
    BitWord acc = w ^ shift(w, 1);
    for (std::size_t j = 2; j <= d; ++j) {
        acc = acc ^ shift(w, j);
    }
    return acc;
}

BitWord iterate_diff_naive(std::size_t d, std::size_t n, const BitWord& w) {
    window_need(d, n, w, "iterate_diff_naive");
    BitWord cur = w;
    for (std::size_t i = 0; i < n; ++i) {
        cur = block_diff(d, cur);
    }
    return cur;
}

BitWord diff_pow2(std::size_t d, std::size_t m, const BitWord& w) {
    if (m >= 64) {
        throw insufficient_prefix_error("diff_pow2: stride 2^" + std::to_string(m) +
                                        " out of range");
    }
    const std::size_t stride = std::size_t{1} << m;
    window_need(d, stride, w, "diff_pow2");
    if (d == 0) {
        return w;
    }
    BitWord acc = w ^ shift(w, stride);
    for (std::size_t j = 2; j <= d; ++j) {
        acc = acc ^ shift(w, j * stride);
    }
    return acc;
}

BitWord iterate_diff_fast(std::size_t d, std::size_t n, const BitWord& w) {
    window_need(d, n, w, "iterate_diff_fast");
    BitWord cur = w;
    for (std::size_t bit = std::bit_width(n); bit-- > 0;) {
        if ((n >> bit) & 1u) {
            cur = diff_pow2(d, bit, cur);
        }
    }
    return cur;
}

BitWord triangle_apply(std::size_t d, std::size_t n, const BitWord& w) {
    window_need(d, n, w, "triangle_apply");
    const BitWord row = parity_row(d, n).bits;
    BitWord acc;
    bool first = true;
    auto words = row.payload();
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
        std::uint64_t word = words[wi];
        while (word != 0) {
            const std::size_t k = wi * 64 + static_cast<std::size_t>(std::countr_zero(word));
            if (first) {
                acc = shift(w, k);
                first = false;
            } else {
                acc = acc ^ shift(w, k);
            }
            word &= word - 1;
        }
    }
    return acc;
}

}  // namespace deltalab
