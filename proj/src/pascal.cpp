#include "deltalab/pascal.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace deltalab {

namespace {

void check_row_cap(std::size_t d, std::size_t n, std::size_t row_cap) {
    // d*n + 1 without overflow
    if (d != 0 && n > (row_cap - 1) / d) {
        throw std::length_error("triangle row d=" + std::to_string(d) + " n=" + std::to_string(n) +
                                " exceeds row-length cap " + std::to_string(row_cap));
    }
}

// dest ^= src * x^k
void xor_shifted_into(std::vector<std::uint64_t>& dest, const BitWord& src, std::size_t k) {
    auto words = src.payload();
    const std::size_t s = k >> 6;
    const std::size_t b = k & 63;
    for (std::size_t i = 0; i < words.size(); ++i) {
        dest[s + i] ^= words[i] << b;
        if (b != 0 && s + i + 1 < dest.size()) {
            dest[s + i + 1] ^= words[i] >> (64 - b);
        }
    }
}

}  // namespace

BitWord gf2_poly_mul(const BitWord& a, const BitWord& b) {
    if (a.empty() || b.empty()) {
        return BitWord{};
    }
    const std::size_t len = a.size() + b.size() - 1;
    std::vector<std::uint64_t> acc((len + 63) / 64 + 1, 0);
    auto pb = b.payload();
    for (std::size_t wi = 0; wi < pb.size(); ++wi) {
        std::uint64_t word = pb[wi];
        while (word != 0) {
            const std::size_t k = wi * 64 + static_cast<std::size_t>(std::countr_zero(word));
            xor_shifted_into(acc, a, k);
            word &= word - 1;
        }
    }
    return BitWord::from_words(std::move(acc), len);
}

BitWord gf2_poly_square(const BitWord& a) {
    if (a.empty()) {
        return BitWord{};
    }
    BitWord out = BitWord::zeros(2 * a.size() - 1);
    auto words = a.payload();
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
        std::uint64_t word = words[wi];
        while (word != 0) {
            const std::size_t i = wi * 64 + static_cast<std::size_t>(std::countr_zero(word));
            out.set(2 * i, true);
            word &= word - 1;
        }
    }
    return out;
}

PascalRow pascal_row_exact(std::size_t d, std::size_t n, std::size_t row_cap) {
    check_row_cap(d, n, row_cap);
    std::vector<BigNat> cur;
    cur.emplace_back(1);
    for (std::size_t t = 1; t <= n; ++t) {
        std::vector<BigNat> next(d * t + 1);
        const std::size_t prev_top = d * (t - 1);
        for (std::size_t k = 0; k < next.size(); ++k) {
            const std::size_t lo = k > d ? k - d : 0;
            const std::size_t hi = std::min(k, prev_top);
            for (std::size_t j = lo; j <= hi; ++j) {
                next[k] += cur[j];
            }
        }
        cur = std::move(next);
    }
    return PascalRow{d, n, std::move(cur)};
}

ParityRow parity_row(std::size_t d, std::size_t n, std::size_t row_cap) {
    check_row_cap(d, n, row_cap);
    if (n == 0) {
        return ParityRow{d, n, BitWord::from_string("1")};
    }
    if (std::has_single_bit(n)) {
        // Frobenius: q(x)^(2^m) = q(x^(2^m)) over GF(2), so the row is
        // d+1 ones spaced n apart.
        BitWord bits = BitWord::zeros(d * n + 1);
        for (std::size_t j = 0; j <= d; ++j) {
            bits.set(j * n, true);
        }
        return ParityRow{d, n, bits};
    }
    const BitWord base = BitWord::ones(d + 1);
    BitWord result = BitWord::from_string("1");
    for (std::size_t bit = std::bit_width(n); bit-- > 0;) {
        result = gf2_poly_square(result);
        if ((n >> bit) & 1u) {
            result = gf2_poly_mul(result, base);
        }
    }
    return ParityRow{d, n, std::move(result)};
}

BigNat path_count_oracle(std::size_t d, std::size_t n, std::size_t k, std::size_t max_rows) {
    if (n > max_rows) {
        throw std::length_error("path_count_oracle: n=" + std::to_string(n) +
                                " beyond oracle budget " + std::to_string(max_rows));
    }
    if (k > d * n) {
        throw std::out_of_range("path_count_oracle: column " + std::to_string(k) +
                                " outside row of width " + std::to_string(d * n + 1));
    }
    std::vector<BigNat> layer;
    layer.emplace_back(1);
    for (std::size_t t = 0; t < n; ++t) {
        std::vector<BigNat> next(d * (t + 1) + 1);
        for (std::size_t j = 0; j < layer.size(); ++j) {
            if (layer[j].is_zero()) {
                continue;
            }
            for (std::size_t i = 0; i <= d; ++i) {
                next[j + i] += layer[j];
            }
        }
        layer = std::move(next);
    }
    return layer.at(k);
}

}  // namespace deltalab
