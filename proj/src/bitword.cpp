#include "deltalab/bitword.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace deltalab {

void BitWord::clamp() noexcept {
    words_.resize(word_count(len_));
    const std::size_t rem = len_ & 63;
    if (rem != 0) {
        words_.back() &= ~std::uint64_t{0} >> (64 - rem);
    }
}

BitWord BitWord::zeros(std::size_t n) {
    BitWord w;
    w.len_ = n;
    w.words_.assign(word_count(n), 0);
    return w;
}

BitWord BitWord::ones(std::size_t n) {
    BitWord w;
    w.len_ = n;
    w.words_.assign(word_count(n), ~std::uint64_t{0});
    w.clamp();
    return w;
}

BitWord BitWord::from_words(std::vector<std::uint64_t> words, std::size_t len) {
    BitWord w;
    w.len_ = len;
    w.words_ = std::move(words);
    w.words_.resize(word_count(len), 0);
    w.clamp();
    return w;
}

BitWord BitWord::from_string(std::string_view text) {
    BitWord w = zeros(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            w.words_[i >> 6] |= std::uint64_t{1} << (i & 63);
        } else if (text[i] != '0') {
            throw std::invalid_argument("BitWord: expected '0' or '1', got '" +
                                        std::string(1, text[i]) + "'");
        }
    }
    return w;
}

bool BitWord::get(std::size_t i) const {
    if (i >= len_) {
        throw std::out_of_range("BitWord::get: index " + std::to_string(i) +
                                " >= length " + std::to_string(len_));
    }
    return (*this)[i];
}

void BitWord::set(std::size_t i, bool bit) {
    if (i >= len_) {
        throw std::out_of_range("BitWord::set: index " + std::to_string(i) +
                                " >= length " + std::to_string(len_));
    }
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (bit) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

void BitWord::push_back(bool bit) {
    if ((len_ & 63) == 0) {
        words_.push_back(0);
    }
    if (bit) {
        words_[len_ >> 6] |= std::uint64_t{1} << (len_ & 63);
    }
    ++len_;
}

void BitWord::append(const BitWord& tail) {
    if (tail.len_ == 0) {
        return;
    }
    const std::size_t off = len_ & 63;
    const std::size_t base = len_ >> 6;
    words_.resize(word_count(len_ + tail.len_), 0);
    if (off == 0) {
        std::copy(tail.words_.begin(), tail.words_.end(), words_.begin() + base);
    } else {
        for (std::size_t i = 0; i < tail.words_.size(); ++i) {
            words_[base + i] |= tail.words_[i] << off;
            if (base + i + 1 < words_.size()) {
                words_[base + i + 1] = tail.words_[i] >> (64 - off);
            }
        }
    }
    len_ += tail.len_;
    clamp();
}

std::string BitWord::str() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
        if ((*this)[i]) {
            s[i] = '1';
        }
    }
    return s;
}

BitWord operator^(const BitWord& a, const BitWord& b) {
    const BitWord& shorter = a.size() <= b.size() ? a : b;
    const BitWord& longer = a.size() <= b.size() ? b : a;
    BitWord r = shorter;
    for (std::size_t i = 0; i < r.words_.size(); ++i) {
        r.words_[i] ^= longer.words_[i];
    }
    r.clamp();
    return r;
}

BitWord invert(const BitWord& w) {
    BitWord r = w;
    for (auto& word : r.words_) {
        word = ~word;
    }
    r.clamp();
    return r;
}

BitWord shift(const BitWord& w, std::size_t k) {
    if (k > w.size()) {
        throw std::out_of_range("shift: drop count " + std::to_string(k) + " > length " +
                                std::to_string(w.size()));
    }
    BitWord r;
    r.len_ = w.size() - k;
    r.words_.resize(BitWord::word_count(r.len_));
    const std::size_t s = k >> 6;
    const std::size_t b = k & 63;
    for (std::size_t i = 0; i < r.words_.size(); ++i) {
        std::uint64_t lo = w.words_[s + i] >> b;
        std::uint64_t hi =
            (b != 0 && s + i + 1 < w.words_.size()) ? w.words_[s + i + 1] << (64 - b) : 0;
        r.words_[i] = lo | hi;
    }
    r.clamp();
    return r;
}

BitWord truncate(const BitWord& w, std::size_t n) {
    if (n >= w.size()) {
        return w;
    }
    BitWord r;
    r.len_ = n;
    r.words_.assign(w.words_.begin(), w.words_.begin() + BitWord::word_count(n));
    r.clamp();
    return r;
}

std::optional<std::size_t> first_disagreement(const BitWord& a, const BitWord& b) {
    const std::size_t n = std::min(a.size(), b.size());
    auto pa = a.payload();
    auto pb = b.payload();
    const std::size_t full = n / 64;
    for (std::size_t i = 0; i < full; ++i) {
        const std::uint64_t x = pa[i] ^ pb[i];
        if (x != 0) {
            return i * 64 + static_cast<std::size_t>(std::countr_zero(x));
        }
    }
    if (n & 63) {
        const std::uint64_t mask = ~std::uint64_t{0} >> (64 - (n & 63));
        const std::uint64_t x = (pa[full] ^ pb[full]) & mask;
        if (x != 0) {
            return full * 64 + static_cast<std::size_t>(std::countr_zero(x));
        }
    }
    return std::nullopt;
}

std::size_t popcount(const BitWord& w) {
    std::size_t total = 0;
    for (std::uint64_t word : w.payload()) {
        total += static_cast<std::size_t>(std::popcount(word));
    }
    return total;
}

BitWord zip_words(std::size_t n, std::size_t m, const BitWord& a, const BitWord& b) {
    if (n == 0 || m == 0) {
        throw std::invalid_argument("zip_words: block sizes must be >= 1");
    }
    BitWord out;
    std::size_t ca = 0;
    std::size_t cb = 0;
    for (;;) {
        const std::size_t take = std::min(n, a.size() - std::min(ca, a.size()));
        for (std::size_t i = 0; i < take; ++i) {
            out.push_back(a[ca + i]);
        }
        ca += take;
        if (take < n) break;
        const std::size_t give = std::min(m, b.size() - std::min(cb, b.size()));
        for (std::size_t i = 0; i < give; ++i) {
            out.push_back(b[cb + i]);
        }
        cb += give;
        if (give < m) break;
    }
    return out;
}

bool canonical_form(const BitWord& w) {
    auto words = w.payload();
    if (words.size() != (w.size() + 63) / 64) {
        return false;
    }
    const std::size_t rem = w.size() & 63;
    if (rem != 0 && (words.back() & (~std::uint64_t{0} << rem)) != 0) {
        return false;
    }
    return true;
}

}  // namespace deltalab
