#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace deltalab {

// Packed finite 01-word. Bit i of the sequence lives at bit (i % 64) of
// payload word (i / 64), so dropping a prefix is a word-level right shift
// and the xor kernels are plain loops over machine words.
//
// Canonical form: payload bits at positions >= size() are zero and the
// payload holds exactly ceil(size()/64) words. operator== relies on this.
class BitWord {
public:
    BitWord() = default;

    static BitWord zeros(std::size_t n);
    static BitWord ones(std::size_t n);
    // Text form: '0'/'1' characters, position 0 leftmost.
    static BitWord from_string(std::string_view text);
    // Adopt packed words; excess words and bits beyond len are discarded.
    static BitWord from_words(std::vector<std::uint64_t> words, std::size_t len);

    std::size_t size() const noexcept { return len_; }
    bool empty() const noexcept { return len_ == 0; }

    // Checked read; throws std::out_of_range for i >= size().
    bool get(std::size_t i) const;
    // Unchecked read for hot loops.
    bool operator[](std::size_t i) const noexcept {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    // Checked write; throws std::out_of_range for i >= size().
    void set(std::size_t i, bool bit);

    void push_back(bool bit);
    void append(const BitWord& tail);

    std::string str() const;
    std::span<const std::uint64_t> payload() const noexcept { return words_; }

    friend bool operator==(const BitWord&, const BitWord&) noexcept = default;

    friend BitWord operator^(const BitWord& a, const BitWord& b);
    friend BitWord invert(const BitWord& w);
    friend BitWord shift(const BitWord& w, std::size_t k);
    friend BitWord truncate(const BitWord& w, std::size_t n);

private:
    std::vector<std::uint64_t> words_;
    std::size_t len_ = 0;

    void clamp() noexcept;
    static std::size_t word_count(std::size_t bits) noexcept { return (bits + 63) / 64; }
};

// Positionwise xor, truncated to the shorter operand.
BitWord operator^(const BitWord& a, const BitWord& b);

// Flip every bit; same length.
BitWord invert(const BitWord& w);

// Drop the first k bits. Throws std::out_of_range for k > size().
BitWord shift(const BitWord& w, std::size_t k);

// First min(n, size()) bits.
BitWord truncate(const BitWord& w, std::size_t n);

// Least index where a and b differ, or nullopt if they agree on their overlap.
std::optional<std::size_t> first_disagreement(const BitWord& a, const BitWord& b);

std::size_t popcount(const BitWord& w);

// Interleave: alternately n bits of a and m bits of b, for as long as whole
// blocks (or a final partial block at the very end of the shorter source)
// are available. With unbounded sources this is the zip_{n,m} combinator.
BitWord zip_words(std::size_t n, std::size_t m, const BitWord& a, const BitWord& b);

// True if the payload is in canonical form (exact word count, no stray bits).
bool canonical_form(const BitWord& w);

}  // namespace deltalab
