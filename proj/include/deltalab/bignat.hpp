#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace deltalab {

// Unsigned arbitrary-precision integer, base 2^32 limbs, little-endian,
// no trailing zero limbs (zero is the empty limb vector). Just enough
// arithmetic for triangle rows: add, multiply by a machine word, parity,
// decimal I/O.
class BigNat {
public:
    BigNat() = default;
    BigNat(std::uint64_t v);

    static BigNat from_decimal(std::string_view text);
    static BigNat pow(std::uint32_t base, std::size_t exp);

    BigNat& operator+=(const BigNat& other);
    friend BigNat operator+(BigNat a, const BigNat& b) {
        a += b;
        return a;
    }

    BigNat& mul_small(std::uint32_t factor);

    bool is_zero() const noexcept { return limbs_.empty(); }
    bool odd() const noexcept { return !limbs_.empty() && (limbs_[0] & 1u); }

    std::string str() const;

    friend bool operator==(const BigNat&, const BigNat&) noexcept = default;

private:
    std::vector<std::uint32_t> limbs_;

    void trim() noexcept;
    std::uint32_t divmod_small(std::uint32_t divisor) noexcept;
};

}  // namespace deltalab
