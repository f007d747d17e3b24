#include "deltalab/bignat.hpp"

#include <algorithm>
#include <stdexcept>

namespace deltalab {

BigNat::BigNat(std::uint64_t v) {
    if (v != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(v));
        if (v >> 32) {
            limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
        }
    }
}

void BigNat::trim() noexcept {
    while (!limbs_.empty() && limbs_.back() == 0) {
        limbs_.pop_back();
    }
}

BigNat& BigNat::operator+=(const BigNat& other) {
    if (other.limbs_.size() > limbs_.size()) {
        limbs_.resize(other.limbs_.size(), 0);
    }
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t sum = carry + limbs_[i];
        if (i < other.limbs_.size()) {
            sum += other.limbs_[i];
        }
        limbs_[i] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
    }
    if (carry) {
        limbs_.push_back(static_cast<std::uint32_t>(carry));
    }
    return *this;
}

BigNat& BigNat::mul_small(std::uint32_t factor) {
    if (factor == 0) {
        limbs_.clear();
        return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t prod = static_cast<std::uint64_t>(limb) * factor + carry;
        limb = static_cast<std::uint32_t>(prod);
        carry = prod >> 32;
    }
    if (carry) {
        limbs_.push_back(static_cast<std::uint32_t>(carry));
    }
    return *this;
}

std::uint32_t BigNat::divmod_small(std::uint32_t divisor) noexcept {
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

BigNat BigNat::from_decimal(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("BigNat: empty decimal string");
    }
    BigNat n;
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("BigNat: bad decimal digit '" + std::string(1, c) + "'");
        }
        n.mul_small(10);
        n += BigNat(static_cast<std::uint64_t>(c - '0'));
    }
    return n;
}

BigNat BigNat::pow(std::uint32_t base, std::size_t exp) {
    BigNat r(1);
    for (std::size_t i = 0; i < exp; ++i) {
        r.mul_small(base);
    }
    return r;
}

std::string BigNat::str() const {
    if (is_zero()) {
        return "0";
    }
    BigNat tmp = *this;
    std::vector<std::uint32_t> groups;
    while (!tmp.is_zero()) {
        groups.push_back(tmp.divmod_small(1'000'000'000u));
    }
    std::string out = std::to_string(groups.back());
    for (std::size_t i = groups.size() - 1; i-- > 0;) {
        std::string part = std::to_string(groups[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

}  // namespace deltalab
