#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "deltalab/bitword.hpp"

namespace deltalab {

// Deterministic finite-state transducer over {0,1} with a word output per
// step. The step table is total: every state has a transition for both bits.
class Transducer {
public:
    struct Transition {
        std::size_t next = 0;
        BitWord output;

        friend bool operator==(const Transition&, const Transition&) = default;
    };

    // Emits the first difference: remember the last bit, output the xor.
    static Transducer delta_fst();

    // Text format, one transition per line after a header:
    //   initial: <state>
    //   <state> <bit> -> <state> <output-bits or "-">
    static Transducer parse(std::string_view text);
    std::string to_text() const;

    BitWord run(const BitWord& input) const;

    std::size_t state_count() const noexcept { return step_.size(); }
    const std::string& initial_name() const { return names_.at(initial_); }

    friend bool operator==(const Transducer&, const Transducer&) = default;

private:
    std::vector<std::string> names_;
    std::vector<std::array<Transition, 2>> step_;
    std::size_t initial_ = 0;
};

BitWord run(const Transducer& t, const BitWord& input);

}  // namespace deltalab
