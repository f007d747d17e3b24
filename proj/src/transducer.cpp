#include "deltalab/transducer.hpp"

#include <map>
#include <optional>
#include <sstream>

#include "deltalab/errors.hpp"

namespace deltalab {

Transducer Transducer::delta_fst() {
    Transducer t;
    t.names_ = {"init", "s0", "s1"};
    t.step_.resize(3);
    // From init, remember the bit and emit nothing.
    t.step_[0][0] = Transition{1, BitWord{}};
    t.step_[0][1] = Transition{2, BitWord{}};
    // From s_b on c, emit b xor c and remember c.
    t.step_[1][0] = Transition{1, BitWord::from_string("0")};
    t.step_[1][1] = Transition{2, BitWord::from_string("1")};
    t.step_[2][0] = Transition{1, BitWord::from_string("1")};
    t.step_[2][1] = Transition{2, BitWord::from_string("0")};
    t.initial_ = 0;
    return t;
}

BitWord Transducer::run(const BitWord& input) const {
    BitWord out;
    std::size_t state = initial_;
    for (std::size_t i = 0; i < input.size(); ++i) {
        const Transition& tr = step_[state][input[i] ? 1 : 0];
        out.append(tr.output);
        state = tr.next;
    }
    return out;
}

BitWord run(const Transducer& t, const BitWord& input) {
    return t.run(input);
}

namespace {

struct Builder {
    std::vector<std::string> names;
    std::map<std::string, std::size_t> index;
    std::vector<std::array<std::optional<Transducer::Transition>, 2>> step;

    std::size_t state(const std::string& name) {
        auto [it, inserted] = index.emplace(name, names.size());
        if (inserted) {
            names.push_back(name);
            step.emplace_back();
        }
        return it->second;
    }
};

}  // namespace

Transducer Transducer::parse(std::string_view text) {
    Builder b;
    std::optional<std::string> initial;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) {
            continue;  // blank line
        }
        if (first == "initial:") {
            std::string name;
            if (!(ls >> name)) {
                throw parse_error("expected state name after 'initial:'", lineno, 1);
            }
            initial = name;
            b.state(name);
            continue;
        }
        std::string bit, arrow, to, out;
        if (!(ls >> bit >> arrow >> to >> out) || arrow != "->" || (bit != "0" && bit != "1")) {
            throw parse_error("expected '<state> <bit> -> <state> <bits|->'", lineno, 1);
        }
        const std::size_t from = b.state(first);
        const std::size_t dest = b.state(to);
        BitWord word;
        if (out != "-") {
            word = BitWord::from_string(out);  // throws on bad characters
        }
        auto& slot = b.step[from][bit == "1" ? 1 : 0];
        if (slot.has_value()) {
            throw parse_error("duplicate transition for state '" + first + "' on " + bit, lineno,
                              1);
        }
        slot = Transducer::Transition{dest, std::move(word)};
    }
    if (!initial.has_value()) {
        throw parse_error("missing 'initial:' header", lineno == 0 ? 1 : lineno, 1);
    }
    Transducer t;
    t.names_ = b.names;
    t.initial_ = b.index.at(*initial);
    t.step_.resize(b.names.size());
    for (std::size_t s = 0; s < b.names.size(); ++s) {
        for (int bit = 0; bit < 2; ++bit) {
            if (!b.step[s][bit].has_value()) {
                throw parse_error("state '" + b.names[s] + "' has no transition on " +
                                      std::to_string(bit),
                                  lineno, 1);
            }
            t.step_[s][bit] = *b.step[s][bit];
        }
    }
    return t;
}

std::string Transducer::to_text() const {
    std::string out = "initial: " + names_[initial_] + "\n";
    for (std::size_t s = 0; s < step_.size(); ++s) {
        for (int bit = 0; bit < 2; ++bit) {
            const Transition& tr = step_[s][bit];
            out += names_[s] + " " + std::to_string(bit) + " -> " + names_[tr.next] + " " +
                   (tr.output.empty() ? "-" : tr.output.str()) + "\n";
        }
    }
    return out;
}

}  // namespace deltalab
