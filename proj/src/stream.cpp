#include "deltalab/stream.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

#include "deltalab/diff.hpp"
#include "deltalab/errors.hpp"

namespace deltalab {

bool is_builtin_stream(std::string_view name) {
    return std::find(kNamedStreams.begin(), kNamedStreams.end(), name) != kNamedStreams.end();
}

// ---- constructors --------------------------------------------------------

namespace {

ExprPtr make(ExprNode node) {
    return std::make_shared<const StreamExpr>(StreamExpr{std::move(node)});
}

}  // namespace

ExprPtr named(std::string name) {
    return make(NamedRef{std::move(name)});
}

ExprPtr point(std::size_t pos) {
    return make(PointAt{pos});
}

ExprPtr evp(BitWord prefix, BitWord cycle) {
    if (cycle.empty()) {
        throw std::invalid_argument("evp: cycle must be nonempty");
    }
    return make(EvP{std::move(prefix), std::move(cycle)});
}

ExprPtr cons(BitWord word, ExprPtr body) {
    return make(ConsWord{std::move(word), std::move(body)});
}

ExprPtr inv(ExprPtr body) {
    return make(Invert{std::move(body)});
}

ExprPtr tail(ExprPtr body, std::size_t count) {
    return make(TailDrop{count, std::move(body)});
}

ExprPtr zip(std::size_t n, std::size_t m, ExprPtr left, ExprPtr right) {
    if (n == 0 || m == 0) {
        throw std::invalid_argument("zip: block sizes must be >= 1");
    }
    return make(ZipBlocks{n, m, std::move(left), std::move(right)});
}

ExprPtr xor_of(ExprPtr left, ExprPtr right) {
    return make(XorStreams{std::move(left), std::move(right)});
}

ExprPtr diff_of(ExprPtr body, std::size_t degree, std::size_t iterations) {
    return make(BlockDiffOp{degree, iterations, std::move(body)});
}

ExprPtr subst(BitWord image0, BitWord image1, ExprPtr body) {
    if (image0.empty() || image1.empty()) {
        throw std::invalid_argument("subst: letter images must be nonempty");
    }
    return make(SubstMap{std::move(image0), std::move(image1), std::move(body)});
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) {
        return true;
    }
    if (!a || !b || a->node.index() != b->node.index()) {
        return false;
    }
    return std::visit(
        [&b](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const T& y = std::get<T>(b->node);
            if constexpr (std::is_same_v<T, NamedRef>) {
                return x.name == y.name;
            } else if constexpr (std::is_same_v<T, PointAt>) {
                return x.pos == y.pos;
            } else if constexpr (std::is_same_v<T, EvP>) {
                return x.prefix == y.prefix && x.cycle == y.cycle;
            } else if constexpr (std::is_same_v<T, ConsWord>) {
                return x.word == y.word && expr_equal(x.body, y.body);
            } else if constexpr (std::is_same_v<T, Invert>) {
                return expr_equal(x.body, y.body);
            } else if constexpr (std::is_same_v<T, TailDrop>) {
                return x.count == y.count && expr_equal(x.body, y.body);
            } else if constexpr (std::is_same_v<T, ZipBlocks>) {
                return x.left_block == y.left_block && x.right_block == y.right_block &&
                       expr_equal(x.left, y.left) && expr_equal(x.right, y.right);
            } else if constexpr (std::is_same_v<T, XorStreams>) {
                return expr_equal(x.left, y.left) && expr_equal(x.right, y.right);
            } else if constexpr (std::is_same_v<T, BlockDiffOp>) {
                return x.degree == y.degree && x.iterations == y.iterations &&
                       expr_equal(x.body, y.body);
            } else {
                static_assert(std::is_same_v<T, SubstMap>);
                return x.image0 == y.image0 && x.image1 == y.image1 && expr_equal(x.body, y.body);
            }
        },
        a->node);
}

// ---- demand ---------------------------------------------------------------

namespace {

struct ZipDemand {
    std::size_t left;
    std::size_t right;
};

ZipDemand zip_demand(std::size_t n, std::size_t m, std::size_t len) {
    const std::size_t c = len / (n + m);
    const std::size_t r = len % (n + m);
    return ZipDemand{c * n + std::min(r, n), c * m + (r > n ? r - n : 0)};
}

}  // namespace

Demand demand_of(const StreamExpr& e, std::size_t len) {
    Demand d;
    d.bits = len;
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ConsWord>) {
                d.children.push_back(
                    demand_of(*x.body, len > x.word.size() ? len - x.word.size() : 0));
            } else if constexpr (std::is_same_v<T, Invert>) {
                d.children.push_back(demand_of(*x.body, len));
            } else if constexpr (std::is_same_v<T, TailDrop>) {
                d.children.push_back(demand_of(*x.body, len + x.count));
            } else if constexpr (std::is_same_v<T, ZipBlocks>) {
                const auto zd = zip_demand(x.left_block, x.right_block, len);
                d.children.push_back(demand_of(*x.left, zd.left));
                d.children.push_back(demand_of(*x.right, zd.right));
            } else if constexpr (std::is_same_v<T, XorStreams>) {
                d.children.push_back(demand_of(*x.left, len));
                d.children.push_back(demand_of(*x.right, len));
            } else if constexpr (std::is_same_v<T, BlockDiffOp>) {
                d.children.push_back(demand_of(*x.body, len + x.degree * x.iterations));
            } else if constexpr (std::is_same_v<T, SubstMap>) {
                // Every letter image is at least one bit, so len input bits
                // always suffice.
                d.children.push_back(demand_of(*x.body, len));
            }
        },
        e.node);
    return d;
}

Demand demand_of(const ExprPtr& e, std::size_t len) {
    return demand_of(*e, len);
}

// ---- direct generators ------------------------------------------------------

namespace {

BitWord gen_thue_morse(std::size_t len) {
    BitWord w = BitWord::from_string("0");
    while (w.size() < len) {
        w.append(invert(w));
    }
    return truncate(w, len);
}

// T consumes (101)^w in aligned blocks of three, so every fourth position
// refers back to T itself: T(4q+r) = "101"[r] for r < 3, T(4q+3) = T(q).
BitWord gen_period_doubling(std::size_t len) {
    BitWord out;
    for (std::size_t i = 0; i < len; ++i) {
        const std::size_t r = i & 3;
        if (r < 3) {
            out.push_back(r != 1);
        } else {
            out.push_back(out[i >> 2]);
        }
    }
    return out;
}

BitWord gen_fibonacci(std::size_t len) {
    BitWord w = BitWord::from_string("1");
    while (w.size() < len) {
        BitWord next;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i]) {
                next.push_back(true);
                next.push_back(false);
            } else {
                next.push_back(true);
            }
        }
        w = std::move(next);
    }
    return truncate(w, len);
}

BitWord gen_mephisto(std::size_t len) {
    BitWord w = BitWord::from_string("0");
    while (w.size() < len) {
        BitWord next;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i]) {
                next.push_back(true);
                next.push_back(true);
                next.push_back(false);
            } else {
                next.push_back(false);
                next.push_back(false);
                next.push_back(true);
            }
        }
        w = std::move(next);
    }
    return truncate(w, len);
}

// S(9q+r) = w_S(8q+r) for r < 8 with w_S 16-periodic, and S(9q+8) = S(q).
BitWord gen_sierpinski(std::size_t len) {
    static const BitWord pattern = BitWord::from_string("1100001100111100");
    BitWord out;
    for (std::size_t i = 0; i < len; ++i) {
        const std::size_t q = i / 9;
        const std::size_t r = i % 9;
        if (r < 8) {
            out.push_back(pattern[(8 * q + r) % 16]);
        } else {
            out.push_back(out[q]);
        }
    }
    return out;
}

// Longest materialized prefix per built-in stream; extends monotonically
// under a lock, reads hand out value copies.
class NamedCache {
public:
    BitWord prefix(std::string_view name, std::size_t len) {
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = store_.try_emplace(std::string(name));
        if (it->second.size() < len) {
            it->second = gen_named(name, std::max(len, 2 * it->second.size()));
        }
        return truncate(it->second, len);
    }

private:
    std::mutex mu_;
    std::map<std::string, BitWord, std::less<>> store_;
};

NamedCache& named_cache() {
    static NamedCache cache;
    return cache;
}

}  // namespace

BitWord gen_named(std::string_view name, std::size_t len) {
    if (name == "thue-morse") return gen_thue_morse(len);
    if (name == "period-doubling") return gen_period_doubling(len);
    if (name == "fibonacci") return gen_fibonacci(len);
    if (name == "mephisto") return gen_mephisto(len);
    if (name == "sierpinski") return gen_sierpinski(len);
    throw std::invalid_argument("gen_named: unknown stream '" + std::string(name) + "'");
}

// ---- evaluation --------------------------------------------------------------

namespace {

// Evaluates to as many bits as the available knowledge determines, capped
// at `want`. With only built-in leaves the result is always exactly `want`.
struct Evaluator {
    const std::map<std::string, BitWord>* bindings;

    BitWord eval(const StreamExpr& e, std::size_t want) const {
        return std::visit([&](const auto& x) { return eval_node(x, want); }, e.node);
    }

    BitWord eval_node(const NamedRef& x, std::size_t want) const {
        if (bindings != nullptr) {
            auto it = bindings->find(x.name);
            if (it != bindings->end()) {
                return truncate(it->second, want);
            }
        }
        if (!is_builtin_stream(x.name)) {
            throw std::invalid_argument("unknown stream '" + x.name + "'");
        }
        return named_cache().prefix(x.name, want);
    }

    BitWord eval_node(const PointAt& x, std::size_t want) const {
        BitWord w = BitWord::zeros(want);
        if (x.pos < want) {
            w.set(x.pos, true);
        }
        return w;
    }

    BitWord eval_node(const EvP& x, std::size_t want) const {
        BitWord out = truncate(x.prefix, want);
        while (out.size() < want) {
            out.append(truncate(x.cycle, want - out.size()));
        }
        return out;
    }

    BitWord eval_node(const ConsWord& x, std::size_t want) const {
        if (want <= x.word.size()) {
            return truncate(x.word, want);
        }
        BitWord out = x.word;
        out.append(eval(*x.body, want - x.word.size()));
        return out;
    }

    BitWord eval_node(const Invert& x, std::size_t want) const {
        return invert(eval(*x.body, want));
    }

    BitWord eval_node(const TailDrop& x, std::size_t want) const {
        BitWord t = eval(*x.body, want + x.count);
        if (t.size() <= x.count) {
            return BitWord{};
        }
        return shift(t, x.count);
    }

    BitWord eval_node(const ZipBlocks& x, std::size_t want) const {
        const auto zd = zip_demand(x.left_block, x.right_block, want);
        BitWord a = eval(*x.left, zd.left);
        BitWord b = eval(*x.right, zd.right);
        return truncate(zip_words(x.left_block, x.right_block, a, b), want);
    }

    BitWord eval_node(const XorStreams& x, std::size_t want) const {
        return eval(*x.left, want) ^ eval(*x.right, want);
    }

    BitWord eval_node(const BlockDiffOp& x, std::size_t want) const {
        const std::size_t shrink = x.degree * x.iterations;
        BitWord t = eval(*x.body, want + shrink);
        if (t.size() < shrink) {
            return BitWord{};
        }
        return iterate_diff_fast(x.degree, x.iterations, t);
    }

    BitWord eval_node(const SubstMap& x, std::size_t want) const {
        BitWord in = eval(*x.body, want);
        BitWord out;
        for (std::size_t i = 0; i < in.size() && out.size() < want; ++i) {
            out.append(in[i] ? x.image1 : x.image0);
        }
        return truncate(out, want);
    }
};

}  // namespace

BitWord eval_with_bindings(const ExprPtr& e, std::size_t want,
                           const std::map<std::string, BitWord>& bindings) {
    return Evaluator{&bindings}.eval(*e, want);
}

BitWord materialize(const ExprPtr& e, std::size_t len) {
    BitWord out = Evaluator{nullptr}.eval(*e, len);
    if (out.size() != len) {
        throw productivity_error("materialize: expression determined only " +
                                 std::to_string(out.size()) + " of " + std::to_string(len) +
                                 " bits");
    }
    return out;
}

// ---- equation systems ----------------------------------------------------------

namespace {

void collect_names(const ExprPtr& e, std::set<std::string>& out) {
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, NamedRef>) {
                out.insert(x.name);
            } else if constexpr (std::is_same_v<T, ConsWord> || std::is_same_v<T, Invert> ||
                                 std::is_same_v<T, TailDrop> || std::is_same_v<T, BlockDiffOp> ||
                                 std::is_same_v<T, SubstMap>) {
                collect_names(x.body, out);
            } else if constexpr (std::is_same_v<T, ZipBlocks> || std::is_same_v<T, XorStreams>) {
                collect_names(x.left, out);
                collect_names(x.right, out);
            }
        },
        e->node);
}

// Raise the wanted prefix length of every system name referenced under e.
void register_demands(const ExprPtr& e, std::size_t want,
                      std::map<std::string, std::size_t>& wants, bool& grew) {
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, NamedRef>) {
                auto it = wants.find(x.name);
                if (it != wants.end() && it->second < want) {
                    it->second = want;
                    grew = true;
                }
            } else if constexpr (std::is_same_v<T, ConsWord>) {
                register_demands(x.body, want > x.word.size() ? want - x.word.size() : 0, wants,
                                 grew);
            } else if constexpr (std::is_same_v<T, Invert>) {
                register_demands(x.body, want, wants, grew);
            } else if constexpr (std::is_same_v<T, TailDrop>) {
                register_demands(x.body, want + x.count, wants, grew);
            } else if constexpr (std::is_same_v<T, ZipBlocks>) {
                const auto zd = zip_demand(x.left_block, x.right_block, want);
                register_demands(x.left, zd.left, wants, grew);
                register_demands(x.right, zd.right, wants, grew);
            } else if constexpr (std::is_same_v<T, XorStreams>) {
                register_demands(x.left, want, wants, grew);
                register_demands(x.right, want, wants, grew);
            } else if constexpr (std::is_same_v<T, BlockDiffOp>) {
                register_demands(x.body, want + x.degree * x.iterations, wants, grew);
            } else if constexpr (std::is_same_v<T, SubstMap>) {
                register_demands(x.body, want, wants, grew);
            }
        },
        e->node);
}

std::string laggards_of(const std::map<std::string, BitWord>& known,
                        const std::map<std::string, std::size_t>& wants) {
    std::string out;
    for (const auto& [name, want] : wants) {
        auto it = known.find(name);
        if (it != known.end() && it->second.size() < want) {
            if (!out.empty()) {
                out += ", ";
            }
            out += name + " (have " + std::to_string(it->second.size()) + " of " +
                   std::to_string(want) + ")";
        }
    }
    return out.empty() ? "<none>" : out;
}

}  // namespace

BitWord fixpoint_materialize(const EquationSystem& system, std::string_view target,
                             std::size_t len, std::size_t max_sweeps) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < system.defs.size(); ++i) {
        if (!index.emplace(system.defs[i].name, i).second) {
            throw std::invalid_argument("fixpoint: duplicate definition of '" +
                                        system.defs[i].name + "'");
        }
    }
    const std::string target_name(target);
    if (index.find(target_name) == index.end()) {
        throw std::invalid_argument("fixpoint: target '" + target_name + "' is not defined");
    }
    for (const auto& def : system.defs) {
        std::set<std::string> refs;
        collect_names(def.rhs, refs);
        for (const auto& name : refs) {
            if (index.find(name) == index.end() && !is_builtin_stream(name)) {
                throw std::invalid_argument("fixpoint: '" + def.name +
                                            "' references undefined stream '" + name + "'");
            }
        }
    }
    if (len == 0) {
        return BitWord{};
    }

    std::map<std::string, BitWord> known;
    std::map<std::string, std::size_t> wants;
    for (const auto& def : system.defs) {
        known[def.name] = BitWord{};
        wants[def.name] = 0;
    }
    wants[target_name] = len;

    // Signature of the inputs each equation saw at its last evaluation, to
    // skip re-evaluating saturated definitions.
    std::vector<std::vector<std::size_t>> last_sig(system.defs.size());
    std::vector<std::vector<std::string>> sys_refs(system.defs.size());
    for (std::size_t i = 0; i < system.defs.size(); ++i) {
        std::set<std::string> refs;
        collect_names(system.defs[i].rhs, refs);
        for (const auto& name : refs) {
            if (index.find(name) != index.end()) {
                sys_refs[i].push_back(name);
            }
        }
    }

    const std::size_t budget = max_sweeps != 0 ? max_sweeps : 10 * len;
    for (std::size_t sweep = 0; sweep < budget; ++sweep) {
        if (known[target_name].size() >= len) {
            return truncate(known[target_name], len);
        }
        bool progress = false;
        for (std::size_t i = 0; i < system.defs.size(); ++i) {
            const auto& def = system.defs[i];
            const std::size_t want = wants[def.name];
            if (want == 0) {
                continue;
            }
            register_demands(def.rhs, want, wants, progress);
            if (known[def.name].size() >= want) {
                continue;
            }
            std::vector<std::size_t> sig;
            sig.push_back(want);
            for (const auto& name : sys_refs[i]) {
                sig.push_back(known[name].size());
            }
            if (sig == last_sig[i]) {
                continue;
            }
            last_sig[i] = std::move(sig);
            BitWord val = eval_with_bindings(def.rhs, want, known);
            if (val.size() > known[def.name].size()) {
                known[def.name] = std::move(val);
                progress = true;
            }
        }
        if (!progress) {
            throw productivity_error("fixpoint: no progress; stuck on " +
                                     laggards_of(known, wants));
        }
    }
    if (known[target_name].size() >= len) {
        return truncate(known[target_name], len);
    }
    throw productivity_error("fixpoint: sweep budget exhausted; stuck on " +
                             laggards_of(known, wants));
}

EquationSystem builtin_equations() {
    EquationSystem sys;
    // thue-morse = 0 : zip_{1,1}(inv(M), tail(M))
    sys.defs.push_back({"thue-morse",
                        cons(BitWord::from_string("0"),
                             zip(1, 1, inv(named("thue-morse")), tail(named("thue-morse"))))});
    // period-doubling = zip_{3,1}(w, T) with w = 101 : w
    sys.defs.push_back({"pd-word", cons(BitWord::from_string("101"), named("pd-word"))});
    sys.defs.push_back(
        {"period-doubling", zip(3, 1, named("pd-word"), named("period-doubling"))});
    // mephisto = h(0 : tail(mephisto)) with h the 0->001, 1->110 map
    sys.defs.push_back(
        {"mephisto", subst(BitWord::from_string("001"), BitWord::from_string("110"),
                           cons(BitWord::from_string("0"), tail(named("mephisto"))))});
    // sierpinski = zip_{8,1}(w, S) with w = 11000011 : inv(w)
    sys.defs.push_back(
        {"sierpinski-word",
         cons(BitWord::from_string("11000011"), inv(named("sierpinski-word")))});
    sys.defs.push_back(
        {"sierpinski", zip(8, 1, named("sierpinski-word"), named("sierpinski"))});
    // fibonacci = h(1 : tail(fibonacci)) with h the 0->1, 1->10 map
    sys.defs.push_back({"fibonacci",
                        subst(BitWord::from_string("1"), BitWord::from_string("10"),
                              cons(BitWord::from_string("1"), tail(named("fibonacci"))))});
    return sys;
}

}  // namespace deltalab
