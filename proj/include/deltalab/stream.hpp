#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "deltalab/bitword.hpp"

namespace deltalab {

struct StreamExpr;
using ExprPtr = std::shared_ptr<const StreamExpr>;

// The five built-in streams, by their surface names.
inline constexpr std::array<std::string_view, 5> kNamedStreams = {
    "thue-morse", "period-doubling", "fibonacci", "mephisto", "sierpinski"};

bool is_builtin_stream(std::string_view name);

// ---- expression nodes -------------------------------------------------

struct NamedRef {
    std::string name;  // built-in stream, or an equation name when evaluated
                       // inside a definition system
};

// 0 everywhere except a single 1 at `pos`.
struct PointAt {
    std::size_t pos;
};

// Eventually periodic word: `prefix` then `cycle` repeated forever.
struct EvP {
    BitWord prefix;
    BitWord cycle;  // nonempty
};

struct ConsWord {
    BitWord word;
    ExprPtr body;
};

struct Invert {
    ExprPtr body;
};

struct TailDrop {
    std::size_t count;
    ExprPtr body;
};

struct ZipBlocks {
    std::size_t left_block;   // >= 1
    std::size_t right_block;  // >= 1
    ExprPtr left;
    ExprPtr right;
};

struct XorStreams {
    ExprPtr left;
    ExprPtr right;
};

struct BlockDiffOp {
    std::size_t degree;      // d >= 0
    std::size_t iterations;  // n >= 0
    ExprPtr body;
};

// Apply the letter-to-word substitution 0 -> image0, 1 -> image1 to the
// body stream. Hosts the pattern-matching stream functions of the built-in
// definition system (mephisto, fibonacci); not part of the surface grammar.
struct SubstMap {
    BitWord image0;  // nonempty
    BitWord image1;  // nonempty
    ExprPtr body;
};

using ExprNode = std::variant<NamedRef, PointAt, EvP, ConsWord, Invert, TailDrop, ZipBlocks,
                              XorStreams, BlockDiffOp, SubstMap>;

struct StreamExpr {
    ExprNode node;
};

// ---- constructors ------------------------------------------------------

ExprPtr named(std::string name);
ExprPtr point(std::size_t pos);
ExprPtr evp(BitWord prefix, BitWord cycle);  // throws on empty cycle
ExprPtr cons(BitWord word, ExprPtr body);
ExprPtr inv(ExprPtr body);
ExprPtr tail(ExprPtr body, std::size_t count = 1);
ExprPtr zip(std::size_t n, std::size_t m, ExprPtr left, ExprPtr right);
ExprPtr xor_of(ExprPtr left, ExprPtr right);
ExprPtr diff_of(ExprPtr body, std::size_t degree = 1, std::size_t iterations = 1);
ExprPtr subst(BitWord image0, BitWord image1, ExprPtr body);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

// ---- demand ------------------------------------------------------------

// How many input bits each subexpression must supply for `bits` output
// bits; mirrors the expression tree.
struct Demand {
    std::size_t bits = 0;
    std::vector<Demand> children;
};

Demand demand_of(const StreamExpr& e, std::size_t len);
Demand demand_of(const ExprPtr& e, std::size_t len);

// ---- evaluation ----------------------------------------------------------

// First `len` bits of the stream denoted by a closed expression.
// Free names must be built-in streams.
BitWord materialize(const ExprPtr& e, std::size_t len);

// Partial evaluation against finite known prefixes for some names: returns
// as many bits as those prefixes determine, capped at `want`. Names absent
// from `bindings` resolve to built-in streams.
BitWord eval_with_bindings(const ExprPtr& e, std::size_t want,
                           const std::map<std::string, BitWord>& bindings);

// Direct generator for a built-in stream, independent of the fixpoint
// engine (iterated substitution or closed periodic-word zip).
BitWord gen_named(std::string_view name, std::size_t len);

// ---- equation systems ----------------------------------------------------

struct StreamEquation {
    std::string name;
    ExprPtr rhs;
};

struct EquationSystem {
    std::vector<StreamEquation> defs;
};

// Evaluate a recursive definition system by sweeping all equations and
// extending known prefixes until `target` has `len` bits. Throws
// productivity_error if a sweep makes no progress or the sweep budget
// (default 10 * len) runs out.
BitWord fixpoint_materialize(const EquationSystem& system, std::string_view target,
                             std::size_t len, std::size_t max_sweeps = 0);

// The built-in streams as one mutually recursive definition system.
EquationSystem builtin_equations();

}  // namespace deltalab
