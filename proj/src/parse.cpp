#include "deltalab/parse.hpp"

#include <cctype>
#include <stdexcept>

#include "deltalab/errors.hpp"

namespace deltalab {

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t col = 1;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            if (text[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }

    bool at_end() {
        skip_space();
        return pos >= text.size();
    }

    char peek_char() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& expected) {
        skip_space();
        std::string got = pos < text.size() ? "'" + std::string(1, text[pos]) + "'" : "end of input";
        throw parse_error("expected " + expected + ", got " + got, line, col);
    }

    void advance(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i, ++pos) {
            if (text[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    }

    void expect(char c, const char* what) {
        if (peek_char() != c) {
            fail(what);
        }
        advance(1);
    }

    bool accept(char c) {
        if (peek_char() == c) {
            advance(1);
            return true;
        }
        return false;
    }

    // Identifier: letters and hyphens ("thue-morse", "diff", ...).
    std::string ident() {
        skip_space();
        std::size_t end = pos;
        while (end < text.size() &&
               (std::isalpha(static_cast<unsigned char>(text[end])) || text[end] == '-')) {
            ++end;
        }
        if (end == pos) {
            fail("a name");
        }
        std::string out(text.substr(pos, end - pos));
        advance(end - pos);
        return out;
    }

    std::string digits(const char* what) {
        skip_space();
        std::size_t end = pos;
        while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) {
            ++end;
        }
        if (end == pos) {
            fail(what);
        }
        std::string out(text.substr(pos, end - pos));
        advance(end - pos);
        return out;
    }

    std::size_t nat(const char* what = "a number") {
        skip_space();
        const std::size_t at_line = line, at_col = col;
        const std::string raw = digits(what);
        try {
            return std::stoull(raw);
        } catch (const std::out_of_range&) {
            throw parse_error("number '" + raw + "' out of range", at_line, at_col);
        }
    }

    BitWord bits(const char* what = "a bit string") {
        skip_space();
        const std::size_t at_line = line, at_col = col;
        const std::string raw = digits(what);
        for (char c : raw) {
            if (c != '0' && c != '1') {
                throw parse_error(std::string("expected ") + what + ", got '" + raw + "'",
                                  at_line, at_col);
            }
        }
        return BitWord::from_string(raw);
    }
};

struct Parser {
    Lexer lex;

    ExprPtr expr() {
        lex.skip_space();
        const std::size_t at_line = lex.line, at_col = lex.col;
        if (!std::isalpha(static_cast<unsigned char>(lex.peek_char()))) {
            lex.fail("a stream name or combinator");
        }
        const std::string head = lex.ident();
        if (head == "point") {
            lex.expect('(', "'('");
            const std::size_t p = lex.nat("a position");
            lex.expect(')', "')'");
            return point(p);
        }
        if (head == "evp") {
            lex.expect('(', "'('");
            BitWord prefix;
            if (lex.peek_char() != ',') {
                prefix = lex.bits("a bit string or ','");
            }
            lex.expect(',', "','");
            if (lex.peek_char() == ')') {
                lex.fail("a nonempty cycle");
            }
            BitWord cycle = lex.bits("a nonempty cycle");
            lex.expect(')', "')'");
            return evp(std::move(prefix), std::move(cycle));
        }
        if (head == "inv") {
            lex.expect('(', "'('");
            ExprPtr body = expr();
            lex.expect(')', "')'");
            return inv(std::move(body));
        }
        if (head == "tail") {
            std::size_t k = 1;
            if (lex.accept('^')) {
                k = lex.nat("an iteration count");
            }
            lex.expect('(', "'('");
            ExprPtr body = expr();
            lex.expect(')', "')'");
            return tail(std::move(body), k);
        }
        if (head == "cons") {
            lex.expect('(', "'('");
            BitWord word = lex.bits();
            lex.expect(',', "','");
            ExprPtr body = expr();
            lex.expect(')', "')'");
            return cons(std::move(word), std::move(body));
        }
        if (head == "xor") {
            lex.expect('(', "'('");
            ExprPtr a = expr();
            lex.expect(',', "','");
            ExprPtr b = expr();
            lex.expect(')', "')'");
            return xor_of(std::move(a), std::move(b));
        }
        if (head == "zip") {
            lex.expect('(', "'('");
            const std::size_t n = lex.nat("a block size");
            lex.expect(',', "','");
            const std::size_t m = lex.nat("a block size");
            lex.expect(',', "','");
            if (n == 0 || m == 0) {
                throw parse_error("zip block sizes must be >= 1", at_line, at_col);
            }
            ExprPtr a = expr();
            lex.expect(',', "','");
            ExprPtr b = expr();
            lex.expect(')', "')'");
            return zip(n, m, std::move(a), std::move(b));
        }
        if (head == "diff") {
            std::size_t d = 1;
            std::size_t n = 1;
            if (lex.accept('_')) {
                d = lex.nat("a block degree");
            }
            if (lex.accept('^')) {
                n = lex.nat("an iteration count");
            }
            lex.expect('(', "'('");
            ExprPtr body = expr();
            lex.expect(')', "')'");
            return diff_of(std::move(body), d, n);
        }
        if (is_builtin_stream(head)) {
            return named(head);
        }
        throw parse_error("unknown name '" + head +
                              "'; expected a stream name (thue-morse, period-doubling, "
                              "fibonacci, mephisto, sierpinski) or a combinator",
                          at_line, at_col);
    }
};

}  // namespace

ExprPtr parse_expr(std::string_view text) {
    Parser parser{Lexer{text}};
    ExprPtr e = parser.expr();
    if (!parser.lex.at_end()) {
        parser.lex.fail("end of input");
    }
    return e;
}

std::string print_expr(const ExprPtr& e) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, NamedRef>) {
                return x.name;
            } else if constexpr (std::is_same_v<T, PointAt>) {
                return "point(" + std::to_string(x.pos) + ")";
            } else if constexpr (std::is_same_v<T, EvP>) {
                return "evp(" + x.prefix.str() + "," + x.cycle.str() + ")";
            } else if constexpr (std::is_same_v<T, ConsWord>) {
                return "cons(" + x.word.str() + "," + print_expr(x.body) + ")";
            } else if constexpr (std::is_same_v<T, Invert>) {
                return "inv(" + print_expr(x.body) + ")";
            } else if constexpr (std::is_same_v<T, TailDrop>) {
                std::string head = "tail";
                if (x.count != 1) {
                    head += "^" + std::to_string(x.count);
                }
                return head + "(" + print_expr(x.body) + ")";
            } else if constexpr (std::is_same_v<T, ZipBlocks>) {
                return "zip(" + std::to_string(x.left_block) + "," +
                       std::to_string(x.right_block) + "," + print_expr(x.left) + "," +
                       print_expr(x.right) + ")";
            } else if constexpr (std::is_same_v<T, XorStreams>) {
                return "xor(" + print_expr(x.left) + "," + print_expr(x.right) + ")";
            } else if constexpr (std::is_same_v<T, BlockDiffOp>) {
                std::string head = "diff";
                if (x.degree != 1) {
                    head += "_" + std::to_string(x.degree);
                }
                if (x.iterations != 1) {
                    head += "^" + std::to_string(x.iterations);
                }
                return head + "(" + print_expr(x.body) + ")";
            } else {
                static_assert(std::is_same_v<T, SubstMap>);
                // Not part of the surface grammar; printed for diagnostics only.
                return "subst(0->" + x.image0.str() + ",1->" + x.image1.str() + "," +
                       print_expr(x.body) + ")";
            }
        },
        e->node);
}

}  // namespace deltalab
