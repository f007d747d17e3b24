#include "deltalab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "deltalab/diff.hpp"
#include "deltalab/errors.hpp"
#include "deltalab/orbit.hpp"
#include "deltalab/parse.hpp"
#include "deltalab/pascal.hpp"
#include "deltalab/periodicity.hpp"
#include "deltalab/render.hpp"
#include "deltalab/stream.hpp"
#include "deltalab/transducer.hpp"

namespace deltalab {

namespace {

void write_bytes(const std::string& path, const void* data, std::size_t size, std::ostream& out) {
    if (path == "-") {
        out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    file.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    if (!file) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << file.rdbuf();
    return ss.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"bitstream block-difference laboratory"};
    app.require_subcommand(1);
    std::function<int()> action;

    // eval EXPR --len N
    {
        auto* cmd = app.add_subcommand("eval", "print the first N bits of a stream expression");
        auto expr_text = std::make_shared<std::string>();
        auto len = std::make_shared<std::size_t>(0);
        cmd->add_option("expr", *expr_text, "stream expression")->required();
        cmd->add_option("--len", *len, "number of bits")
            ->required()
            ->check(CLI::Range(std::size_t{0}, kRowLengthCap));
        cmd->callback([&action, expr_text, len, &out]() {
            action = [expr_text, len, &out]() {
                out << materialize(parse_expr(*expr_text), *len).str() << "\n";
                return 0;
            };
        });
    }

    // check EXPR1 EXPR2 --len N
    {
        auto* cmd = app.add_subcommand("check", "compare two stream prefixes");
        auto a_text = std::make_shared<std::string>();
        auto b_text = std::make_shared<std::string>();
        auto len = std::make_shared<std::size_t>(0);
        cmd->add_option("expr1", *a_text, "first expression")->required();
        cmd->add_option("expr2", *b_text, "second expression")->required();
        cmd->add_option("--len", *len, "number of bits to compare")
            ->required()
            ->check(CLI::Range(std::size_t{0}, kRowLengthCap));
        cmd->callback([&action, a_text, b_text, len, &out]() {
            action = [a_text, b_text, len, &out]() {
                const BitWord a = materialize(parse_expr(*a_text), *len);
                const BitWord b = materialize(parse_expr(*b_text), *len);
                const auto fd = first_disagreement(a, b);
                if (fd.has_value()) {
                    out << *fd << "\n";
                    return 1;
                }
                return 0;
            };
        });
    }

    // orbit EXPR --d D --rows R --cols C --out FILE.pbm
    {
        auto* cmd = app.add_subcommand("orbit", "render an orbit fingerprint as binary PBM");
        auto expr_text = std::make_shared<std::string>();
        auto d = std::make_shared<std::size_t>(1);
        auto rows = std::make_shared<std::size_t>(0);
        auto cols = std::make_shared<std::size_t>(0);
        auto path = std::make_shared<std::string>();
        cmd->add_option("expr", *expr_text, "stream expression")->required();
        cmd->add_option("--d", *d, "block degree (default 1)")
            ->check(CLI::Range(std::size_t{0}, std::size_t{1} << 16));
        cmd->add_option("--rows", *rows, "orbit rows")->required()->check(CLI::Range(std::size_t{1}, kRowLengthCap));
        cmd->add_option("--cols", *cols, "orbit columns")->required()->check(CLI::Range(std::size_t{1}, kRowLengthCap));
        cmd->add_option("--out", *path, "output file, or - for stdout")->required();
        cmd->callback([&action, expr_text, d, rows, cols, path, &out]() {
            action = [expr_text, d, rows, cols, path, &out]() {
                const auto pbm =
                    render_orbit_pbm(build_orbit(parse_expr(*expr_text), *d, *rows, *cols));
                write_bytes(*path, pbm.data(), pbm.size(), out);
                return 0;
            };
        });
    }

    // detect EXPR --len N --max-period P --max-offset O
    {
        auto* cmd = app.add_subcommand("detect", "search a prefix for eventual periodicity");
        auto expr_text = std::make_shared<std::string>();
        auto len = std::make_shared<std::size_t>(0);
        auto max_p = std::make_shared<std::size_t>(0);
        auto max_off = std::make_shared<std::size_t>(0);
        cmd->add_option("expr", *expr_text, "stream expression")->required();
        cmd->add_option("--len", *len, "prefix length")->required()->check(CLI::Range(std::size_t{1}, kRowLengthCap));
        cmd->add_option("--max-period", *max_p, "largest period to try")
            ->required()
            ->check(CLI::Range(std::size_t{1}, kRowLengthCap));
        cmd->add_option("--max-offset", *max_off, "largest offset to try")
            ->required()
            ->check(CLI::Range(std::size_t{0}, kRowLengthCap));
        cmd->callback([&action, expr_text, len, max_p, max_off, &out]() {
            action = [expr_text, len, max_p, max_off, &out]() {
                const BitWord w = materialize(parse_expr(*expr_text), *len);
                const auto cert = detect_period(w, *max_p, *max_off);
                if (cert.has_value()) {
                    out << "offset=" << cert->offset << " period=" << cert->period
                        << " evidence_len=" << cert->evidence_len << "\n";
                } else {
                    out << "none\n";
                }
                return 0;
            };
        });
    }

    // witness EXPR --d D --window W
    {
        auto* cmd =
            app.add_subcommand("witness", "orbit periodicity witness for an evp expression");
        auto expr_text = std::make_shared<std::string>();
        auto d = std::make_shared<std::size_t>(1);
        auto window = std::make_shared<std::size_t>(0);
        cmd->add_option("expr", *expr_text, "evp(prefix,cycle) expression")->required();
        cmd->add_option("--d", *d, "block degree (default 1)")
            ->check(CLI::Range(std::size_t{0}, std::size_t{1} << 16));
        cmd->add_option("--window", *window, "columns to verify")
            ->required()
            ->check(CLI::Range(std::size_t{1}, kRowLengthCap));
        cmd->callback([&action, expr_text, d, window, &out]() {
            action = [expr_text, d, window, &out]() {
                const ExprPtr e = parse_expr(*expr_text);
                const PeriodCertificate cert = certificate_of_evp(e);
                const OrbitPeriodWitness w = orbit_witness_from_period(e, cert, *d, *window);
                out << "N1=" << w.n1 << " N2=" << w.n2 << " vertical_offset=" << w.vertical_offset
                    << " vertical_period=" << w.vertical_period << " window=" << w.window << "\n";
                return 0;
            };
        });
    }

    // pascal --d D --row N [--parity]
    {
        auto* cmd = app.add_subcommand("pascal", "print a generalized Pascal triangle row");
        auto d = std::make_shared<std::size_t>(0);
        auto row = std::make_shared<std::size_t>(0);
        auto parity = std::make_shared<bool>(false);
        cmd->add_option("--d", *d, "triangle degree")->required()->check(CLI::Range(std::size_t{1}, std::size_t{1} << 16));
        cmd->add_option("--row", *row, "row index")
            ->required()
            ->check(CLI::Range(std::size_t{0}, kRowLengthCap));
        cmd->add_flag("--parity", *parity, "row mod 2 in bit text form");
        cmd->callback([&action, d, row, parity, &out]() {
            action = [d, row, parity, &out]() {
                if (*parity) {
                    out << parity_row(*d, *row).bits.str() << "\n";
                } else {
                    const PascalRow r = pascal_row_exact(*d, *row);
                    for (std::size_t k = 0; k < r.entries.size(); ++k) {
                        if (k > 0) {
                            out << " ";
                        }
                        out << r.entries[k].str();
                    }
                    out << "\n";
                }
                return 0;
            };
        });
    }

    // fst run FILE --input BITS | fst delta --input BITS
    {
        auto* fst = app.add_subcommand("fst", "run finite-state transducers");
        fst->require_subcommand(1);
        auto* runc = fst->add_subcommand("run", "run a transducer file on input bits");
        auto path = std::make_shared<std::string>();
        auto input = std::make_shared<std::string>();
        runc->add_option("file", *path, "transducer text file")->required();
        runc->add_option("--input", *input, "input bits")->required();
        runc->callback([&action, path, input, &out]() {
            action = [path, input, &out]() {
                const Transducer t = Transducer::parse(read_file(*path));
                out << t.run(BitWord::from_string(*input)).str() << "\n";
                return 0;
            };
        });
        auto* deltac = fst->add_subcommand("delta", "run the built-in difference transducer");
        auto dinput = std::make_shared<std::string>();
        deltac->add_option("--input", *dinput, "input bits")->required();
        deltac->callback([&action, dinput, &out]() {
            action = [dinput, &out]() {
                out << Transducer::delta_fst().run(BitWord::from_string(*dinput)).str() << "\n";
                return 0;
            };
        });
    }

    // arrowhead EXPR --steps N --out FILE.svg
    {
        auto* cmd = app.add_subcommand("arrowhead", "render a turtle curve as SVG");
        auto expr_text = std::make_shared<std::string>();
        auto steps = std::make_shared<std::size_t>(0);
        auto path = std::make_shared<std::string>();
        cmd->add_option("expr", *expr_text, "stream expression")->required();
        cmd->add_option("--steps", *steps, "turtle steps")
            ->required()
            ->check(CLI::Range(std::size_t{0}, kRowLengthCap));
        cmd->add_option("--out", *path, "output file, or - for stdout")->required();
        cmd->callback([&action, expr_text, steps, path, &out]() {
            action = [expr_text, steps, path, &out]() {
                const std::string svg =
                    render_arrowhead_svg(materialize(parse_expr(*expr_text), *steps));
                write_bytes(*path, svg.data(), svg.size(), out);
                return 0;
            };
        });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        return action();
    } catch (const parse_error& e) {
        err << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace deltalab
