#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "deltalab/cli.hpp"
#include "deltalab/orbit.hpp"
#include "deltalab/parse.hpp"
#include "deltalab/pascal.hpp"
#include "deltalab/render.hpp"
#include "deltalab/stream.hpp"
#include "deltalab/transducer.hpp"

using namespace deltalab;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return CliResult{code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("deltalab_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("eval prints exactly the requested prefix") {
    const CliResult r = cli({"eval", "point(3)", "--len", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "000100\n");

    const CliResult big = cli({"eval", "thue-morse", "--len", "32"});
    CHECK(big.code == 0);
    CHECK(big.out == materialize(named("thue-morse"), 32).str() + "\n");

    const CliResult zero = cli({"eval", "thue-morse", "--len", "0"});
    CHECK(zero.code == 0);
    CHECK(zero.out == "\n");
}

TEST_CASE("check compares prefixes and reports the first mismatch") {
    CHECK(cli({"check", "diff(thue-morse)", "period-doubling", "--len", "4096"}).code == 0);

    const CliResult bad = cli({"check", "thue-morse", "inv(thue-morse)", "--len", "8"});
    CHECK(bad.code == 1);
    CHECK(bad.out == "0\n");

    const CliResult later = cli({"check", "evp(,0110)", "evp(,0111)", "--len", "16"});
    CHECK(later.code == 1);
    CHECK(later.out == "3\n");
}

TEST_CASE("detect prints certificates or none") {
    const CliResult hit =
        cli({"detect", "evp(1,01)", "--len", "32", "--max-period", "4", "--max-offset", "4"});
    CHECK(hit.code == 0);
    CHECK(hit.out == "offset=0 period=2 evidence_len=32\n");

    const CliResult miss =
        cli({"detect", "thue-morse", "--len", "64", "--max-period", "16", "--max-offset", "16"});
    CHECK(miss.code == 0);
    CHECK(miss.out == "none\n");
}

TEST_CASE("witness prints the orbit periodicity data") {
    const CliResult r = cli({"witness", "evp(10,0110)", "--d", "1", "--window", "64"});
    CHECK(r.code == 0);
    CHECK(r.out == "N1=4 N2=8 vertical_offset=4 vertical_period=4 window=64\n");

    const CliResult wrong = cli({"witness", "thue-morse", "--d", "1", "--window", "64"});
    CHECK(wrong.code == 2);
}

TEST_CASE("pascal rows in both forms") {
    const CliResult exact = cli({"pascal", "--d", "2", "--row", "4"});
    CHECK(exact.code == 0);
    CHECK(exact.out == "1 4 10 16 19 16 10 4 1\n");

    const CliResult parity = cli({"pascal", "--d", "2", "--row", "4", "--parity"});
    CHECK(parity.code == 0);
    CHECK(parity.out == parity_row(2, 4).bits.str() + "\n");
}

TEST_CASE("fst subcommands") {
    const CliResult delta = cli({"fst", "delta", "--input", "0110"});
    CHECK(delta.code == 0);
    CHECK(delta.out == "101\n");

    TempFile file("delta.fst");
    {
        std::ofstream out(file.path);
        out << Transducer::delta_fst().to_text();
    }
    const CliResult ran = cli({"fst", "run", file.path, "--input", "0110100110010110"});
    CHECK(ran.code == 0);
    CHECK(ran.out == "101110101011101\n");

    const CliResult missing = cli({"fst", "run", "no_such_file.fst", "--input", "01"});
    CHECK(missing.code == 3);
}

TEST_CASE("orbit writes a decodable pbm") {
    TempFile file("orbit.pbm");
    const CliResult r = cli({"orbit", "thue-morse", "--d", "1", "--rows", "32", "--cols", "48",
                             "--out", file.path});
    CHECK(r.code == 0);
    const std::string bytes = slurp(file.path);

    const OrbitMatrix expect = build_orbit(named("thue-morse"), 1, 32, 48);
    const auto direct = render_orbit_pbm(expect);
    CHECK(bytes == std::string(direct.begin(), direct.end()));

    const DecodedPbm decoded =
        decode_orbit_pbm(std::vector<std::uint8_t>(bytes.begin(), bytes.end()));
    CHECK(decoded.rows == 32);
    CHECK(decoded.bits[0] == materialize(named("thue-morse"), 48));
}

TEST_CASE("arrowhead writes the svg") {
    TempFile file("curve.svg");
    const CliResult r =
        cli({"arrowhead", "sierpinski", "--steps", "45", "--out", file.path});
    CHECK(r.code == 0);
    CHECK(slurp(file.path) == render_arrowhead_svg(materialize(named("sierpinski"), 45)));
}

TEST_CASE("orbit to stdout") {
    const CliResult r =
        cli({"orbit", "point(7)", "--d", "1", "--rows", "8", "--cols", "8", "--out", "-"});
    CHECK(r.code == 0);
    const auto direct = render_orbit_pbm(build_orbit(point(7), 1, 8, 8));
    CHECK(r.out == std::string(direct.begin(), direct.end()));
}

TEST_CASE("exit codes") {
    CHECK(cli({"no-such-command"}).code == 2);
    CHECK(cli({"eval", "thue-morse"}).code == 2);  // missing --len
    CHECK(cli({"eval", "diff(", "--len", "4"}).code == 2);

    const CliResult syntax = cli({"eval", "zap(1)", "--len", "4"});
    CHECK(syntax.code == 2);
    CHECK(syntax.err.find("line 1") != std::string::npos);

    // Resource guard trips deep in the library: a computation error.
    CHECK(cli({"pascal", "--d", "3", "--row", "4000000", "--parity"}).code == 3);

    CHECK(cli({"orbit", "thue-morse", "--d", "1", "--rows", "0", "--cols", "4", "--out", "-"})
              .code == 2);
}

TEST_CASE("help exits cleanly") {
    const CliResult r = cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("eval") != std::string::npos);
}
