#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "tripants/cli.hpp"

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult runCli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int status = tripants::cli::run(std::move(args), out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

} // namespace

TEST_CASE("neighbors prints nine tab-separated moves") {
    CliResult r = runCli({"neighbors", "a,b,ab"});
    CHECK(r.status == 0);
    CHECK(r.out ==
          "big:a\tb,ab,Bab\n"
          "small1:a\tb,ab,abb\n"
          "small2:a\tb,ab,bab\n"
          "big:b\ta,ab,abA\n"
          "small1:b\ta,ab,aba\n"
          "small2:b\ta,ab,aab\n"
          "big:ab\ta,b,AB\n"
          "small1:ab\ta,b,aB\n"
          "small2:ab\ta,b,Ab\n");

    // Round-trip: every printed tri-arc re-parses to an equal tri-arc.
    for (const std::string& line : lines(r.out)) {
        std::string triArcText = line.substr(line.find('\t') + 1);
        CHECK(tripants::TriArc::parse(triArcText).text() == triArcText);
    }
}

TEST_CASE("project prints the Farey triangle") {
    CliResult r = runCli({"project", "a,b,ab"});
    CHECK(r.status == 0);
    CHECK(r.out == "inf,0/1,1/1\n");
}

TEST_CASE("flip applies the requested move") {
    CHECK(runCli({"flip", "--arc", "ab", "--kind", "big", "a,b,ab"}).out == "a,b,AB\n");
    CHECK(runCli({"flip", "--arc", "ab", "--kind", "small1", "a,b,ab"}).out == "a,b,aB\n");
    CHECK(runCli({"flip", "--arc", "ab", "--kind", "small2", "a,b,ab"}).out == "a,b,Ab\n");
    // The arc may be given by either orientation.
    CHECK(runCli({"flip", "--arc", "BA", "--kind", "big", "a,b,ab"}).out == "a,b,AB\n");
}

TEST_CASE("push applies point-push words") {
    CHECK(runCli({"push", "a", "a,b,ab"}).out == "a,abA,aabA\n");
    CHECK(runCli({"push", "", "a,b,ab"}).out == "a,b,ab\n");
}

TEST_CASE("distance reports exact values, lower bounds, and not-found") {
    CHECK(runCli({"distance", "a,b,ab", "a,b,AB"}).out == "1\n");
    CHECK(runCli({"distance", "--max", "0", "a,b,ab", "a,b,AB"}).out == "not-found\n");
    CHECK(runCli({"distance", "--lower-bound", "a,b,ab", "b,ab,abb"}).out == "1\n");
    // --max and --lower-bound are mutually exclusive.
    CHECK(runCli({"distance", "--max", "3", "--lower-bound", "a,b,ab", "a,b,AB"}).status ==
          2);
}

TEST_CASE("farey-distance walks the dual tree") {
    CliResult r = runCli({"farey-distance", "inf,0/1,1/1", "1/2,1/3,2/5"});
    CHECK(r.status == 0);
    CHECK(r.out == "3\n");
    CHECK(runCli({"farey-distance", "inf,0/1,1/1", "inf,0/1,1/1"}).out == "0\n");
}

TEST_CASE("explore dumps DOT and JSONL") {
    CliResult dot = runCli({"explore", "--radius", "1", "--filter", "big", "a,b,ab"});
    CHECK(dot.status == 0);
    CHECK(dot.out ==
          "graph tripants {\n"
          "  \"a,b,ab\" [depth=0];\n"
          "  \"a,b,AB\" [depth=1];\n"
          "  \"a,ab,abA\" [depth=1];\n"
          "  \"b,ab,Bab\" [depth=1];\n"
          "  \"a,b,ab\" -- \"b,ab,Bab\" [kind=big, arc=\"a\"];\n"
          "  \"a,b,ab\" -- \"a,ab,abA\" [kind=big, arc=\"b\"];\n"
          "  \"a,b,ab\" -- \"a,b,AB\" [kind=big, arc=\"ab\"];\n"
          "}\n");

    CliResult jsonl = runCli(
        {"explore", "--radius", "1", "--filter", "big", "--format", "jsonl", "a,b,ab"});
    CHECK(jsonl.status == 0);
    CHECK(jsonl.out ==
          "{\"vertex\": \"a,b,ab\", \"depth\": 0, \"triangle\": \"inf,0/1,1/1\"}\n"
          "{\"vertex\": \"a,b,AB\", \"depth\": 1, \"triangle\": \"inf,0/1,1/1\"}\n"
          "{\"vertex\": \"a,ab,abA\", \"depth\": 1, \"triangle\": \"inf,0/1,1/1\"}\n"
          "{\"vertex\": \"b,ab,Bab\", \"depth\": 1, \"triangle\": \"inf,0/1,1/1\"}\n"
          "{\"from\": \"a,b,ab\", \"to\": \"b,ab,Bab\", \"kind\": \"big\", \"arc\": \"a\"}\n"
          "{\"from\": \"a,b,ab\", \"to\": \"a,ab,abA\", \"kind\": \"big\", \"arc\": \"b\"}\n"
          "{\"from\": \"a,b,ab\", \"to\": \"a,b,AB\", \"kind\": \"big\", \"arc\": \"ab\"}\n");

    // Identical invocations produce byte-identical output.
    CliResult again = runCli(
        {"explore", "--radius", "1", "--filter", "big", "--format", "jsonl", "a,b,ab"});
    CHECK(again.out == jsonl.out);
}

TEST_CASE("path prints a replayable move script") {
    CliResult r = runCli({"path", "a,b,ab", "a,abA,aabA"});
    CHECK(r.status == 0);
    CHECK(r.out ==
          "length\t2\n"
          "big:b\ta,ab,abA\n"
          "big:ab\ta,abA,aabA\n");
    CHECK(runCli({"path", "a,b,ab", "a,b,ab"}).out == "length\t0\n");
}

TEST_CASE("verify runs suites and reports per-check lines") {
    CliResult r = runCli({"verify", "--suite", "degree", "--radius", "2"});
    CHECK(r.status == 0);
    auto outLines = lines(r.out);
    REQUIRE(outLines.size() == 4);
    CHECK(outLines[0].substr(0, 7) == "[PASS] ");
    CHECK(outLines.back() == "suite degree: 3/3 passed");

    CHECK(runCli({"verify", "--suite", "no-such-suite"}).status == 2);
}

TEST_CASE("verify output is deterministic for a fixed seed") {
    CliResult first = runCli({"verify", "--suite", "freegroup", "--seed", "42"});
    CliResult second = runCli({"verify", "--suite", "freegroup", "--seed", "42"});
    CHECK(first.status == 0);
    CHECK(first.out == second.out);
    CHECK(runCli({"verify", "--suite", "freegroup", "--seed", "999"}).status == 0);
}

TEST_CASE("exit statuses distinguish parse and domain errors") {
    CHECK(runCli({"neighbors", "a,b,xy"}).status == 2);       // bad word character
    CHECK(runCli({"neighbors", "a,b"}).status == 2);          // malformed tri-arc
    CHECK(runCli({"neighbors", "a,a,b"}).status == 1);        // NotDistinct
    CHECK(runCli({"flip", "--arc", "bab", "--kind", "big", "a,b,ab"}).status == 1);
    CHECK(runCli({"explore", "--radius", "9", "a,b,ab"}).status == 1); // RadiusCap
    CHECK(runCli({"distance", "--max", "13", "a,b,ab", "a,b,AB"}).status == 1);
    CHECK(runCli({"frobnicate"}).status == 2);
    CHECK(runCli({}).status == 2);

    CliResult err = runCli({"neighbors", "a,a,b"});
    CHECK(err.err.find("NotDistinct") != std::string::npos);
}

TEST_CASE("parsers reject arbitrary junk with Error, never crash") {
    testsupport::Rng rng(601);
    const std::string charset = "aAbB,/-019xy .";
    for (int i = 0; i < 3000; ++i) {
        std::string s;
        std::size_t len = rng() % 14;
        for (std::size_t j = 0; j < len; ++j)
            s += charset[rng() % charset.size()];
        try {
            tripants::TriArc::parse(s);
        } catch (const tripants::Error&) {
        }
        try {
            tripants::FareyTriangle::parse(s);
        } catch (const tripants::Error&) {
        }
        try {
            tripants::Slope::parse(s);
        } catch (const tripants::Error&) {
        }
        try {
            tripants::PushWord::parse(s);
        } catch (const tripants::Error&) {
        }
    }
    CHECK(true); // reaching here means no crash and no foreign exception
}

TEST_CASE("help is available") {
    CliResult r = runCli({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("neighbors") != std::string::npos);
    CHECK(r.out.find("verify") != std::string::npos);
}
