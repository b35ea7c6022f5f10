#include <doctest.h>

#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "support.hpp"
#include "tripants/farey.hpp"

using namespace tripants;
using testsupport::errorCode;

namespace {
FreeWord w(const char* text) { return parseWord(text); }
Slope sl(const char* text) { return Slope::parse(text); }
FareyTriangle tri(const char* text) { return FareyTriangle::parse(text); }

// Independent oracle: BFS distances over the dual graph generated by
// dualNeighbors, valid for pairs whose tree path stays in the explored ball.
std::map<std::string, int> bfsDualDistances(const FareyTriangle& from, int radius) {
    std::map<std::string, int> dist{{from.text(), 0}};
    std::queue<FareyTriangle> queue;
    queue.push(from);
    while (!queue.empty()) {
        FareyTriangle t = queue.front();
        queue.pop();
        int d = dist.at(t.text());
        if (d == radius)
            continue;
        for (const FareyTriangle& n : dualNeighbors(t))
            if (dist.emplace(n.text(), d + 1).second)
                queue.push(n);
    }
    return dist;
}
} // namespace

TEST_CASE("BigInt arithmetic agrees with native integers") {
    testsupport::Rng rng(301);
    for (int i = 0; i < 4000; ++i) {
        long long a = static_cast<long long>(rng() % 2000000000ull) - 1000000000;
        long long b = static_cast<long long>(rng() % 2000000000ull) - 1000000000;
        CHECK((BigInt(a) + BigInt(b)).str() == std::to_string(a + b));
        CHECK((BigInt(a) - BigInt(b)).str() == std::to_string(a - b));
        CHECK((BigInt(a) * BigInt(b)).str() == std::to_string(a * b));
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
        CHECK(BigInt::gcd(a, b).str() == std::to_string(std::gcd(a, b)));
    }
}

TEST_CASE("BigInt handles numbers far beyond 64 bits") {
    BigInt x = BigInt::parse("123456789012345678901234567890");
    CHECK(x.str() == "123456789012345678901234567890");
    CHECK((-x).str() == "-123456789012345678901234567890");
    CHECK((x * x).str() == "15241578753238836750495351562536198787501905199875019052100");
    CHECK((x - x).isZero());
    CHECK((x + x - x) == x);
    CHECK(BigInt::parse("-0").isZero());
    CHECK(errorCode([] { BigInt::parse("12x"); }) == "ParseError");
    CHECK(errorCode([] { BigInt::parse(""); }) == "ParseError");
}

TEST_CASE("slopeOf maps arcs to reduced slopes") {
    CHECK(slopeOf(w("a")) == Slope::infinity());
    CHECK(slopeOf(w("ab")) == sl("1/1"));
    CHECK(errorCode([] { slopeOf(commutator(w("a"), w("b"))); }) == "NotPrimitive");
    CHECK(errorCode([] { slopeOf(w("aa")); }) == "NotPrimitive");
    CHECK(slopeOf(w("aB")) == sl("-1/1"));
}

TEST_CASE("slope parsing and normalization") {
    CHECK(sl("inf").text() == "inf");
    CHECK(sl("0/1").text() == "0/1");
    CHECK(sl("2").text() == "2/1");
    CHECK(sl("1/-2").text() == "-1/2");
    CHECK(sl("-1/0") == Slope::infinity());
    CHECK(errorCode([] { Slope::parse("4/2"); }) == "NotPrimitive");
    CHECK(errorCode([] { Slope::parse("0/0"); }) == "NotPrimitive");
    CHECK(errorCode([] { Slope::parse("x/2"); }) == "ParseError");
}

TEST_CASE("slope order puts infinity first, then rational order") {
    CHECK(Slope::infinity() < sl("-5/1"));
    CHECK(sl("-1/1") < sl("0/1"));
    CHECK(sl("1/3") < sl("1/2"));
    CHECK(sl("1/2") < sl("2/3"));
}

TEST_CASE("isFareyEdge is the unimodularity test") {
    CHECK(isFareyEdge(sl("0/1"), Slope::infinity()));
    CHECK(isFareyEdge(sl("1/3"), sl("1/2")));
    CHECK_FALSE(isFareyEdge(sl("1/3"), sl("2/3")));
}

TEST_CASE("makeTriangle validates pairwise adjacency") {
    CHECK(makeTriangle(sl("0/1"), sl("1/1"), Slope::infinity()).text() == "inf,0/1,1/1");
    CHECK_NOTHROW(makeTriangle(sl("1/2"), sl("1/3"), sl("2/5")));
    CHECK(errorCode([] { makeTriangle(sl("0/1"), sl("1/1"), sl("2/1")); }) ==
          "NotATriangle");
    CHECK(errorCode([] { makeTriangle(sl("0/1"), sl("0/1"), sl("1/1")); }) ==
          "NotATriangle");
}

TEST_CASE("project sends tri-arcs onto Farey triangles") {
    CHECK(project(baseTriArc()).text() == "inf,0/1,1/1");
    CHECK(project(TriArc::parse("a,b,ba")) == tri("inf,0/1,1/1"));
    CHECK(project(TriArc::parse("a,b,aB")).text() == "inf,-1/1,0/1");
}

TEST_CASE("neighborAcross picks mediant or difference") {
    FareyTriangle base = tri("inf,0/1,1/1");
    CHECK(neighborAcross(base, FareyEdge(sl("0/1"), Slope::infinity())).text() ==
          "inf,-1/1,0/1");
    CHECK(neighborAcross(base, FareyEdge(sl("0/1"), sl("1/1"))).text() == "0/1,1/2,1/1");
    CHECK(neighborAcross(base, FareyEdge(sl("1/1"), Slope::infinity())).text() ==
          "inf,1/1,2/1");
    CHECK(errorCode([&] { neighborAcross(base, FareyEdge(sl("1/2"), sl("1/3"))); }) ==
          "EdgeNotInTriangle");

    // Involution across a fixed edge.
    for (const FareyEdge& e : base.edges())
        CHECK(neighborAcross(neighborAcross(base, e), e) == base);
}

TEST_CASE("dualNeighbors yields three distinct adjacent triangles") {
    FareyTriangle base = tri("inf,0/1,1/1");
    auto ns = dualNeighbors(base);
    std::set<std::string> texts;
    for (const auto& n : ns)
        texts.insert(n.text());
    CHECK(texts == std::set<std::string>{"inf,-1/1,0/1", "inf,1/1,2/1", "0/1,1/2,1/1"});
    for (const auto& n : ns) {
        bool mutualNeighbor = false;
        for (const auto& back : dualNeighbors(n))
            if (back == base)
                mutualNeighbor = true;
        CHECK(mutualNeighbor);
    }
}

TEST_CASE("separatingEdge locates the crossing edge by exact sign tests") {
    FareyTriangle base = tri("inf,0/1,1/1");
    CHECK(separatingEdge(base, tri("inf,-1/1,0/1")).text() == "inf,0/1");
    CHECK(separatingEdge(base, tri("1/2,1/3,2/5")).text() == "0/1,1/1");
    CHECK(separatingEdge(base, tri("inf,1/1,2/1")).text() == "inf,1/1");
    CHECK(errorCode([&] { separatingEdge(base, base); }) == "SameTriangle");
}

TEST_CASE("dualDistance walks the dual tree") {
    FareyTriangle base = tri("inf,0/1,1/1");
    CHECK(dualDistance(base, base) == 0);
    CHECK(dualDistance(base, tri("inf,-1/1,0/1")) == 1);
    CHECK(dualDistance(base, tri("1/2,1/3,2/5")) == 3);

    // The explicit worked path, step by step.
    FareyTriangle step1 = neighborAcross(base, separatingEdge(base, tri("1/2,1/3,2/5")));
    CHECK(step1 == tri("0/1,1/2,1/1"));
    FareyTriangle step2 = neighborAcross(step1, separatingEdge(step1, tri("1/2,1/3,2/5")));
    CHECK(step2 == tri("0/1,1/3,1/2"));
    FareyTriangle step3 = neighborAcross(step2, separatingEdge(step2, tri("1/2,1/3,2/5")));
    CHECK(step3 == tri("1/2,1/3,2/5"));
}

TEST_CASE("dualDistance agrees with the BFS oracle near the base triangle") {
    FareyTriangle base = tri("inf,0/1,1/1");
    auto oracle = bfsDualDistances(base, 5);
    CHECK(oracle.size() == 3 * (1 << 5) - 2); // trivalent tree ball

    std::vector<FareyTriangle> triangles;
    for (const auto& [text, dist] : oracle)
        triangles.push_back(FareyTriangle::parse(text));
    for (const auto& t : triangles) {
        CHECK(dualDistance(base, t) == oracle.at(t.text()));
        CHECK(dualDistance(t, base) == oracle.at(t.text())); // symmetry
    }
}

TEST_CASE("dualDistance is a metric on sampled triangle triples") {
    FareyTriangle base = tri("inf,0/1,1/1");
    auto oracle = bfsDualDistances(base, 4);
    std::vector<FareyTriangle> triangles;
    for (const auto& [text, dist] : oracle)
        triangles.push_back(FareyTriangle::parse(text));
    testsupport::Rng rng(302);
    for (int i = 0; i < 60; ++i) {
        const auto& a = triangles[rng() % triangles.size()];
        const auto& b = triangles[rng() % triangles.size()];
        const auto& c = triangles[rng() % triangles.size()];
        int ab = dualDistance(a, b);
        int ba = dualDistance(b, a);
        int bc = dualDistance(b, c);
        int ac = dualDistance(a, c);
        CHECK(ab == ba);
        CHECK((ab == 0) == (a == b));
        CHECK(ac <= ab + bc);
    }
}

TEST_CASE("FareyEdge rejects non-adjacent endpoints") {
    CHECK(errorCode([] { FareyEdge(sl("1/3"), sl("2/3")); }) == "NotAnEdge");
}
