#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tripants/explorer.hpp"
#include "tripants/farey.hpp"
#include "tripants/freegroup.hpp"
#include "tripants/pushmap.hpp"
#include "tripants/triarc.hpp"

namespace tripants::verify {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;

    int passedCount() const {
        int n = 0;
        for (const CheckResult& c : checks)
            n += c.pass ? 1 : 0;
        return n;
    }
    bool allPassed() const { return passedCount() == static_cast<int>(checks.size()); }
};

struct Options {
    int radius = 4;
    std::uint64_t seed = 12345;
};

namespace detail {

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void expect(bool cond, const std::string& message) {
    if (!cond)
        throw CheckFailure(message);
}

class Checker {
public:
    explicit Checker(std::string suite) { report_.suite = std::move(suite); }

    void check(const std::string& name, const std::function<std::string()>& body) {
        try {
            report_.checks.push_back({name, true, body()});
        } catch (const std::exception& e) {
            report_.checks.push_back({name, false, e.what()});
        }
    }

    Report take() { return std::move(report_); }

private:
    Report report_;
};

using Rng = std::mt19937_64;

inline FreeWord randomWord(Rng& rng, std::size_t maxLength) {
    std::size_t length = rng() % (maxLength + 1);
    std::vector<Letter> letters;
    int last = -1;
    for (std::size_t i = 0; i < length; ++i) {
        int code;
        do {
            code = static_cast<int>(rng() % 4);
        } while (last >= 0 && code == (last ^ 1));
        letters.push_back(Letter::fromCode(static_cast<unsigned char>(code)));
        last = code;
    }
    return reduce(letters);
}

inline TriArc randomReachable(Rng& rng, int steps) {
    TriArc t = baseTriArc();
    for (int i = 0; i < steps; ++i) {
        auto ns = neighbors(t);
        t = ns[rng() % ns.size()].triArc;
    }
    return t;
}

inline PushWord randomPushWord(Rng& rng, std::size_t length) {
    PushWord w;
    for (std::size_t i = 0; i < length; ++i)
        w.gens.push_back(static_cast<PushGen>(rng() % 4));
    return w;
}

inline std::vector<FreeWord> allWordsUpTo(std::size_t maxLength) {
    std::vector<FreeWord> out{FreeWord()};
    std::vector<std::vector<Letter>> level{{}};
    for (std::size_t len = 1; len <= maxLength; ++len) {
        std::vector<std::vector<Letter>> next;
        for (const auto& prefix : level)
            for (unsigned char code = 0; code < 4; ++code) {
                if (!prefix.empty() && prefix.back().code() == (code ^ 1))
                    continue;
                auto word = prefix;
                word.push_back(Letter::fromCode(code));
                out.push_back(reduce(word));
                next.push_back(std::move(word));
            }
        level = std::move(next);
    }
    return out;
}

inline std::vector<PushWord> allPushWordsUpTo(std::size_t maxLength) {
    std::vector<PushWord> out{PushWord{}};
    std::size_t levelStart = 0;
    for (std::size_t len = 1; len <= maxLength; ++len) {
        std::size_t levelEnd = out.size();
        for (std::size_t i = levelStart; i < levelEnd; ++i)
            for (int g = 0; g < 4; ++g) {
                PushWord w = out[i];
                w.gens.push_back(static_cast<PushGen>(g));
                out.push_back(std::move(w));
            }
        levelStart = levelEnd;
    }
    return out;
}

struct DualBall {
    std::vector<FareyTriangle> triangles;
    std::map<std::string, int> depth;
};

inline DualBall dualBall(const FareyTriangle& base, int radius) {
    DualBall ball;
    ball.triangles.push_back(base);
    ball.depth.emplace(base.text(), 0);
    std::queue<FareyTriangle> queue;
    queue.push(base);
    while (!queue.empty()) {
        FareyTriangle t = queue.front();
        queue.pop();
        int d = ball.depth.at(t.text());
        if (d == radius)
            continue;
        for (const FareyTriangle& n : dualNeighbors(t))
            if (ball.depth.emplace(n.text(), d + 1).second) {
                ball.triangles.push_back(n);
                queue.push(n);
            }
    }
    return ball;
}

// BFS distances over the explicit ball graph; exact for pairs inside the
// ball because tree geodesics through the ball stay in the ball.
inline std::vector<std::vector<int>> dualBallAllDistances(const DualBall& ball) {
    std::size_t n = ball.triangles.size();
    std::vector<std::vector<int>> adj(n);
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < n; ++i)
        index.emplace(ball.triangles[i].text(), static_cast<int>(i));
    for (std::size_t i = 0; i < n; ++i)
        for (const FareyTriangle& nb : dualNeighbors(ball.triangles[i])) {
            auto it = index.find(nb.text());
            if (it != index.end())
                adj[i].push_back(it->second);
        }
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (std::size_t s = 0; s < n; ++s) {
        std::queue<int> queue;
        dist[s][s] = 0;
        queue.push(static_cast<int>(s));
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int v : adj[u])
                if (dist[s][v] < 0) {
                    dist[s][v] = dist[s][u] + 1;
                    queue.push(v);
                }
        }
    }
    return dist;
}

// Fibonacci slopes s_k = F_k / F_(k+1) with F_(-1) = 1, F_0 = 0. Consecutive
// triples are Farey triangles and form a geodesic ray in the dual tree
// starting at the base triangle {inf, 0/1, 1/1}.
inline std::vector<BigInt> fibonacciFrom(int count) {
    std::vector<BigInt> f; // f[i] = F_(i-1)
    f.push_back(1);
    f.push_back(0);
    while (static_cast<int>(f.size()) < count)
        f.push_back(f[f.size() - 1] + f[f.size() - 2]);
    return f;
}

inline Slope fibSlope(const std::vector<BigInt>& f, int k) {
    return Slope(f[k + 1], f[k + 2]); // F_k / F_(k+1)
}

inline FareyTriangle fibTriangle(const std::vector<BigInt>& f, int k) {
    return FareyTriangle(fibSlope(f, k), fibSlope(f, k + 1), fibSlope(f, k + 2));
}

// n small flips from the base, steering the projection along the Fibonacci
// ray; the result realizes dual distance exactly n.
inline TriArc fibonacciWalk(int n) {
    auto f = fibonacciFrom(n + 4);
    TriArc t = baseTriArc();
    for (int i = 0; i < n; ++i) {
        Slope drop = fibSlope(f, i - 1);
        const ArcClass* arc = nullptr;
        for (const ArcClass& a : t.arcs())
            if (slopeOf(a.canon()) == drop)
                arc = &a;
        expect(arc != nullptr, "fibonacci walk lost the slope to drop");
        t = smallFlips(t, *arc).first;
    }
    return t;
}

inline std::string plural(std::size_t n, const char* singular, const char* pluralForm = nullptr) {
    if (n == 1)
        return std::to_string(n) + " " + singular;
    return std::to_string(n) + " " + (pluralForm ? pluralForm : std::string(singular) + "s");
}

} // namespace detail

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

inline Report suiteFreegroup(const Options& options) {
    using namespace detail;
    Checker checker("freegroup");
    Rng rng(options.seed);

    checker.check("reduce-idempotent", [&] {
        for (int i = 0; i < 2000; ++i) {
            std::vector<Letter> letters;
            std::size_t len = rng() % 30;
            for (std::size_t j = 0; j < len; ++j)
                letters.push_back(Letter::fromCode(static_cast<unsigned char>(rng() % 4)));
            FreeWord once = reduce(letters);
            std::vector<Letter> again;
            for (std::size_t j = 0; j < once.size(); ++j)
                again.push_back(once.letter(j));
            expect(reduce(again) == once, "reduce(reduce(s)) != reduce(s)");
        }
        return "2000 raw letter sequences";
    });

    checker.check("invert-involution-antihomomorphism", [&] {
        for (int i = 0; i < 2000; ++i) {
            FreeWord u = randomWord(rng, 16);
            FreeWord v = randomWord(rng, 16);
            expect(invert(invert(u)) == u, "invert not involutive");
            expect(invert(concat(u, v)) == concat(invert(v), invert(u)),
                   "invert not an antihomomorphism");
        }
        return "2000 word pairs";
    });

    checker.check("concat-associative", [&] {
        for (int i = 0; i < 10000; ++i) {
            FreeWord u = randomWord(rng, 12);
            FreeWord v = randomWord(rng, 12);
            FreeWord x = randomWord(rng, 12);
            expect(concat(concat(u, v), x) == concat(u, concat(v, x)),
                   "concat not associative");
        }
        return "10000 word triples";
    });

    checker.check("conjugacy-brute-force", [&] {
        auto conjugators = allWordsUpTo(6);
        auto brute = [&](const FreeWord& u, const FreeWord& v) {
            for (const FreeWord& c : conjugators)
                if (concat(concat(c, u), invert(c)) == v)
                    return true;
            return false;
        };
        int positives = 0;
        for (int i = 0; i < 120; ++i) {
            FreeWord u = randomWord(rng, 6);
            FreeWord v = randomWord(rng, 6);
            expect(isConjugate(u, v) == brute(u, v), "disagrees with brute force");
            expect(isConjugate(u, u), "not reflexive");
            expect(isConjugate(u, v) == isConjugate(v, u), "not symmetric");
            FreeWord c = randomWord(rng, 2);
            FreeWord conjugated = concat(concat(c, u), invert(c));
            if (conjugated.size() <= 6) {
                expect(isConjugate(u, conjugated), "misses a constructed conjugate");
                ++positives;
            }
        }
        expect(positives > 20, "too few positive cases sampled");
        return "120 pairs vs " + plural(conjugators.size(), "conjugator");
    });

    checker.check("abelianize-homomorphism", [&] {
        for (int i = 0; i < 3000; ++i) {
            FreeWord u = randomWord(rng, 20);
            FreeWord v = randomWord(rng, 20);
            expect(abelianize(concat(u, v)) == abelianize(u) + abelianize(v),
                   "abelianize not additive");
        }
        return "3000 word pairs";
    });

    checker.check("basis-implies-unimodular", [&] {
        int bases = 0;
        for (int i = 0; i < 400; ++i) {
            FreeWord u = randomWord(rng, 8);
            FreeWord v = randomWord(rng, 8);
            if (!isBasis(u, v))
                continue;
            ++bases;
            AbelianImage au = abelianize(u);
            AbelianImage av = abelianize(v);
            long long det = au.p * av.q - au.q * av.p;
            expect(det == 1 || det == -1, "basis with non-unimodular abelianization");
        }
        for (int i = 0; i < 300; ++i) {
            FreeWord u = wordG1();
            FreeWord v = wordG2();
            for (int j = 0; j < 6; ++j)
                switch (rng() % 4) {
                case 0: u = concat(u, v); break;
                case 1: v = concat(v, u); break;
                case 2: u = invert(u); break;
                default: std::swap(u, v); break;
                }
            expect(isBasis(u, v), "Nielsen-built pair not recognized as basis");
            AbelianImage au = abelianize(u);
            AbelianImage av = abelianize(v);
            long long det = au.p * av.q - au.q * av.p;
            expect(det == 1 || det == -1, "basis with non-unimodular abelianization");
            ++bases;
        }
        return plural(bases, "basis pair") + " checked";
    });

    checker.check("substitute-preserves-bases", [&] {
        for (int i = 0; i < 200; ++i) {
            FreeWord u = wordG1();
            FreeWord v = wordG2();
            for (int j = 0; j < 5; ++j)
                switch (rng() % 3) {
                case 0: u = concat(u, v); break;
                case 1: v = concat(v, u); break;
                default: u = invert(u); break;
                }
            expect(isBasis(substitute(u, v, wordG1()), substitute(u, v, wordG2())),
                   "standard basis image not a basis");
            FreeWord x = concat(wordG1(), wordG2());
            expect(isBasis(substitute(u, v, x), substitute(u, v, wordG2())),
                   "basis image not a basis");
        }
        return "200 basis substitutions";
    });

    return checker.take();
}

inline Report suiteTriarc(const Options& options) {
    using namespace detail;
    Checker checker("triarc");
    Rng rng(options.seed);

    checker.check("decomposition-multiplicity", [&] {
        ExplorationBall ball = exploreBall(baseTriArc(), 3, EdgeFilter::All);
        for (const BallVertex& v : ball.vertices())
            for (const ArcClass& target : v.triArc.arcs()) {
                std::vector<ArcClass> others;
                for (const ArcClass& a : v.triArc.arcs())
                    if (!(a == target))
                        others.push_back(a);
                int hits = 0;
                std::vector<std::pair<FreeWord, FreeWord>> found;
                for (int swap = 0; swap < 2; ++swap)
                    for (int sx = 0; sx < 2; ++sx)
                        for (int sy = 0; sy < 2; ++sy) {
                            FreeWord x = others[swap].canon();
                            FreeWord y = others[1 - swap].canon();
                            if (sx)
                                x = invert(x);
                            if (sy)
                                y = invert(y);
                            FreeWord prod = concat(x, y);
                            if (prod == target.canon() || prod == invert(target.canon())) {
                                ++hits;
                                found.emplace_back(x, y);
                            }
                        }
                expect(hits == 2, "expected exactly one match up to mirror symmetry");
                expect(found[1].first == invert(found[0].second) &&
                           found[1].second == invert(found[0].first),
                       "matches are not mirror images");
            }
        return "all arcs of " + plural(ball.vertices().size(), "vertex", "vertices") +
               " in the radius-3 ball";
    });

    checker.check("big-flip-involution", [&] {
        for (int i = 0; i < 1000; ++i) {
            TriArc t = randomReachable(rng, static_cast<int>(rng() % 5));
            const ArcClass& target = t.arcs()[rng() % 3];
            auto [flipped, replaced] = bigFlip(t, target);
            expect(bigFlip(flipped, replaced).first == t, "double big flip moved the vertex");
        }
        return "1000 random reachable tri-arcs";
    });

    checker.check("non-commutation-witness", [&] {
        TriArc base = baseTriArc();
        ArcClass ab(parseWord("ab"));
        ArcClass b(parseWord("b"));
        TriArc order1 = bigFlip(bigFlip(base, ab).first, b).first;
        TriArc order2 = bigFlip(bigFlip(base, b).first, ab).first;
        expect(order1 == TriArc::parse("ba,Aba,a"), "first order mismatch");
        expect(order2 == TriArc::parse("aabA,abA,a"), "second order mismatch");
        expect(!(order1 == order2), "orders unexpectedly commute");
        // Big flips along every pair of distinct arcs fail to commute.
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j)
                    continue;
                const ArcClass& first = base.arcs()[i];
                const ArcClass& second = base.arcs()[j];
                TriArc one = bigFlip(bigFlip(base, first).first, second).first;
                TriArc two = bigFlip(bigFlip(base, second).first, first).first;
                expect(!(one == two), "flips along " + first.text() + " and " +
                                          second.text() + " commute");
            }
        return "flip orders give a,AB,Aba vs a,abA,aabA; no arc pair commutes";
    });

    checker.check("small-flip-pairing", [&] {
        ExplorationBall ball = exploreBall(baseTriArc(), 2, EdgeFilter::All);
        for (const BallVertex& v : ball.vertices())
            for (const ArcClass& target : v.triArc.arcs()) {
                auto [s1, s2] = smallFlips(v.triArc, target);
                expect(!(s1 == s2), "small flips coincide");
                const ArcClass* fresh1 = nullptr;
                for (const ArcClass& a : s1.arcs())
                    if (!v.triArc.contains(a))
                        fresh1 = &a;
                expect(fresh1 != nullptr, "small flip kept all arcs");
                expect(bigFlip(s1, *fresh1).first == s2,
                       "small-flip pair not exchanged by a big flip");
                expect(project(s1) == project(s2), "small-flip pair projections differ");
            }
        return "all arcs of " + plural(ball.vertices().size(), "vertex", "vertices") +
               " in the radius-2 ball";
    });

    checker.check("basis-preservation", [&] {
        ExplorationBall ball = exploreBall(baseTriArc(), 3, EdgeFilter::All);
        for (const BallVertex& v : ball.vertices()) {
            const auto& a = v.triArc.arcs();
            expect(isBasis(a[0].canon(), a[1].canon()) &&
                       isBasis(a[0].canon(), a[2].canon()) &&
                       isBasis(a[1].canon(), a[2].canon()),
                   "arc pair fails the basis test at " + v.triArc.text());
        }
        return "all arc pairs over " + plural(ball.vertices().size(), "vertex", "vertices");
    });

    checker.check("flip-closure", [&] {
        ExplorationBall ball = exploreBall(baseTriArc(), 2, EdgeFilter::All);
        std::size_t revalidated = 0;
        for (const BallVertex& v : ball.vertices()) {
            auto ns = neighbors(v.triArc);
            expect(ns.size() == 9, "neighbor count is not 9");
            std::set<TriArc> distinct;
            for (const Neighbor& n : ns) {
                distinct.insert(n.triArc);
                const auto& a = n.triArc.arcs();
                makeTriArc(a[0].canon(), a[1].canon(), a[2].canon()); // throws if invalid
                ++revalidated;
            }
            expect(distinct.size() == 9, "neighbors are not distinct");
        }
        return plural(revalidated, "flip result") + " revalidated";
    });

    return checker.take();
}

inline Report suiteDegree(const Options& options) {
    using namespace detail;
    Checker checker("degree");
    int radius = options.radius;

    checker.check("interior-degree-9", [&] {
        ExplorationBall ball = exploreBall(baseTriArc(), radius, EdgeFilter::All);
        std::size_t interior = 0;
        for (const BallVertex& v : ball.vertices()) {
            if (v.depth >= radius)
                continue;
            ++interior;
            auto ns = neighbors(v.triArc);
            std::set<TriArc> distinct;
            for (const Neighbor& n : ns) {
                distinct.insert(n.triArc);
                expect(ball.indexOf(n.triArc).has_value(),
                       "induced ball is missing a neighbor");
            }
            expect(distinct.size() == 9, "interior vertex degree != 9");
        }
        return plural(interior, "interior vertex", "interior vertices") + " at radius " +
               std::to_string(radius);
    });

    checker.check("small-ball-shapes", [&] {
        ExplorationBall zero = exploreBall(baseTriArc(), 0, EdgeFilter::All);
        expect(zero.vertices().size() == 1 && zero.edges().empty(),
               "radius-0 ball is not a point");
        ExplorationBall one = exploreBall(baseTriArc(), 1, EdgeFilter::All);
        expect(one.vertices().size() == 10, "radius-1 ball does not have 10 vertices");
        int amongNeighbors = 0;
        for (const BallEdge& e : one.edges())
            if (e.from != 0)
                ++amongNeighbors;
        expect(amongNeighbors >= 3, "fewer than 3 edges among the 9 neighbors");
        return "radius-0 and radius-1 balls";
    });

    checker.check("monotone-growth", [&] {
        ExplorationBall ball = exploreBall(baseTriArc(), std::min(radius, 4),
                                           EdgeFilter::All);
        std::map<int, std::size_t> perDepth;
        for (const BallVertex& v : ball.vertices())
            ++perDepth[v.depth];
        for (int d = 0; d <= ball.radius(); ++d)
            expect(perDepth[d] > 0, "empty BFS level " + std::to_string(d));
        return plural(perDepth.size(), "level") + ", all nonempty";
    });

    return checker.take();
}

inline Report suiteProjection(const Options& options) {
    using namespace detail;
    Checker checker("projection");
    int radius = options.radius;

    checker.check("project-validity", [&] {
        ExplorationBall ball = exploreBall(baseTriArc(), radius, EdgeFilter::All);
        for (const BallVertex& v : ball.vertices())
            project(v.triArc); // constructor enforces pairwise unimodularity
        return plural(ball.vertices().size(), "vertex", "vertices") + " projected";
    });

    checker.check("big-flips-collapse", [&] {
        ExplorationBall ball = exploreBall(baseTriArc(), radius, EdgeFilter::All);
        std::size_t bigEdges = 0;
        for (const BallEdge& e : ball.edges()) {
            if (e.move.kind != MoveKind::Big)
                continue;
            ++bigEdges;
            expect(project(ball.vertices()[e.from].triArc) ==
                       project(ball.vertices()[e.to].triArc),
                   "big flip changed the projection");
        }
        return plural(bigEdges, "big edge") + " collapsed";
    });

    checker.check("small-flips-step-dual-edges", [&] {
        ExplorationBall ball = exploreBall(baseTriArc(), radius, EdgeFilter::All);
        std::size_t smallEdges = 0;
        for (const BallEdge& e : ball.edges()) {
            if (e.move.kind == MoveKind::Big)
                continue;
            ++smallEdges;
            FareyTriangle p1 = project(ball.vertices()[e.from].triArc);
            FareyTriangle p2 = project(ball.vertices()[e.to].triArc);
            expect(!(p1 == p2), "small flip fixed the projection");
            int shared = 0;
            for (const Slope& s : p1.vertices())
                if (p2.contains(s))
                    ++shared;
            expect(shared == 2, "projections do not share exactly two slopes");
            bool adjacent = false;
            for (const FareyTriangle& n : dualNeighbors(p1))
                if (n == p2)
                    adjacent = true;
            expect(adjacent, "projections not dual-adjacent");
        }
        return plural(smallEdges, "small edge") + " checked";
    });

    checker.check("local-surjectivity", [&] {
        int r = std::min(radius, 4);
        ExplorationBall ball = exploreBall(baseTriArc(), r, EdgeFilter::All);
        DualBall dual = dualBall(project(baseTriArc()), r);
        std::map<std::string, int> projectionDepth; // earliest tri-pants depth
        for (const BallVertex& v : ball.vertices()) {
            std::string key = project(v.triArc).text();
            auto it = projectionDepth.find(key);
            if (it == projectionDepth.end() || v.depth < it->second)
                projectionDepth[key] = v.depth;
        }
        for (const FareyTriangle& t : dual.triangles) {
            auto it = projectionDepth.find(t.text());
            expect(it != projectionDepth.end(),
                   "dual vertex " + t.text() + " not covered at radius " +
                       std::to_string(r));
            expect(it->second <= dual.depth.at(t.text()),
                   "dual vertex covered only deeper than its dual distance");
        }
        return plural(dual.triangles.size(), "dual vertex", "dual vertices") + " covered at radius " +
               std::to_string(r);
    });

    return checker.take();
}

inline Report suiteFarey(const Options& options) {
    using namespace detail;
    Checker checker("farey");
    Rng rng(options.seed);

    checker.check("walk-equals-bfs-oracle", [&] {
        DualBall ball = dualBall(FareyTriangle::parse("inf,0/1,1/1"), 8);
        auto dist = dualBallAllDistances(ball);
        std::size_t n = ball.triangles.size();
        expect(n == 3 * (1 << 8) - 2, "unexpected radius-8 dual ball size");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                expect(dist[i][j] == dist[j][i] && dist[i][j] > 0, "oracle disagreement");
                expect(dualDistance(ball.triangles[i], ball.triangles[j]) == dist[i][j],
                       "walk distance differs from BFS oracle");
            }
        return "all pairs over " + plural(n, "triangle") + " within dual radius 8";
    });

    checker.check("worked-example-distance-3", [&] {
        FareyTriangle base = FareyTriangle::parse("inf,0/1,1/1");
        FareyTriangle target = FareyTriangle::parse("1/2,1/3,2/5");
        expect(dualDistance(base, target) == 3, "distance is not 3");
        FareyTriangle step1 = neighborAcross(base, separatingEdge(base, target));
        FareyTriangle step2 = neighborAcross(step1, separatingEdge(step1, target));
        FareyTriangle step3 = neighborAcross(step2, separatingEdge(step2, target));
        expect(step1 == FareyTriangle::parse("0/1,1/2,1/1"), "wrong first step");
        expect(step2 == FareyTriangle::parse("0/1,1/3,1/2"), "wrong second step");
        expect(step3 == target, "walk does not reach the target in 3 steps");
        return "base to 1/2,1/3,2/5 via the pinned path";
    });

    checker.check("walk-strictly-decreases", [&] {
        DualBall ball = dualBall(FareyTriangle::parse("inf,0/1,1/1"), 6);
        for (int i = 0; i < 150; ++i) {
            const FareyTriangle& from = ball.triangles[rng() % ball.triangles.size()];
            const FareyTriangle& to = ball.triangles[rng() % ball.triangles.size()];
            FareyTriangle cur = from;
            int remaining = dualDistance(cur, to);
            while (!(cur == to)) {
                cur = neighborAcross(cur, separatingEdge(cur, to));
                int next = dualDistance(cur, to);
                expect(next == remaining - 1, "walk step did not decrease distance by 1");
                remaining = next;
            }
        }
        return "150 sampled walks";
    });

    checker.check("metric-properties", [&] {
        DualBall ball = dualBall(FareyTriangle::parse("inf,0/1,1/1"), 5);
        for (int i = 0; i < 150; ++i) {
            const FareyTriangle& a = ball.triangles[rng() % ball.triangles.size()];
            const FareyTriangle& b = ball.triangles[rng() % ball.triangles.size()];
            const FareyTriangle& c = ball.triangles[rng() % ball.triangles.size()];
            int ab = dualDistance(a, b);
            expect(ab == dualDistance(b, a), "not symmetric");
            expect((ab == 0) == (a == b), "identity of indiscernibles fails");
            expect(dualDistance(a, c) <= ab + dualDistance(b, c),
                   "triangle inequality fails");
        }
        return "150 sampled triples";
    });

    checker.check("dual-tree-trivalent", [&] {
        DualBall ball = dualBall(FareyTriangle::parse("inf,0/1,1/1"), 6);
        std::size_t edges = 0;
        for (const FareyTriangle& t : ball.triangles) {
            auto ns = dualNeighbors(t);
            std::set<std::string> texts;
            for (const FareyTriangle& n : ns) {
                texts.insert(n.text());
                bool mutualNeighbor = false;
                for (const FareyTriangle& back : dualNeighbors(n))
                    if (back == t)
                        mutualNeighbor = true;
                expect(mutualNeighbor, "dual adjacency not symmetric");
                if (ball.depth.count(n.text()))
                    ++edges;
            }
            expect(texts.size() == 3, "dual vertex is not trivalent");
        }
        expect(edges / 2 == ball.triangles.size() - 1, "dual ball is not a tree");
        return plural(ball.triangles.size(), "vertex", "vertices") + " trivalent, ball is a tree";
    });

    return checker.take();
}

inline Report suiteFiber(const Options& options) {
    using namespace detail;
    Checker checker("fiber");
    int radius = std::min(options.radius, 5);

    checker.check("big-only-3-regular", [&] {
        ExplorationBall ball = exploreBall(baseTriArc(), radius, EdgeFilter::BigOnly);
        std::size_t interior = 0;
        for (const BallVertex& v : ball.vertices()) {
            if (v.depth >= ball.radius())
                continue;
            ++interior;
            auto ns = filteredNeighbors(v.triArc, EdgeFilter::BigOnly);
            std::set<TriArc> distinct;
            for (const Neighbor& n : ns)
                distinct.insert(n.triArc);
            expect(ns.size() == 3 && distinct.size() == 3,
                   "interior fiber vertex is not 3-regular");
        }
        return plural(interior, "interior vertex", "interior vertices") + " in the big-only ball";
    });

    checker.check("big-only-single-fiber", [&] {
        ExplorationBall ball = exploreBall(baseTriArc(), radius, EdgeFilter::BigOnly);
        FareyTriangle fiber = project(baseTriArc());
        for (const BallVertex& v : ball.vertices())
            expect(project(v.triArc) == fiber, "big-only ball left the fiber");
        return plural(ball.vertices().size(), "vertex", "vertices") + " in one fiber";
    });

    checker.check("generator-push-fiber-distance-2", [&] {
        // At the base the four standard generator pushes are pushes along the
        // base's own arcs; at an arbitrary vertex the analogous generator
        // pushes are the pushes along that vertex's arcs, i.e. arcwise
        // conjugation by an oriented arc representative. Each performs a
        // sequence of exactly two big flips.
        TriArc base = baseTriArc();
        const PushGen gens[4] = {PushGen::AlongG1, PushGen::AlongG1Inverse,
                                 PushGen::AlongG2, PushGen::AlongG2Inverse};
        for (PushGen g : gens) {
            PushWord theta;
            theta.gens.push_back(g);
            auto d = exactDistance(base, applyPush(theta, base), 4, EdgeFilter::BigOnly);
            expect(d.has_value() && *d == 2,
                   "standard generator push not at fiber distance 2 from the base");
        }
        ExplorationBall ball = exploreBall(base, 2, EdgeFilter::All);
        std::size_t pushes = 0;
        for (const BallVertex& v : ball.vertices())
            for (const ArcClass& arc : v.triArc.arcs())
                for (int orient = 0; orient < 2; ++orient) {
                    FreeWord x = orient ? invert(arc.canon()) : arc.canon();
                    TriArc pushed = applyPush(innerAutomorphism(x), v.triArc);
                    auto d = exactDistance(v.triArc, pushed, 4, EdgeFilter::BigOnly);
                    expect(d.has_value() && *d == 2,
                           "arc push not at fiber distance 2 from " + v.triArc.text());
                    ++pushes;
                }
        return "4 standard pushes at the base; " + plural(pushes, "arc push", "arc pushes") +
               " across the radius-2 ball";
    });

    checker.check("fiber-depth-lower-bound", [&] {
        ExplorationBall ball = exploreBall(baseTriArc(), options.radius, EdgeFilter::All);
        for (const BallVertex& v : ball.vertices())
            expect(lowerBoundDistance(baseTriArc(), v.triArc) <= v.depth,
                   "projection distance exceeds BFS depth");
        return plural(ball.vertices().size(), "vertex", "vertices") + " bounded";
    });

    return checker.take();
}

inline Report suitePushmap(const Options& options) {
    using namespace detail;
    Checker checker("pushmap");
    Rng rng(options.seed);

    checker.check("forget-check-random-words", [&] {
        for (int i = 0; i < 1000; ++i) {
            PushWord theta = randomPushWord(rng, rng() % 13);
            expect(forgetCheck(pushAuto(theta)), "push word fails forgetCheck");
        }
        return "1000 push words of length <= 12";
    });

    checker.check("push-homomorphism", [&] {
        for (int i = 0; i < 1000; ++i) {
            PushWord t1 = randomPushWord(rng, rng() % 7);
            PushWord t2 = randomPushWord(rng, rng() % 7);
            PushWord joined;
            joined.gens = t1.gens;
            joined.gens.insert(joined.gens.end(), t2.gens.begin(), t2.gens.end());
            expect(pushAuto(joined) == compose(pushAuto(t2), pushAuto(t1)),
                   "composition order violated");
        }
        return "1000 word pairs";
    });

    checker.check("push-inverse", [&] {
        for (int i = 0; i < 1000; ++i) {
            PushWord theta = randomPushWord(rng, rng() % 10);
            expect(compose(pushAuto(inverse(theta)), pushAuto(theta)) ==
                       Automorphism::identity(),
                   "reverse-inverse word does not invert the push");
        }
        return "1000 push words";
    });

    checker.check("generator-panels", [&] {
        TriArc base = baseTriArc();
        expect(applyPush(PushWord::parse("a"), base).text() == "a,abA,aabA",
               "push along a panel mismatch");
        expect(applyPush(PushWord::parse("A"), base).text() == "a,AB,Aba",
               "push along a^-1 panel mismatch");
        expect(applyPush(PushWord::parse("b"), base).text() == "b,Bab,Babb",
               "push along b panel mismatch");
        expect(applyPush(PushWord::parse("B"), base).text() == "b,AB,baB",
               "push along b^-1 panel mismatch");
        return "four generator panels on the base tri-arc";
    });

    checker.check("apply-push-stays-in-fiber", [&] {
        ExplorationBall ball = exploreBall(baseTriArc(), 2, EdgeFilter::All);
        auto thetas = allPushWordsUpTo(6);
        std::size_t applications = 0;
        for (const PushWord& theta : thetas) {
            Automorphism f = pushAuto(theta);
            for (const BallVertex& v : ball.vertices()) {
                TriArc pushed = applyPush(f, v.triArc);
                expect(project(pushed) == project(v.triArc), "push left the fiber");
                ++applications;
            }
        }
        return plural(applications, "application") + " (" +
               plural(thetas.size(), "word") + " x " +
               plural(ball.vertices().size(), "vertex", "vertices") + ")";
    });

    checker.check("push-results-revalidate", [&] {
        ExplorationBall ball = exploreBall(baseTriArc(), 1, EdgeFilter::All);
        auto thetas = allPushWordsUpTo(3);
        std::size_t revalidated = 0;
        for (const PushWord& theta : thetas)
            for (const BallVertex& v : ball.vertices()) {
                const auto& a = applyPush(theta, v.triArc).arcs();
                makeTriArc(a[0].canon(), a[1].canon(), a[2].canon());
                ++revalidated;
            }
        return plural(revalidated, "push image") + " fully revalidated";
    });

    return checker.take();
}

inline Report suiteCycles(const Options&) {
    using namespace detail;
    Checker checker("cycles");

    checker.check("small-big-small-triangle", [&] {
        ExplorationBall ball = exploreBall(baseTriArc(), 2, EdgeFilter::All);
        auto cycles = findCycles(ball, 3);
        int i1 = ball.indexOf(TriArc::parse("a,b,aB")).value();
        int i2 = ball.indexOf(TriArc::parse("a,b,Ab")).value();
        std::vector<int> wanted{0, std::min(i1, i2), std::max(i1, i2)};
        bool found = false;
        for (const auto& cycle : cycles)
            if (cycle == wanted)
                found = true;
        expect(found, "loop through a,b,aB and a,b,Ab not found");
        auto kindOf = [&](int u, int v) { return edgeBetween(ball, u, v).value().kind; };
        expect(kindOf(0, i1) != MoveKind::Big, "first edge is not a small flip");
        expect(kindOf(i1, i2) == MoveKind::Big, "middle edge is not a big flip");
        expect(kindOf(i2, 0) != MoveKind::Big, "last edge is not a small flip");
        return plural(cycles.size(), "3-cycle") + " through the base; witness verified";
    });

    checker.check("no-2-cycles", [&] {
        ExplorationBall ball = exploreBall(baseTriArc(), 2, EdgeFilter::All);
        expect(findCycles(ball, 2).empty(), "found a 2-cycle in a simple graph");
        return "simple graph confirmed";
    });

    checker.check("big-only-ball-acyclic", [&] {
        ExplorationBall ball = exploreBall(baseTriArc(), 5, EdgeFilter::BigOnly, 8);
        expect(findCycles(ball, 10).empty(), "cycle through base in big-only ball");
        expect(ball.edges().size() == ball.vertices().size() - 1,
               "big-only ball is not a tree");
        return "radius-5 big-only ball is a tree (" +
               plural(ball.vertices().size(), "vertex", "vertices") + ")";
    });

    return checker.take();
}

inline Report suiteConnectivity(const Options& options) {
    using namespace detail;
    Checker checker("connectivity");
    Rng rng(options.seed);

    checker.check("path-to-every-ball-vertex", [&] {
        // Fiber bridges run a dozen big flips deep already for radius-4
        // targets and deeper still out at radius 6, where the blind fiber
        // entry can drift far enough to exhaust any fixed budget. The
        // exhaustive sweep therefore stops at radius 5; the bridge search
        // is bidirectional, so this budget covers fiber diameters near 40.
        int radius = std::min(options.radius, 5);
        ExplorationBall ball = exploreBall(baseTriArc(), radius, EdgeFilter::All);
        TriArc base = baseTriArc();
        for (const BallVertex& v : ball.vertices()) {
            PathReport path = findPath(base, v.triArc, 2000000);
            TriArc replay = base;
            for (const MoveLabel& m : path.moves)
                replay = applyMove(replay, m);
            expect(replay == v.triArc, "replay does not reach the target");
            expect(path.length() >= lowerBoundDistance(base, v.triArc),
                   "path shorter than the projection lower bound");
        }
        return plural(ball.vertices().size(), "target") + " reached and replayed (radius " +
               std::to_string(radius) + ")";
    });

    checker.check("path-to-pushes", [&] {
        TriArc base = baseTriArc();
        auto thetas = allPushWordsUpTo(4);
        for (const PushWord& theta : thetas) {
            TriArc target = applyPush(theta, base);
            PathReport path = findPath(base, target, 100000);
            TriArc replay = base;
            for (const MoveLabel& m : path.moves) {
                expect(m.kind == MoveKind::Big, "push path used a small flip");
                replay = applyMove(replay, m);
            }
            expect(replay == target, "replay does not reach the pushed tri-arc");
        }
        return plural(thetas.size(), "push word") + " of length <= 4";
    });

    checker.check("exact-distance-equals-ball-depth", [&] {
        TriArc base = baseTriArc();
        ExplorationBall ball = exploreBall(base, 3, EdgeFilter::All);
        for (const BallVertex& v : ball.vertices()) {
            auto d = exactDistance(base, v.triArc, 6);
            expect(d.has_value() && *d == v.depth,
                   "bidirectional distance disagrees with BFS depth at " + v.triArc.text());
        }
        return plural(ball.vertices().size(), "vertex", "vertices") +
               " cross-checked against BFS depths";
    });

    checker.check("exact-distance-vs-lower-bound", [&] {
        for (int i = 0; i < 1000; ++i) {
            TriArc t1 = randomReachable(rng, static_cast<int>(rng() % 4));
            TriArc t2 = t1;
            int steps = static_cast<int>(rng() % 4);
            for (int s = 0; s < steps; ++s) {
                auto ns = neighbors(t2);
                t2 = ns[rng() % ns.size()].triArc;
            }
            auto d = exactDistance(t1, t2, 6);
            expect(d.has_value(), "nearby pair not found within maxRadius");
            expect(*d == *exactDistance(t2, t1, 6), "exactDistance not symmetric");
            expect(*d >= lowerBoundDistance(t1, t2), "distance beats the lower bound");
        }
        return "1000 random reachable pairs";
    });

    return checker.take();
}

inline Report suiteDiameter(const Options&) {
    using namespace detail;
    Checker checker("diameter");

    checker.check("fibonacci-lower-bounds", [&] {
        TriArc base = baseTriArc();
        auto f = fibonacciFrom(30);
        for (int n : {5, 10, 15, 20}) {
            TriArc t = fibonacciWalk(n);
            expect(project(t) == fibTriangle(f, n - 1),
                   "walk projection is not the Fibonacci triangle");
            int lb = lowerBoundDistance(base, t);
            expect(lb == n, "lower bound is not exactly n");
            expect(lb >= n, "lower bound below n");
            if (n == 10)
                expect(project(t).contains(Slope(55, 89)),
                       "slope 55/89 = F_10/F_11 missing at n = 10");
        }
        return "n = 5, 10, 15, 20 realized exactly";
    });

    checker.check("arbitrary-precision-slopes", [&] {
        auto f = fibonacciFrom(130);
        expect(fibSlope(f, 10) == Slope(55, 89), "F_10/F_11 != 55/89");
        // F_120 and friends are ~10^25: far beyond 64-bit integers.
        expect(f[121].str() == "5358359254990966640871840", "F_120 mismatch");
        FareyTriangle base = FareyTriangle::parse("inf,0/1,1/1");
        FareyTriangle deep = fibTriangle(f, 119);
        expect(dualDistance(base, deep) == 120, "deep Fibonacci distance mismatch");
        return "distance 120 reached at ~25-digit slopes (F_119/F_120 onward)";
    });

    return checker.take();
}

inline std::vector<std::string> suiteNames() {
    return {"freegroup", "triarc", "degree",  "projection",  "farey",
            "fiber",     "pushmap", "cycles", "connectivity", "diameter"};
}

inline Report runSuite(const std::string& name, const Options& options) {
    if (name == "freegroup")
        return suiteFreegroup(options);
    if (name == "triarc")
        return suiteTriarc(options);
    if (name == "degree")
        return suiteDegree(options);
    if (name == "projection")
        return suiteProjection(options);
    if (name == "farey")
        return suiteFarey(options);
    if (name == "fiber")
        return suiteFiber(options);
    if (name == "pushmap")
        return suitePushmap(options);
    if (name == "cycles")
        return suiteCycles(options);
    if (name == "connectivity")
        return suiteConnectivity(options);
    if (name == "diameter")
        return suiteDiameter(options);
    fail("ParseError", "unknown verify suite '" + name + "'");
}

inline std::vector<Report> runAll(const Options& options) {
    std::vector<Report> reports;
    for (const std::string& name : suiteNames())
        reports.push_back(runSuite(name, options));
    return reports;
}

} // namespace tripants::verify
