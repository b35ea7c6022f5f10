#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tripants/farey.hpp"
#include "tripants/triarc.hpp"

namespace tripants {

// BFS over the implicitly defined tri-pants graph. Balls are finite induced
// subgraphs around a base vertex; vertices are deduplicated by canonical
// text encoding and levels are merged in canonical order, so every build of
// the same ball is byte-identical.

enum class EdgeFilter { All, BigOnly, SmallOnly };

inline constexpr int kDefaultRadiusCap = 6;
inline constexpr int kDistanceRadiusCap = 2 * kDefaultRadiusCap;

inline std::vector<Neighbor> filteredNeighbors(const TriArc& t, EdgeFilter filter) {
    if (filter == EdgeFilter::All)
        return neighbors(t);
    std::vector<Neighbor> out;
    out.reserve(filter == EdgeFilter::BigOnly ? 3 : 6);
    for (const ArcClass& arc : t.arcs()) {
        if (filter == EdgeFilter::BigOnly) {
            out.push_back({bigFlip(t, arc).first, {arc, MoveKind::Big}});
        } else {
            auto [s1, s2] = smallFlips(t, arc);
            out.push_back({std::move(s1), {arc, MoveKind::SmallFirst}});
            out.push_back({std::move(s2), {arc, MoveKind::SmallSecond}});
        }
    }
    return out;
}

struct BallVertex {
    TriArc triArc;
    int depth;
};

// Undirected edge between stored vertices, kept once with from < to as
// indices; the move label is the flip as seen from the `from` endpoint.
struct BallEdge {
    int from;
    int to;
    MoveLabel move;
};

class ExplorationBall {
public:
    ExplorationBall(TriArc base, int radius, EdgeFilter filter)
        : base_(std::move(base)), radius_(radius), filter_(filter) {}

    const TriArc& base() const { return base_; }
    int radius() const { return radius_; }
    EdgeFilter filter() const { return filter_; }
    const std::vector<BallVertex>& vertices() const { return vertices_; }
    const std::vector<BallEdge>& edges() const { return edges_; }

    std::optional<int> indexOf(const TriArc& t) const {
        auto it = index_.find(t.text());
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

private:
    TriArc base_;
    int radius_;
    EdgeFilter filter_;
    std::vector<BallVertex> vertices_;
    std::vector<BallEdge> edges_;
    std::unordered_map<std::string, int> index_;

    friend ExplorationBall exploreBall(const TriArc&, int, EdgeFilter, int);
};

inline ExplorationBall exploreBall(const TriArc& base, int radius, EdgeFilter filter,
                                   int radiusCap = kDefaultRadiusCap) {
    if (radius < 0 || radius > radiusCap)
        fail("RadiusCap", "radius " + std::to_string(radius) + " exceeds cap " +
                              std::to_string(radiusCap));
    ExplorationBall ball(base, radius, filter);
    ball.vertices_.push_back({base, 0});
    ball.index_.emplace(base.text(), 0);
    std::size_t levelStart = 0;
    for (int depth = 0; depth < radius; ++depth) {
        std::size_t levelEnd = ball.vertices_.size();
        std::set<TriArc> fresh; // canonical merge order within the level
        for (std::size_t i = levelStart; i < levelEnd; ++i)
            for (const Neighbor& n : filteredNeighbors(ball.vertices_[i].triArc, filter))
                if (!ball.index_.count(n.triArc.text()))
                    fresh.insert(n.triArc);
        for (const TriArc& t : fresh) {
            ball.index_.emplace(t.text(), static_cast<int>(ball.vertices_.size()));
            ball.vertices_.push_back({t, depth + 1});
        }
        levelStart = levelEnd;
    }
    // Induced edges, including those between last-level vertices.
    for (std::size_t i = 0; i < ball.vertices_.size(); ++i)
        for (const Neighbor& n : filteredNeighbors(ball.vertices_[i].triArc, filter)) {
            auto it = ball.index_.find(n.triArc.text());
            if (it != ball.index_.end() && static_cast<int>(i) < it->second)
                ball.edges_.push_back({static_cast<int>(i), it->second, n.move});
        }
    return ball;
}

// Graph distance by bidirectional level BFS, or nothing if above maxRadius.
inline std::optional<int> exactDistance(const TriArc& t1, const TriArc& t2, int maxRadius,
                                        EdgeFilter filter = EdgeFilter::All) {
    if (maxRadius < 0 || maxRadius > kDistanceRadiusCap)
        fail("RadiusCap", "maxRadius " + std::to_string(maxRadius) + " exceeds cap " +
                              std::to_string(kDistanceRadiusCap));
    if (t1 == t2)
        return 0;
    std::unordered_map<std::string, int> distA{{t1.text(), 0}};
    std::unordered_map<std::string, int> distB{{t2.text(), 0}};
    std::vector<TriArc> frontierA{t1};
    std::vector<TriArc> frontierB{t2};
    int depthA = 0;
    int depthB = 0;
    int best = maxRadius + 1;
    while (!frontierA.empty() && !frontierB.empty() &&
           depthA + depthB < std::min(best, maxRadius)) {
        bool expandA = frontierA.size() <= frontierB.size();
        auto& dist = expandA ? distA : distB;
        auto& other = expandA ? distB : distA;
        auto& frontier = expandA ? frontierA : frontierB;
        int depth = (expandA ? depthA : depthB) + 1;
        std::vector<TriArc> next;
        for (const TriArc& u : frontier)
            for (const Neighbor& n : filteredNeighbors(u, filter)) {
                std::string key = n.triArc.text();
                if (dist.count(key))
                    continue;
                dist.emplace(std::move(key), depth);
                auto it = other.find(n.triArc.text());
                if (it != other.end())
                    best = std::min(best, depth + it->second);
                next.push_back(n.triArc);
            }
        frontier = std::move(next);
        (expandA ? depthA : depthB) = depth;
    }
    if (best <= maxRadius)
        return best;
    return std::nullopt;
}

// Distance never beats the dual-tree distance of the projections: big flips
// hold the projection still and small flips move it one dual edge.
inline int lowerBoundDistance(const TriArc& t1, const TriArc& t2) {
    return dualDistance(project(t1), project(t2));
}

// All simple cycles through the ball's base vertex, up to maxLen edges,
// deduplicated up to traversal direction. Cycles are index sequences
// starting at the base (index 0).
inline std::vector<std::vector<int>> findCycles(const ExplorationBall& ball, int maxLen) {
    std::vector<std::vector<int>> adj(ball.vertices().size());
    for (const BallEdge& e : ball.edges()) {
        adj[e.from].push_back(e.to);
        adj[e.to].push_back(e.from);
    }
    for (auto& list : adj)
        std::sort(list.begin(), list.end());
    std::vector<std::vector<int>> cycles;
    std::vector<int> path{0};
    std::vector<char> onPath(ball.vertices().size(), 0);
    onPath[0] = 1;
    auto dfs = [&](auto&& self, int u) -> void {
        int used = static_cast<int>(path.size()) - 1; // edges so far
        for (int v : adj[u]) {
            if (v == 0 && used >= 2) {
                if (path[1] < path.back())
                    cycles.push_back(path);
            } else if (!onPath[v] && used + 2 <= maxLen) {
                onPath[v] = 1;
                path.push_back(v);
                self(self, v);
                path.pop_back();
                onPath[v] = 0;
            }
        }
    };
    if (!adj.empty() && maxLen >= 3)
        dfs(dfs, 0);
    return cycles;
}

inline std::optional<MoveLabel> edgeBetween(const ExplorationBall& ball, int u, int v) {
    for (const BallEdge& e : ball.edges())
        if ((e.from == u && e.to == v) || (e.from == v && e.to == u))
            return e.move;
    return std::nullopt;
}

// A replayable move sequence between two vertices.
struct PathReport {
    std::vector<MoveLabel> moves;
    TriArc from;
    TriArc to;

    int length() const { return static_cast<int>(moves.size()); }
};

namespace detail {

// Bidirectional big-flip-only BFS inside one fiber; returns the move
// sequence from `from` to `to`. Big flips invert by flipping the replaced
// arc, so the half discovered from `to` replays backwards. The expansion
// cap guards against an undersized budget, not disconnection.
inline std::vector<MoveLabel> fiberBridge(const TriArc& from, const TriArc& to,
                                          int fiberSearchCap) {
    if (from == to)
        return {};

    struct Crumb {
        std::string parent;
        MoveLabel forward;  // applyMove(parent, forward) == child
        MoveLabel backward; // applyMove(child, backward) == parent
    };
    struct Side {
        std::unordered_map<std::string, Crumb> crumbs;
        std::deque<TriArc> frontier;
    };
    Side sideA;
    Side sideB;
    sideA.frontier.push_back(from);
    sideB.frontier.push_back(to);
    std::string fromKey = from.text();
    std::string toKey = to.text();

    // Moves from `from` up to the meet vertex, then down to `to`.
    auto reconstruct = [&](const std::string& meet) {
        std::vector<MoveLabel> moves;
        for (std::string cur = meet; cur != fromKey;) {
            const Crumb& c = sideA.crumbs.at(cur);
            moves.push_back(c.forward);
            cur = c.parent;
        }
        std::reverse(moves.begin(), moves.end());
        for (std::string cur = meet; cur != toKey;) {
            const Crumb& c = sideB.crumbs.at(cur);
            moves.push_back(c.backward);
            cur = c.parent;
        }
        return moves;
    };

    auto contains = [&](const Side& side, const std::string& key, bool isA) {
        return side.crumbs.count(key) || key == (isA ? fromKey : toKey);
    };

    int expansions = 0;
    while (!sideA.frontier.empty() && !sideB.frontier.empty()) {
        bool expandA = sideA.frontier.size() <= sideB.frontier.size();
        Side& mine = expandA ? sideA : sideB;
        Side& theirs = expandA ? sideB : sideA;
        std::deque<TriArc> next;
        for (const TriArc& u : mine.frontier) {
            if (expansions++ >= fiberSearchCap)
                fail("FiberSearchExhausted",
                     "fiber search cap " + std::to_string(fiberSearchCap) +
                         " hit before reaching " + to.text() + "; raise the cap");
            std::string uKey = u.text();
            for (const Neighbor& n : filteredNeighbors(u, EdgeFilter::BigOnly)) {
                std::string key = n.triArc.text();
                if (contains(mine, key, expandA))
                    continue;
                const ArcClass* fresh = nullptr;
                for (const ArcClass& a : n.triArc.arcs())
                    if (!u.contains(a))
                        fresh = &a;
                if (fresh == nullptr)
                    throw std::logic_error("fiberBridge: flip kept all arcs");
                MoveLabel undo{*fresh, MoveKind::Big};
                mine.crumbs.emplace(key, Crumb{uKey, n.move, undo});
                if (contains(theirs, key, !expandA))
                    return reconstruct(key);
                next.push_back(n.triArc);
            }
        }
        mine.frontier = std::move(next);
    }
    fail("FiberSearchExhausted", "fiber search ran out of vertices");
}

} // namespace detail

// Constructive (not shortest) path: walk the dual-tree geodesic between the
// projections with small flips, then bridge the final fiber with big flips.
// The result is replay-verified before returning.
inline PathReport findPath(const TriArc& t1, const TriArc& t2, int fiberSearchCap) {
    std::vector<MoveLabel> moves;
    TriArc current = t1;
    FareyTriangle goal = project(t2);
    FareyTriangle at = project(t1);
    while (!(at == goal)) {
        FareyEdge crossing = separatingEdge(at, goal);
        const Slope* dropped = nullptr;
        for (const Slope& s : at.vertices())
            if (!(s == crossing.endpoints()[0]) && !(s == crossing.endpoints()[1]))
                dropped = &s;
        const ArcClass* arc = nullptr;
        for (const ArcClass& a : current.arcs())
            if (slopeOf(a.canon()) == *dropped)
                arc = &a;
        if (arc == nullptr)
            throw std::logic_error("findPath: no arc carries the dropped slope");
        MoveLabel move{*arc, MoveKind::SmallFirst};
        current = applyMove(current, move);
        moves.push_back(move);
        at = project(current);
    }
    for (MoveLabel& m : detail::fiberBridge(current, t2, fiberSearchCap))
        moves.push_back(std::move(m));
    TriArc replay = t1;
    for (const MoveLabel& m : moves)
        replay = applyMove(replay, m);
    if (!(replay == t2))
        throw std::logic_error("findPath: replay did not reach the target");
    return PathReport{std::move(moves), t1, t2};
}

// DOT dump: vertex ids are tri-arc encodings, edges carry the flip kind.
inline void writeDot(const ExplorationBall& ball, std::ostream& out) {
    out << "graph tripants {\n";
    for (const BallVertex& v : ball.vertices())
        out << "  \"" << v.triArc.text() << "\" [depth=" << v.depth << "];\n";
    for (const BallEdge& e : ball.edges())
        out << "  \"" << ball.vertices()[e.from].triArc.text() << "\" -- \""
            << ball.vertices()[e.to].triArc.text() << "\" [kind="
            << moveKindName(e.move.kind) << ", arc=\"" << e.move.arc.text() << "\"];\n";
    out << "}\n";
}

// JSON-lines dump: one record per vertex, then one per edge.
inline void writeJsonl(const ExplorationBall& ball, std::ostream& out) {
    for (const BallVertex& v : ball.vertices())
        out << "{\"vertex\": \"" << v.triArc.text() << "\", \"depth\": " << v.depth
            << ", \"triangle\": \"" << project(v.triArc).text() << "\"}\n";
    for (const BallEdge& e : ball.edges())
        out << "{\"from\": \"" << ball.vertices()[e.from].triArc.text() << "\", \"to\": \""
            << ball.vertices()[e.to].triArc.text() << "\", \"kind\": \""
            << moveKindName(e.move.kind) << "\", \"arc\": \"" << e.move.arc.text()
            << "\"}\n";
}

} // namespace tripants
