#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tripants/freegroup.hpp"

namespace tripants {

// Unoriented arc class {w, w^-1}, keyed by the smaller representative.
class ArcClass {
public:
    explicit ArcClass(const FreeWord& w) {
        if (w.empty())
            fail("IdentityWord", "the identity word does not represent an arc");
        FreeWord inv = invert(w);
        canon_ = inv < w ? inv : w;
    }

    const FreeWord& canon() const { return canon_; }
    std::string text() const { return canon_.text(); }

    friend std::strong_ordering operator<=>(const ArcClass&, const ArcClass&) = default;

private:
    FreeWord canon_;
};

inline ArcClass canonicalArc(const FreeWord& w) { return ArcClass(w); }

enum class MoveKind { Big, SmallFirst, SmallSecond };

inline const char* moveKindName(MoveKind k) {
    switch (k) {
    case MoveKind::Big: return "big";
    case MoveKind::SmallFirst: return "small1";
    case MoveKind::SmallSecond: return "small2";
    }
    return "";
}

// The arc replaced by a flip together with the flip kind, e.g. "big:ab".
struct MoveLabel {
    ArcClass arc;
    MoveKind kind;

    std::string text() const { return std::string(moveKindName(kind)) + ":" + arc.text(); }
    friend bool operator==(const MoveLabel&, const MoveLabel&) = default;
};

namespace detail {

// Scan the 16 oriented products x*y (x an orientation of `first`, y of
// `second`, both compositions, signs +,- in that order) for one equal to
// `target` exactly. The product table is closed under (x,y) -> (y^-1,x^-1),
// so a decomposition of target^-1 always has a mirror hitting target itself,
// and the tri-arc multiplicity invariant makes the hit unique.
inline std::optional<std::pair<FreeWord, FreeWord>>
matchProduct(const ArcClass& first, const ArcClass& second, const FreeWord& target) {
    const std::array<const ArcClass*, 2> order = {&first, &second};
    for (int swap = 0; swap < 2; ++swap) {
        const ArcClass& xa = *order[swap];
        const ArcClass& ya = *order[1 - swap];
        for (int sx = 0; sx < 2; ++sx) {
            FreeWord x = sx == 0 ? xa.canon() : invert(xa.canon());
            for (int sy = 0; sy < 2; ++sy) {
                FreeWord y = sy == 0 ? ya.canon() : invert(ya.canon());
                if (concat(x, y) == target)
                    return std::make_pair(x, y);
            }
        }
    }
    return std::nullopt;
}

} // namespace detail

// Canonical unordered triple of arc classes; one vertex of the tri-pants graph.
class TriArc {
public:
    // Validating factory: distinct classes, every arc a product of oriented
    // representatives of the other two, and some pair a free basis.
    static TriArc make(const FreeWord& w1, const FreeWord& w2, const FreeWord& w3) {
        std::array<ArcClass, 3> arcs = {ArcClass(w1), ArcClass(w2), ArcClass(w3)};
        sortArcs(arcs);
        if (arcs[0] == arcs[1] || arcs[1] == arcs[2])
            fail("NotDistinct", "tri-arc requires three distinct arc classes");
        for (int i = 0; i < 3; ++i) {
            if (!detail::matchProduct(arcs[(i + 1) % 3], arcs[(i + 2) % 3],
                                      arcs[i].canon()))
                fail("NoDecomposition",
                     "arc " + arcs[i].text() +
                         " is not a product of oriented representatives of the others");
        }
        if (!isBasis(arcs[0].canon(), arcs[1].canon()) &&
            !isBasis(arcs[0].canon(), arcs[2].canon()) &&
            !isBasis(arcs[1].canon(), arcs[2].canon()))
            fail("NotBasis", "no pair of arcs forms a free basis");
        return TriArc(arcs);
    }

    // The fixed base vertex {g1, g2, g1*g2}.
    static TriArc base() {
        return make(wordG1(), wordG2(), concat(wordG1(), wordG2()));
    }

    static TriArc parse(std::string_view text) {
        std::array<std::string_view, 3> parts;
        std::size_t field = 0;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= text.size(); ++i) {
            if (i == text.size() || text[i] == ',') {
                if (field >= 3)
                    fail("ParseError", "tri-arc must have exactly three words");
                parts[field++] = text.substr(start, i - start);
                start = i + 1;
            }
        }
        if (field != 3)
            fail("ParseError", "tri-arc must have exactly three words");
        return make(parseWord(parts[0]), parseWord(parts[1]), parseWord(parts[2]));
    }

    const std::array<ArcClass, 3>& arcs() const { return arcs_; }

    bool contains(const ArcClass& a) const {
        return arcs_[0] == a || arcs_[1] == a || arcs_[2] == a;
    }

    std::string text() const {
        return arcs_[0].text() + "," + arcs_[1].text() + "," + arcs_[2].text();
    }

    friend std::strong_ordering operator<=>(const TriArc&, const TriArc&) = default;

private:
    explicit TriArc(const std::array<ArcClass, 3>& arcs) : arcs_(arcs) {}

    static void sortArcs(std::array<ArcClass, 3>& a) {
        if (a[1] < a[0])
            std::swap(a[0], a[1]);
        if (a[2] < a[1])
            std::swap(a[1], a[2]);
        if (a[1] < a[0])
            std::swap(a[0], a[1]);
    }

    // Flip results stay valid (flip closure is a tested invariant), so flips
    // skip revalidation and assemble the sorted triple directly.
    static TriArc fromFlip(const ArcClass& keep1, const ArcClass& keep2,
                           const ArcClass& fresh) {
        std::array<ArcClass, 3> arcs = {keep1, keep2, fresh};
        sortArcs(arcs);
        if (arcs[0] == arcs[1] || arcs[1] == arcs[2])
            fail("NotDistinct", "flip produced a degenerate triple");
        return TriArc(arcs);
    }

    std::array<ArcClass, 3> arcs_;

    friend std::pair<TriArc, ArcClass> bigFlip(const TriArc& t, const ArcClass& target);
    friend std::pair<TriArc, TriArc> smallFlips(const TriArc& t, const ArcClass& target);
    friend class PushAccess;
};

// Automorphism images of a tri-arc are tri-arcs again; pushmap assembles
// them through the flip path to skip redundant revalidation.
class PushAccess {
public:
    static TriArc fromImages(const ArcClass& a, const ArcClass& b, const ArcClass& c) {
        return TriArc::fromFlip(a, b, c);
    }
};

inline TriArc makeTriArc(const FreeWord& w1, const FreeWord& w2, const FreeWord& w3) {
    return TriArc::make(w1, w2, w3);
}

inline TriArc baseTriArc() { return TriArc::base(); }

namespace detail {
inline std::pair<ArcClass, ArcClass> otherArcs(const TriArc& t, const ArcClass& target) {
    std::vector<ArcClass> rest;
    for (const ArcClass& a : t.arcs())
        if (!(a == target))
            rest.push_back(a);
    if (rest.size() != 2)
        fail("ArcNotInTriple", "arc " + target.text() + " is not in " + t.text());
    return {rest[0], rest[1]};
}
} // namespace detail

// target = x * y with x, y oriented representatives of the two other arcs.
// Deterministic: the unique exact match in the fixed product enumeration.
inline std::pair<FreeWord, FreeWord> decompose(const TriArc& t, const ArcClass& target) {
    auto [u, v] = detail::otherArcs(t, target);
    auto match = detail::matchProduct(u, v, target.canon());
    if (!match)
        fail("NoDecomposition", "arc " + target.text() + " has no decomposition in " + t.text());
    return *match;
}

// c = xy is replaced by yx; the projection to the Farey dual is unchanged.
inline std::pair<TriArc, ArcClass> bigFlip(const TriArc& t, const ArcClass& target) {
    auto [x, y] = decompose(t, target);
    auto [u, v] = detail::otherArcs(t, target);
    ArcClass fresh(concat(y, x));
    return {TriArc::fromFlip(u, v, fresh), fresh};
}

// c = xy is replaced by x*y^-1 and by x^-1*y; the two results differ by one
// big flip on the new arc and project to the adjacent Farey dual vertex.
inline std::pair<TriArc, TriArc> smallFlips(const TriArc& t, const ArcClass& target) {
    auto [x, y] = decompose(t, target);
    auto [u, v] = detail::otherArcs(t, target);
    ArcClass first(concat(x, invert(y)));
    ArcClass second(concat(invert(x), y));
    return {TriArc::fromFlip(u, v, first), TriArc::fromFlip(u, v, second)};
}

struct Neighbor {
    TriArc triArc;
    MoveLabel move;
};

// The nine adjacent vertices: per arc in canonical order, the big flip and
// the two small flips.
inline std::vector<Neighbor> neighbors(const TriArc& t) {
    std::vector<Neighbor> out;
    out.reserve(9);
    for (const ArcClass& arc : t.arcs()) {
        out.push_back({bigFlip(t, arc).first, {arc, MoveKind::Big}});
        auto [s1, s2] = smallFlips(t, arc);
        out.push_back({s1, {arc, MoveKind::SmallFirst}});
        out.push_back({s2, {arc, MoveKind::SmallSecond}});
    }
    return out;
}

inline TriArc applyMove(const TriArc& t, const MoveLabel& move) {
    switch (move.kind) {
    case MoveKind::Big:
        return bigFlip(t, move.arc).first;
    case MoveKind::SmallFirst:
        return smallFlips(t, move.arc).first;
    case MoveKind::SmallSecond:
        return smallFlips(t, move.arc).second;
    }
    fail("ParseError", "unknown move kind");
}

} // namespace tripants
