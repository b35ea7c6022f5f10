#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tripants/bigint.hpp"
#include "tripants/triarc.hpp"

namespace tripants {

class FareyEdge;
class FareyTriangle;
inline FareyTriangle neighborAcross(const FareyTriangle& t, const FareyEdge& e);

// Reduced rational slope p/q with q > 0, or infinity = 1/0. Vertices of the
// Farey graph. Order: infinity first, then by rational value; this fixes the
// printed form of every triangle.
class Slope {
public:
    Slope(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {
        if (q_.isNegative()) {
            p_ = -p_;
            q_ = -q_;
        }
        if (p_.isZero() && q_.isZero())
            fail("NotPrimitive", "slope (0, 0) is undefined");
        if (!BigInt::gcd(p_, q_).isOne())
            fail("NotPrimitive", "slope components must be coprime");
        if (q_.isZero())
            p_ = 1; // both signs of infinity coincide
    }

    static Slope infinity() { return Slope(1, 0); }

    const BigInt& p() const { return p_; }
    const BigInt& q() const { return q_; }
    bool isInfinity() const { return q_.isZero(); }

    friend std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
        if (a.isInfinity() || b.isInfinity())
            return (b.isInfinity() ? 1 : 0) <=> (a.isInfinity() ? 1 : 0);
        return a.p_ * b.q_ <=> b.p_ * a.q_; // denominators positive
    }
    friend bool operator==(const Slope& a, const Slope& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }

    std::string text() const {
        return isInfinity() ? "inf" : p_.str() + "/" + q_.str();
    }

    static Slope parse(std::string_view text) {
        if (text == "inf")
            return infinity();
        std::size_t slash = text.find('/');
        if (slash == std::string_view::npos)
            return Slope(BigInt::parse(text), 1);
        return Slope(BigInt::parse(text.substr(0, slash)),
                     BigInt::parse(text.substr(slash + 1)));
    }

private:
    struct Reduced {};
    // For mediants/differences of a unimodular pair, which are reduced by
    // construction: any common divisor would divide the determinant 1.
    Slope(BigInt p, BigInt q, Reduced) : p_(std::move(p)), q_(std::move(q)) {
        if (q_.isNegative()) {
            p_ = -p_;
            q_ = -q_;
        }
        if (q_.isZero())
            p_ = 1;
    }

    BigInt p_;
    BigInt q_;

    friend FareyTriangle neighborAcross(const FareyTriangle& t, const FareyEdge& e);
};

inline BigInt fareyDet(const Slope& a, const Slope& b) {
    return a.p() * b.q() - b.p() * a.q();
}

// Farey adjacency: |p q' - p' q| = 1.
inline bool isFareyEdge(const Slope& a, const Slope& b) {
    return fareyDet(a, b).abs().isOne();
}

// The slope of an arc: its abelianization, which must be a primitive pair.
inline Slope slopeOf(const FreeWord& w) {
    AbelianImage img = abelianize(w);
    return Slope(img.p, img.q);
}

class FareyEdge {
public:
    FareyEdge(Slope a, Slope b) : ends_{std::move(a), std::move(b)} {
        if (ends_[1] < ends_[0])
            std::swap(ends_[0], ends_[1]);
        if (!isFareyEdge(ends_[0], ends_[1]))
            fail("NotAnEdge", ends_[0].text() + " and " + ends_[1].text() +
                                  " are not Farey-adjacent");
    }

    const std::array<Slope, 2>& endpoints() const { return ends_; }
    std::string text() const { return ends_[0].text() + "," + ends_[1].text(); }

    friend bool operator==(const FareyEdge&, const FareyEdge&) = default;

private:
    std::array<Slope, 2> ends_;
};

// Pairwise Farey-adjacent triple; a triangle of F, i.e. a vertex of F*.
class FareyTriangle {
public:
    FareyTriangle(Slope a, Slope b, Slope c) : verts_{std::move(a), std::move(b), std::move(c)} {
        if (verts_[1] < verts_[0])
            std::swap(verts_[0], verts_[1]);
        if (verts_[2] < verts_[1])
            std::swap(verts_[1], verts_[2]);
        if (verts_[1] < verts_[0])
            std::swap(verts_[0], verts_[1]);
        if (verts_[0] == verts_[1] || verts_[1] == verts_[2])
            fail("NotATriangle", "triangle vertices must be distinct");
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (!isFareyEdge(verts_[i], verts_[j]))
                    fail("NotATriangle", verts_[i].text() + " and " + verts_[j].text() +
                                             " are not Farey-adjacent");
    }

    const std::array<Slope, 3>& vertices() const { return verts_; }

    bool contains(const Slope& s) const {
        return verts_[0] == s || verts_[1] == s || verts_[2] == s;
    }

    std::array<FareyEdge, 3> edges() const {
        return {FareyEdge(verts_[0], verts_[1]), FareyEdge(verts_[0], verts_[2]),
                FareyEdge(verts_[1], verts_[2])};
    }

    std::string text() const {
        return verts_[0].text() + "," + verts_[1].text() + "," + verts_[2].text();
    }

    static FareyTriangle parse(std::string_view text) {
        std::vector<std::string_view> parts;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= text.size(); ++i) {
            if (i == text.size() || text[i] == ',') {
                parts.push_back(text.substr(start, i - start));
                start = i + 1;
            }
        }
        if (parts.size() != 3)
            fail("ParseError", "triangle must have exactly three slopes");
        return FareyTriangle(Slope::parse(parts[0]), Slope::parse(parts[1]),
                             Slope::parse(parts[2]));
    }

    friend bool operator==(const FareyTriangle&, const FareyTriangle&) = default;

private:
    struct Adjacent {};
    // For triangles assembled from a known edge and a slope already proven
    // adjacent to both endpoints.
    FareyTriangle(Slope a, Slope b, Slope c, Adjacent)
        : verts_{std::move(a), std::move(b), std::move(c)} {
        if (verts_[1] < verts_[0])
            std::swap(verts_[0], verts_[1]);
        if (verts_[2] < verts_[1])
            std::swap(verts_[1], verts_[2]);
        if (verts_[1] < verts_[0])
            std::swap(verts_[0], verts_[1]);
    }

    std::array<Slope, 3> verts_;

    friend FareyTriangle neighborAcross(const FareyTriangle& t, const FareyEdge& e);
};

inline FareyTriangle makeTriangle(const Slope& a, const Slope& b, const Slope& c) {
    return FareyTriangle(a, b, c);
}

// pi: the triangle of the three arc slopes. Valid tri-arcs always project to
// valid triangles (each arc pair abelianizes to a determinant +-1 pair).
inline FareyTriangle project(const TriArc& t) {
    return FareyTriangle(slopeOf(t.arcs()[0].canon()), slopeOf(t.arcs()[1].canon()),
                         slopeOf(t.arcs()[2].canon()));
}

// The unique other triangle sharing edge e: its third vertex is whichever of
// the mediant (p+p')/(q+q') and difference (p-p')/(q-q') differs from ours.
inline FareyTriangle neighborAcross(const FareyTriangle& t, const FareyEdge& e) {
    const Slope& u = e.endpoints()[0];
    const Slope& v = e.endpoints()[1];
    if (!t.contains(u) || !t.contains(v))
        fail("EdgeNotInTriangle", "edge {" + e.text() + "} is not an edge of " + t.text());
    const Slope* third = nullptr;
    for (const Slope& s : t.vertices())
        if (!(s == u) && !(s == v))
            third = &s;
    if (third == nullptr)
        throw std::logic_error("neighborAcross: triangle has no third vertex");
    Slope mediant(u.p() + v.p(), u.q() + v.q(), Slope::Reduced{});
    Slope difference(u.p() - v.p(), u.q() - v.q(), Slope::Reduced{});
    const Slope& fresh = mediant == *third ? difference : mediant;
    return FareyTriangle(u, v, fresh, FareyTriangle::Adjacent{});
}

// F* is trivalent: one neighbor per edge.
inline std::array<FareyTriangle, 3> dualNeighbors(const FareyTriangle& t) {
    auto es = t.edges();
    return {neighborAcross(t, es[0]), neighborAcross(t, es[1]), neighborAcross(t, es[2])};
}

namespace detail {
inline int detSign(const Slope& a, const Slope& b) {
    BigInt d = fareyDet(a, b);
    return d.isZero() ? 0 : (d.isNegative() ? -1 : 1);
}

// Cyclic orientation of three distinct points of Q u {inf} on the circle,
// via homogeneous coordinates; independent of representative signs.
inline int circularOrientation(const Slope& a, const Slope& b, const Slope& c) {
    return detSign(a, b) * detSign(b, c) * detSign(c, a);
}
} // namespace detail

// The edge of t past which `target` lies: every vertex of target not shared
// with t sits in the boundary arc cut off by the edge on the far side from
// t's opposite vertex. Exact sign tests; F* being a tree makes it unique.
inline FareyEdge separatingEdge(const FareyTriangle& t, const FareyTriangle& target) {
    if (t == target)
        fail("SameTriangle", "no separating edge between a triangle and itself");
    std::vector<Slope> outside;
    for (const Slope& s : target.vertices())
        if (!t.contains(s))
            outside.push_back(s);
    const auto& verts = t.vertices();
    for (int opposite = 0; opposite < 3; ++opposite) {
        const Slope& u = verts[(opposite + 1) % 3];
        const Slope& v = verts[(opposite + 2) % 3];
        const Slope& w = verts[opposite];
        int wside = detail::circularOrientation(u, w, v);
        bool all = true;
        for (const Slope& z : outside)
            if (detail::circularOrientation(u, z, v) != -wside) {
                all = false;
                break;
            }
        if (all)
            return FareyEdge(u, v);
    }
    throw std::logic_error("separatingEdge: no edge separates " + t.text() + " from " +
                           target.text());
}

// Distance in the dual tree, by walking the separating-edge direction; each
// step provably decreases the distance by one.
inline int dualDistance(const FareyTriangle& from, const FareyTriangle& to) {
    FareyTriangle cur = from;
    int steps = 0;
    while (!(cur == to)) {
        cur = neighborAcross(cur, separatingEdge(cur, to));
        if (++steps > 1000000)
            throw std::logic_error("dualDistance walk failed to terminate");
    }
    return steps;
}

} // namespace tripants
