#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tripants/farey.hpp"
#include "tripants/freegroup.hpp"
#include "tripants/triarc.hpp"

namespace tripants {

// Point-push automorphisms: the puncture slides around one of the four
// oriented generator loops. Each acts on tri-arcs as two big flips, so
// pushes move vertices inside a single fiber of the projection.

enum class PushGen : unsigned char { AlongG1, AlongG1Inverse, AlongG2, AlongG2Inverse };

struct PushWord {
    std::vector<PushGen> gens;

    // Same alphabet as words: a/A/b/B name the four push directions.
    static PushWord parse(std::string_view text) {
        PushWord w;
        w.gens.reserve(text.size());
        for (char c : text) {
            switch (c) {
            case 'a': w.gens.push_back(PushGen::AlongG1); break;
            case 'A': w.gens.push_back(PushGen::AlongG1Inverse); break;
            case 'b': w.gens.push_back(PushGen::AlongG2); break;
            case 'B': w.gens.push_back(PushGen::AlongG2Inverse); break;
            default:
                fail("ParseError", std::string("invalid push generator '") + c + "'");
            }
        }
        return w;
    }

    std::string text() const {
        std::string s;
        for (PushGen g : gens)
            s += "aAbB"[static_cast<unsigned char>(g)];
        return s;
    }

    friend bool operator==(const PushWord&, const PushWord&) = default;
};

inline PushWord inverse(const PushWord& w) {
    PushWord r;
    r.gens.reserve(w.gens.size());
    for (std::size_t i = w.gens.size(); i-- > 0;)
        r.gens.push_back(static_cast<PushGen>(static_cast<unsigned char>(w.gens[i]) ^ 1));
    return r;
}

// An endomorphism of the free group given by generator images; the images
// are required to form a basis, so this is an automorphism.
class Automorphism {
public:
    Automorphism(FreeWord imageG1, FreeWord imageG2)
        : imageG1_(std::move(imageG1)), imageG2_(std::move(imageG2)) {
        if (!isBasis(imageG1_, imageG2_))
            fail("NotBasis", "automorphism images must form a free basis");
    }

    static Automorphism identity() { return Automorphism(wordG1(), wordG2()); }

    const FreeWord& imageG1() const { return imageG1_; }
    const FreeWord& imageG2() const { return imageG2_; }

    friend bool operator==(const Automorphism&, const Automorphism&) = default;

private:
    FreeWord imageG1_;
    FreeWord imageG2_;
};

inline FreeWord apply(const Automorphism& f, const FreeWord& w) {
    return substitute(f.imageG1(), f.imageG2(), w);
}

// compose(f, g) = f after g.
inline Automorphism compose(const Automorphism& f, const Automorphism& g) {
    return Automorphism(apply(f, g.imageG1()), apply(f, g.imageG2()));
}

// The four generator pushes, written on the standard basis. Each fixes the
// loop it pushes along and conjugates the other generator by it.
inline Automorphism pushGenerator(PushGen g) {
    const FreeWord a = wordG1();
    const FreeWord b = wordG2();
    const FreeWord ai = invert(a);
    const FreeWord bi = invert(b);
    switch (g) {
    case PushGen::AlongG1:
        return Automorphism(a, concat(concat(a, b), ai)); // b -> a b a^-1
    case PushGen::AlongG1Inverse:
        return Automorphism(a, concat(concat(ai, b), a)); // b -> a^-1 b a
    case PushGen::AlongG2:
        return Automorphism(concat(concat(bi, a), b), b); // a -> b^-1 a b
    case PushGen::AlongG2Inverse:
        return Automorphism(concat(concat(b, a), bi), b); // a -> b a b^-1
    }
    fail("ParseError", "unknown push generator");
}

// Push is a homomorphism with Push(theta1 theta2) = Push(theta2) o Push(theta1):
// generators act in reading order.
inline Automorphism pushAuto(const PushWord& theta) {
    Automorphism acc = Automorphism::identity();
    for (PushGen g : theta.gens)
        acc = compose(pushGenerator(g), acc);
    return acc;
}

// Conjugation by x. Pushing the puncture along a loop in the class of one of
// a tri-arc's own arcs acts on the tri-arc as arcwise conjugation by an
// oriented representative: the generator panels are exactly conjugation by
// a, a^-1, b^-1, b, and changing coordinates to an arbitrary tri-arc turns
// its adapted generator pushes into conjugation by its own arcs. These are
// the pushes that realize "two big flips" at every vertex.
inline Automorphism innerAutomorphism(const FreeWord& x) {
    FreeWord xi = invert(x);
    return Automorphism(concat(concat(x, wordG1()), xi), concat(concat(x, wordG2()), xi));
}

// Act on a tri-arc arcwise; the result lies in the same fiber of pi.
inline TriArc applyPush(const Automorphism& f, const TriArc& t) {
    return PushAccess::fromImages(ArcClass(apply(f, t.arcs()[0].canon())),
                                  ArcClass(apply(f, t.arcs()[1].canon())),
                                  ArcClass(apply(f, t.arcs()[2].canon())));
}

inline TriArc applyPush(const PushWord& theta, const TriArc& t) {
    return applyPush(pushAuto(theta), t);
}

// Forget drops the moving puncture; pushes must become isotopic to the
// identity there, i.e. act trivially on homology.
inline bool forgetCheck(const Automorphism& f) {
    return abelianize(f.imageG1()) == AbelianImage{1, 0} &&
           abelianize(f.imageG2()) == AbelianImage{0, 1};
}

} // namespace tripants
