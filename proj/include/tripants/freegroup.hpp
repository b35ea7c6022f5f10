#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tripants/errors.hpp"

namespace tripants {

// Rank-2 free group calculus. Words are freely reduced sequences over
// {g1, g1^-1, g2, g2^-1}, encoded as the letters a, A, b, B. Letter order
// a < A < b < B; words compare by length, then lexicographically. That order
// drives every canonical form downstream.

enum class Gen : unsigned char { G1 = 0, G2 = 1 };

class Letter {
public:
    Letter(Gen gen, int sign) : code_(static_cast<unsigned char>(
        (static_cast<unsigned char>(gen) << 1) | (sign < 0 ? 1 : 0))) {}

    static Letter fromCode(unsigned char code) { return Letter(code); }

    Gen gen() const { return static_cast<Gen>(code_ >> 1); }
    int sign() const { return (code_ & 1) ? -1 : 1; }
    unsigned char code() const { return code_; }
    Letter inverse() const { return Letter(static_cast<unsigned char>(code_ ^ 1)); }
    char symbol() const { return "aAbB"[code_]; }

    friend bool operator==(Letter, Letter) = default;

private:
    explicit Letter(unsigned char code) : code_(code) {}
    unsigned char code_;
};

// Exponent sums of (g1, g2); the image in Z x Z.
struct AbelianImage {
    long long p = 0;
    long long q = 0;

    friend AbelianImage operator+(AbelianImage x, AbelianImage y) {
        return {x.p + y.p, x.q + y.q};
    }
    friend bool operator==(AbelianImage, AbelianImage) = default;
};

class FreeWord {
public:
    FreeWord() = default; // identity

    std::size_t size() const { return codes_.size(); }
    bool empty() const { return codes_.empty(); }
    Letter letter(std::size_t i) const {
        return Letter::fromCode(static_cast<unsigned char>(codes_[i]));
    }

    // Length-then-lexicographic; codes were chosen so byte order is letter order.
    friend std::strong_ordering operator<=>(const FreeWord& u, const FreeWord& v) {
        if (u.codes_.size() != v.codes_.size())
            return u.codes_.size() <=> v.codes_.size();
        return u.codes_.compare(v.codes_) <=> 0;
    }
    friend bool operator==(const FreeWord& u, const FreeWord& v) {
        return u.codes_ == v.codes_;
    }

    std::string text() const {
        std::string s;
        s.reserve(codes_.size());
        for (char c : codes_)
            s += "aAbB"[static_cast<unsigned char>(c)];
        return s;
    }

private:
    explicit FreeWord(std::string codes) : codes_(std::move(codes)) {}

    std::string codes_; // one byte per letter, values 0..3, freely reduced

    friend FreeWord reduce(const std::vector<Letter>& letters);
    friend FreeWord invert(const FreeWord& w);
    friend FreeWord concat(const FreeWord& u, const FreeWord& v);
    friend std::pair<FreeWord, FreeWord> cyclicReduce(const FreeWord& w);
    friend bool isConjugate(const FreeWord& u, const FreeWord& v);
    friend AbelianImage abelianize(const FreeWord& w);
    friend FreeWord substitute(const FreeWord& imageG1, const FreeWord& imageG2,
                               const FreeWord& w);
    friend FreeWord parseWord(std::string_view text);
};

namespace detail {
inline void pushReduced(std::string& codes, char c) {
    if (!codes.empty() && codes.back() == (c ^ 1))
        codes.pop_back();
    else
        codes.push_back(c);
}
} // namespace detail

inline FreeWord reduce(const std::vector<Letter>& letters) {
    std::string codes;
    codes.reserve(letters.size());
    for (Letter l : letters)
        detail::pushReduced(codes, static_cast<char>(l.code()));
    return FreeWord(std::move(codes));
}

inline FreeWord invert(const FreeWord& w) {
    std::string codes;
    codes.reserve(w.codes_.size());
    for (std::size_t i = w.codes_.size(); i-- > 0;)
        codes.push_back(w.codes_[i] ^ 1);
    return FreeWord(std::move(codes));
}

inline FreeWord concat(const FreeWord& u, const FreeWord& v) {
    std::string codes = u.codes_;
    codes.reserve(u.codes_.size() + v.codes_.size());
    for (char c : v.codes_)
        detail::pushReduced(codes, c);
    return FreeWord(std::move(codes));
}

// w = conjugator * core * conjugator^-1 with core cyclically reduced.
inline std::pair<FreeWord, FreeWord> cyclicReduce(const FreeWord& w) {
    std::size_t i = 0;
    std::size_t j = w.codes_.size();
    while (j - i >= 2 && w.codes_[i] == (w.codes_[j - 1] ^ 1)) {
        ++i;
        --j;
    }
    return {FreeWord(w.codes_.substr(i, j - i)), FreeWord(w.codes_.substr(0, i))};
}

// Conjugacy in a free group: equal cyclic cores up to rotation.
inline bool isConjugate(const FreeWord& u, const FreeWord& v) {
    std::string cu = cyclicReduce(u).first.codes_;
    std::string cv = cyclicReduce(v).first.codes_;
    if (cu.size() != cv.size())
        return false;
    if (cu.empty())
        return true;
    return (cu + cu).find(cv) != std::string::npos;
}

inline AbelianImage abelianize(const FreeWord& w) {
    AbelianImage img;
    for (std::size_t i = 0; i < w.size(); ++i) {
        Letter l = w.letter(i);
        (l.gen() == Gen::G1 ? img.p : img.q) += l.sign();
    }
    return img;
}

inline FreeWord commutator(const FreeWord& u, const FreeWord& v) {
    return concat(concat(u, v), concat(invert(u), invert(v)));
}

inline FreeWord substitute(const FreeWord& imageG1, const FreeWord& imageG2,
                           const FreeWord& w) {
    const FreeWord images[4] = {imageG1, invert(imageG1), imageG2, invert(imageG2)};
    std::string codes;
    for (char c : w.codes_)
        for (char ic : images[static_cast<unsigned char>(c)].codes_)
            detail::pushReduced(codes, ic);
    return FreeWord(std::move(codes));
}

inline FreeWord wordG1() { return reduce({Letter(Gen::G1, 1)}); }
inline FreeWord wordG2() { return reduce({Letter(Gen::G2, 1)}); }

// Rank-2 basis test: {u, v} is a free basis iff [u, v] is conjugate to
// [g1, g2] or its inverse.
inline bool isBasis(const FreeWord& u, const FreeWord& v) {
    FreeWord c = commutator(u, v);
    if (c.empty())
        return false;
    FreeWord target = commutator(wordG1(), wordG2());
    return isConjugate(c, target) || isConjugate(c, invert(target));
}

// Text form: a/A/b/B per letter, empty string = identity. Anything else is rejected.
inline FreeWord parseWord(std::string_view text) {
    std::string codes;
    codes.reserve(text.size());
    for (char c : text) {
        char code;
        switch (c) {
        case 'a': code = 0; break;
        case 'A': code = 1; break;
        case 'b': code = 2; break;
        case 'B': code = 3; break;
        default:
            fail("ParseError", std::string("invalid word character '") + c + "'");
        }
        detail::pushReduced(codes, code);
    }
    return FreeWord(std::move(codes));
}

} // namespace tripants
