#pragma once

#include <random>
#include <string>
#include <vector>

#include "tripants/explorer.hpp"
#include "tripants/freegroup.hpp"
#include "tripants/pushmap.hpp"
#include "tripants/triarc.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

// Runs f and reports the tripants::Error code it throws, or "" if none.
template <class F>
std::string errorCode(F&& f) {
    try {
        f();
    } catch (const tripants::Error& e) {
        return e.code();
    }
    return "";
}

// Random reduced word of exactly the requested length.
inline tripants::FreeWord randomWord(Rng& rng, std::size_t length) {
    std::vector<tripants::Letter> letters;
    int last = -1;
    for (std::size_t i = 0; i < length; ++i) {
        int code;
        do {
            code = static_cast<int>(rng() % 4);
        } while (last >= 0 && code == (last ^ 1));
        letters.push_back(tripants::Letter::fromCode(static_cast<unsigned char>(code)));
        last = code;
    }
    return tripants::reduce(letters);
}

inline tripants::FreeWord randomWordUpTo(Rng& rng, std::size_t maxLength) {
    return randomWord(rng, rng() % (maxLength + 1));
}

// Random walk from the base vertex: a uniformly chosen flip per step.
inline tripants::TriArc randomReachable(Rng& rng, int steps) {
    tripants::TriArc t = tripants::baseTriArc();
    for (int i = 0; i < steps; ++i) {
        auto ns = tripants::neighbors(t);
        t = ns[rng() % ns.size()].triArc;
    }
    return t;
}

inline tripants::PushWord randomPushWord(Rng& rng, std::size_t length) {
    tripants::PushWord w;
    for (std::size_t i = 0; i < length; ++i)
        w.gens.push_back(static_cast<tripants::PushGen>(rng() % 4));
    return w;
}

// All freely reduced words of length <= maxLength, in enumeration order.
inline std::vector<tripants::FreeWord> allWordsUpTo(std::size_t maxLength) {
    std::vector<tripants::FreeWord> out{tripants::FreeWord()};
    std::vector<std::vector<tripants::Letter>> level{{}};
    for (std::size_t len = 1; len <= maxLength; ++len) {
        std::vector<std::vector<tripants::Letter>> next;
        for (const auto& prefix : level)
            for (unsigned char code = 0; code < 4; ++code) {
                if (!prefix.empty() && prefix.back().code() == (code ^ 1))
                    continue;
                auto word = prefix;
                word.push_back(tripants::Letter::fromCode(code));
                out.push_back(tripants::reduce(word));
                next.push_back(std::move(word));
            }
        level = std::move(next);
    }
    return out;
}

} // namespace testsupport
