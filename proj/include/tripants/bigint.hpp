#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "tripants/errors.hpp"

namespace tripants {

namespace detail {

// Limb storage with a 3-limb inline buffer (values below 10^27 never touch
// the heap); slope arithmetic lives almost entirely in that range.
class LimbVec {
public:
    LimbVec() = default;
    LimbVec(std::size_t n, std::uint32_t v) { assign(n, v); }

    std::size_t size() const { return heap_ ? vec_.size() : smallSize_; }
    bool empty() const { return size() == 0; }
    const std::uint32_t* data() const { return heap_ ? vec_.data() : small_; }
    std::uint32_t* data() { return heap_ ? vec_.data() : small_; }
    std::uint32_t operator[](std::size_t i) const { return data()[i]; }
    std::uint32_t& operator[](std::size_t i) { return data()[i]; }
    std::uint32_t back() const { return data()[size() - 1]; }

    void push_back(std::uint32_t v) {
        if (!heap_) {
            if (smallSize_ < kInline) {
                small_[smallSize_++] = v;
                return;
            }
            vec_.assign(small_, small_ + kInline);
            heap_ = true;
        }
        vec_.push_back(v);
    }

    void pop_back() {
        if (heap_)
            vec_.pop_back();
        else
            --smallSize_;
    }

    void assign(std::size_t n, std::uint32_t v) {
        if (n <= kInline) {
            heap_ = false;
            vec_.clear();
            smallSize_ = static_cast<std::uint8_t>(n);
            for (std::size_t i = 0; i < n; ++i)
                small_[i] = v;
        } else {
            heap_ = true;
            vec_.assign(n, v);
        }
    }

    friend bool operator==(const LimbVec& a, const LimbVec& b) {
        return a.size() == b.size() && std::equal(a.data(), a.data() + a.size(), b.data());
    }

private:
    static constexpr std::size_t kInline = 3;
    std::uint32_t small_[kInline] = {0, 0, 0};
    std::uint8_t smallSize_ = 0;
    bool heap_ = false;
    std::vector<std::uint32_t> vec_;
};

} // namespace detail

// Signed arbitrary-precision integer, base 10^9 limbs, little-endian.
// Supports exactly what exact slope geometry needs: + - *, comparison,
// parity/halving (for binary gcd), and decimal I/O. No general division.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) { // NOLINT: implicit by design, mirrors int literals
        unsigned long long m;
        if (v < 0) {
            sign_ = -1;
            m = ~static_cast<unsigned long long>(v) + 1ULL;
        } else if (v > 0) {
            sign_ = 1;
            m = static_cast<unsigned long long>(v);
        } else {
            return;
        }
        while (m > 0) {
            mag_.push_back(static_cast<std::uint32_t>(m % kBase));
            m /= kBase;
        }
    }

    static BigInt parse(std::string_view text) {
        bool neg = false;
        if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
            neg = text.front() == '-';
            text.remove_prefix(1);
        }
        if (text.empty())
            fail("ParseError", "empty integer literal");
        for (char c : text)
            if (c < '0' || c > '9')
                fail("ParseError", "invalid digit in integer literal");
        BigInt r;
        for (std::size_t end = text.size(); end > 0;) {
            std::size_t begin = end >= 9 ? end - 9 : 0;
            r.mag_.push_back(static_cast<std::uint32_t>(
                std::strtoul(std::string(text.substr(begin, end - begin)).c_str(), nullptr, 10)));
            end = begin;
        }
        r.trim();
        r.sign_ = r.mag_.empty() ? 0 : (neg ? -1 : 1);
        return r;
    }

    std::string str() const {
        if (sign_ == 0)
            return "0";
        std::string s = sign_ < 0 ? "-" : "";
        s += std::to_string(mag_.back());
        for (std::size_t i = mag_.size() - 1; i-- > 0;) {
            std::string limb = std::to_string(mag_[i]);
            s.append(9 - limb.size(), '0');
            s += limb;
        }
        return s;
    }

    bool isZero() const { return sign_ == 0; }
    bool isNegative() const { return sign_ < 0; }
    bool isOne() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

    bool odd() const { return !mag_.empty() && (mag_[0] & 1u); } // base is even

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0)
            r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0)
            return b;
        if (b.sign_ == 0)
            return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            addMag(a.mag_, b.mag_, r.mag_);
            r.sign_ = a.sign_;
            return r;
        }
        int c = cmpMag(a.mag_, b.mag_);
        if (c == 0)
            return r;
        const BigInt& big = c > 0 ? a : b;
        const BigInt& small = c > 0 ? b : a;
        subMag(big.mag_, small.mag_, r.mag_);
        r.sign_ = big.sign_;
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.sign_ == 0 || b.sign_ == 0)
            return r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                                    r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
            std::size_t k = i + b.mag_.size();
            while (carry > 0) {
                std::uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
                ++k;
            }
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Exact halving of the magnitude; sign kept (only used on even values in gcd).
    BigInt half() const {
        BigInt r = *this;
        std::uint32_t rem = 0;
        for (std::size_t i = r.mag_.size(); i-- > 0;) {
            std::uint64_t cur = static_cast<std::uint64_t>(rem) * kBase + r.mag_[i];
            r.mag_[i] = static_cast<std::uint32_t>(cur / 2);
            rem = static_cast<std::uint32_t>(cur & 1);
        }
        r.trim();
        if (r.mag_.empty())
            r.sign_ = 0;
        return r;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_)
            return a.sign_ <=> b.sign_;
        int c = cmpMag(a.mag_, b.mag_) * a.sign_;
        return c <=> 0;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }

    // Binary gcd on magnitudes; gcd(0, x) = |x|.
    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs();
        b = b.abs();
        if (a.isZero())
            return b;
        if (b.isZero())
            return a;
        int shift = 0;
        while (!a.odd() && !b.odd()) {
            a = a.half();
            b = b.half();
            ++shift;
        }
        while (!a.odd())
            a = a.half();
        while (!b.isZero()) {
            while (!b.odd())
                b = b.half();
            if (a > b)
                std::swap(a, b);
            b = b - a;
        }
        for (int i = 0; i < shift; ++i)
            a = a + a;
        return a;
    }

private:
    static constexpr std::uint32_t kBase = 1000000000u;

    void trim() {
        while (!mag_.empty() && mag_.back() == 0)
            mag_.pop_back();
    }

    static int cmpMag(const detail::LimbVec& a, const detail::LimbVec& b) {
        if (a.size() != b.size())
            return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i])
                return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static void addMag(const detail::LimbVec& a, const detail::LimbVec& b,
                       detail::LimbVec& r) {
        std::size_t n = std::max(a.size(), b.size());
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t cur = carry;
            if (i < a.size())
                cur += a[i];
            if (i < b.size())
                cur += b[i];
            r.push_back(static_cast<std::uint32_t>(cur % kBase));
            carry = cur / kBase;
        }
        if (carry > 0)
            r.push_back(static_cast<std::uint32_t>(carry));
    }

    // Requires |a| >= |b|; r receives a - b.
    static void subMag(const detail::LimbVec& a, const detail::LimbVec& b,
                       detail::LimbVec& r) {
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += kBase;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r.push_back(static_cast<std::uint32_t>(cur));
        }
        while (!r.empty() && r.back() == 0)
            r.pop_back();
    }

    int sign_ = 0;
    detail::LimbVec mag_;
};

} // namespace tripants
