#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace frieze {

// Unsigned arbitrary-precision integer. Limbs are base 2^32, little-endian,
// no trailing zero limbs (empty vector encodes 0).
class BigUint {
public:
    BigUint() = default;

    explicit BigUint(std::uint64_t v) {
        if (v != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
            if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
        }
    }

    static BigUint from_decimal(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("empty integer literal");
        BigUint r;
        for (char c : s) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad digit in integer literal");
            r = mul_small(r, 10);
            r = add_small(r, static_cast<std::uint32_t>(c - '0'));
        }
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }

    std::size_t bit_length() const {
        if (limbs_.empty()) return 0;
        std::uint32_t top = limbs_.back();
        std::size_t bits = (limbs_.size() - 1) * 32;
        while (top) { ++bits; top >>= 1; }
        return bits;
    }

    bool bit(std::size_t i) const {
        std::size_t limb = i / 32;
        if (limb >= limbs_.size()) return false;
        return (limbs_[limb] >> (i % 32)) & 1u;
    }

    friend int cmp(const BigUint& a, const BigUint& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
        for (std::size_t i = a.limbs_.size(); i-- > 0;) {
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
        }
        return 0;
    }

    friend bool operator==(const BigUint& a, const BigUint& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return cmp(a, b) != 0; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return cmp(a, b) <= 0; }

    friend BigUint operator+(const BigUint& a, const BigUint& b) {
        BigUint r;
        const auto& x = a.limbs_;
        const auto& y = b.limbs_;
        std::size_t n = std::max(x.size(), y.size());
        r.limbs_.reserve(n + 1);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t s = carry;
            if (i < x.size()) s += x[i];
            if (i < y.size()) s += y[i];
            r.limbs_.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
            carry = s >> 32;
        }
        if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    // Requires a >= b.
    friend BigUint operator-(const BigUint& a, const BigUint& b) {
        if (cmp(a, b) < 0) throw std::underflow_error("BigUint subtraction underflow");
        BigUint r;
        r.limbs_.resize(a.limbs_.size());
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::int64_t d = static_cast<std::int64_t>(a.limbs_[i]) - borrow -
                             (i < b.limbs_.size() ? static_cast<std::int64_t>(b.limbs_[i]) : 0);
            if (d < 0) { d += (std::int64_t{1} << 32); borrow = 1; } else { borrow = 0; }
            r.limbs_[i] = static_cast<std::uint32_t>(d);
        }
        r.trim();
        return r;
    }

    friend BigUint operator*(const BigUint& a, const BigUint& b) {
        if (a.is_zero() || b.is_zero()) return BigUint{};
        BigUint r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = r.limbs_[i + j] +
                                    static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry) {
                std::uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        return r;
    }

    BigUint shifted_left(std::size_t bits) const {
        if (is_zero() || bits == 0) {
            if (bits == 0) return *this;
            return BigUint{};
        }
        BigUint r;
        std::size_t limb_shift = bits / 32, bit_shift = bits % 32;
        r.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t v = static_cast<std::uint64_t>(limbs_[i]) << bit_shift;
            r.limbs_[i + limb_shift] |= static_cast<std::uint32_t>(v & 0xffffffffu);
            r.limbs_[i + limb_shift + 1] |= static_cast<std::uint32_t>(v >> 32);
        }
        r.trim();
        return r;
    }

    // Shift-and-subtract long division; quotient and remainder.
    friend std::pair<BigUint, BigUint> divmod(const BigUint& a, const BigUint& b) {
        if (b.is_zero()) throw std::domain_error("BigUint division by zero");
        if (cmp(a, b) < 0) return {BigUint{}, a};
        std::size_t shift = a.bit_length() - b.bit_length();
        BigUint rem = a;
        BigUint quot;
        quot.limbs_.assign(shift / 32 + 1, 0);
        BigUint cur = b.shifted_left(shift);
        for (std::size_t i = shift + 1; i-- > 0;) {
            if (cmp(cur, rem) <= 0) {
                rem = rem - cur;
                quot.limbs_[i / 32] |= (1u << (i % 32));
            }
            cur = cur.shifted_right_one();
        }
        quot.trim();
        return {quot, rem};
    }

    friend BigUint operator/(const BigUint& a, const BigUint& b) { return divmod(a, b).first; }
    friend BigUint operator%(const BigUint& a, const BigUint& b) { return divmod(a, b).second; }

    friend BigUint gcd(BigUint a, BigUint b) {
        // binary gcd; only shifts and subtractions
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        std::size_t shift = 0;
        while (a.even() && b.even()) { a = a.shifted_right_one(); b = b.shifted_right_one(); ++shift; }
        while (a.even()) a = a.shifted_right_one();
        while (!b.is_zero()) {
            while (b.even()) b = b.shifted_right_one();
            if (cmp(a, b) > 0) std::swap(a, b);
            b = b - a;
        }
        return a.shifted_left(shift);
    }

    std::string to_decimal() const {
        if (is_zero()) return "0";
        BigUint t = *this;
        std::string out;
        while (!t.is_zero()) {
            auto [q, r] = divmod_small(t, 1000000000u);
            t = q;
            std::string chunk = std::to_string(r);
            if (t.is_zero()) {
                out.insert(0, chunk);
            } else {
                out.insert(0, std::string(9 - chunk.size(), '0') + chunk);
            }
        }
        return out;
    }

    std::uint64_t to_u64() const {
        if (limbs_.size() > 2) throw std::overflow_error("BigUint does not fit in 64 bits");
        std::uint64_t v = 0;
        if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
        if (!limbs_.empty()) v |= limbs_[0];
        return v;
    }

    bool fits_u64() const { return limbs_.size() <= 2; }

private:
    std::vector<std::uint32_t> limbs_;

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    bool even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

    BigUint shifted_right_one() const {
        BigUint r;
        r.limbs_.resize(limbs_.size());
        std::uint32_t carry = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            r.limbs_[i] = (limbs_[i] >> 1) | (carry << 31);
            carry = limbs_[i] & 1u;
        }
        r.trim();
        return r;
    }

    static BigUint mul_small(const BigUint& a, std::uint32_t m) {
        BigUint r;
        std::uint64_t carry = 0;
        r.limbs_.reserve(a.limbs_.size() + 1);
        for (std::uint32_t limb : a.limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
            r.limbs_.push_back(static_cast<std::uint32_t>(cur & 0xffffffffu));
            carry = cur >> 32;
        }
        if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    static BigUint add_small(const BigUint& a, std::uint32_t v) {
        BigUint r = a;
        std::uint64_t carry = v;
        for (std::size_t i = 0; carry && i < r.limbs_.size(); ++i) {
            std::uint64_t cur = r.limbs_[i] + carry;
            r.limbs_[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    static std::pair<BigUint, std::uint32_t> divmod_small(const BigUint& a, std::uint32_t d) {
        BigUint q;
        q.limbs_.resize(a.limbs_.size());
        std::uint64_t rem = 0;
        for (std::size_t i = a.limbs_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a.limbs_[i];
            q.limbs_[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        q.trim();
        return {q, static_cast<std::uint32_t>(rem)};
    }
};

// Signed arbitrary-precision integer (sign-magnitude).
class BigInt {
public:
    BigInt() = default;
    explicit BigInt(std::int64_t v)
        : negative_(v < 0),
          mag_(v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v)) {}
    BigInt(bool negative, BigUint mag) : negative_(negative && !mag.is_zero()), mag_(std::move(mag)) {}

    static BigInt from_decimal(std::string_view s) {
        bool neg = false;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
            neg = s[0] == '-';
            s.remove_prefix(1);
        }
        return BigInt{neg, BigUint::from_decimal(s)};
    }

    bool is_zero() const { return mag_.is_zero(); }
    bool negative() const { return negative_; }
    const BigUint& magnitude() const { return mag_; }

    BigInt negated() const { return BigInt{!negative_, mag_}; }

    friend int cmp(const BigInt& a, const BigInt& b) {
        if (a.negative_ != b.negative_) return a.negative_ ? -1 : 1;
        int m = cmp(a.mag_, b.mag_);
        return a.negative_ ? -m : m;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.negative_ == b.negative_) return BigInt{a.negative_, a.mag_ + b.mag_};
        int m = cmp(a.mag_, b.mag_);
        if (m == 0) return BigInt{};
        if (m > 0) return BigInt{a.negative_, a.mag_ - b.mag_};
        return BigInt{b.negative_, b.mag_ - a.mag_};
    }

    std::string to_decimal() const {
        return negative_ ? "-" + mag_.to_decimal() : mag_.to_decimal();
    }

    std::int64_t to_i64() const {
        if (!mag_.fits_u64()) throw std::overflow_error("BigInt does not fit in 64 bits");
        std::uint64_t m = mag_.to_u64();
        if (negative_) {
            if (m > static_cast<std::uint64_t>(INT64_MAX) + 1)
                throw std::overflow_error("BigInt does not fit in 64 bits");
            return m == static_cast<std::uint64_t>(INT64_MAX) + 1
                       ? INT64_MIN
                       : -static_cast<std::int64_t>(m);
        }
        if (m > static_cast<std::uint64_t>(INT64_MAX))
            throw std::overflow_error("BigInt does not fit in 64 bits");
        return static_cast<std::int64_t>(m);
    }

private:
    bool negative_ = false;
    BigUint mag_;
};

} // namespace frieze
