#pragma once

#include <concepts>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "frieze/bigint.hpp"

namespace frieze {

// A semifield value type: commutative associative +, commutative group *,
// * distributes over +. There is no subtraction and no zero.
template <typename K>
concept Semifield = std::regular<K> && requires(const K& a, const K& b) {
    { K::one() } -> std::convertible_to<K>;
    { a + b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { a.inverse() } -> std::convertible_to<K>;
    { a.str() } -> std::convertible_to<std::string>;
    { K::parse(std::string_view{}) } -> std::convertible_to<K>;
    { K::name() } -> std::convertible_to<std::string_view>;
};

template <Semifield K>
K operator/(const K& a, const K& b) {
    return a * b.inverse();
}

// Exact positive rational p/q, always in lowest terms. Models the
// sub-semifield of (R_{>0}, +, *) generated by the positive integers.
class PositiveRational {
public:
    PositiveRational() : num_(1), den_(1) {}

    PositiveRational(BigUint num, BigUint den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.is_zero() || den_.is_zero())
            throw std::domain_error("PositiveRational must be positive");
        reduce();
    }

    static PositiveRational from_int(std::uint64_t v) {
        return PositiveRational{BigUint{v}, BigUint{1}};
    }

    // Accepts "p" or "p/q" with positive decimal p, q.
    static PositiveRational parse(std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos)
            return PositiveRational{BigUint::from_decimal(s), BigUint{1}};
        return PositiveRational{BigUint::from_decimal(s.substr(0, slash)),
                                BigUint::from_decimal(s.substr(slash + 1))};
    }

    static PositiveRational one() { return PositiveRational{}; }
    static std::string_view name() { return "rational"; }

    const BigUint& num() const { return num_; }
    const BigUint& den() const { return den_; }
    bool is_integer() const { return den_.is_one(); }

    friend PositiveRational operator+(const PositiveRational& a, const PositiveRational& b) {
        return PositiveRational{a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }

    friend PositiveRational operator*(const PositiveRational& a, const PositiveRational& b) {
        return PositiveRational{a.num_ * b.num_, a.den_ * b.den_};
    }

    PositiveRational inverse() const { return PositiveRational{den_, num_}; }

    friend bool operator==(const PositiveRational& a, const PositiveRational& b) {
        // lowest terms make structural equality semantic equality
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const PositiveRational& a, const PositiveRational& b) {
        return !(a == b);
    }

    std::string str() const {
        return den_.is_one() ? num_.to_decimal() : num_.to_decimal() + "/" + den_.to_decimal();
    }

private:
    BigUint num_;
    BigUint den_;

    void reduce() {
        BigUint g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

// The tropical semifield (Z, max, +): addition is max, multiplication is
// integer addition, the unit is 0 and inversion is negation.
class TropicalInt {
public:
    TropicalInt() = default;
    explicit TropicalInt(std::int64_t v) : value_(v) {}
    explicit TropicalInt(BigInt v) : value_(std::move(v)) {}

    static TropicalInt parse(std::string_view s) { return TropicalInt{BigInt::from_decimal(s)}; }
    static TropicalInt one() { return TropicalInt{}; }
    static std::string_view name() { return "tropical"; }

    const BigInt& value() const { return value_; }

    friend TropicalInt operator+(const TropicalInt& a, const TropicalInt& b) {
        return cmp(a.value_, b.value_) >= 0 ? a : b;
    }

    friend TropicalInt operator*(const TropicalInt& a, const TropicalInt& b) {
        return TropicalInt{a.value_ + b.value_};
    }

    TropicalInt inverse() const { return TropicalInt{value_.negated()}; }

    friend bool operator==(const TropicalInt& a, const TropicalInt& b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(const TropicalInt& a, const TropicalInt& b) { return !(a == b); }

    std::string str() const { return value_.to_decimal(); }

private:
    BigInt value_;
};

static_assert(Semifield<PositiveRational>);
static_assert(Semifield<TropicalInt>);

} // namespace frieze
