/**
 * @file rational.hpp
 * @brief Exact rationals over BigInt, always in lowest terms, denominator > 0.
 */
#pragma once

#include <stdexcept>
#include <string>

#include "exceptcheck/bigint.hpp"

namespace ec {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { canonicalize(); }
    Rational(long long n, long long d) : num_(n), den_(d) { canonicalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    bool is_negative() const { return num_.is_negative(); }
    int sign() const { return num_.sign(); }

    /// Integer value if this rational is an integer fitting in int64.
    std::optional<long long> to_i64() const {
        if (!den_.is_one()) return std::nullopt;
        return num_.to_i64();
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return BigInt::cmp(a.num_ * b.den_, b.num_ * a.den_) < 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    /// Inverse of to_string: "p" or "p/q".
    static Rational parse(std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos) return Rational(BigInt(s));
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    }

    size_t hash() const {
        size_t seed = num_.hash();
        seed ^= den_.hash() + 0x9e3779b9u + (seed << 6) + (seed >> 2);
        return seed;
    }

    /// Floor of num/den as BigInt.
    BigInt floor() const {
        BigInt q, r;
        BigInt::divmod(num_, den_, q, r);
        if (r.is_negative()) q -= BigInt(1);
        return q;
    }

    BigInt ceil() const {
        BigInt q, r;
        BigInt::divmod(num_, den_, q, r);
        if (!r.is_zero() && !r.is_negative()) q += BigInt(1);
        return q;
    }

private:
    BigInt num_;
    BigInt den_;  // always > 0

    void canonicalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

}  // namespace ec

template <>
struct std::hash<ec::Rational> {
    size_t operator()(const ec::Rational& v) const { return v.hash(); }
};
