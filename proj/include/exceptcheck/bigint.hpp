/**
 * @file bigint.hpp
 * @brief Arbitrary-precision signed integers (sign + base-2^32 magnitude).
 *
 * Small, self-contained implementation: schoolbook multiplication and
 * Knuth algorithm D division. Every quantity in this project that could
 * outgrow int64 goes through BigInt; there is no floating point anywhere.
 */
#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ec {

class BigInt {
public:
    BigInt() : sign_(0) {}

    BigInt(long long v) { assign_i64(v); }
    BigInt(long v) { assign_i64(v); }
    BigInt(int v) { assign_i64(v); }
    BigInt(unsigned long v) : BigInt(static_cast<unsigned long long>(v)) {}
    BigInt(unsigned long long v) {
        sign_ = v == 0 ? 0 : 1;
        while (v) {
            mag_.push_back(static_cast<uint32_t>(v & 0xffffffffu));
            v >>= 32;
        }
    }

    explicit BigInt(std::string_view s) { assign_string(s); }

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    bool is_even() const { return sign_ == 0 || (mag_[0] & 1u) == 0; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c : -c;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    /// Truncated division (C semantics): quotient rounds toward zero,
    /// remainder has the sign of the dividend.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) {
            q = BigInt();
            r = a;
            return;
        }
        std::vector<uint32_t> qm, rm;
        divmod_mag(a.mag_, b.mag_, qm, rm);
        q.mag_ = std::move(qm);
        q.normalize();
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.mag_ = std::move(rm);
        r.normalize();
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.sign_ == 0 ? 0 : 1;
        b.sign_ = b.sign_ == 0 ? 0 : 1;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    std::optional<long long> to_i64() const {
        if (sign_ == 0) return 0;
        if (mag_.size() > 2) return std::nullopt;
        unsigned long long v = mag_[0];
        if (mag_.size() == 2) v |= static_cast<unsigned long long>(mag_[1]) << 32;
        if (sign_ > 0) {
            if (v > 0x7fffffffffffffffull) return std::nullopt;
            return static_cast<long long>(v);
        }
        if (v > 0x8000000000000000ull) return std::nullopt;
        return static_cast<long long>(-v);
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            uint64_t rem = 0;
            for (size_t i = m.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            for (int k = 0; k < 9; ++k) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        std::string out;
        if (sign_ < 0) out.push_back('-');
        out.append(digits.rbegin(), digits.rend());
        return out;
    }

    size_t hash() const {
        size_t seed = static_cast<size_t>(sign_ + 2);
        for (uint32_t w : mag_) seed ^= w + 0x9e3779b9u + (seed << 6) + (seed >> 2);
        return seed;
    }

private:
    int sign_;
    std::vector<uint32_t> mag_;  // little-endian, no leading zeros

    void normalize() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    void assign_i64(long long v) {
        sign_ = v == 0 ? 0 : (v < 0 ? -1 : 1);
        unsigned long long u = v < 0 ? ~static_cast<unsigned long long>(v) + 1 : static_cast<unsigned long long>(v);
        while (u) {
            mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
            u >>= 32;
        }
    }

    void assign_string(std::string_view s) {
        sign_ = 0;
        mag_.clear();
        bool neg = false;
        size_t i = 0;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
        for (; i < s.size(); ++i) {
            char c = s[i];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
            // *this = *this * 10 + digit, done on the magnitude directly
            uint64_t carry = static_cast<uint64_t>(c - '0');
            for (auto& w : mag_) {
                uint64_t cur = static_cast<uint64_t>(w) * 10u + carry;
                w = static_cast<uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            if (carry) mag_.push_back(static_cast<uint32_t>(carry));
        }
        normalize();
        if (!mag_.empty()) sign_ = neg ? -1 : 1;
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r(big.size() + 1, 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < big.size(); ++i) {
            uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0u);
            r[i] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        r[big.size()] = static_cast<uint32_t>(carry);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size(), 0);
        int64_t borrow = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            int64_t cur = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
            if (cur < 0) {
                cur += int64_t(1) << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size() + b.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t carry = 0;
            uint64_t ai = a[i];
            for (size_t j = 0; j < b.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(r[i + j]) + ai * b[j] + carry;
                r[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            size_t k = i + b.size();
            while (carry) {
                uint64_t cur = static_cast<uint64_t>(r[k]) + carry;
                r[k] = static_cast<uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
                ++k;
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Knuth TAOCP vol.2 algorithm D on magnitudes; requires |a| >= |b|, b nonzero.
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        if (b.size() == 1) {
            q.assign(a.size(), 0);
            uint64_t rem = 0;
            for (size_t i = a.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | a[i];
                q[i] = static_cast<uint32_t>(cur / b[0]);
                rem = cur % b[0];
            }
            r.clear();
            if (rem) r.push_back(static_cast<uint32_t>(rem));
            return;
        }
        int shift = 0;
        {
            uint32_t top = b.back();
            while (!(top & 0x80000000u)) {
                top <<= 1;
                ++shift;
            }
        }
        std::vector<uint32_t> bn(b.size()), an(a.size() + 1, 0);
        for (size_t i = b.size(); i-- > 0;)
            bn[i] = (b[i] << shift) | (shift && i ? static_cast<uint32_t>((static_cast<uint64_t>(b[i - 1]) >> (32 - shift))) : 0u);
        for (size_t i = a.size(); i-- > 0;)
            an[i] = (a[i] << shift) | (shift && i ? static_cast<uint32_t>((static_cast<uint64_t>(a[i - 1]) >> (32 - shift))) : 0u);
        if (shift) an[a.size()] = static_cast<uint32_t>(static_cast<uint64_t>(a.back()) >> (32 - shift));

        size_t n = bn.size(), m = an.size() - n;
        q.assign(m, 0);
        for (size_t j = m; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(an[j + n]) << 32) | an[j + n - 1];
            uint64_t qhat = num / bn[n - 1];
            uint64_t rhat = num % bn[n - 1];
            while (qhat > 0xffffffffull ||
                   qhat * bn[n - 2] > ((rhat << 32) | an[j + n - 2])) {
                --qhat;
                rhat += bn[n - 1];
                if (rhat > 0xffffffffull) break;
            }
            // multiply-subtract
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * bn[i] + carry;
                carry = p >> 32;
                int64_t t = static_cast<int64_t>(an[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
                if (t < 0) {
                    t += int64_t(1) << 32;
                    borrow = 1;
                } else {
                    borrow = 0;
                }
                an[i + j] = static_cast<uint32_t>(t);
            }
            int64_t t = static_cast<int64_t>(an[j + n]) - static_cast<int64_t>(carry) - borrow;
            if (t < 0) {
                // qhat was one too large; add back
                t += int64_t(1) << 32;
                --qhat;
                uint64_t c2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t cur = static_cast<uint64_t>(an[i + j]) + bn[i] + c2;
                    an[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
                    c2 = cur >> 32;
                }
                t += static_cast<int64_t>(c2);
                t &= 0xffffffffll;
            }
            an[j + n] = static_cast<uint32_t>(t);
            q[j] = static_cast<uint32_t>(qhat);
        }
        r.assign(n, 0);
        for (size_t i = 0; i < n; ++i)
            r[i] = (an[i] >> shift) | (shift && i + 1 < an.size() ? static_cast<uint32_t>(static_cast<uint64_t>(an[i + 1]) << (32 - shift)) : 0u);
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
};

inline BigInt gcd(const BigInt& a, const BigInt& b) { return BigInt::gcd(a, b); }

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    return (a * b).abs() / BigInt::gcd(a, b);
}

}  // namespace ec

template <>
struct std::hash<ec::BigInt> {
    size_t operator()(const ec::BigInt& v) const { return v.hash(); }
};
