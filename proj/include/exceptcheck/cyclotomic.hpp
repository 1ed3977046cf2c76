/**
 * @file cyclotomic.hpp
 * @brief Exact elements of cyclotomic fields Q(zeta_N) in canonical form.
 *
 * Representation: an element is stored at its *minimal* conductor N
 * (N = 1 for rationals, otherwise N odd or divisible by 4), with sparse
 * rational coordinates on the power basis {zeta_N^k : 0 <= k < phi(N)}
 * obtained by reducing modulo the cyclotomic polynomial Phi_N. Two equal
 * values always have identical stored forms, so equality is structural
 * and the type is usable as a hash key.
 *
 * The cyclotomic literal grammar accepted by parse():
 *     expr   := ['+'|'-'] term (('+'|'-') term)*
 *     term   := factor (('*'|'/') factor)*
 *     factor := atom ['^' integer]
 *     atom   := integer | 'z' integer | '(' expr ')'
 * where zN denotes a primitive N-th root of unity; whitespace ignored.
 * Examples: "3*z7^2 - z7 + 1/2", "-1", "z8 - z8^3".
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exceptcheck/rational.hpp"

namespace ec {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

/// A cyclotomic literal whose conductor is missing or invalid.
struct UnknownConductorError : ParseError {
    UnknownConductorError(const std::string& msg, size_t pos) : ParseError(msg, pos) {}
};

struct NotRationalError : std::runtime_error {
    NotRationalError() : std::runtime_error("cyclotomic value is not rational") {}
};

namespace detail {

/// Cached per-conductor data: Phi_N, reduction rows for zeta^e with
/// phi(N) <= e < N, and subfield conversion solvers.
class CycField {
public:
    explicit CycField(uint32_t n);

    uint32_t n() const { return n_; }
    uint32_t phi() const { return phi_; }

    /// Coordinates of zeta_N^e (0 <= e < N) on the power basis, as integers.
    const std::vector<BigInt>& power_row(uint32_t e) const;

    const std::vector<uint32_t>& divisors() const { return divisors_; }

    /// Galois elements fixing Q(zeta_M): all k in [1,N), k = 1 mod M, gcd(k,N) = 1.
    std::vector<uint32_t> gal_fixers(uint32_t m) const;

    /// Convert coordinates known to lie in Q(zeta_M) (M | N) to the
    /// power basis of Q(zeta_M). Solver is built lazily and cached.
    std::vector<Rational> to_subfield(uint32_t m, const std::vector<Rational>& dense) const;

private:
    uint32_t n_, phi_;
    std::vector<std::vector<BigInt>> rows_;  // rows_[e - phi_] for e in [phi_, n_)
    std::vector<std::vector<BigInt>> units_; // identity rows for e < phi_
    std::vector<uint32_t> divisors_;

    struct SubSolver {
        std::vector<uint32_t> pivot_rows;           // phi(M) row indices
        std::vector<std::vector<Rational>> sinv;    // inverse of the pivot square
        uint32_t phi_m;
    };
    mutable std::mutex sub_mutex_;
    mutable std::map<uint32_t, SubSolver> subs_;

    const SubSolver& solver_for(uint32_t m) const;
};

const CycField& field(uint32_t n);

uint32_t euler_phi(uint32_t n);

/// Coefficients of the cyclotomic polynomial Phi_n (monic, integer).
const std::vector<BigInt>& cyclotomic_poly(uint32_t n);

}  // namespace detail

class CyclotomicNumber {
public:
    CyclotomicNumber() : n_(1) {}
    CyclotomicNumber(const Rational& q) : n_(1) {
        if (!q.is_zero()) coeffs_.emplace_back(0u, q);
    }
    CyclotomicNumber(long long v) : CyclotomicNumber(Rational(v)) {}
    CyclotomicNumber(int v) : CyclotomicNumber(Rational(v)) {}

    /// zeta_N^k, canonicalized (e.g. root_of_unity(6,1) is stored at conductor 3).
    static CyclotomicNumber root_of_unity(uint32_t n, uint64_t k = 1);

    /// Build from exponent->coefficient pairs at conductor n (exponents mod n,
    /// not necessarily reduced); result is canonicalized.
    static CyclotomicNumber from_terms(uint32_t n, const std::vector<std::pair<uint64_t, Rational>>& terms);

    /// Build from already-reduced dense coordinates (length phi(n)) on the
    /// power basis of Q(zeta_n). Only conductor minimization is performed.
    static CyclotomicNumber from_reduced(uint32_t n, std::vector<Rational> dense);

    static CyclotomicNumber parse(std::string_view text);

    uint32_t conductor() const { return n_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const { return n_ == 1; }

    /// Exact rational value; throws NotRationalError otherwise.
    Rational as_rational() const {
        if (n_ != 1) throw NotRationalError();
        return coeffs_.empty() ? Rational() : coeffs_[0].second;
    }

    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b);
    CyclotomicNumber operator-() const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& b) { return *this = *this + b; }
    CyclotomicNumber& operator-=(const CyclotomicNumber& b) { return *this = *this - b; }
    CyclotomicNumber& operator*=(const CyclotomicNumber& b) { return *this = *this * b; }

    /// Complex conjugation: zeta^k -> zeta^{N-k}.
    CyclotomicNumber conjugate() const;

    /// Galois automorphism zeta -> zeta^k; requires gcd(k, conductor) = 1.
    CyclotomicNumber galois(uint64_t k) const;

    CyclotomicNumber inverse() const;
    CyclotomicNumber pow(uint64_t e) const;

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

    /// Deterministic total order (for canonical choices, not numeric order).
    static int cmp(const CyclotomicNumber& a, const CyclotomicNumber& b);

    size_t hash() const {
        size_t seed = n_;
        for (const auto& [e, c] : coeffs_) {
            seed ^= e + 0x9e3779b9u + (seed << 6) + (seed >> 2);
            seed ^= c.hash() + 0x9e3779b9u + (seed << 6) + (seed >> 2);
        }
        return seed;
    }

    /// Canonical literal, parseable by parse().
    std::string to_string() const;

    const std::vector<std::pair<uint32_t, Rational>>& terms() const { return coeffs_; }

    /// Dense coordinates at the stored conductor (length phi(conductor)).
    std::vector<Rational> dense() const;

    /// Dense coordinates embedded into Q(zeta_m); m must be a multiple of
    /// the conductor (with the usual caveat that conductor 2 never occurs).
    std::vector<Rational> dense_in(uint32_t m) const;

private:
    uint32_t n_;
    std::vector<std::pair<uint32_t, Rational>> coeffs_;  // sorted by exponent, nonzero

    static CyclotomicNumber canonicalize_dense(uint32_t n, std::vector<Rational> dense, bool minimize);
};

inline CyclotomicNumber operator*(const Rational& q, const CyclotomicNumber& v) {
    return CyclotomicNumber(q) * v;
}

/// Accumulator for long exact sums of cyclotomic terms (inner products,
/// Molien sums). Avoids re-canonicalizing after every addend; the result
/// is canonicalized once in value().
class CycSum {
public:
    CycSum() : n_(1), dense_(1) {}

    void add_scaled(const CyclotomicNumber& v, const Rational& q);

    /// Accumulate q * a * conjugate(b).
    void add_product_conj(const CyclotomicNumber& a, const CyclotomicNumber& b, const Rational& q);

    CyclotomicNumber value() const;

private:
    uint32_t n_;
    std::vector<Rational> dense_;  // reduced coordinates at conductor n_

    void rebase(uint32_t m);
    void add_root(uint64_t exponent, const Rational& c);
};

}  // namespace ec

template <>
struct std::hash<ec::CyclotomicNumber> {
    size_t operator()(const ec::CyclotomicNumber& v) const { return v.hash(); }
};
