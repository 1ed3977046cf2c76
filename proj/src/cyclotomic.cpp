#include "exceptcheck/cyclotomic.hpp"

#include <cassert>
#include <numeric>

namespace ec {
namespace detail {

uint32_t euler_phi(uint32_t n) {
    uint32_t result = n;
    uint32_t m = n;
    for (uint32_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

using Poly = std::vector<BigInt>;  // ascending coefficients

// quotient of a by b, exact division assumed (b monic here)
Poly poly_divexact(const Poly& a, const Poly& b) {
    if (a.size() < b.size()) return {};
    Poly rem = a;
    Poly q(a.size() - b.size() + 1);
    for (size_t i = q.size(); i-- > 0;) {
        BigInt c = rem[i + b.size() - 1];  // b monic
        q[i] = c;
        if (!c.is_zero())
            for (size_t j = 0; j < b.size(); ++j)
                rem[i + j] -= c * b[j];
    }
    return q;
}

std::mutex poly_mutex;
std::map<uint32_t, Poly> poly_cache;

const Poly& cyclotomic_poly_locked(uint32_t n) {
    auto it = poly_cache.find(n);
    if (it != poly_cache.end()) return it->second;
    Poly phi;
    if (n == 1) {
        phi = {BigInt(-1), BigInt(1)};  // x - 1
    } else {
        Poly num(n + 1);
        num[0] = BigInt(-1);
        num[n] = BigInt(1);  // x^n - 1
        Poly den = {BigInt(1)};
        for (uint32_t d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            const Poly& pd = cyclotomic_poly_locked(d);
            Poly next(den.size() + pd.size() - 1);
            for (size_t i = 0; i < den.size(); ++i)
                for (size_t j = 0; j < pd.size(); ++j)
                    next[i + j] += den[i] * pd[j];
            den = std::move(next);
        }
        phi = poly_divexact(num, den);
    }
    auto [pos, ok] = poly_cache.emplace(n, std::move(phi));
    (void)ok;
    return pos->second;
}

std::mutex field_mutex;
std::map<uint32_t, std::unique_ptr<CycField>> field_cache;

}  // namespace

const std::vector<BigInt>& cyclotomic_poly(uint32_t n) {
    std::lock_guard<std::mutex> lock(poly_mutex);
    return cyclotomic_poly_locked(n);
}

CycField::CycField(uint32_t n) : n_(n), phi_(euler_phi(n)) {
    const Poly& cp = cyclotomic_poly(n);
    assert(cp.size() == phi_ + 1);
    units_.resize(phi_);
    for (uint32_t e = 0; e < phi_; ++e) {
        units_[e].assign(phi_, BigInt());
        units_[e][e] = BigInt(1);
    }
    // x^e mod Phi_n for e in [phi, n): iteratively shift and fold the top term
    rows_.reserve(n_ - phi_);
    std::vector<BigInt> cur(phi_);
    // cur = x^phi mod Phi = -(c_0 + c_1 x + ... + c_{phi-1} x^{phi-1})
    for (uint32_t i = 0; i < phi_; ++i) cur[i] = -cp[i];
    rows_.push_back(cur);
    for (uint32_t e = phi_ + 1; e < n_; ++e) {
        std::vector<BigInt> next(phi_);
        BigInt top = cur[phi_ - 1];
        for (uint32_t i = phi_ - 1; i >= 1; --i) next[i] = cur[i - 1];
        next[0] = BigInt();
        if (!top.is_zero())
            for (uint32_t i = 0; i < phi_; ++i) next[i] += top * rows_[0][i];
        rows_.push_back(next);
        cur = std::move(next);
    }
    for (uint32_t d = 1; d <= n_; ++d)
        if (n_ % d == 0) divisors_.push_back(d);
}

const std::vector<BigInt>& CycField::power_row(uint32_t e) const {
    assert(e < n_);
    if (e < phi_) return units_[e];
    return rows_[e - phi_];
}

std::vector<uint32_t> CycField::gal_fixers(uint32_t m) const {
    std::vector<uint32_t> ks;
    for (uint32_t k = 1; k < n_; ++k)
        if (k % m == 1 % m && std::gcd(k, n_) == 1) ks.push_back(k);
    return ks;
}

const CycField::SubSolver& CycField::solver_for(uint32_t m) const {
    std::lock_guard<std::mutex> lock(sub_mutex_);
    auto it = subs_.find(m);
    if (it != subs_.end()) return it->second;

    uint32_t phi_m = euler_phi(m);
    uint32_t step = n_ / m;
    // columns: coordinates of zeta_n^{step*j}, j < phi_m
    std::vector<std::vector<Rational>> cols(phi_m, std::vector<Rational>(phi_));
    for (uint32_t j = 0; j < phi_m; ++j) {
        const auto& row = power_row(static_cast<uint32_t>((static_cast<uint64_t>(step) * j) % n_));
        for (uint32_t i = 0; i < phi_; ++i) cols[j][i] = Rational(row[i]);
    }
    // pick phi_m independent rows by Gaussian elimination on the transpose
    std::vector<std::vector<Rational>> work = cols;  // phi_m x phi_
    std::vector<uint32_t> pivots;
    uint32_t rank = 0;
    for (uint32_t col = 0; col < phi_ && rank < phi_m; ++col) {
        uint32_t sel = rank;
        while (sel < phi_m && work[sel][col].is_zero()) ++sel;
        if (sel == phi_m) continue;
        std::swap(work[sel], work[rank]);
        Rational inv = Rational(1) / work[rank][col];
        for (uint32_t c2 = col; c2 < phi_; ++c2) work[rank][c2] *= inv;
        for (uint32_t r2 = 0; r2 < phi_m; ++r2) {
            if (r2 == rank || work[r2][col].is_zero()) continue;
            Rational f = work[r2][col];
            for (uint32_t c2 = col; c2 < phi_; ++c2) work[r2][c2] -= f * work[rank][c2];
        }
        pivots.push_back(col);
        ++rank;
    }
    assert(rank == phi_m);

    // invert the pivot square S with S[r][j] = cols[j][pivots[r]]
    std::vector<std::vector<Rational>> aug(phi_m, std::vector<Rational>(2 * phi_m));
    for (uint32_t r = 0; r < phi_m; ++r) {
        for (uint32_t j = 0; j < phi_m; ++j) aug[r][j] = cols[j][pivots[r]];
        aug[r][phi_m + r] = Rational(1);
    }
    for (uint32_t col = 0; col < phi_m; ++col) {
        uint32_t sel = col;
        while (sel < phi_m && aug[sel][col].is_zero()) ++sel;
        assert(sel < phi_m);
        std::swap(aug[sel], aug[col]);
        Rational inv = Rational(1) / aug[col][col];
        for (uint32_t c2 = 0; c2 < 2 * phi_m; ++c2) aug[col][c2] *= inv;
        for (uint32_t r2 = 0; r2 < phi_m; ++r2) {
            if (r2 == col || aug[r2][col].is_zero()) continue;
            Rational f = aug[r2][col];
            for (uint32_t c2 = 0; c2 < 2 * phi_m; ++c2) aug[r2][c2] -= f * aug[col][c2];
        }
    }
    SubSolver solver;
    solver.phi_m = phi_m;
    solver.pivot_rows = pivots;
    solver.sinv.assign(phi_m, std::vector<Rational>(phi_m));
    for (uint32_t r = 0; r < phi_m; ++r)
        for (uint32_t c = 0; c < phi_m; ++c) solver.sinv[r][c] = aug[r][phi_m + c];
    auto [pos, ok] = subs_.emplace(m, std::move(solver));
    (void)ok;
    return pos->second;
}

std::vector<Rational> CycField::to_subfield(uint32_t m, const std::vector<Rational>& dense) const {
    if (m == 1) {
        return {dense[0]};
    }
    const SubSolver& s = solver_for(m);
    std::vector<Rational> y(s.phi_m);
    for (uint32_t r = 0; r < s.phi_m; ++r) {
        Rational acc;
        for (uint32_t c = 0; c < s.phi_m; ++c) {
            const Rational& x = dense[s.pivot_rows[c]];
            if (!x.is_zero() && !s.sinv[r][c].is_zero()) acc += s.sinv[r][c] * x;
        }
        y[r] = acc;
    }
    return y;
}

const CycField& field(uint32_t n) {
    std::lock_guard<std::mutex> lock(field_mutex);
    auto it = field_cache.find(n);
    if (it != field_cache.end()) return *it->second;
    auto [pos, ok] = field_cache.emplace(n, std::make_unique<CycField>(n));
    (void)ok;
    return *pos->second;
}

}  // namespace detail

using detail::field;

namespace {

std::vector<uint32_t> distinct_primes(uint32_t n) {
    std::vector<uint32_t> ps;
    for (uint32_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

CyclotomicNumber CyclotomicNumber::canonicalize_dense(uint32_t n, std::vector<Rational> dense, bool minimize) {
    while (minimize && n > 1) {
        const auto& fld = detail::field(n);
        bool descended = false;
        for (uint32_t p : distinct_primes(n)) {
            uint32_t m = n / p;
            if (m % 4 == 2) m /= 2;
            // Galois test: fixed by everything that fixes Q(zeta_m)?
            bool fixed = true;
            for (uint32_t k : fld.gal_fixers(m)) {
                if (k == 1) continue;
                // image of dense under zeta -> zeta^k
                std::vector<Rational> img(fld.phi());
                for (uint32_t e = 0; e < fld.phi(); ++e) {
                    if (dense[e].is_zero()) continue;
                    const auto& row = fld.power_row(static_cast<uint32_t>((static_cast<uint64_t>(k) * e) % n));
                    for (uint32_t i = 0; i < fld.phi(); ++i)
                        if (!row[i].is_zero()) img[i] += dense[e] * Rational(row[i]);
                }
                if (img != dense) {
                    fixed = false;
                    break;
                }
            }
            if (fixed) {
                dense = fld.to_subfield(m, dense);
                n = m;
                descended = true;
                break;
            }
        }
        if (!descended) break;
    }
    CyclotomicNumber v;
    v.n_ = 1;
    bool any = false;
    for (uint32_t e = 0; e < dense.size(); ++e)
        if (!dense[e].is_zero()) {
            any = true;
            break;
        }
    if (!any) return v;
    if (n == 1) {
        v.coeffs_.emplace_back(0u, dense[0]);
        return v;
    }
    v.n_ = n;
    for (uint32_t e = 0; e < dense.size(); ++e)
        if (!dense[e].is_zero()) v.coeffs_.emplace_back(e, dense[e]);
    return v;
}

CyclotomicNumber CyclotomicNumber::from_terms(uint32_t n, const std::vector<std::pair<uint64_t, Rational>>& terms) {
    if (n == 0) throw std::invalid_argument("conductor must be positive");
    if (n % 4 == 2) {
        // Q(zeta_{2m}) = Q(zeta_m) for odd m; rewrite exponents
        uint32_t m = n / 2;
        std::vector<std::pair<uint64_t, Rational>> shifted;
        shifted.reserve(terms.size());
        for (const auto& [e, c] : terms) {
            uint64_t em = e % n;
            // zeta_{2m}^e = (-1)^e zeta_m^{e*? }: zeta_{2m} = -zeta_m^{(m+1)/2}
            // simpler: zeta_{2m}^e = zeta_m^{e} when e even gives zeta_m^{e/2}... use
            // zeta_{2m} = -zeta_m^{(m+1)/2} so zeta_{2m}^e = (-1)^e zeta_m^{e(m+1)/2 mod m}
            uint64_t expm = (em * ((m + 1) / 2)) % m;
            Rational coeff = (em % 2 == 0) ? c : -c;
            shifted.emplace_back(expm, coeff);
        }
        return from_terms(m, shifted);
    }
    const auto& fld = field(n);
    std::vector<Rational> raw(n);
    for (const auto& [e, c] : terms) raw[static_cast<uint32_t>(e % n)] += c;
    std::vector<Rational> dense(fld.phi());
    for (uint32_t e = 0; e < n; ++e) {
        if (raw[e].is_zero()) continue;
        if (e < fld.phi()) {
            dense[e] += raw[e];
        } else {
            const auto& row = fld.power_row(e);
            for (uint32_t i = 0; i < fld.phi(); ++i)
                if (!row[i].is_zero()) dense[i] += raw[e] * Rational(row[i]);
        }
    }
    return canonicalize_dense(n, std::move(dense), true);
}

CyclotomicNumber CyclotomicNumber::from_reduced(uint32_t n, std::vector<Rational> dense) {
    assert(dense.size() == detail::euler_phi(n));
    return canonicalize_dense(n, std::move(dense), true);
}

CyclotomicNumber CyclotomicNumber::root_of_unity(uint32_t n, uint64_t k) {
    return from_terms(n, {{k, Rational(1)}});
}

std::vector<Rational> CyclotomicNumber::dense() const {
    const auto& fld = field(n_);
    std::vector<Rational> d(fld.phi());
    for (const auto& [e, c] : coeffs_) d[e] = c;
    return d;
}

std::vector<Rational> CyclotomicNumber::dense_in(uint32_t m) const {
    if (m == n_) return dense();
    if (m % n_ != 0) throw std::invalid_argument("dense_in: not a multiple of the conductor");
    const auto& fld = field(m);
    std::vector<Rational> d(fld.phi());
    uint64_t step = m / n_;
    for (const auto& [e, c] : coeffs_) {
        const auto& row = fld.power_row(static_cast<uint32_t>((step * e) % m));
        for (uint32_t i = 0; i < fld.phi(); ++i)
            if (!row[i].is_zero()) d[i] += c * Rational(row[i]);
    }
    return d;
}

namespace {

uint32_t lcm_u32(uint32_t a, uint32_t b) {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) / std::gcd(a, b) * b);
}

}  // namespace

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    uint32_t n = lcm_u32(a.conductor(), b.conductor());
    std::vector<std::pair<uint64_t, Rational>> terms;
    terms.reserve(a.terms().size() + b.terms().size());
    uint64_t sa = n / a.conductor(), sb = n / b.conductor();
    for (const auto& [e, c] : a.terms()) terms.emplace_back(sa * e, c);
    for (const auto& [e, c] : b.terms()) terms.emplace_back(sb * e, c);
    return CyclotomicNumber::from_terms(n, terms);
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber r = *this;
    for (auto& [e, c] : r.coeffs_) c = -c;
    return r;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.is_zero() || b.is_zero()) return CyclotomicNumber();
    uint32_t n = lcm_u32(a.conductor(), b.conductor());
    uint64_t sa = n / a.conductor(), sb = n / b.conductor();
    std::vector<std::pair<uint64_t, Rational>> terms;
    terms.reserve(a.terms().size() * b.terms().size());
    for (const auto& [e1, c1] : a.terms())
        for (const auto& [e2, c2] : b.terms())
            terms.emplace_back((sa * e1 + sb * e2) % n, c1 * c2);
    return CyclotomicNumber::from_terms(n, terms);
}

CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a * b.inverse();
}

CyclotomicNumber CyclotomicNumber::conjugate() const {
    if (n_ == 1) return *this;
    std::vector<std::pair<uint64_t, Rational>> terms;
    terms.reserve(coeffs_.size());
    for (const auto& [e, c] : coeffs_) terms.emplace_back((n_ - e) % n_, c);
    return from_terms(n_, terms);
}

CyclotomicNumber CyclotomicNumber::galois(uint64_t k) const {
    if (n_ == 1) return *this;
    if (std::gcd(static_cast<uint64_t>(n_), k) != 1)
        throw std::invalid_argument("galois: k not coprime to conductor");
    std::vector<std::pair<uint64_t, Rational>> terms;
    terms.reserve(coeffs_.size());
    for (const auto& [e, c] : coeffs_) terms.emplace_back((k * e) % n_, c);
    return from_terms(n_, terms);
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw std::domain_error("cyclotomic inverse of zero");
    if (n_ == 1) return CyclotomicNumber(Rational(1) / coeffs_[0].second);
    // extended Euclid of p against Phi_n over Q
    const auto& fld = field(n_);
    const auto& cpB = detail::cyclotomic_poly(n_);
    std::vector<Rational> r0(cpB.size()), r1(fld.phi());
    for (size_t i = 0; i < cpB.size(); ++i) r0[i] = Rational(cpB[i]);
    for (const auto& [e, c] : coeffs_) r1[e] = c;
    std::vector<Rational> s0 = {Rational(0)}, s1 = {Rational(1)};
    auto degree = [](const std::vector<Rational>& p) -> int {
        for (size_t i = p.size(); i-- > 0;)
            if (!p[i].is_zero()) return static_cast<int>(i);
        return -1;
    };
    while (true) {
        int d1 = degree(r1);
        if (d1 <= 0) break;
        int d0 = degree(r0);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(s0, s1);
            continue;
        }
        Rational f = r0[d0] / r1[d1];
        int shift = d0 - d1;
        if (static_cast<int>(r0.size()) < d1 + shift + 1) r0.resize(d1 + shift + 1);
        for (int i = 0; i <= d1; ++i) r0[i + shift] -= f * r1[i];
        if (s0.size() < s1.size() + shift) s0.resize(s1.size() + shift);
        for (size_t i = 0; i < s1.size(); ++i) s0[i + shift] -= f * s1[i];
        if (degree(r0) < degree(r1)) {
            std::swap(r0, r1);
            std::swap(s0, s1);
        }
    }
    int d1 = degree(r1);
    if (d1 != 0) throw std::domain_error("cyclotomic inverse: not invertible");
    Rational g = r1[0];
    std::vector<std::pair<uint64_t, Rational>> terms;
    for (size_t i = 0; i < s1.size(); ++i)
        if (!s1[i].is_zero()) terms.emplace_back(i, s1[i] / g);
    return from_terms(n_, terms);
}

CyclotomicNumber CyclotomicNumber::pow(uint64_t e) const {
    CyclotomicNumber result(1);
    CyclotomicNumber base = *this;
    while (e) {
        if (e & 1) result *= base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

int CyclotomicNumber::cmp(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_ ? -1 : 1;
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size() ? -1 : 1;
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].first != b.coeffs_[i].first)
            return a.coeffs_[i].first < b.coeffs_[i].first ? -1 : 1;
        const Rational &x = a.coeffs_[i].second, &y = b.coeffs_[i].second;
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

std::string CyclotomicNumber::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (size_t idx = coeffs_.size(); idx-- > 0;) {
        const auto& [e, c] = coeffs_[idx];
        bool first = out.empty();
        bool neg = c.is_negative();
        Rational mag = neg ? -c : c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string zpart;
        if (e > 0) {
            zpart = "z" + std::to_string(n_);
            if (e > 1) zpart += "^" + std::to_string(e);
        }
        if (zpart.empty()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += zpart;
        } else {
            out += mag.to_string() + "*" + zpart;
        }
    }
    return out;
}

namespace {

class LiteralParser {
public:
    explicit LiteralParser(std::string_view s) : s_(s), pos_(0) {}

    CyclotomicNumber run() {
        CyclotomicNumber v = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return v;
    }

private:
    std::string_view s_;
    size_t pos_;

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r'))
            ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    CyclotomicNumber parse_expr() {
        skip_ws();
        bool neg = false;
        if (peek_is('-')) {
            neg = true;
            ++pos_;
        } else if (peek_is('+')) {
            ++pos_;
        }
        CyclotomicNumber acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (peek_is('+')) {
                ++pos_;
                acc += parse_term();
            } else if (peek_is('-')) {
                ++pos_;
                acc -= parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

    CyclotomicNumber parse_term() {
        CyclotomicNumber acc = parse_factor();
        while (true) {
            skip_ws();
            if (peek_is('*')) {
                ++pos_;
                acc *= parse_factor();
            } else if (peek_is('/')) {
                ++pos_;
                CyclotomicNumber d = parse_factor();
                if (d.is_zero()) throw ParseError("division by zero", pos_);
                acc = acc / d;
            } else {
                break;
            }
        }
        return acc;
    }

    CyclotomicNumber parse_factor() {
        CyclotomicNumber base = parse_atom();
        skip_ws();
        if (peek_is('^')) {
            ++pos_;
            uint64_t e = parse_uint("exponent");
            if (e > 1000000) throw ParseError("exponent too large", pos_);
            return base.pow(e);
        }
        return base;
    }

    CyclotomicNumber parse_atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of literal", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            CyclotomicNumber v = parse_expr();
            skip_ws();
            if (!peek_is(')')) throw ParseError("missing ')'", pos_);
            ++pos_;
            return v;
        }
        if (c == '-') {  // unary minus inside a term, e.g. "2*-1" is rejected but "(-1)" ok
            throw ParseError("unexpected '-'", pos_);
        }
        if (c == 'z' || c == 'Z') {
            size_t zpos = pos_;
            ++pos_;
            if (pos_ >= s_.size() || !isdigit(static_cast<unsigned char>(s_[pos_])))
                throw UnknownConductorError("root-of-unity literal lacks a conductor", zpos);
            uint64_t n = parse_uint("conductor");
            if (n == 0) throw UnknownConductorError("conductor must be positive", zpos);
            if (n > 10000) throw UnknownConductorError("conductor too large", zpos);
            return CyclotomicNumber::root_of_unity(static_cast<uint32_t>(n), 1);
        }
        if (isdigit(static_cast<unsigned char>(c))) {
            BigInt v = parse_bigint();
            return CyclotomicNumber(Rational(std::move(v)));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    uint64_t parse_uint(const char* what) {
        skip_ws();
        if (pos_ >= s_.size() || !isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError(std::string("expected ") + what, pos_);
        uint64_t v = 0;
        while (pos_ < s_.size() && isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<uint64_t>(s_[pos_] - '0');
            if (v > 0xffffffffull) throw ParseError(std::string(what) + " out of range", pos_);
            ++pos_;
        }
        return v;
    }

    BigInt parse_bigint() {
        size_t start = pos_;
        while (pos_ < s_.size() && isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return BigInt(s_.substr(start, pos_ - start));
    }
};

}  // namespace

CyclotomicNumber CyclotomicNumber::parse(std::string_view text) {
    return LiteralParser(text).run();
}

void CycSum::rebase(uint32_t m) {
    uint32_t l = lcm_u32(n_, m);
    if (l == n_) return;
    const auto& fld = field(l);
    std::vector<Rational> next(fld.phi());
    uint64_t step = l / n_;
    for (uint32_t e = 0; e < dense_.size(); ++e) {
        if (dense_[e].is_zero()) continue;
        const auto& row = fld.power_row(static_cast<uint32_t>((step * e) % l));
        for (uint32_t i = 0; i < fld.phi(); ++i)
            if (!row[i].is_zero()) next[i] += dense_[e] * Rational(row[i]);
    }
    n_ = l;
    dense_ = std::move(next);
}

void CycSum::add_root(uint64_t exponent, const Rational& c) {
    const auto& fld = field(n_);
    uint32_t e = static_cast<uint32_t>(exponent % n_);
    if (e < fld.phi()) {
        dense_[e] += c;
        return;
    }
    const auto& row = fld.power_row(e);
    for (uint32_t i = 0; i < fld.phi(); ++i)
        if (!row[i].is_zero()) dense_[i] += c * Rational(row[i]);
}

void CycSum::add_scaled(const CyclotomicNumber& v, const Rational& q) {
    if (v.is_zero() || q.is_zero()) return;
    rebase(v.conductor());
    uint64_t step = n_ / v.conductor();
    for (const auto& [e, c] : v.terms()) add_root(step * e, c * q);
}

void CycSum::add_product_conj(const CyclotomicNumber& a, const CyclotomicNumber& b, const Rational& q) {
    if (a.is_zero() || b.is_zero() || q.is_zero()) return;
    rebase(lcm_u32(a.conductor(), b.conductor()));
    uint64_t sa = n_ / a.conductor(), sb = n_ / b.conductor();
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            uint64_t e = (sa * ea + static_cast<uint64_t>(n_) - (sb * eb) % n_) % n_;
            add_root(e, ca * cb * q);
        }
}

CyclotomicNumber CycSum::value() const {
    return CyclotomicNumber::from_reduced(n_, dense_);
}

}  // namespace ec
