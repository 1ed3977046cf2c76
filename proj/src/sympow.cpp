#include "exceptcheck/sympow.hpp"

#include <algorithm>
#include <set>

namespace ec {

ClassFunction irreducible_class_function(const CharacterTable& t, size_t index) {
    ClassFunction f;
    f.table = &t;
    f.values = t.irreducibles.at(index).values;
    return f;
}

ClassFunction distinguished_class_function(const CharacterTable& t) {
    int i = t.irreducible_index(t.distinguished_rep);
    if (i < 0) throw TableFormatError(t.group_name + ": distinguished_rep '" + t.distinguished_rep + "' not found");
    return irreducible_class_function(t, static_cast<size_t>(i));
}

BigInt binomial(uint64_t n, uint64_t k) {
    if (k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt num(1), den(1);
    for (uint64_t i = 0; i < k; ++i) {
        num *= BigInt(n - i);
        den *= BigInt(i + 1);
    }
    return num / den;
}

std::vector<ClassFunction> sym_power_characters(const ClassFunction& chi, uint32_t n) {
    const CharacterTable& t = *chi.table;
    size_t k = t.class_count();
    std::vector<ClassFunction> s(n + 1);
    for (uint32_t i = 0; i <= n; ++i) {
        s[i].table = &t;
        s[i].values.resize(k);
    }
    for (size_t c = 0; c < k; ++c) s[0].values[c] = CyclotomicNumber(1);
    if (n == 0) return s;

    for (size_t c = 0; c < k; ++c) {
        // chi on powers of a class representative
        std::vector<CyclotomicNumber> chi_pow(n + 1);
        for (uint32_t j = 1; j <= n; ++j)
            chi_pow[j] = chi.values[power_class(t, static_cast<uint32_t>(c), j)];
        for (uint32_t m = 1; m <= n; ++m) {
            CyclotomicNumber acc;
            for (uint32_t j = 1; j <= m; ++j) acc += chi_pow[j] * s[m - j].values[c];
            s[m].values[c] = Rational(1, static_cast<long long>(m)) * acc;
        }
    }
    return s;
}

ClassFunction sym_power_character(const ClassFunction& chi, uint32_t n) {
    return std::move(sym_power_characters(chi, n).back());
}

std::vector<uint64_t> Decomposition::degree_multiset(const CharacterTable& t) const {
    std::vector<uint64_t> degs;
    for (const auto& p : parts)
        for (uint64_t i = 0; i < p.multiplicity; ++i) degs.push_back(t.irreducibles[p.irreducible].degree);
    std::sort(degs.begin(), degs.end());
    return degs;
}

Decomposition decompose(const ClassFunction& f) {
    const CharacterTable& t = *f.table;
    Decomposition d;
    for (size_t i = 0; i < t.irreducibles.size(); ++i) {
        Rational m;
        try {
            m = inner_product(t, f.values, t.irreducibles[i].values);
        } catch (const NotRationalError&) {
            throw NotACharacterError("multiplicity of " + t.irreducibles[i].name + " is not rational");
        }
        if (m.is_zero()) continue;
        auto mi = m.to_i64();
        if (!mi || *mi < 0)
            throw NotACharacterError("multiplicity of " + t.irreducibles[i].name + " is " + m.to_string() +
                                     ", not a nonnegative integer");
        d.parts.push_back({i, static_cast<uint64_t>(*mi)});
    }
    // exact reconstruction
    for (size_t c = 0; c < t.class_count(); ++c) {
        CyclotomicNumber acc;
        for (const auto& p : d.parts)
            acc += Rational(static_cast<long long>(p.multiplicity)) * t.irreducibles[p.irreducible].values[c];
        if (acc != f.values[c])
            throw NotACharacterError("reconstruction mismatch at class " + std::to_string(c));
    }
    return d;
}

std::vector<uint64_t> achievable_subdims(const CharacterTable& t, const Decomposition& d) {
    std::set<uint64_t> sums = {0};
    for (const auto& p : d.parts) {
        uint64_t deg = t.irreducibles[p.irreducible].degree;
        std::set<uint64_t> next;
        for (uint64_t s : sums)
            for (uint64_t c = 0; c <= p.multiplicity; ++c) next.insert(s + c * deg);
        sums = std::move(next);
    }
    return std::vector<uint64_t>(sums.begin(), sums.end());
}

std::vector<uint64_t> allowed_h_values(const CharacterTable& t, uint32_t n, uint32_t ambient_dim) {
    const auto& chi = t.distinguished();
    if (chi.degree != static_cast<uint64_t>(ambient_dim) + 1)
        throw std::invalid_argument("allowed_h_values: distinguished degree " + std::to_string(chi.degree) +
                                    " does not match ambient dimension " + std::to_string(ambient_dim));
    ClassFunction f = distinguished_class_function(t);
    Decomposition d = decompose(sym_power_character(f, n));
    auto qs = achievable_subdims(t, d);
    auto full = binomial(ambient_dim + n, n).to_i64();
    if (!full) throw std::overflow_error("allowed_h_values: binomial overflow");
    std::set<uint64_t> hs;
    for (uint64_t q : qs) {
        uint64_t h = static_cast<uint64_t>(*full) - q;
        if (h > 0) hs.insert(h);
    }
    return std::vector<uint64_t>(hs.begin(), hs.end());
}

}  // namespace ec
