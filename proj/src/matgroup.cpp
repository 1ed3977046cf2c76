#include "exceptcheck/matgroup.hpp"

#include <cassert>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace ec {

using nlohmann::json;

// ---------------------------------------------------------------------------
// ExactMatrix
// ---------------------------------------------------------------------------

ExactMatrix::ExactMatrix(uint32_t dim, std::vector<CyclotomicNumber> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<size_t>(dim) * dim)
        throw std::invalid_argument("ExactMatrix: wrong entry count");
}

ExactMatrix ExactMatrix::identity(uint32_t dim) {
    std::vector<CyclotomicNumber> e(static_cast<size_t>(dim) * dim);
    for (uint32_t i = 0; i < dim; ++i) e[i * dim + i] = CyclotomicNumber(1);
    return ExactMatrix(dim, std::move(e));
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
    uint32_t d = a.dim_;
    std::vector<CyclotomicNumber> out(static_cast<size_t>(d) * d);
    for (uint32_t i = 0; i < d; ++i)
        for (uint32_t j = 0; j < d; ++j) {
            CyclotomicNumber acc;
            for (uint32_t k = 0; k < d; ++k) acc += a.at(i, k) * b.at(k, j);
            out[i * d + j] = std::move(acc);
        }
    return ExactMatrix(d, std::move(out));
}

CyclotomicNumber ExactMatrix::trace() const {
    CyclotomicNumber acc;
    for (uint32_t i = 0; i < dim_; ++i) acc += at(i, i);
    return acc;
}

ExactMatrix ExactMatrix::inverse() const {
    uint32_t d = dim_;
    std::vector<CyclotomicNumber> aug(static_cast<size_t>(d) * 2 * d);
    for (uint32_t i = 0; i < d; ++i) {
        for (uint32_t j = 0; j < d; ++j) aug[i * 2 * d + j] = at(i, j);
        aug[i * 2 * d + d + i] = CyclotomicNumber(1);
    }
    for (uint32_t col = 0; col < d; ++col) {
        uint32_t sel = col;
        while (sel < d && aug[sel * 2 * d + col].is_zero()) ++sel;
        if (sel == d) throw std::domain_error("matrix is singular");
        if (sel != col)
            for (uint32_t j = 0; j < 2 * d; ++j) std::swap(aug[sel * 2 * d + j], aug[col * 2 * d + j]);
        CyclotomicNumber inv = aug[col * 2 * d + col].inverse();
        for (uint32_t j = 0; j < 2 * d; ++j)
            if (!aug[col * 2 * d + j].is_zero()) aug[col * 2 * d + j] *= inv;
        for (uint32_t r = 0; r < d; ++r) {
            if (r == col || aug[r * 2 * d + col].is_zero()) continue;
            CyclotomicNumber f = aug[r * 2 * d + col];
            for (uint32_t j = 0; j < 2 * d; ++j) {
                if (aug[col * 2 * d + j].is_zero()) continue;
                aug[r * 2 * d + j] -= f * aug[col * 2 * d + j];
            }
        }
    }
    std::vector<CyclotomicNumber> out(static_cast<size_t>(d) * d);
    for (uint32_t i = 0; i < d; ++i)
        for (uint32_t j = 0; j < d; ++j) out[i * d + j] = aug[i * 2 * d + d + j];
    return ExactMatrix(d, std::move(out));
}

CyclotomicNumber ExactMatrix::determinant() const {
    uint32_t d = dim_;
    std::vector<CyclotomicNumber> w(entries_);
    CyclotomicNumber det(1);
    for (uint32_t col = 0; col < d; ++col) {
        uint32_t sel = col;
        while (sel < d && w[sel * d + col].is_zero()) ++sel;
        if (sel == d) return CyclotomicNumber();
        if (sel != col) {
            for (uint32_t j = 0; j < d; ++j) std::swap(w[sel * d + j], w[col * d + j]);
            det = -det;
        }
        CyclotomicNumber pivot = w[col * d + col];
        det *= pivot;
        CyclotomicNumber inv = pivot.inverse();
        for (uint32_t r = col + 1; r < d; ++r) {
            if (w[r * d + col].is_zero()) continue;
            CyclotomicNumber f = w[r * d + col] * inv;
            for (uint32_t j = col; j < d; ++j)
                if (!w[col * d + j].is_zero()) w[r * d + j] -= f * w[col * d + j];
        }
    }
    return det;
}

size_t ExactMatrix::hash() const {
    size_t seed = dim_;
    for (const auto& e : entries_) seed ^= e.hash() + 0x9e3779b9u + (seed << 6) + (seed >> 2);
    return seed;
}

// ---------------------------------------------------------------------------
// Generator files
// ---------------------------------------------------------------------------

GeneratorFile parse_generators(const std::string& text, const std::string& origin) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw std::runtime_error(origin + ": " + e.what());
    }
    GeneratorFile gf;
    try {
        gf.dimension = root.at("dimension").get<uint32_t>();
        gf.conductor_hint = root.value("conductor_hint", 1u);
        if (root.contains("notes")) gf.notes = root["notes"].get<std::string>();
        const json& gens = root.at("generators");
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            const json& jm = gens[gi];
            if (jm.size() != static_cast<size_t>(gf.dimension) * gf.dimension)
                throw std::runtime_error(origin + ": generators[" + std::to_string(gi) + "] has " +
                                         std::to_string(jm.size()) + " entries, expected " +
                                         std::to_string(gf.dimension * gf.dimension));
            std::vector<CyclotomicNumber> entries;
            entries.reserve(jm.size());
            for (size_t k = 0; k < jm.size(); ++k) {
                try {
                    entries.push_back(CyclotomicNumber::parse(jm[k].get<std::string>()));
                } catch (const ParseError& e) {
                    throw std::runtime_error(origin + ": generators[" + std::to_string(gi) + "][" +
                                             std::to_string(k) + "]: " + e.what());
                }
            }
            gf.generators.emplace_back(gf.dimension, std::move(entries));
        }
    } catch (const json::exception& e) {
        throw std::runtime_error(origin + ": " + e.what());
    }
    return gf;
}

GeneratorFile load_generators(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_generators(ss.str(), path);
}

std::string generators_to_json(const GeneratorFile& gf) {
    nlohmann::ordered_json root;
    root["dimension"] = gf.dimension;
    root["conductor_hint"] = gf.conductor_hint;
    if (!gf.notes.empty()) root["notes"] = gf.notes;
    root["generators"] = nlohmann::ordered_json::array();
    for (const auto& m : gf.generators) {
        auto jm = nlohmann::ordered_json::array();
        for (const auto& e : m.entries()) jm.push_back(e.to_string());
        root["generators"].push_back(std::move(jm));
    }
    return root.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Interned group representation with a fixed-conductor fast path
// ---------------------------------------------------------------------------

namespace {

struct ScOverflow {};

inline int64_t ck_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ScOverflow{};
    return r;
}
inline int64_t ck_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ScOverflow{};
    return r;
}

// value = (1/den) * sum c[i] zeta^i on the reduced power basis
struct ScVal {
    int64_t den = 1;
    std::vector<int64_t> c;

    bool is_zero() const {
        for (int64_t v : c)
            if (v) return false;
        return true;
    }
};

struct VecHash {
    size_t operator()(const std::vector<uint32_t>& v) const {
        size_t seed = v.size();
        for (uint32_t w : v) seed ^= w + 0x9e3779b9u + (seed << 6) + (seed >> 2);
        return seed;
    }
};
struct ScKeyHash {
    size_t operator()(const std::vector<int64_t>& v) const {
        size_t seed = v.size();
        for (int64_t w : v)
            seed ^= static_cast<size_t>(w) + 0x9e3779b9u + (seed << 6) + (seed >> 2);
        return seed;
    }
};

}  // namespace

struct MatrixGroup::Impl {
    uint32_t dim = 0;
    uint32_t ambient = 1;  // conductor of the working field
    uint32_t phi = 1;
    bool fast_ok = false;                         // int64 reduction rows available
    std::vector<std::vector<int64_t>> rows64;     // reduction rows for e in [0, ambient)

    std::vector<CyclotomicNumber> pool;           // id -> canonical value
    std::vector<ScVal> pool_sc;                   // id -> scratch form (may be empty if !fast)
    std::vector<char> pool_sc_ok;
    std::unordered_map<CyclotomicNumber, uint32_t> cn_index;
    std::unordered_map<std::vector<int64_t>, uint32_t, ScKeyHash> sc_index;

    std::vector<std::vector<uint32_t>> elems;
    std::unordered_map<std::vector<uint32_t>, uint32_t, VecHash> elem_index;

    // --- interning ------------------------------------------------------

    static void normalize_sc(ScVal& v) {
        if (v.den < 0) {
            v.den = -v.den;
            for (auto& x : v.c) x = -x;
        }
        int64_t g = v.den;
        for (int64_t x : v.c) {
            g = std::gcd(g, x < 0 ? -x : x);
            if (g == 1) break;
        }
        if (g > 1) {
            v.den /= g;
            for (auto& x : v.c) x /= g;
        }
    }

    static std::vector<int64_t> sc_key(const ScVal& v) {
        std::vector<int64_t> key;
        key.reserve(v.c.size() + 1);
        key.push_back(v.den);
        key.insert(key.end(), v.c.begin(), v.c.end());
        return key;
    }

    CyclotomicNumber sc_to_cn(const ScVal& v) const {
        std::vector<Rational> dense(phi);
        for (uint32_t i = 0; i < phi; ++i)
            if (v.c[i]) dense[i] = Rational(v.c[i], v.den);
        return CyclotomicNumber::from_reduced(ambient, std::move(dense));
    }

    bool cn_to_sc(const CyclotomicNumber& v, ScVal& out) const {
        std::vector<Rational> dense = v.dense_in(ambient);
        BigInt den(1);
        for (const auto& q : dense) den = lcm(den, q.den());
        auto den64 = den.to_i64();
        if (!den64) return false;
        out.den = *den64;
        out.c.assign(phi, 0);
        for (uint32_t i = 0; i < phi; ++i) {
            if (dense[i].is_zero()) continue;
            BigInt scaled = dense[i].num() * (den / dense[i].den());
            auto s = scaled.to_i64();
            if (!s) return false;
            out.c[i] = *s;
        }
        normalize_sc(out);
        return true;
    }

    uint32_t intern_sc(ScVal v) {
        normalize_sc(v);
        auto key = sc_key(v);
        auto it = sc_index.find(key);
        if (it != sc_index.end()) return it->second;
        CyclotomicNumber cn = sc_to_cn(v);
        auto cit = cn_index.find(cn);
        if (cit != cn_index.end()) {
            // canonical value existed without a scratch key (generic path)
            sc_index.emplace(std::move(key), cit->second);
            if (!pool_sc_ok[cit->second]) {
                pool_sc[cit->second] = std::move(v);
                pool_sc_ok[cit->second] = 1;
            }
            return cit->second;
        }
        uint32_t id = static_cast<uint32_t>(pool.size());
        pool.push_back(cn);
        pool_sc.push_back(std::move(v));
        pool_sc_ok.push_back(1);
        cn_index.emplace(pool.back(), id);
        sc_index.emplace(std::move(key), id);
        return id;
    }

    uint32_t intern_cn(const CyclotomicNumber& cn) {
        auto it = cn_index.find(cn);
        if (it != cn_index.end()) return it->second;
        uint32_t id = static_cast<uint32_t>(pool.size());
        pool.push_back(cn);
        ScVal sc;
        if (fast_ok && cn_to_sc(cn, sc)) {
            pool_sc.push_back(sc);
            pool_sc_ok.push_back(1);
            sc_index.emplace(sc_key(sc), id);
        } else {
            pool_sc.push_back(ScVal{1, std::vector<int64_t>(phi, 0)});
            pool_sc_ok.push_back(0);
        }
        cn_index.emplace(cn, id);
        return id;
    }

    // --- scratch arithmetic ----------------------------------------------

    // out += (a * b), all at the ambient conductor
    void sc_fma(ScVal& acc, const ScVal& a, const ScVal& b) const {
        std::vector<int64_t> tmp(2 * phi - 1, 0);
        for (uint32_t i = 0; i < phi; ++i) {
            if (!a.c[i]) continue;
            for (uint32_t j = 0; j < phi; ++j) {
                if (!b.c[j]) continue;
                tmp[i + j] = ck_add(tmp[i + j], ck_mul(a.c[i], b.c[j]));
            }
        }
        std::vector<int64_t> red(phi, 0);
        for (uint32_t e = 0; e < tmp.size(); ++e) {
            if (!tmp[e]) continue;
            uint32_t em = e % ambient;
            if (em < phi && e < phi) {
                red[em] = ck_add(red[em], tmp[e]);
            } else {
                const auto& row = rows64[em];
                for (uint32_t i = 0; i < phi; ++i)
                    if (row[i]) red[i] = ck_add(red[i], ck_mul(tmp[e], row[i]));
            }
        }
        int64_t tden = ck_mul(a.den, b.den);
        int64_t g = std::gcd(acc.den, tden);
        int64_t l = ck_mul(acc.den / g, tden);
        int64_t fa = l / acc.den, ft = l / tden;
        for (uint32_t i = 0; i < phi; ++i)
            acc.c[i] = ck_add(ck_mul(acc.c[i], fa), ck_mul(red[i], ft));
        acc.den = l;
    }

    // --- matrix multiplication (ids) --------------------------------------

    std::vector<uint32_t> mat_mul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> out(static_cast<size_t>(dim) * dim);
        for (uint32_t i = 0; i < dim; ++i)
            for (uint32_t j = 0; j < dim; ++j) {
                bool fast = fast_ok;
                if (fast)
                    for (uint32_t k = 0; k < dim; ++k)
                        if (!pool_sc_ok[a[i * dim + k]] || !pool_sc_ok[b[k * dim + j]]) {
                            fast = false;
                            break;
                        }
                if (fast) {
                    try {
                        ScVal acc{1, std::vector<int64_t>(phi, 0)};
                        for (uint32_t k = 0; k < dim; ++k)
                            sc_fma(acc, pool_sc[a[i * dim + k]], pool_sc[b[k * dim + j]]);
                        out[i * dim + j] = intern_sc(std::move(acc));
                        continue;
                    } catch (const ScOverflow&) {
                        // fall through to the generic path
                    }
                }
                CyclotomicNumber acc;
                for (uint32_t k = 0; k < dim; ++k) acc += pool[a[i * dim + k]] * pool[b[k * dim + j]];
                out[i * dim + j] = intern_cn(acc);
            }
        return out;
    }

    std::vector<uint32_t> intern_matrix(const ExactMatrix& m) {
        std::vector<uint32_t> ids(m.entries().size());
        for (size_t i = 0; i < m.entries().size(); ++i) ids[i] = intern_cn(m.entries()[i]);
        return ids;
    }

    ExactMatrix materialize(const std::vector<uint32_t>& ids) const {
        std::vector<CyclotomicNumber> entries(ids.size());
        for (size_t i = 0; i < ids.size(); ++i) entries[i] = pool[ids[i]];
        return ExactMatrix(dim, std::move(entries));
    }

    // dense rational trace at ambient conductor
    std::vector<Rational> trace_dense(const std::vector<uint32_t>& ids) const {
        std::vector<Rational> acc(phi);
        for (uint32_t i = 0; i < dim; ++i) {
            const CyclotomicNumber& v = pool[ids[i * dim + i]];
            auto d = v.dense_in(ambient);
            for (uint32_t k = 0; k < phi; ++k)
                if (!d[k].is_zero()) acc[k] += d[k];
        }
        return acc;
    }
};

MatrixGroup MatrixGroup::closure(std::vector<ExactMatrix> gens, uint64_t max_order) {
    if (gens.empty()) throw std::invalid_argument("closure: no generators");
    uint32_t dim = gens[0].dim();
    for (const auto& g : gens) {
        if (g.dim() != dim) throw std::domain_error("closure: generators of mixed dimension");
        if (g.determinant().is_zero()) throw std::domain_error("closure: singular generator");
    }

    MatrixGroup grp;
    grp.impl_ = std::make_shared<Impl>();
    Impl& im = *grp.impl_;
    im.dim = dim;
    grp.dim_ = dim;
    grp.gens_ = gens;

    uint32_t ambient = 1;
    for (const auto& g : gens)
        for (const auto& e : g.entries())
            ambient = static_cast<uint32_t>(std::lcm(ambient, e.conductor()));
    im.ambient = ambient;
    const auto& fld = detail::field(ambient);
    im.phi = fld.phi();

    // int64 copies of the reduction rows when they fit
    im.fast_ok = true;
    im.rows64.assign(ambient, {});
    for (uint32_t e = 0; e < ambient && im.fast_ok; ++e) {
        const auto& row = fld.power_row(e);
        std::vector<int64_t> r(im.phi, 0);
        for (uint32_t i = 0; i < im.phi; ++i) {
            auto v = row[i].to_i64();
            if (!v) {
                im.fast_ok = false;
                break;
            }
            r[i] = *v;
        }
        im.rows64[e] = std::move(r);
    }

    std::vector<std::vector<uint32_t>> gen_ids;
    gen_ids.reserve(gens.size());
    for (const auto& g : gens) gen_ids.push_back(im.intern_matrix(g));

    std::vector<uint32_t> id_ids = im.intern_matrix(ExactMatrix::identity(dim));
    im.elems.push_back(id_ids);
    im.elem_index.emplace(id_ids, 0u);

    for (size_t head = 0; head < im.elems.size(); ++head) {
        std::vector<uint32_t> cur = im.elems[head];  // copy: elems may reallocate
        for (const auto& g : gen_ids) {
            std::vector<uint32_t> prod = im.mat_mul(cur, g);
            auto it = im.elem_index.find(prod);
            if (it != im.elem_index.end()) continue;
            if (im.elems.size() >= max_order) throw OrderExceededError(max_order);
            im.elem_index.emplace(prod, static_cast<uint32_t>(im.elems.size()));
            im.elems.push_back(std::move(prod));
        }
    }
    grp.elements_ = std::move(im.elems);
    return grp;
}

ExactMatrix MatrixGroup::element(size_t index) const { return impl_->materialize(elements_.at(index)); }

size_t MatrixGroup::product_index(size_t a, size_t b) const {
    auto prod = impl_->mat_mul(elements_.at(a), elements_.at(b));
    auto it = impl_->elem_index.find(prod);
    if (it == impl_->elem_index.end()) throw std::logic_error("product escaped the closure");
    return it->second;
}

size_t MatrixGroup::inverse_index(size_t a) const {
    if (a == 0) return 0;
    size_t prev = a, cur = product_index(a, a);
    while (cur != 0) {
        prev = cur;
        cur = product_index(cur, a);
    }
    return prev;
}

size_t MatrixGroup::index_of(const ExactMatrix& m) const {
    std::vector<uint32_t> ids(m.entries().size());
    for (size_t i = 0; i < m.entries().size(); ++i) {
        auto it = impl_->cn_index.find(m.entries()[i]);
        if (it == impl_->cn_index.end()) throw std::out_of_range("matrix not in group");
        ids[i] = it->second;
    }
    auto it = impl_->elem_index.find(ids);
    if (it == impl_->elem_index.end()) throw std::out_of_range("matrix not in group");
    return it->second;
}

bool MatrixGroup::contains(const ExactMatrix& m) const {
    if (m.dim() != dim_) return false;
    std::vector<uint32_t> ids(m.entries().size());
    for (size_t i = 0; i < m.entries().size(); ++i) {
        auto it = impl_->cn_index.find(m.entries()[i]);
        if (it == impl_->cn_index.end()) return false;
        ids[i] = it->second;
    }
    return impl_->elem_index.count(ids) > 0;
}

std::vector<uint64_t> MatrixGroup::molien_coefficients(uint32_t n_max) const {
    Impl& im = *impl_;  // intern pool lookups only; no new elements appear
    uint32_t phi = im.phi;
    // accumulated sum over the group of s_n(g), as dense rational coordinates
    std::vector<std::vector<Rational>> total(n_max + 1, std::vector<Rational>(phi));

    // cyclotomic product of dense rational coordinate vectors at the ambient
    const auto& fld = detail::field(im.ambient);
    auto dense_mul = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> tmp(2 * phi - 1);
        for (uint32_t i = 0; i < phi; ++i) {
            if (a[i].is_zero()) continue;
            for (uint32_t j = 0; j < phi; ++j) {
                if (b[j].is_zero()) continue;
                tmp[i + j] += a[i] * b[j];
            }
        }
        std::vector<Rational> red(phi);
        for (uint32_t e = 0; e < tmp.size(); ++e) {
            if (tmp[e].is_zero()) continue;
            if (e < phi) {
                red[e] += tmp[e];
                continue;
            }
            const auto& row = fld.power_row(e % im.ambient);
            for (uint32_t i = 0; i < phi; ++i)
                if (!row[i].is_zero()) red[i] += tmp[e] * Rational(row[i]);
        }
        return red;
    };

    for (const auto& el : elements_) {
        // traces of powers g, g^2, ..., g^{n_max}
        std::vector<std::vector<Rational>> p(n_max + 1, std::vector<Rational>(phi));
        std::vector<uint32_t> power = el;
        for (uint32_t k = 1; k <= n_max; ++k) {
            if (k > 1) power = im.mat_mul(power, el);
            p[k] = im.trace_dense(power);
        }
        // Newton recurrence for s_0..s_{n_max}
        std::vector<std::vector<Rational>> s(n_max + 1, std::vector<Rational>(phi));
        s[0][0] = Rational(1);
        for (uint32_t m = 1; m <= n_max; ++m) {
            std::vector<Rational> acc(phi);
            for (uint32_t k = 1; k <= m; ++k) {
                auto prod = dense_mul(p[k], s[m - k]);
                for (uint32_t i = 0; i < phi; ++i)
                    if (!prod[i].is_zero()) acc[i] += prod[i];
            }
            Rational invm(1, static_cast<long long>(m));
            for (uint32_t i = 0; i < phi; ++i)
                if (!acc[i].is_zero()) s[m][i] = acc[i] * invm;
            for (uint32_t i = 0; i < phi; ++i)
                if (!s[m][i].is_zero()) total[m][i] += s[m][i];
        }
        total[0][0] += Rational(1);
    }

    std::vector<uint64_t> out(n_max + 1);
    Rational inv_order(1, static_cast<long long>(order()));
    for (uint32_t m = 0; m <= n_max; ++m) {
        CyclotomicNumber v = CyclotomicNumber::from_reduced(im.ambient, total[m]);
        Rational q;
        try {
            q = v.as_rational();
        } catch (const NotRationalError&) {
            throw NotAnIntegerError("Molien sum in degree " + std::to_string(m) + " is not rational");
        }
        q *= inv_order;
        auto n = q.to_i64();
        if (!n || *n < 0)
            throw NotAnIntegerError("Molien coefficient in degree " + std::to_string(m) + " is " + q.to_string());
        out[m] = static_cast<uint64_t>(*n);
    }
    return out;
}

std::vector<TraceClass> MatrixGroup::trace_classes() const {
    Impl& im = *impl_;
    size_t n = elements_.size();
    std::vector<uint32_t> class_of(n, UINT32_MAX);

    std::vector<std::vector<uint32_t>> gen_ids, geninv_ids;
    for (const auto& g : gens_) {
        gen_ids.push_back(im.intern_matrix(g));
        geninv_ids.push_back(im.intern_matrix(g.inverse()));
    }

    std::vector<TraceClass> classes;
    for (size_t seed = 0; seed < n; ++seed) {
        if (class_of[seed] != UINT32_MAX) continue;
        uint32_t cid = static_cast<uint32_t>(classes.size());
        std::deque<uint32_t> queue;
        class_of[seed] = cid;
        queue.push_back(static_cast<uint32_t>(seed));
        uint64_t size = 0;
        while (!queue.empty()) {
            uint32_t x = queue.front();
            queue.pop_front();
            ++size;
            for (size_t gi = 0; gi < gen_ids.size(); ++gi) {
                auto conj = im.mat_mul(geninv_ids[gi], im.mat_mul(elements_[x], gen_ids[gi]));
                auto it = im.elem_index.find(conj);
                if (it == im.elem_index.end())
                    throw std::logic_error("conjugate escaped the closure (inconsistent state)");
                if (class_of[it->second] == UINT32_MAX) {
                    class_of[it->second] = cid;
                    queue.push_back(it->second);
                }
            }
        }
        TraceClass tc;
        tc.size = size;
        tc.representative = seed;
        tc.trace = im.materialize(elements_[seed]).trace();
        // element order by repeated multiplication
        std::vector<uint32_t> pw = elements_[seed];
        uint32_t ord = 1;
        const std::vector<uint32_t>& idm = elements_[0];
        while (pw != idm) {
            pw = im.mat_mul(pw, elements_[seed]);
            ++ord;
            if (ord > 1000000) throw std::logic_error("element order runaway");
        }
        tc.element_order = ord;
        classes.push_back(std::move(tc));
    }
    return classes;
}

}  // namespace ec
