#include "exceptcheck/chartable.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace ec {

using nlohmann::json;

int CharacterTable::irreducible_index(const std::string& name) const {
    for (size_t i = 0; i < irreducibles.size(); ++i)
        if (irreducibles[i].name == name) return static_cast<int>(i);
    return -1;
}

const IrreducibleCharacter& CharacterTable::distinguished() const {
    int i = irreducible_index(distinguished_rep);
    if (i < 0) throw TableFormatError(group_name + ": distinguished_rep '" + distinguished_rep + "' not found");
    return irreducibles[static_cast<size_t>(i)];
}

int CharacterTable::trivial_index() const {
    int found = -1;
    for (size_t i = 0; i < irreducibles.size(); ++i) {
        bool all_one = true;
        for (const auto& v : irreducibles[i].values)
            if (v != CyclotomicNumber(1)) {
                all_one = false;
                break;
            }
        if (all_one) {
            if (found >= 0) return -1;  // ambiguous
            found = static_cast<int>(i);
        }
    }
    return found;
}

std::vector<size_t> CharacterTable::linear_indices() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < irreducibles.size(); ++i)
        if (irreducibles[i].degree == 1) out.push_back(i);
    return out;
}

uint64_t CharacterTable::centre_order() const {
    uint64_t n = 0;
    for (const auto& c : classes)
        if (c.size == 1) ++n;
    return n;
}

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw TableFormatError(where + ": missing field '" + key + "'");
    return *it;
}

}  // namespace

CharacterTable parse_table(const std::string& text, const std::string& origin) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw TableFormatError(origin + ": " + e.what());
    }
    if (!root.is_object()) throw TableFormatError(origin + ": top level is not an object");

    CharacterTable t;
    try {
        t.group_name = require(root, "group_name", origin).get<std::string>();
        t.order = require(root, "order", origin).get<unsigned long long>();
        t.is_simple_modulo_center = require(root, "is_simple_modulo_center", origin).get<bool>();
        t.center_in_commutator = require(root, "center_in_commutator", origin).get<bool>();
        t.primitive = require(root, "primitive", origin).get<bool>();
        t.distinguished_rep = require(root, "distinguished_rep", origin).get<std::string>();
        if (root.contains("notes")) t.notes = root["notes"].get<std::string>();

        const json& jclasses = require(root, "classes", origin);
        for (size_t ci = 0; ci < jclasses.size(); ++ci) {
            const json& jc = jclasses[ci];
            std::string where = origin + ": classes[" + std::to_string(ci) + "]";
            ConjugacyClass c;
            c.size = require(jc, "size", where).get<uint64_t>();
            c.element_order = require(jc, "element_order", where).get<uint32_t>();
            const json& pm = require(jc, "power_maps", where);
            for (auto it = pm.begin(); it != pm.end(); ++it) {
                uint32_t p = 0;
                try {
                    p = static_cast<uint32_t>(std::stoul(it.key()));
                } catch (...) {
                    throw TableFormatError(where + ": bad power-map prime '" + it.key() + "'");
                }
                c.power_maps[p] = it.value().get<uint32_t>();
            }
            t.classes.push_back(std::move(c));
        }

        const json& jirr = require(root, "irreducibles", origin);
        for (size_t ii = 0; ii < jirr.size(); ++ii) {
            const json& ji = jirr[ii];
            std::string where = origin + ": irreducibles[" + std::to_string(ii) + "]";
            IrreducibleCharacter ch;
            ch.name = require(ji, "name", where).get<std::string>();
            ch.degree = require(ji, "degree", where).get<uint64_t>();
            const json& vals = require(ji, "values", where);
            for (size_t vi = 0; vi < vals.size(); ++vi) {
                std::string lit = vals[vi].get<std::string>();
                try {
                    ch.values.push_back(CyclotomicNumber::parse(lit));
                } catch (const ParseError& e) {
                    throw TableFormatError(where + ".values[" + std::to_string(vi) + "]: " + e.what());
                }
            }
            t.irreducibles.push_back(std::move(ch));
        }
    } catch (const json::exception& e) {
        throw TableFormatError(origin + ": " + e.what());
    }
    return t;
}

CharacterTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_table(ss.str(), path);
}

std::string table_to_json(const CharacterTable& t) {
    nlohmann::ordered_json root;
    root["group_name"] = t.group_name;
    root["order"] = t.order;
    root["is_simple_modulo_center"] = t.is_simple_modulo_center;
    root["center_in_commutator"] = t.center_in_commutator;
    root["primitive"] = t.primitive;
    root["distinguished_rep"] = t.distinguished_rep;
    if (!t.notes.empty()) root["notes"] = t.notes;
    root["classes"] = nlohmann::ordered_json::array();
    for (const auto& c : t.classes) {
        nlohmann::ordered_json jc;
        jc["size"] = c.size;
        jc["element_order"] = c.element_order;
        nlohmann::ordered_json pm = nlohmann::ordered_json::object();
        for (const auto& [p, idx] : c.power_maps) pm[std::to_string(p)] = idx;
        jc["power_maps"] = std::move(pm);
        root["classes"].push_back(std::move(jc));
    }
    root["irreducibles"] = nlohmann::ordered_json::array();
    for (const auto& ch : t.irreducibles) {
        nlohmann::ordered_json ji;
        ji["name"] = ch.name;
        ji["degree"] = ch.degree;
        auto vals = nlohmann::ordered_json::array();
        for (const auto& v : ch.values) vals.push_back(v.to_string());
        ji["values"] = std::move(vals);
        root["irreducibles"].push_back(std::move(ji));
    }
    return root.dump(2) + "\n";
}

uint32_t power_class(const CharacterTable& t, uint32_t cls, uint64_t k) {
    if (cls >= t.classes.size()) throw std::out_of_range("power_class: class index");
    if (k == 0) return 0;  // identity class
    uint32_t cur = cls;
    uint64_t rest = k;
    for (uint64_t p = 2; p * p <= rest; ++p) {
        while (rest % p == 0) {
            auto it = t.classes[cur].power_maps.find(static_cast<uint32_t>(p));
            if (it == t.classes[cur].power_maps.end()) throw MissingPowerMapError(static_cast<uint32_t>(p));
            cur = it->second;
            if (cur >= t.classes.size()) throw TableFormatError("power map target out of range");
            rest /= p;
        }
    }
    if (rest > 1) {
        auto it = t.classes[cur].power_maps.find(static_cast<uint32_t>(rest));
        if (it == t.classes[cur].power_maps.end()) throw MissingPowerMapError(static_cast<uint32_t>(rest));
        cur = it->second;
        if (cur >= t.classes.size()) throw TableFormatError("power map target out of range");
    }
    return cur;
}

Rational inner_product(const CharacterTable& t, std::span<const CyclotomicNumber> a,
                       std::span<const CyclotomicNumber> b) {
    if (a.size() != t.classes.size() || b.size() != t.classes.size())
        throw std::invalid_argument("inner_product: wrong number of class values");
    CycSum sum;
    for (size_t c = 0; c < t.classes.size(); ++c)
        sum.add_product_conj(a[c], b[c], Rational(static_cast<long long>(t.classes[c].size)));
    CyclotomicNumber total = sum.value();
    Rational q = total.as_rational();  // NotRationalError on corrupted data
    return q / Rational(static_cast<long long>(t.order));
}

namespace {

void check_classes(const CharacterTable& t, uint32_t max_sym_degree, ValidationReport& rep) {
    if (t.classes.empty()) {
        rep.violations.push_back({"classes", "classes", "table has no conjugacy classes"});
        return;
    }
    if (t.classes[0].size != 1 || t.classes[0].element_order != 1)
        rep.violations.push_back({"identity-class", "classes[0]", "class 0 must be the identity (size 1, order 1)"});

    BigInt total(0);
    for (size_t i = 0; i < t.classes.size(); ++i) {
        const auto& c = t.classes[i];
        std::string where = "classes[" + std::to_string(i) + "]";
        if (c.size == 0) rep.violations.push_back({"class-size", where, "class size must be positive"});
        if (c.element_order == 0) rep.violations.push_back({"element-order", where, "element order must be positive"});
        total += BigInt(c.size);
    }
    if (total != BigInt(t.order))
        rep.violations.push_back({"class-size-sum", "classes",
                                  "class sizes sum to " + total.to_string() + ", expected " + std::to_string(t.order)});

    std::vector<uint32_t> primes;
    for (uint32_t p = 2; p <= max_sym_degree; ++p) {
        bool is_p = true;
        for (uint32_t d = 2; d * d <= p; ++d)
            if (p % d == 0) {
                is_p = false;
                break;
            }
        if (is_p) primes.push_back(p);
    }
    for (size_t i = 0; i < t.classes.size(); ++i) {
        const auto& c = t.classes[i];
        std::string where = "classes[" + std::to_string(i) + "]";
        for (uint32_t p : primes) {
            auto it = c.power_maps.find(p);
            if (it == c.power_maps.end()) {
                rep.violations.push_back({"power-map-presence", where, "missing power map for prime " + std::to_string(p)});
                continue;
            }
            if (it->second >= t.classes.size()) {
                rep.violations.push_back({"power-map-range", where, "power map target out of range"});
                continue;
            }
            const auto& target = t.classes[it->second];
            uint32_t expected = c.element_order / std::gcd(c.element_order, p);
            if (i == 0 && it->second != 0)
                rep.violations.push_back({"power-map-identity", where, "identity class must be fixed by power maps"});
            if (target.element_order != expected)
                rep.violations.push_back({"power-map-order", where,
                                          "order of g^" + std::to_string(p) + " is " + std::to_string(target.element_order) +
                                              ", expected " + std::to_string(expected)});
        }
    }
}

void check_characters(const CharacterTable& t, ValidationReport& rep) {
    size_t k = t.classes.size();
    BigInt degsq(0);
    int trivial_count = 0;
    for (size_t i = 0; i < t.irreducibles.size(); ++i) {
        const auto& ch = t.irreducibles[i];
        std::string where = "irreducibles[" + std::to_string(i) + "] (" + ch.name + ")";
        if (ch.values.size() != k) {
            rep.violations.push_back({"value-count", where, "one value per class required"});
            continue;
        }
        if (ch.degree == 0) rep.violations.push_back({"degree", where, "degree must be positive"});
        if (ch.values[0] != CyclotomicNumber(static_cast<long long>(ch.degree)))
            rep.violations.push_back({"identity-value", where, "value at identity must equal the degree"});
        degsq += BigInt(ch.degree) * BigInt(ch.degree);
        bool all_one = true;
        for (const auto& v : ch.values)
            if (v != CyclotomicNumber(1)) {
                all_one = false;
                break;
            }
        if (all_one) ++trivial_count;
    }
    if (degsq != BigInt(t.order))
        rep.violations.push_back({"degree-square-sum", "irreducibles",
                                  "sum of squared degrees is " + degsq.to_string() + ", expected " + std::to_string(t.order)});
    if (trivial_count != 1)
        rep.violations.push_back({"trivial-character", "irreducibles",
                                  "expected exactly one trivial character, found " + std::to_string(trivial_count)});
    if (t.irreducible_index(t.distinguished_rep) < 0)
        rep.violations.push_back({"distinguished-rep", "distinguished_rep",
                                  "'" + t.distinguished_rep + "' does not name an irreducible"});
}

void check_orthogonality(const CharacterTable& t, ValidationReport& rep) {
    size_t k = t.classes.size();
    for (const auto& ch : t.irreducibles)
        if (ch.values.size() != k) return;  // shape already reported
    if (t.classes.empty()) return;

    // first orthogonality: <chi_i, chi_j> = delta_ij
    for (size_t i = 0; i < t.irreducibles.size(); ++i) {
        for (size_t j = i; j < t.irreducibles.size(); ++j) {
            Rational expected(i == j ? 1 : 0);
            std::string where = "<" + t.irreducibles[i].name + ", " + t.irreducibles[j].name + ">";
            try {
                Rational got = inner_product(t, t.irreducibles[i].values, t.irreducibles[j].values);
                if (got != expected)
                    rep.violations.push_back({"row-orthogonality", where,
                                              "inner product is " + got.to_string() + ", expected " + expected.to_string()});
            } catch (const NotRationalError&) {
                rep.violations.push_back({"row-orthogonality", where, "inner product is not rational"});
            }
        }
    }

    // second orthogonality: sum_i chi_i(g) conj(chi_i(h)) = |centralizer(g)| delta
    for (size_t g = 0; g < k; ++g) {
        for (size_t h = g; h < k; ++h) {
            CycSum sum;
            for (const auto& ch : t.irreducibles) sum.add_product_conj(ch.values[g], ch.values[h], Rational(1));
            CyclotomicNumber got = sum.value();
            CyclotomicNumber expected;
            if (g == h && t.classes[g].size != 0)
                expected = CyclotomicNumber(Rational(BigInt(t.order), BigInt(t.classes[g].size)));
            std::string where = "columns (" + std::to_string(g) + ", " + std::to_string(h) + ")";
            if (got != expected)
                rep.violations.push_back({"column-orthogonality", where,
                                          "sum is " + got.to_string() + ", expected " + expected.to_string()});
        }
    }
}

}  // namespace

ValidationReport validate(const CharacterTable& t, uint32_t max_sym_degree) {
    ValidationReport rep;
    check_classes(t, max_sym_degree, rep);
    check_characters(t, rep);
    check_orthogonality(t, rep);
    return rep;
}

}  // namespace ec
