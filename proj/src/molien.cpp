#include "exceptcheck/molien.hpp"

namespace ec {

namespace {

uint64_t multiplicity_of(const CharacterTable& t, const ClassFunction& f, size_t irr) {
    Rational m = inner_product(t, f.values, t.irreducibles[irr].values);
    auto v = m.to_i64();
    if (!v || *v < 0)
        throw NotACharacterError("Molien multiplicity of " + t.irreducibles[irr].name + " is " + m.to_string());
    return static_cast<uint64_t>(*v);
}

}  // namespace

std::vector<MolienRow> molien_multiplicities(const CharacterTable& t, uint32_t max_degree) {
    ClassFunction chi = distinguished_class_function(t);
    auto sym = sym_power_characters(chi, max_degree);
    auto linear = t.linear_indices();
    int trivial = t.trivial_index();
    if (trivial < 0) throw TableFormatError(t.group_name + ": no (unique) trivial character");

    std::vector<MolienRow> rows;
    for (uint32_t n = 1; n <= max_degree; ++n) {
        MolienRow row;
        row.degree = n;
        row.invariants = multiplicity_of(t, sym[n], static_cast<size_t>(trivial));
        for (size_t li : linear)
            row.semiinvariants[t.irreducibles[li].name] = multiplicity_of(t, sym[n], li);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::optional<uint32_t> min_invariant_degree(const CharacterTable& t, uint32_t max_degree) {
    ClassFunction chi = distinguished_class_function(t);
    int trivial = t.trivial_index();
    if (trivial < 0) throw TableFormatError(t.group_name + ": no (unique) trivial character");
    auto sym = sym_power_characters(chi, max_degree);
    for (uint32_t n = 1; n <= max_degree; ++n)
        if (multiplicity_of(t, sym[n], static_cast<size_t>(trivial)) >= 1) return n;
    return std::nullopt;
}

std::optional<uint32_t> min_semiinvariant_degree(const CharacterTable& t, uint32_t max_degree) {
    ClassFunction chi = distinguished_class_function(t);
    auto linear = t.linear_indices();
    auto sym = sym_power_characters(chi, max_degree);
    for (uint32_t n = 1; n <= max_degree; ++n)
        for (size_t li : linear)
            if (multiplicity_of(t, sym[n], li) >= 1) return n;
    return std::nullopt;
}

bool has_degree2_invariant(const CharacterTable& t) {
    ClassFunction chi = distinguished_class_function(t);
    int trivial = t.trivial_index();
    if (trivial < 0) throw TableFormatError(t.group_name + ": no (unique) trivial character");
    ClassFunction sym2 = sym_power_character(chi, 2);
    return multiplicity_of(t, sym2, static_cast<size_t>(trivial)) >= 1;
}

}  // namespace ec
