/**
 * @file molien.hpp
 * @brief Minimal invariant / semi-invariant degrees via Molien coefficients.
 *
 * The multiplicity of the trivial (resp. a linear) character in Sym^n of the
 * distinguished representation is the dimension of degree-n invariants
 * (resp. semi-invariants transforming by that character).
 */
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "exceptcheck/sympow.hpp"

namespace ec {

struct MolienRow {
    uint32_t degree = 0;
    uint64_t invariants = 0;                       // multiplicity of the trivial character
    std::map<std::string, uint64_t> semiinvariants;  // per linear character (includes trivial)
};

/// Per-degree multiplicities for degrees 1..max_degree.
std::vector<MolienRow> molien_multiplicities(const CharacterTable& t, uint32_t max_degree);

/// Smallest n in 1..max_degree with an invariant of degree n, if any.
std::optional<uint32_t> min_invariant_degree(const CharacterTable& t, uint32_t max_degree = kDefaultMaxSymDegree);

/// Smallest n in 1..max_degree with a semi-invariant of degree n (scanning
/// every linear character of the table), if any.
std::optional<uint32_t> min_semiinvariant_degree(const CharacterTable& t, uint32_t max_degree = kDefaultMaxSymDegree);

/// True iff Sym^2 of the distinguished representation contains the trivial
/// character.
bool has_degree2_invariant(const CharacterTable& t);

}  // namespace ec
