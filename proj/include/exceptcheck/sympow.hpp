/**
 * @file sympow.hpp
 * @brief Symmetric-power characters, decomposition into irreducibles, and
 *        achievable submodule dimensions.
 *
 * The n-th complete symmetric power of a character is computed classwise by
 * the Newton recurrence  s_n(g) = (1/n) * sum_{k=1..n} chi(g^k) s_{n-k}(g),
 * which needs chi on powers of g, i.e. the table's power maps.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "exceptcheck/chartable.hpp"

namespace ec {

struct NotACharacterError : std::runtime_error {
    explicit NotACharacterError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ClassFunction {
    const CharacterTable* table = nullptr;
    std::vector<CyclotomicNumber> values;  // one per class

    const CyclotomicNumber& at(size_t cls) const { return values[cls]; }
};

/// Class function of the irreducible with the given index.
ClassFunction irreducible_class_function(const CharacterTable& t, size_t index);

/// Class function of the table's distinguished representation.
ClassFunction distinguished_class_function(const CharacterTable& t);

/// Exact binomial coefficient.
BigInt binomial(uint64_t n, uint64_t k);

/// Character of Sym^n of chi. n = 0 gives the trivial character, n = 1 chi
/// itself. Throws MissingPowerMapError if a required prime map is absent.
ClassFunction sym_power_character(const ClassFunction& chi, uint32_t n);

/// All of Sym^0..Sym^n in one pass (shared recurrence).
std::vector<ClassFunction> sym_power_characters(const ClassFunction& chi, uint32_t n);

struct Decomposition {
    struct Part {
        size_t irreducible;     // index into table.irreducibles
        uint64_t multiplicity;  // >= 1
    };
    std::vector<Part> parts;

    /// Multiset of the constituent degrees, with repetition by multiplicity.
    std::vector<uint64_t> degree_multiset(const CharacterTable& t) const;
};

/// Multiplicities <f, chi_i>; every inner product must be a nonnegative
/// integer and the parts must reconstruct f exactly, else NotACharacterError.
Decomposition decompose(const ClassFunction& f);

/// All dimensions of subrepresentations: every sum of c_i * degree_i with
/// 0 <= c_i <= multiplicity_i, as a sorted set (includes 0 and the total).
std::vector<uint64_t> achievable_subdims(const CharacterTable& t, const Decomposition& d);

/// Allowed values of h^0(O_Z(n)) on a nonempty center:
/// { C(ambient_dim + n, n) - q : q achievable for Sym^n } minus {0}.
/// Requires the distinguished representation degree to equal ambient_dim + 1.
std::vector<uint64_t> allowed_h_values(const CharacterTable& t, uint32_t n, uint32_t ambient_dim);

}  // namespace ec
