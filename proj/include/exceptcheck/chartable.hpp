/**
 * @file chartable.hpp
 * @brief Character tables of finite groups: data model, JSON ingestion,
 *        consistency validation, power-map composition, inner products.
 *
 * Tables are input data transcribed from standard references; this module
 * validates what it ingests and never derives tables itself.
 *
 * On-disk format: one JSON object with fields
 *   group_name              string
 *   order                   integer
 *   is_simple_modulo_center bool
 *   center_in_commutator    bool
 *   primitive               bool
 *   distinguished_rep       string (name of an irreducible)
 *   classes                 array of {size, element_order,
 *                            power_maps: {"<prime>": class index}}
 *   irreducibles            array of {name, degree, values: [cyclotomic
 *                            literal, one per class, same class order]}
 *   notes                   optional string, carried through untouched
 * Class index 0 must be the identity class; class ordering is the file's.
 */
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "exceptcheck/cyclotomic.hpp"

namespace ec {

struct TableFormatError : std::runtime_error {
    explicit TableFormatError(const std::string& msg) : std::runtime_error(msg) {}
};

struct MissingPowerMapError : std::runtime_error {
    uint32_t prime;
    explicit MissingPowerMapError(uint32_t p)
        : std::runtime_error("missing power map for prime " + std::to_string(p)), prime(p) {}
};

struct ConjugacyClass {
    uint64_t size = 0;
    uint32_t element_order = 0;
    std::map<uint32_t, uint32_t> power_maps;  // prime -> class index of g^p
};

struct IrreducibleCharacter {
    std::string name;
    uint64_t degree = 0;
    std::vector<CyclotomicNumber> values;  // one per class, file order
};

class CharacterTable {
public:
    std::string group_name;
    unsigned long long order = 0;
    bool is_simple_modulo_center = false;
    bool center_in_commutator = false;
    bool primitive = false;
    std::string distinguished_rep;
    std::string notes;
    std::vector<ConjugacyClass> classes;
    std::vector<IrreducibleCharacter> irreducibles;

    size_t class_count() const { return classes.size(); }

    /// Index of the irreducible named `name`, or -1.
    int irreducible_index(const std::string& name) const;

    /// The distinguished irreducible; throws TableFormatError if absent.
    const IrreducibleCharacter& distinguished() const;

    /// Index of the all-ones character, or -1 if absent/ambiguous.
    int trivial_index() const;

    /// Indices of degree-1 irreducibles (the linear characters present).
    std::vector<size_t> linear_indices() const;

    /// Order of the centre = number of singleton classes.
    uint64_t centre_order() const;
};

/// Default maximum symmetric-power degree the data must support.
inline constexpr uint32_t kDefaultMaxSymDegree = 12;

struct Violation {
    std::string check;
    std::string where;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Load a table from a JSON file. Throws TableFormatError (structure),
/// ParseError / UnknownConductorError (cyclotomic literals, with the
/// offending field named), or std::runtime_error (I/O).
CharacterTable load_table(const std::string& path);

/// Parse a table from JSON text (used by load_table and tests).
CharacterTable parse_table(const std::string& json_text, const std::string& origin);

/// Serialize back to the on-disk JSON format (canonical field order).
std::string table_to_json(const CharacterTable& t);

/// Full consistency validation, including both orthogonality relations.
/// max_sym_degree controls which prime power maps must be present.
ValidationReport validate(const CharacterTable& t, uint32_t max_sym_degree = kDefaultMaxSymDegree);

/// Class of g^k for g in class `cls`, via prime power-map composition.
/// Result is independent of the factorization order. Throws
/// MissingPowerMapError if a needed prime map is absent.
uint32_t power_class(const CharacterTable& t, uint32_t cls, uint64_t k);

/// (1/|G|) * sum over classes of size * a(g) * conjugate(b(g)).
/// Throws NotRationalError if the sum is irrational (corrupted data).
Rational inner_product(const CharacterTable& t, std::span<const CyclotomicNumber> a,
                       std::span<const CyclotomicNumber> b);

}  // namespace ec
