/**
 * @file matgroup.hpp
 * @brief Finite matrix groups over cyclotomic fields: breadth-first closure
 *        from generators, Molien coefficients by direct summation over all
 *        elements, and trace data per conjugacy class.
 *
 * This is the independent oracle of the toolkit: it never touches character
 * tables, only exact matrices. Entries are interned so that a group of
 * ~10^5 elements in dimension 7 stays within tens of megabytes.
 *
 * Generator file format (JSON):
 *   { "dimension": d, "conductor_hint": N,
 *     "generators": [ [d*d cyclotomic literals, row-major], ... ],
 *     "notes": optional string }
 */
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "exceptcheck/cyclotomic.hpp"

namespace ec {

struct OrderExceededError : std::runtime_error {
    uint64_t max_order;
    explicit OrderExceededError(uint64_t m)
        : std::runtime_error("closure exceeded max order " + std::to_string(m)), max_order(m) {}
};

struct NotAnIntegerError : std::runtime_error {
    explicit NotAnIntegerError(const std::string& msg) : std::runtime_error(msg) {}
};

class ExactMatrix {
public:
    ExactMatrix() : dim_(0) {}
    ExactMatrix(uint32_t dim, std::vector<CyclotomicNumber> entries);

    static ExactMatrix identity(uint32_t dim);

    uint32_t dim() const { return dim_; }
    const CyclotomicNumber& at(uint32_t r, uint32_t c) const { return entries_[r * dim_ + c]; }
    CyclotomicNumber& at(uint32_t r, uint32_t c) { return entries_[r * dim_ + c]; }
    const std::vector<CyclotomicNumber>& entries() const { return entries_; }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    ExactMatrix inverse() const;  // throws std::domain_error if singular
    CyclotomicNumber trace() const;
    CyclotomicNumber determinant() const;

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }
    size_t hash() const;

private:
    uint32_t dim_;
    std::vector<CyclotomicNumber> entries_;  // row-major, canonical forms
};

struct GeneratorFile {
    uint32_t dimension = 0;
    uint32_t conductor_hint = 1;
    std::string notes;
    std::vector<ExactMatrix> generators;
};

GeneratorFile load_generators(const std::string& path);
GeneratorFile parse_generators(const std::string& json_text, const std::string& origin);
std::string generators_to_json(const GeneratorFile& gf);

struct TraceClass {
    uint64_t size = 0;
    uint32_t element_order = 0;
    CyclotomicNumber trace;
    size_t representative = 0;  // element index
};

class MatrixGroup {
public:
    /// Enumerate the group generated by `gens` (breadth-first products).
    /// Throws OrderExceededError if more than max_order elements appear,
    /// std::domain_error if a generator is singular or dimensions differ.
    static MatrixGroup closure(std::vector<ExactMatrix> gens, uint64_t max_order);

    uint64_t order() const { return elements_.size(); }
    uint32_t dimension() const { return dim_; }
    const std::vector<ExactMatrix>& generators() const { return gens_; }

    ExactMatrix element(size_t index) const;
    bool contains(const ExactMatrix& m) const;

    /// Cayley arithmetic on element indices (0 is the identity).
    size_t product_index(size_t a, size_t b) const;
    size_t inverse_index(size_t a) const;
    /// Index of a member matrix; throws std::out_of_range if absent.
    size_t index_of(const ExactMatrix& m) const;

    /// Dimensions of invariants of degree 0..n_max, each the exact average
    /// over the group of the Newton-recurrence symmetric trace s_n(g).
    /// Throws NotAnIntegerError if a coefficient fails to be a nonnegative
    /// integer (an internal-consistency failure).
    std::vector<uint64_t> molien_coefficients(uint32_t n_max) const;

    /// Convenience: the single coefficient in degree n.
    uint64_t direct_molien_coefficient(uint32_t n) const { return molien_coefficients(n)[n]; }

    /// Conjugacy classes by orbit partition under conjugation, with the
    /// trace of (the matrix of) each class representative.
    std::vector<TraceClass> trace_classes() const;

private:
    MatrixGroup() = default;

    struct Impl;
    std::shared_ptr<Impl> impl_;
    uint32_t dim_ = 0;
    std::vector<ExactMatrix> gens_;
    std::vector<std::vector<uint32_t>> elements_;  // interned entry ids, row-major
};

}  // namespace ec

template <>
struct std::hash<ec::ExactMatrix> {
    size_t operator()(const ec::ExactMatrix& m) const { return m.hash(); }
};
