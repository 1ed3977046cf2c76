/**
 * @file engine.hpp
 * @brief The exceptionality verification engine.
 *
 * Mechanizes the case analysis that eliminates every possible minimal
 * center of log canonical singularities for a candidate group action on
 * P^5: cheap representation-theoretic disposals first (semi-invariants),
 * then the polynomial-impossibility shortcut when every h-value is forced,
 * then exact Riemann--Roch eliminations for curve, surface and threefold
 * centers. Every step is recorded in a certificate whose trail entries can
 * be re-derived from their stored inputs, so a certificate can be audited
 * independently of the code path that produced it.
 *
 * Exit semantics: criterion-verified is emitted only when every case is
 * closed AND the group has no semi-invariant of degree <= ambient + 1;
 * any open case yields "inconclusive", never a false positive.
 */
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exceptcheck/molien.hpp"

namespace ec {

struct NegativeRError : std::runtime_error {
    explicit NegativeRError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Upper bound C(s + r, r) for the degree of an orbit Y of a minimal
/// center, with s = n - dim Y. `mu_sup` bounds the divisor multiple mu;
/// `mu_attained` says whether mu may equal mu_sup or only approach it from
/// below (the engine's callers use a strict bound mu < (n+1)(n+2)/(n+1)).
BigInt degree_bound(uint32_t n, uint32_t dim_y, const Rational& mu_sup, bool mu_attained);

struct HSetProvenance {
    std::vector<std::string> part_names;
    std::vector<uint64_t> part_degrees;
    std::vector<uint64_t> part_mults;
};

/// Allowed values of h_n = h^0(O_Z(n)) for n = 1..5, with the symmetric
/// power decompositions they came from.
struct HValueSets {
    uint32_t ambient = 5;
    std::array<std::vector<uint64_t>, 6> allowed;  // index by n, 1..5
    std::array<HSetProvenance, 6> provenance;

    bool contains(uint32_t n, const Rational& h) const;
    bool is_forced_full() const;  // every H_n = {C(ambient+n, n)}
};

HValueSets build_h_sets(const CharacterTable& t, uint32_t ambient = 5);

// Exact Riemann-Roch solutions used by the geometric cases.

/// Curve: h_n = n*deg - g + 1 fitted through (1, h1), (2, h2).
struct CurveSolution {
    Rational deg, g;
};
CurveSolution solve_curve(const Rational& h1, const Rational& h2);

/// Surface: h_n = (n^2/2) d - (n/2) hk + chi0 through n = 1, 2, 3.
struct SurfaceSolution {
    Rational d, hk, chi0;
};
SurfaceSolution solve_surface(const Rational& h1, const Rational& h2, const Rational& h3);
Rational surface_h_value(const SurfaceSolution& s, uint32_t n);

/// Threefold: h_n = (n^3/6) A + (n^2/4) B + (n/12) gamma + chi0 through
/// n = 1..4, with A = H*H*H and B = H*H*K.
struct CubicSolution {
    Rational hhh, hhk, gamma, chi0;
};
CubicSolution solve_cubic(const Rational& h1, const Rational& h2, const Rational& h3, const Rational& h4);
Rational cubic_h_value(const CubicSolution& t, uint32_t n);

struct TrailEntry {
    std::string check;
    std::vector<std::pair<std::string, std::string>> inputs;  // name -> exact value
    std::string computed;
    bool verdict = false;
};

struct Candidate {
    std::string label;
    std::vector<TrailEntry> trail;
    bool eliminated = false;
};

/// Case closure semantics: "all-pass" cases are closed when the single
/// candidate's every check holds; "eliminate-all" cases are closed when
/// every enumerated candidate fails at least one check.
enum class CaseMode { AllPass, EliminateAll };

struct CaseRecord {
    std::string case_id;
    CaseMode mode = CaseMode::AllPass;
    bool closed = false;
    std::string reason;
    std::vector<Candidate> candidates;
};

enum class Verdict { CriterionVerified, NotExceptional, Inconclusive };

std::string verdict_name(Verdict v);

struct SemiInvariantSummary {
    uint32_t max_degree = kDefaultMaxSymDegree;
    std::optional<uint32_t> min_invariant;
    std::optional<uint32_t> min_semiinvariant;
};

struct ExceptionalityCertificate {
    int schema = 1;
    std::string group;
    uint32_t ambient = 5;
    // inputs the audit needs beyond the h-sets
    unsigned long long group_order = 0;
    uint64_t centre_order = 0;
    bool is_simple_modulo_center = false;
    uint64_t distinguished_degree = 0;

    Verdict verdict = Verdict::Inconclusive;
    std::optional<uint32_t> witness_degree;  // for not-exceptional
    SemiInvariantSummary semiinvariants;
    HValueSets h_sets;  // empty sets when the geometric cases never ran
    std::vector<CaseRecord> cases;
    std::vector<std::string> notes;
};

// Individual case analyses (exposed for tests; check_exceptionality wires
// them in order. Contexts carry exactly what the audit later re-derives.)
struct GroupFacts {
    unsigned long long group_order = 0;
    uint64_t centre_order = 0;
    bool is_simple_modulo_center = false;
    uint64_t distinguished_degree = 0;
};

CaseRecord dim4_case(const GroupFacts& g, uint32_t ambient, const SemiInvariantSummary& semis);
CaseRecord r_analysis_case(const GroupFacts& g, uint32_t ambient, const HValueSets& h);
CaseRecord dim0_case(const CaseRecord& r_analysis);
CaseRecord hj_impossibility_case(const HValueSets& h);
CaseRecord curve_case(const HValueSets& h);
CaseRecord surface_case(const HValueSets& h);
CaseRecord threefold_case(const HValueSets& h);

ExceptionalityCertificate check_exceptionality(const CharacterTable& t);

struct AuditResult {
    Verdict verdict = Verdict::Inconclusive;
    bool consistent = false;
    std::vector<std::string> problems;
};

/// Recompute every trail entry from its recorded inputs and re-derive the
/// closure logic and overall verdict from the certificate's own data. Any
/// mismatch makes the audited verdict inconclusive.
AuditResult audit(const ExceptionalityCertificate& cert);

std::string certificate_to_json(const ExceptionalityCertificate& cert);
ExceptionalityCertificate certificate_from_json(const std::string& text);

}  // namespace ec
