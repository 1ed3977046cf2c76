#include "exceptcheck/engine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ec {

using nlohmann::ordered_json;

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::CriterionVerified: return "criterion-verified";
        case Verdict::NotExceptional: return "not-exceptional";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

// ---------------------------------------------------------------------------
// degree bound (orbit-degree lemma)
// ---------------------------------------------------------------------------

BigInt degree_bound(uint32_t n, uint32_t dim_y, const Rational& mu_sup, bool mu_attained) {
    if (dim_y > n) throw std::invalid_argument("degree_bound: dim Y exceeds ambient dimension");
    if (mu_sup.sign() <= 0) throw std::invalid_argument("degree_bound: mu bound must be positive");
    long long s = static_cast<long long>(n) - static_cast<long long>(dim_y);
    BigInt r;
    if (mu_attained) {
        Rational shifted = mu_sup - Rational(s + 1);
        r = shifted.ceil();
        if (mu_sup.is_integer()) r += BigInt(1);
    } else {
        // supremum over admissible mu < mu_sup of the two-branch formula
        if (mu_sup.is_integer()) {
            r = mu_sup.num() - BigInt(s + 1);
        } else {
            r = (mu_sup - Rational(s + 1)).ceil();
        }
    }
    if (r.is_negative()) throw NegativeRError("degree_bound: r = " + r.to_string() + " < 0");
    auto r64 = r.to_i64();
    if (!r64 || *r64 > 1000000) throw std::overflow_error("degree_bound: r out of range");
    return binomial(static_cast<uint64_t>(s + *r64), static_cast<uint64_t>(*r64));
}

// ---------------------------------------------------------------------------
// H-value sets
// ---------------------------------------------------------------------------

bool HValueSets::contains(uint32_t n, const Rational& h) const {
    if (n == 0 || n >= allowed.size()) return false;
    if (!h.is_integer() || h.is_negative()) return false;
    auto v = h.to_i64();
    if (!v) return false;
    const auto& set = allowed[n];
    return std::binary_search(set.begin(), set.end(), static_cast<uint64_t>(*v));
}

bool HValueSets::is_forced_full() const {
    for (uint32_t n = 1; n <= 5; ++n) {
        auto full = binomial(ambient + n, n).to_i64();
        if (allowed[n].size() != 1 || allowed[n][0] != static_cast<uint64_t>(*full)) return false;
    }
    return true;
}

HValueSets build_h_sets(const CharacterTable& t, uint32_t ambient) {
    HValueSets h;
    h.ambient = ambient;
    ClassFunction chi = distinguished_class_function(t);
    auto sym = sym_power_characters(chi, 5);
    for (uint32_t n = 1; n <= 5; ++n) {
        Decomposition d = decompose(sym[n]);
        HSetProvenance prov;
        for (const auto& p : d.parts) {
            prov.part_names.push_back(t.irreducibles[p.irreducible].name);
            prov.part_degrees.push_back(t.irreducibles[p.irreducible].degree);
            prov.part_mults.push_back(p.multiplicity);
        }
        h.provenance[n] = std::move(prov);
        h.allowed[n] = allowed_h_values(t, n, ambient);
    }
    return h;
}

// ---------------------------------------------------------------------------
// exact Riemann-Roch solutions
// ---------------------------------------------------------------------------

CurveSolution solve_curve(const Rational& h1, const Rational& h2) {
    CurveSolution c;
    c.deg = h2 - h1;
    c.g = h2 - Rational(2) * h1 + Rational(1);
    return c;
}

SurfaceSolution solve_surface(const Rational& h1, const Rational& h2, const Rational& h3) {
    SurfaceSolution s;
    s.d = h1 - Rational(2) * h2 + h3;
    s.hk = Rational(3) * s.d - Rational(2) * (h2 - h1);
    s.chi0 = h1 - (s.d - s.hk) / Rational(2);  // from n=1: d/2 - hk/2 + chi0 = h1
    return s;
}

Rational surface_h_value(const SurfaceSolution& s, uint32_t n) {
    Rational nn(static_cast<long long>(n));
    return nn * nn / Rational(2) * s.d - nn / Rational(2) * s.hk + s.chi0;
}

CubicSolution solve_cubic(const Rational& h1, const Rational& h2, const Rational& h3, const Rational& h4) {
    CubicSolution t;
    t.hhh = h4 - Rational(3) * h3 + Rational(3) * h2 - h1;
    t.hhk = Rational(2) * (h3 - Rational(2) * h2 + h1) - Rational(4) * t.hhh;
    // remaining two coefficients by exact interpolation at n = 1, 2
    Rational r1 = h1 - t.hhh / Rational(6) - t.hhk / Rational(4);  // gamma/12 + chi0
    Rational r2 = h2 - t.hhh * Rational(8, 6) - t.hhk;             // gamma/6 + chi0
    t.gamma = (r2 - r1) * Rational(12);
    t.chi0 = r1 - t.gamma / Rational(12);
    return t;
}

Rational cubic_h_value(const CubicSolution& t, uint32_t n) {
    Rational nn(static_cast<long long>(n));
    return nn * nn * nn / Rational(6) * t.hhh + nn * nn / Rational(4) * t.hhk + nn / Rational(12) * t.gamma +
           t.chi0;
}

// Recompute one allowed set from its recorded provenance (used by audit).
static std::vector<uint64_t> allowed_from_provenance(uint32_t ambient, uint32_t n, const HSetProvenance& p) {
    std::set<uint64_t> qs = {0};
    for (size_t i = 0; i < p.part_degrees.size(); ++i) {
        std::set<uint64_t> next;
        for (uint64_t s : qs)
            for (uint64_t c = 0; c <= p.part_mults[i]; ++c) next.insert(s + c * p.part_degrees[i]);
        qs = std::move(next);
    }
    auto full = binomial(ambient + n, n).to_i64();
    std::set<uint64_t> hs;
    for (uint64_t q : qs) {
        uint64_t h = static_cast<uint64_t>(*full) - q;
        if (h > 0) hs.insert(h);
    }
    return std::vector<uint64_t>(hs.begin(), hs.end());
}

// ---------------------------------------------------------------------------
// trail entry evaluation (single source of truth for builder and audit)
// ---------------------------------------------------------------------------

namespace {

std::string set_to_string(const std::vector<uint64_t>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

struct Evaluated {
    std::string computed;
    bool verdict;
};

const std::string& input_of(const TrailEntry& e, const std::string& name) {
    for (const auto& [k, v] : e.inputs)
        if (k == name) return v;
    throw std::invalid_argument("trail entry '" + e.check + "' lacks input '" + name + "'");
}

Rational rat_input(const TrailEntry& e, const std::string& name) {
    return Rational::parse(input_of(e, name));
}

Evaluated evaluate(const TrailEntry& e, const HValueSets& h) {
    const std::string& c = e.check;

    if (c == "semiinvariant-exceeds") {
        const std::string& min = input_of(e, "min_semiinvariant");
        Rational threshold = rat_input(e, "threshold");
        if (min == "none") return {"none within max degree", true};
        Rational m = Rational::parse(min);
        return {m.to_string(), m > threshold};
    }
    if (c == "h1-forced") {
        Rational expected = rat_input(e, "expected");
        bool ok = h.allowed[1].size() == 1 && h.contains(1, expected);
        return {set_to_string(h.allowed[1]), ok};
    }
    if (c == "simple-mod-center") {
        bool flag = input_of(e, "flag") == "1";
        return {flag ? "1" : "0", flag};
    }
    if (c == "quotient-order-bound") {
        Rational order = rat_input(e, "group_order");
        Rational centre = rat_input(e, "centre_order");
        Rational bound = rat_input(e, "bound");
        Rational q = order / centre;
        return {q.to_string(), q > bound};
    }
    if (c == "dim0-via-r1") {
        bool closed = input_of(e, "r_analysis_closed") == "1";
        return {closed ? "r=1 forces a fixed point, impossible for an irreducible action" : "r-analysis open",
                closed};
    }
    if (c == "curve-solve" || c == "curve-deg-positive" || c == "curve-genus-nonnegative" ||
        c == "curve-degree-bound" || c == "curve-nonspecial" || c == "curve-h-membership") {
        CurveSolution cd = solve_curve(rat_input(e, "h1"), rat_input(e, "h2"));
        if (c == "curve-solve")
            return {"deg=" + cd.deg.to_string() + ";g=" + cd.g.to_string(), true};
        if (c == "curve-deg-positive") return {cd.deg.to_string(), cd.deg >= Rational(1)};
        if (c == "curve-genus-nonnegative")
            return {cd.g.to_string(), cd.g >= Rational(0) && cd.g.is_integer()};
        if (c == "curve-degree-bound") {
            uint32_t n = static_cast<uint32_t>(*rat_input(e, "n").to_i64());
            uint32_t dy = static_cast<uint32_t>(*rat_input(e, "dim_y").to_i64());
            Rational mu = rat_input(e, "mu_sup");
            bool attained = input_of(e, "mu_attained") == "1";
            BigInt bound = degree_bound(n, dy, mu, attained);
            return {bound.to_string(), cd.deg <= Rational(bound)};
        }
        if (c == "curve-nonspecial") {
            Rational rhs = Rational(2) * cd.g - Rational(2);
            return {rhs.to_string(), cd.deg > rhs};
        }
        uint32_t n = static_cast<uint32_t>(*rat_input(e, "n").to_i64());
        Rational hn = Rational(static_cast<long long>(n)) * cd.deg - cd.g + Rational(1);
        return {hn.to_string(), h.contains(n, hn)};
    }
    if (c == "surface-solve" || c == "surface-deg-positive" || c == "surface-h-membership") {
        SurfaceSolution s = solve_surface(rat_input(e, "h1"), rat_input(e, "h2"), rat_input(e, "h3"));
        if (c == "surface-solve")
            return {"d=" + s.d.to_string() + ";hk=" + s.hk.to_string() + ";chi0=" + s.chi0.to_string(), true};
        if (c == "surface-deg-positive") return {s.d.to_string(), s.d > Rational(0)};
        uint32_t n = static_cast<uint32_t>(*rat_input(e, "n").to_i64());
        Rational hn = surface_h_value(s, n);
        return {hn.to_string(), h.contains(n, hn)};
    }
    if (c == "threefold-rr1" || c == "threefold-genus" || c == "threefold-rr3" || c == "threefold-rr4" ||
        c == "threefold-gamma-integral" || c == "threefold-h5-membership") {
        CubicSolution t = solve_cubic(rat_input(e, "h1"), rat_input(e, "h2"), rat_input(e, "h3"),
                                          rat_input(e, "h4"));
        if (c == "threefold-rr1") return {t.hhh.to_string(), t.hhh >= Rational(3)};
        if (c == "threefold-genus") {
            Rational rhs = Rational(-2) - Rational(2) * t.hhh;
            return {"h2k=" + t.hhk.to_string() + ";bound=" + rhs.to_string(), t.hhk >= rhs};
        }
        if (c == "threefold-rr3") {
            Rational h1 = rat_input(e, "h1"), h2 = rat_input(e, "h2"), h3 = rat_input(e, "h3"),
                     h4 = rat_input(e, "h4");
            Rational upper = Rational(2) * h1 - Rational(5) * h2 + Rational(4) * h3 + Rational(1);
            return {upper.to_string(), h4 <= upper};
        }
        if (c == "threefold-rr4") {
            Rational h1 = rat_input(e, "h1"), h2 = rat_input(e, "h2"), h3 = rat_input(e, "h3"),
                     h4 = rat_input(e, "h4");
            Rational lower = Rational(3) + h1 - Rational(3) * h2 + Rational(3) * h3;
            return {lower.to_string(), h4 >= lower};
        }
        if (c == "threefold-gamma-integral")
            return {"gamma=" + t.gamma.to_string() + ";chi0=" + t.chi0.to_string(),
                    t.gamma.is_integer() && t.chi0.is_integer()};
        // threefold-h5-membership: RR-5 gives h5 = H^3 + 3h4 - 3h3 + h2
        Rational h2 = rat_input(e, "h2"), h3 = rat_input(e, "h3"), h4 = rat_input(e, "h4");
        Rational h5 = t.hhh + Rational(3) * h4 - Rational(3) * h3 + h2;
        // consistency: the cubic model evaluated at 5 must agree
        if (cubic_h_value(t, 5) != h5) return {h5.to_string(), false};
        return {h5.to_string(), h.contains(5, h5)};
    }
    if (c == "h-sets-forced-full") {
        std::string tuple;
        for (uint32_t n = 1; n <= 5; ++n) {
            if (n > 1) tuple += ";";
            tuple += set_to_string(h.allowed[n]);
        }
        return {tuple, h.is_forced_full()};
    }
    if (c == "fourth-difference") {
        Rational h1 = rat_input(e, "h1"), h2 = rat_input(e, "h2"), h3 = rat_input(e, "h3"),
                 h4 = rat_input(e, "h4"), h5 = rat_input(e, "h5");
        Rational d4 = h5 - Rational(4) * h4 + Rational(6) * h3 - Rational(4) * h2 + h1;
        return {d4.to_string(), !d4.is_zero()};
    }
    throw std::invalid_argument("unknown trail check '" + c + "'");
}

TrailEntry make_entry(const std::string& check, std::vector<std::pair<std::string, std::string>> inputs,
                      const HValueSets& h) {
    TrailEntry e;
    e.check = check;
    e.inputs = std::move(inputs);
    Evaluated ev = evaluate(e, h);
    e.computed = ev.computed;
    e.verdict = ev.verdict;
    return e;
}

void finish_candidate(Candidate& c) {
    c.eliminated = false;
    for (const auto& e : c.trail)
        if (!e.verdict) c.eliminated = true;
}

void finish_case(CaseRecord& rec) {
    if (rec.mode == CaseMode::AllPass) {
        rec.closed = !rec.candidates.empty();
        for (const auto& c : rec.candidates)
            for (const auto& e : c.trail)
                if (!e.verdict) rec.closed = false;
    } else {
        rec.closed = true;
        for (const auto& c : rec.candidates)
            if (!c.eliminated) rec.closed = false;
    }
}

std::string u64s(uint64_t v) { return std::to_string(v); }

}  // namespace

// ---------------------------------------------------------------------------
// cases
// ---------------------------------------------------------------------------

CaseRecord dim4_case(const GroupFacts& g, uint32_t ambient, const SemiInvariantSummary& semis) {
    (void)g;
    CaseRecord rec;
    rec.case_id = "dim-4";
    rec.mode = CaseMode::AllPass;
    HValueSets dummy;  // this check never consults the h-sets
    Candidate c;
    c.label = "divisorial center";
    std::string min = semis.min_semiinvariant ? std::to_string(*semis.min_semiinvariant) : "none";
    c.trail.push_back(make_entry("semiinvariant-exceeds",
                                 {{"min_semiinvariant", min},
                                  {"max_degree", u64s(semis.max_degree)},
                                  {"threshold", u64s(ambient + 1)}},
                                 dummy));
    finish_candidate(c);
    rec.candidates.push_back(std::move(c));
    finish_case(rec);
    rec.reason = rec.closed
                     ? "a four-dimensional center would force a semi-invariant of degree at most " +
                           std::to_string(ambient + 1) + "; minimal semi-invariant degree is " + min
                     : "semi-invariant of degree at most " + std::to_string(ambient + 1) + " exists";
    return rec;
}

CaseRecord r_analysis_case(const GroupFacts& g, uint32_t ambient, const HValueSets& h) {
    CaseRecord rec;
    rec.case_id = "r-analysis";
    rec.mode = CaseMode::AllPass;
    Candidate c;
    c.label = "orbit component count";
    c.trail.push_back(make_entry("h1-forced", {{"expected", u64s(ambient + 1)}}, h));
    c.trail.push_back(make_entry("simple-mod-center", {{"flag", g.is_simple_modulo_center ? "1" : "0"}}, h));
    uint64_t factorial = 1;
    for (uint32_t i = 2; i <= ambient + 1; ++i) factorial *= i;
    c.trail.push_back(make_entry("quotient-order-bound",
                                 {{"group_order", std::to_string(g.group_order)},
                                  {"centre_order", u64s(g.centre_order)},
                                  {"bound", u64s(factorial)}},
                                 h));
    finish_candidate(c);
    rec.candidates.push_back(std::move(c));
    finish_case(rec);
    rec.reason = rec.closed ? "r * h^0(O_S(1)) = " + std::to_string(ambient + 1) +
                                  " and a simple quotient larger than S_" + std::to_string(ambient + 1) +
                                  " admits no nontrivial map to it, so r = 1"
                            : "could not force r = 1";
    return rec;
}

CaseRecord dim0_case(const CaseRecord& r_analysis) {
    CaseRecord rec;
    rec.case_id = "dim-0";
    rec.mode = CaseMode::AllPass;
    HValueSets dummy;
    Candidate c;
    c.label = "point center";
    c.trail.push_back(
        make_entry("dim0-via-r1", {{"r_analysis_closed", r_analysis.closed ? "1" : "0"}}, dummy));
    finish_candidate(c);
    rec.candidates.push_back(std::move(c));
    finish_case(rec);
    rec.reason = rec.closed ? "r = 1 would make the center a fixed point, contradicting irreducibility"
                            : "r = 1 not established";
    return rec;
}

CaseRecord hj_impossibility_case(const HValueSets& h) {
    CaseRecord rec;
    rec.case_id = "hj-impossibility";
    rec.mode = CaseMode::AllPass;
    Candidate c;
    c.label = "forced h-sequence";
    c.trail.push_back(make_entry("h-sets-forced-full", {{"ambient", u64s(h.ambient)}}, h));
    std::vector<std::pair<std::string, std::string>> ins;
    for (uint32_t n = 1; n <= 5; ++n) {
        uint64_t v = h.allowed[n].empty() ? 0 : h.allowed[n][0];
        ins.emplace_back("h" + std::to_string(n), u64s(v));
    }
    c.trail.push_back(make_entry("fourth-difference", ins, h));
    finish_candidate(c);
    rec.candidates.push_back(std::move(c));
    finish_case(rec);
    rec.reason = rec.closed
                     ? "every h-value is forced and the fourth finite difference is nonzero, so no "
                       "polynomial of degree at most 3 interpolates the sequence; curve, surface and "
                       "threefold centers are impossible at once"
                     : "h-values not all forced (or a cubic interpolates); fall through to case analysis";
    return rec;
}

CaseRecord curve_case(const HValueSets& h) {
    CaseRecord rec;
    rec.case_id = "curve";
    rec.mode = CaseMode::EliminateAll;
    for (uint64_t h1 : h.allowed[1]) {
        for (uint64_t h2 : h.allowed[2]) {
            Candidate c;
            c.label = "(h1,h2)=(" + u64s(h1) + "," + u64s(h2) + ")";
            std::vector<std::pair<std::string, std::string>> ins = {{"h1", u64s(h1)}, {"h2", u64s(h2)}};
            c.trail.push_back(make_entry("curve-solve", ins, h));
            c.trail.push_back(make_entry("curve-deg-positive", ins, h));
            c.trail.push_back(make_entry("curve-genus-nonnegative", ins, h));
            auto bound_ins = ins;
            bound_ins.emplace_back("n", u64s(h.ambient));
            bound_ins.emplace_back("dim_y", "1");
            bound_ins.emplace_back("mu_sup", u64s(h.ambient + 2));
            bound_ins.emplace_back("mu_attained", "0");
            c.trail.push_back(make_entry("curve-degree-bound", bound_ins, h));
            c.trail.push_back(make_entry("curve-nonspecial", ins, h));
            for (uint32_t n = 3; n <= 5; ++n) {
                auto m_ins = ins;
                m_ins.emplace_back("n", u64s(n));
                c.trail.push_back(make_entry("curve-h-membership", m_ins, h));
            }
            finish_candidate(c);
            rec.candidates.push_back(std::move(c));
        }
    }
    finish_case(rec);
    rec.reason = rec.closed ? "every (h1,h2) assignment is inconsistent with the allowed h-values"
                            : "a curve candidate survives all checks";
    return rec;
}

CaseRecord surface_case(const HValueSets& h) {
    CaseRecord rec;
    rec.case_id = "surface";
    rec.mode = CaseMode::EliminateAll;
    for (uint64_t h1 : h.allowed[1]) {
        for (uint64_t h2 : h.allowed[2]) {
            for (uint64_t h3 : h.allowed[3]) {
                Candidate c;
                c.label = "(h1,h2,h3)=(" + u64s(h1) + "," + u64s(h2) + "," + u64s(h3) + ")";
                std::vector<std::pair<std::string, std::string>> ins = {
                    {"h1", u64s(h1)}, {"h2", u64s(h2)}, {"h3", u64s(h3)}};
                c.trail.push_back(make_entry("surface-solve", ins, h));
                c.trail.push_back(make_entry("surface-deg-positive", ins, h));
                SurfaceSolution s = solve_surface(Rational(static_cast<long long>(h1)),
                                                  Rational(static_cast<long long>(h2)),
                                                  Rational(static_cast<long long>(h3)));
                if (s.d > Rational(0)) {
                    for (uint32_t n = 4; n <= 5; ++n) {
                        auto m_ins = ins;
                        m_ins.emplace_back("n", u64s(n));
                        c.trail.push_back(make_entry("surface-h-membership", m_ins, h));
                    }
                }
                finish_candidate(c);
                rec.candidates.push_back(std::move(c));
            }
        }
    }
    finish_case(rec);
    rec.reason = rec.closed ? "every (h1,h2,h3) assignment is eliminated by positivity or h-membership"
                            : "a surface candidate survives all checks";
    return rec;
}

CaseRecord threefold_case(const HValueSets& h) {
    CaseRecord rec;
    rec.case_id = "threefold";
    rec.mode = CaseMode::EliminateAll;
    for (uint64_t h1 : h.allowed[1]) {
        for (uint64_t h2 : h.allowed[2]) {
            for (uint64_t h3 : h.allowed[3]) {
                for (uint64_t h4 : h.allowed[4]) {
                    Candidate c;
                    c.label = "(h1,h2,h3,h4)=(" + u64s(h1) + "," + u64s(h2) + "," + u64s(h3) + "," +
                              u64s(h4) + ")";
                    std::vector<std::pair<std::string, std::string>> ins = {{"h1", std::to_string(h1)},
                                                                            {"h2", std::to_string(h2)},
                                                                            {"h3", std::to_string(h3)},
                                                                            {"h4", std::to_string(h4)}};
                    c.trail.push_back(make_entry("threefold-rr1", ins, h));
                    c.trail.push_back(make_entry("threefold-rr3", ins, h));
                    c.trail.push_back(make_entry("threefold-rr4", ins, h));
                    c.trail.push_back(make_entry("threefold-genus", ins, h));
                    c.trail.push_back(make_entry("threefold-gamma-integral", ins, h));
                    c.trail.push_back(make_entry("threefold-h5-membership", ins, h));
                    finish_candidate(c);
                    rec.candidates.push_back(std::move(c));
                }
            }
        }
    }
    finish_case(rec);
    rec.reason = rec.closed ? "every (h1,h2,h3,h4) assignment violates a Riemann-Roch constraint or "
                              "predicts an impossible h5"
                            : "a threefold candidate survives all checks";
    return rec;
}

// ---------------------------------------------------------------------------
// the engine
// ---------------------------------------------------------------------------

ExceptionalityCertificate check_exceptionality(const CharacterTable& t) {
    ExceptionalityCertificate cert;
    cert.group = t.group_name;
    cert.group_order = t.order;
    cert.centre_order = t.centre_order();
    cert.is_simple_modulo_center = t.is_simple_modulo_center;

    ValidationReport rep = validate(t);
    if (!rep.ok()) {
        cert.verdict = Verdict::Inconclusive;
        cert.notes.push_back("table failed validation with " + std::to_string(rep.violations.size()) +
                             " violation(s); refusing to analyze");
        return cert;
    }
    const auto& chi = t.distinguished();
    cert.distinguished_degree = chi.degree;
    if (chi.degree != 6 && chi.degree != 7) {
        cert.verdict = Verdict::Inconclusive;
        cert.notes.push_back("distinguished representation degree " + std::to_string(chi.degree) +
                             " is outside the supported range {6, 7}");
        return cert;
    }
    cert.ambient = static_cast<uint32_t>(chi.degree - 1);
    if (!t.primitive) {
        cert.verdict = Verdict::Inconclusive;
        cert.notes.push_back("group is not marked primitive; the criterion applies to primitive actions only");
        return cert;
    }

    SemiInvariantSummary semis;
    semis.max_degree = kDefaultMaxSymDegree;
    semis.min_invariant = min_invariant_degree(t, semis.max_degree);
    semis.min_semiinvariant = min_semiinvariant_degree(t, semis.max_degree);
    cert.semiinvariants = semis;

    if (semis.min_semiinvariant && *semis.min_semiinvariant <= cert.ambient + 1) {
        cert.verdict = Verdict::NotExceptional;
        cert.witness_degree = *semis.min_semiinvariant;
        cert.notes.push_back("semi-invariant of degree " + std::to_string(*semis.min_semiinvariant) +
                             " <= " + std::to_string(cert.ambient + 1) + " witnesses non-exceptionality");
        return cert;
    }

    if (cert.ambient != 5) {
        cert.verdict = Verdict::Inconclusive;
        cert.notes.push_back("no semi-invariant of degree up to " + std::to_string(cert.ambient + 1) +
                             " found, but only the five-dimensional ambient pipeline is wired");
        return cert;
    }

    GroupFacts g{cert.group_order, cert.centre_order, cert.is_simple_modulo_center, chi.degree};
    cert.h_sets = build_h_sets(t, cert.ambient);

    cert.cases.push_back(dim4_case(g, cert.ambient, semis));
    CaseRecord r_rec = r_analysis_case(g, cert.ambient, cert.h_sets);
    cert.cases.push_back(r_rec);
    cert.cases.push_back(dim0_case(r_rec));

    CaseRecord hj = hj_impossibility_case(cert.h_sets);
    if (hj.closed) {
        cert.cases.push_back(hj);
    } else {
        cert.cases.push_back(curve_case(cert.h_sets));
        cert.cases.push_back(surface_case(cert.h_sets));
        cert.cases.push_back(threefold_case(cert.h_sets));
    }

    bool all_closed = true;
    for (const auto& rec : cert.cases)
        if (!rec.closed) all_closed = false;
    cert.verdict = all_closed ? Verdict::CriterionVerified : Verdict::Inconclusive;
    cert.notes.push_back(
        "intermediate curve/surface/threefold data (degrees, intersection numbers, Euler "
        "characteristics, predicted h-values) are derived by exact elimination from the computed "
        "h-value sets and recorded in the trails; no externally tabulated intermediates are assumed");
    return cert;
}

// ---------------------------------------------------------------------------
// audit
// ---------------------------------------------------------------------------

AuditResult audit(const ExceptionalityCertificate& cert) {
    AuditResult res;
    auto problem = [&](const std::string& msg) { res.problems.push_back(msg); };

    // recompute the allowed sets from their provenance
    HValueSets h = cert.h_sets;
    bool have_h = false;
    for (uint32_t n = 1; n <= 5; ++n)
        if (!cert.h_sets.allowed[n].empty()) have_h = true;
    if (have_h) {
        for (uint32_t n = 1; n <= 5; ++n) {
            auto recomputed = allowed_from_provenance(cert.h_sets.ambient, n, cert.h_sets.provenance[n]);
            if (recomputed != cert.h_sets.allowed[n])
                problem("allowed h-set for n=" + std::to_string(n) + " does not match its provenance");
        }
    }

    // Rebuild the expected records deterministically from the certificate's
    // header data and h-sets, then require bit-for-bit agreement.
    if (!cert.cases.empty()) {
        GroupFacts g{cert.group_order, cert.centre_order, cert.is_simple_modulo_center,
                     cert.distinguished_degree};
        std::map<std::string, CaseRecord> expected;
        expected["dim-4"] = dim4_case(g, cert.ambient, cert.semiinvariants);
        CaseRecord r_rec = r_analysis_case(g, cert.ambient, h);
        expected["r-analysis"] = r_rec;
        expected["dim-0"] = dim0_case(r_rec);
        bool has_hj = false;
        for (const auto& rec : cert.cases)
            if (rec.case_id == "hj-impossibility") has_hj = true;
        if (has_hj) {
            expected["hj-impossibility"] = hj_impossibility_case(h);
        } else {
            expected["curve"] = curve_case(h);
            expected["surface"] = surface_case(h);
            expected["threefold"] = threefold_case(h);
        }

        std::map<std::string, int> seen;
        for (const auto& rec : cert.cases) {
            ++seen[rec.case_id];
            auto it = expected.find(rec.case_id);
            if (it == expected.end()) {
                problem("unexpected case record '" + rec.case_id + "'");
                continue;
            }
            const CaseRecord& want = it->second;
            if (rec.mode != want.mode) problem(rec.case_id + ": mode does not reproduce");
            if (rec.closed != want.closed) problem(rec.case_id + ": closure flag does not reproduce");
            if (rec.reason != want.reason) problem(rec.case_id + ": reason does not reproduce");
            if (rec.candidates.size() != want.candidates.size()) {
                problem(rec.case_id + ": candidate enumeration does not reproduce");
                continue;
            }
            for (size_t ci = 0; ci < rec.candidates.size(); ++ci) {
                const Candidate& a = rec.candidates[ci];
                const Candidate& b = want.candidates[ci];
                if (a.label != b.label || a.eliminated != b.eliminated || a.trail.size() != b.trail.size()) {
                    problem(rec.case_id + "/" + a.label + ": candidate does not reproduce");
                    continue;
                }
                for (size_t ti = 0; ti < a.trail.size(); ++ti) {
                    const TrailEntry& x = a.trail[ti];
                    const TrailEntry& y = b.trail[ti];
                    if (x.check != y.check || x.inputs != y.inputs || x.computed != y.computed ||
                        x.verdict != y.verdict)
                        problem(rec.case_id + "/" + a.label + "/" + x.check + ": trail entry does not reproduce");
                }
            }
        }
        for (const auto& [id, want] : expected)
            if (!seen.count(id)) problem("missing case record '" + id + "'");
        for (const auto& [id, count] : seen)
            if (count > 1) problem("duplicated case record '" + id + "'");
    }

    // re-derive the overall verdict
    Verdict expect;
    if (cert.semiinvariants.min_semiinvariant &&
        *cert.semiinvariants.min_semiinvariant <= cert.ambient + 1) {
        expect = Verdict::NotExceptional;
        if (!cert.witness_degree || *cert.witness_degree != *cert.semiinvariants.min_semiinvariant)
            problem("witness degree does not match the semi-invariant summary");
    } else if (!cert.cases.empty()) {
        // required case coverage: dim-4, r-analysis, dim-0, and either the
        // polynomial impossibility record or all three geometric cases
        auto has = [&](const char* id) {
            for (const auto& rec : cert.cases)
                if (rec.case_id == id) return true;
            return false;
        };
        bool geometric = has("hj-impossibility") || (has("curve") && has("surface") && has("threefold"));
        bool coverage = has("dim-4") && has("r-analysis") && has("dim-0") && geometric;
        bool all_closed = coverage;
        for (const auto& rec : cert.cases)
            if (!rec.closed) all_closed = false;
        expect = all_closed ? Verdict::CriterionVerified : Verdict::Inconclusive;
        if (!coverage) problem("case coverage incomplete");
    } else {
        expect = Verdict::Inconclusive;
    }
    if (expect != cert.verdict) problem("recorded verdict does not match the re-derived one");

    res.consistent = res.problems.empty();
    res.verdict = res.consistent ? cert.verdict : Verdict::Inconclusive;
    return res;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {

ordered_json hsets_to_json(const HValueSets& h) {
    ordered_json out;
    out["ambient"] = h.ambient;
    out["allowed"] = ordered_json::object();
    out["provenance"] = ordered_json::object();
    for (uint32_t n = 1; n <= 5; ++n) {
        out["allowed"][std::to_string(n)] = h.allowed[n];
        ordered_json prov;
        prov["parts"] = ordered_json::array();
        const auto& p = h.provenance[n];
        for (size_t i = 0; i < p.part_names.size(); ++i) {
            ordered_json part;
            part["name"] = p.part_names[i];
            part["degree"] = p.part_degrees[i];
            part["multiplicity"] = p.part_mults[i];
            prov["parts"].push_back(std::move(part));
        }
        out["provenance"][std::to_string(n)] = std::move(prov);
    }
    return out;
}

HValueSets hsets_from_json(const ordered_json& j) {
    HValueSets h;
    h.ambient = j.at("ambient").get<uint32_t>();
    for (uint32_t n = 1; n <= 5; ++n) {
        const auto key = std::to_string(n);
        if (j.at("allowed").contains(key))
            h.allowed[n] = j.at("allowed").at(key).get<std::vector<uint64_t>>();
        if (j.at("provenance").contains(key)) {
            for (const auto& part : j.at("provenance").at(key).at("parts")) {
                h.provenance[n].part_names.push_back(part.at("name").get<std::string>());
                h.provenance[n].part_degrees.push_back(part.at("degree").get<uint64_t>());
                h.provenance[n].part_mults.push_back(part.at("multiplicity").get<uint64_t>());
            }
        }
    }
    return h;
}

}  // namespace

std::string certificate_to_json(const ExceptionalityCertificate& cert) {
    ordered_json root;
    root["schema"] = cert.schema;
    root["group"] = cert.group;
    root["ambient"] = cert.ambient;
    root["group_order"] = cert.group_order;
    root["centre_order"] = cert.centre_order;
    root["is_simple_modulo_center"] = cert.is_simple_modulo_center;
    root["distinguished_degree"] = cert.distinguished_degree;
    root["verdict"] = verdict_name(cert.verdict);
    if (cert.witness_degree) root["witness_degree"] = *cert.witness_degree;
    root["semiinvariants"] = ordered_json::object();
    root["semiinvariants"]["max_degree"] = cert.semiinvariants.max_degree;
    root["semiinvariants"]["min_invariant"] =
        cert.semiinvariants.min_invariant ? ordered_json(*cert.semiinvariants.min_invariant) : ordered_json();
    root["semiinvariants"]["min_semiinvariant"] = cert.semiinvariants.min_semiinvariant
                                                      ? ordered_json(*cert.semiinvariants.min_semiinvariant)
                                                      : ordered_json();
    root["h_sets"] = hsets_to_json(cert.h_sets);
    root["cases"] = ordered_json::array();
    for (const auto& rec : cert.cases) {
        ordered_json jr;
        jr["case"] = rec.case_id;
        jr["mode"] = rec.mode == CaseMode::AllPass ? "all-pass" : "eliminate-all";
        jr["closed"] = rec.closed;
        jr["reason"] = rec.reason;
        jr["candidates"] = ordered_json::array();
        for (const auto& cand : rec.candidates) {
            ordered_json jc;
            jc["label"] = cand.label;
            jc["eliminated"] = cand.eliminated;
            jc["trail"] = ordered_json::array();
            for (const auto& e : cand.trail) {
                ordered_json je;
                je["check"] = e.check;
                je["inputs"] = ordered_json::object();
                for (const auto& [k, v] : e.inputs) je["inputs"][k] = v;
                je["computed"] = e.computed;
                je["verdict"] = e.verdict;
                jc["trail"].push_back(std::move(je));
            }
            jr["candidates"].push_back(std::move(jc));
        }
        root["cases"].push_back(std::move(jr));
    }
    root["notes"] = cert.notes;
    return root.dump(2) + "\n";
}

ExceptionalityCertificate certificate_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    ExceptionalityCertificate cert;
    cert.schema = j.at("schema").get<int>();
    cert.group = j.at("group").get<std::string>();
    cert.ambient = j.at("ambient").get<uint32_t>();
    cert.group_order = j.at("group_order").get<unsigned long long>();
    cert.centre_order = j.at("centre_order").get<uint64_t>();
    cert.is_simple_modulo_center = j.at("is_simple_modulo_center").get<bool>();
    cert.distinguished_degree = j.at("distinguished_degree").get<uint64_t>();
    std::string v = j.at("verdict").get<std::string>();
    cert.verdict = v == "criterion-verified" ? Verdict::CriterionVerified
                   : v == "not-exceptional"  ? Verdict::NotExceptional
                                             : Verdict::Inconclusive;
    if (j.contains("witness_degree")) cert.witness_degree = j["witness_degree"].get<uint32_t>();
    const auto& js = j.at("semiinvariants");
    cert.semiinvariants.max_degree = js.at("max_degree").get<uint32_t>();
    if (!js.at("min_invariant").is_null())
        cert.semiinvariants.min_invariant = js.at("min_invariant").get<uint32_t>();
    if (!js.at("min_semiinvariant").is_null())
        cert.semiinvariants.min_semiinvariant = js.at("min_semiinvariant").get<uint32_t>();
    cert.h_sets = hsets_from_json(j.at("h_sets"));
    for (const auto& jr : j.at("cases")) {
        CaseRecord rec;
        rec.case_id = jr.at("case").get<std::string>();
        rec.mode = jr.at("mode").get<std::string>() == "all-pass" ? CaseMode::AllPass : CaseMode::EliminateAll;
        rec.closed = jr.at("closed").get<bool>();
        rec.reason = jr.at("reason").get<std::string>();
        for (const auto& jc : jr.at("candidates")) {
            Candidate cand;
            cand.label = jc.at("label").get<std::string>();
            cand.eliminated = jc.at("eliminated").get<bool>();
            for (const auto& je : jc.at("trail")) {
                TrailEntry e;
                e.check = je.at("check").get<std::string>();
                for (auto it = je.at("inputs").begin(); it != je.at("inputs").end(); ++it)
                    e.inputs.emplace_back(it.key(), it.value().get<std::string>());
                e.computed = je.at("computed").get<std::string>();
                e.verdict = je.at("verdict").get<bool>();
                cand.trail.push_back(std::move(e));
            }
            rec.candidates.push_back(std::move(cand));
        }
        cert.cases.push_back(std::move(rec));
    }
    if (j.contains("notes")) cert.notes = j["notes"].get<std::vector<std::string>>();
    return cert;
}

}  // namespace ec
