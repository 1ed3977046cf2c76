// exceptcheck: command-line front end for the exceptionality toolkit.
//
// Subcommands: validate, sympow, molien, check-exceptional, closure,
// group-molien, report-all. All reports are UTF-8 JSON on stdout with a
// "schema": 1 field; diagnostics go to stderr. Exit codes: 0 success,
// 1 usage, 2 I/O, 3 validation failure; check-exceptional additionally
// uses 0 = criterion-verified, 10 = not-exceptional, 20 = inconclusive.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "exceptcheck/engine.hpp"
#include "exceptcheck/matgroup.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace ec;

namespace {

constexpr const char* kDataEnv = "EXCEPTCHECK_DATA";

std::string resolve_data_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv(kDataEnv)) return env;
    return "data";
}

void write_report(const ordered_json& j, const std::string& json_path) {
    std::string text = j.dump(2) + "\n";
    std::cout << text;
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot write " + json_path);
        out << text;
    }
}

ordered_json validation_to_json(const CharacterTable& t, const ValidationReport& rep,
                                const std::string& file) {
    ordered_json j;
    j["schema"] = 1;
    j["file"] = file;
    j["group"] = t.group_name;
    j["ok"] = rep.ok();
    j["violations"] = ordered_json::array();
    for (const auto& v : rep.violations) {
        ordered_json jv;
        jv["check"] = v.check;
        jv["where"] = v.where;
        jv["detail"] = v.detail;
        j["violations"].push_back(std::move(jv));
    }
    return j;
}

int cmd_validate(const std::string& file, const std::string& json_path) {
    CharacterTable t = load_table(file);
    ValidationReport rep = validate(t);
    write_report(validation_to_json(t, rep, file), json_path);
    return rep.ok() ? 0 : 3;
}

int cmd_sympow(const std::string& file, uint32_t n, const std::string& json_path) {
    CharacterTable t = load_table(file);
    ClassFunction chi = distinguished_class_function(t);
    ClassFunction sym = sym_power_character(chi, n);
    Decomposition d = decompose(sym);
    ordered_json j;
    j["schema"] = 1;
    j["group"] = t.group_name;
    j["representation"] = t.distinguished_rep;
    j["n"] = n;
    j["identity_value"] = sym.values[0].to_string();
    j["decomposition"] = ordered_json::array();
    for (const auto& p : d.parts) {
        ordered_json jp;
        jp["name"] = t.irreducibles[p.irreducible].name;
        jp["degree"] = t.irreducibles[p.irreducible].degree;
        jp["multiplicity"] = p.multiplicity;
        j["decomposition"].push_back(std::move(jp));
    }
    j["achievable_subdims"] = achievable_subdims(t, d);
    write_report(j, json_path);
    return 0;
}

int cmd_molien(const std::string& file, uint32_t max_degree, const std::string& json_path) {
    CharacterTable t = load_table(file);
    auto rows = molien_multiplicities(t, max_degree);
    ordered_json j;
    j["schema"] = 1;
    j["group"] = t.group_name;
    j["representation"] = t.distinguished_rep;
    j["max_degree"] = max_degree;
    j["rows"] = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json jr;
        jr["degree"] = r.degree;
        jr["invariants"] = r.invariants;
        jr["semiinvariants"] = ordered_json::object();
        for (const auto& [name, mult] : r.semiinvariants) jr["semiinvariants"][name] = mult;
        j["rows"].push_back(std::move(jr));
    }
    auto inv = min_invariant_degree(t, max_degree);
    auto semi = min_semiinvariant_degree(t, max_degree);
    j["min_invariant_degree"] = inv ? ordered_json(*inv) : ordered_json();
    j["min_semiinvariant_degree"] = semi ? ordered_json(*semi) : ordered_json();
    write_report(j, json_path);
    return 0;
}

int cmd_check(const std::string& file, const std::string& json_path) {
    CharacterTable t = load_table(file);
    ExceptionalityCertificate cert = check_exceptionality(t);
    std::string text = certificate_to_json(cert);
    std::cout << text;
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot write " + json_path);
        out << text;
    }
    switch (cert.verdict) {
        case Verdict::CriterionVerified: return 0;
        case Verdict::NotExceptional: return 10;
        case Verdict::Inconclusive: return 20;
    }
    return 20;
}

int cmd_closure(const std::string& file, uint64_t max_order, const std::string& json_path) {
    GeneratorFile gf = load_generators(file);
    MatrixGroup grp = MatrixGroup::closure(gf.generators, max_order);
    ordered_json j;
    j["schema"] = 1;
    j["file"] = file;
    j["dimension"] = grp.dimension();
    j["generators"] = gf.generators.size();
    j["order"] = grp.order();
    write_report(j, json_path);
    return 0;
}

int cmd_group_molien(const std::string& file, uint32_t n, uint64_t max_order,
                     const std::string& json_path) {
    GeneratorFile gf = load_generators(file);
    MatrixGroup grp = MatrixGroup::closure(gf.generators, max_order);
    auto coeffs = grp.molien_coefficients(n);
    ordered_json j;
    j["schema"] = 1;
    j["file"] = file;
    j["dimension"] = grp.dimension();
    j["order"] = grp.order();
    j["coefficients"] = coeffs;
    write_report(j, json_path);
    return 0;
}

int cmd_report_all(const std::string& data_flag, const std::string& json_path) {
    std::string dir = resolve_data_dir(data_flag);
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        std::cerr << "no table files in " << dir << "\n";
        return 2;
    }

    ordered_json j;
    j["schema"] = 1;
    j["data_dir"] = dir;
    j["reports"] = ordered_json::array();
    std::vector<std::string> verified, not_exceptional, inconclusive, skipped;
    for (const auto& file : files) {
        CharacterTable t = load_table(file);
        uint64_t deg = 0;
        int idx = t.irreducible_index(t.distinguished_rep);
        if (idx >= 0) deg = t.irreducibles[static_cast<size_t>(idx)].degree;
        ordered_json row;
        row["file"] = fs::path(file).filename().string();
        row["group"] = t.group_name;
        row["degree"] = deg;
        if (deg != 6 && deg != 7) {
            row["verdict"] = "skipped";
            row["why"] = "distinguished degree outside the study range";
            skipped.push_back(t.group_name);
            j["reports"].push_back(std::move(row));
            continue;
        }
        ExceptionalityCertificate cert = check_exceptionality(t);
        row["verdict"] = verdict_name(cert.verdict);
        if (cert.witness_degree) row["witness_degree"] = *cert.witness_degree;
        switch (cert.verdict) {
            case Verdict::CriterionVerified: verified.push_back(t.group_name); break;
            case Verdict::NotExceptional: not_exceptional.push_back(t.group_name); break;
            case Verdict::Inconclusive: inconclusive.push_back(t.group_name); break;
        }
        j["reports"].push_back(std::move(row));
    }
    j["summary"]["criterion_verified"] = verified;
    j["summary"]["not_exceptional"] = not_exceptional;
    j["summary"]["inconclusive"] = inconclusive;
    j["summary"]["skipped"] = skipped;
    write_report(j, json_path);
    return inconclusive.empty() ? 0 : 20;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic verification toolkit for exceptional quotient singularities"};
    app.require_subcommand(1);

    std::string file, json_path, data_dir;
    uint32_t n = 1;
    uint32_t max_degree = kDefaultMaxSymDegree;
    uint64_t max_order = 2000000;

    auto* v = app.add_subcommand("validate", "validate a character table file");
    v->add_option("file", file)->required();
    v->add_option("--json", json_path, "also write the report to this path");

    auto* sp = app.add_subcommand("sympow", "decompose a symmetric power of the distinguished rep");
    sp->add_option("file", file)->required();
    sp->add_option("--n", n, "symmetric power degree")->required();
    sp->add_option("--json", json_path);

    auto* mo = app.add_subcommand("molien", "per-degree invariant and semi-invariant multiplicities");
    mo->add_option("file", file)->required();
    mo->add_option("--max", max_degree, "maximum degree (default 12)");
    mo->add_option("--json", json_path);

    auto* ce = app.add_subcommand("check-exceptional", "run the exceptionality verification engine");
    ce->add_option("file", file)->required();
    ce->add_option("--json", json_path, "also write the certificate to this path");

    auto* cl = app.add_subcommand("closure", "enumerate a matrix group from a generator file");
    cl->add_option("file", file)->required();
    cl->add_option("--max-order", max_order, "abort beyond this many elements");
    cl->add_option("--json", json_path);

    auto* gm = app.add_subcommand("group-molien", "Molien coefficients by direct summation");
    gm->add_option("file", file)->required();
    gm->add_option("--n", n, "maximum degree")->required();
    gm->add_option("--max-order", max_order);
    gm->add_option("--json", json_path);

    auto* ra = app.add_subcommand("report-all", "run the engine across every bundled table");
    ra->add_option("--data-dir", data_dir, "table directory (default: $EXCEPTCHECK_DATA or ./data)");
    ra->add_option("--json", json_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (v->parsed()) return cmd_validate(file, json_path);
        if (sp->parsed()) return cmd_sympow(file, n, json_path);
        if (mo->parsed()) return cmd_molien(file, max_degree, json_path);
        if (ce->parsed()) return cmd_check(file, json_path);
        if (cl->parsed()) return cmd_closure(file, max_order, json_path);
        if (gm->parsed()) return cmd_group_molien(file, n, max_order, json_path);
        if (ra->parsed()) return cmd_report_all(data_dir, json_path);
    } catch (const TableFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
