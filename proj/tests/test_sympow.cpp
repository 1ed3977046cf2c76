#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exceptcheck/sympow.hpp"
#include "test_tables.hpp"

using namespace ec;

namespace {

std::vector<uint64_t> degrees_of(const CharacterTable& t, const Decomposition& d) {
    return d.degree_multiset(t);
}

}  // namespace

TEST_CASE("sym power degree bookkeeping") {
    for (auto make : {testdata::s3, testdata::q8}) {
        CharacterTable t = make();
        ClassFunction chi = distinguished_class_function(t);
        uint64_t dim = t.distinguished().degree;
        auto sym = sym_power_characters(chi, 12);
        for (uint32_t n = 0; n <= 12; ++n) {
            CHECK(sym[n].values[0] == CyclotomicNumber(Rational(binomial(dim + n - 1, n))));
        }
    }
}

TEST_CASE("sym power base cases") {
    CharacterTable t = testdata::s3();
    ClassFunction chi = distinguished_class_function(t);
    ClassFunction s0 = sym_power_character(chi, 0);
    for (const auto& v : s0.values) CHECK(v == CyclotomicNumber(1));
    ClassFunction s1 = sym_power_character(chi, 1);
    CHECK(s1.values == chi.values);
}

TEST_CASE("sym squared of S3 standard rep") {
    CharacterTable t = testdata::s3();
    ClassFunction chi = distinguished_class_function(t);
    ClassFunction s2 = sym_power_character(chi, 2);
    CHECK(s2.values[0] == CyclotomicNumber(3));
    CHECK(s2.values[1] == CyclotomicNumber(1));
    CHECK(s2.values[2] == CyclotomicNumber(0));
    Decomposition d = decompose(s2);
    CHECK(degrees_of(t, d) == std::vector<uint64_t>{1, 2});
}

TEST_CASE("decompose rejects non-characters") {
    CharacterTable t = testdata::s3();
    ClassFunction f = distinguished_class_function(t);
    f.values[1] += CyclotomicNumber(Rational(1, 2));
    CHECK_THROWS_AS(decompose(f), NotACharacterError);

    // negative multiplicity: -std
    ClassFunction g = distinguished_class_function(t);
    for (auto& v : g.values) v = -v;
    CHECK_THROWS_AS(decompose(g), NotACharacterError);
}

TEST_CASE("decompose reconstructs exactly") {
    CharacterTable t = testdata::q8();
    // f = 2*a + X2 + 3*triv
    ClassFunction f;
    f.table = &t;
    f.values.resize(t.class_count());
    for (size_t c = 0; c < t.class_count(); ++c)
        f.values[c] = Rational(2) * t.irreducibles[1].values[c] + t.irreducibles[4].values[c] +
                      Rational(3) * t.irreducibles[0].values[c];
    Decomposition d = decompose(f);
    uint64_t total = 0;
    for (const auto& p : d.parts) total += p.multiplicity * t.irreducibles[p.irreducible].degree;
    CHECK(total == 2 + 2 + 3);
    CHECK(d.parts.size() == 3);
}

TEST_CASE("achievable subdims") {
    CharacterTable t = testdata::q8();

    // single irreducible of degree d -> {0, d}
    Decomposition irr;
    irr.parts = {{4, 1}};
    CHECK(achievable_subdims(t, irr) == std::vector<uint64_t>{0, 2});

    // parts {1:1, 2:1} -> {0, 1, 2, 3}
    Decomposition two;
    two.parts = {{0, 1}, {4, 1}};
    CHECK(achievable_subdims(t, two) == std::vector<uint64_t>{0, 1, 2, 3});

    // multiplicities: 2 copies of degree 2 and one lin -> {0,1,2,3,4,5}
    Decomposition multi;
    multi.parts = {{0, 1}, {4, 2}};
    CHECK(achievable_subdims(t, multi) == std::vector<uint64_t>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("achievable subdims complement symmetry") {
    std::mt19937 rng(7);
    CharacterTable t = testdata::q8();
    for (int trial = 0; trial < 50; ++trial) {
        Decomposition d;
        uint64_t total = 0;
        for (size_t i = 0; i < t.irreducibles.size(); ++i) {
            uint64_t m = rng() % 3;
            if (m) {
                d.parts.push_back({i, m});
                total += m * t.irreducibles[i].degree;
            }
        }
        auto qs = achievable_subdims(t, d);
        for (uint64_t q : qs) {
            CHECK(std::binary_search(qs.begin(), qs.end(), total - q));
        }
    }
}

TEST_CASE("allowed h values in ambient dimension 1") {
    // distinguished rep of Q8 has degree 2 = ambient 1 + 1; Sym^n is
    // irreducible iff n odd? regardless, h values must lie in [1, n+1]
    CharacterTable t = testdata::q8();
    for (uint32_t n = 1; n <= 6; ++n) {
        auto hs = allowed_h_values(t, n, 1);
        REQUIRE(!hs.empty());
        auto full = binomial(1 + n, n).to_i64();
        CHECK(hs.back() == static_cast<uint64_t>(*full));
        for (uint64_t h : hs) {
            CHECK(h >= 1);
            CHECK(h <= static_cast<uint64_t>(*full));
        }
    }
    CHECK_THROWS(allowed_h_values(t, 2, 5));  // degree mismatch
}

TEST_CASE("decompose of sym powers stays a character") {
    CharacterTable t = testdata::q8();
    ClassFunction chi = distinguished_class_function(t);
    auto sym = sym_power_characters(chi, 8);
    for (uint32_t n = 0; n <= 8; ++n) {
        Decomposition d = decompose(sym[n]);
        uint64_t total = 0;
        for (const auto& p : d.parts) total += p.multiplicity * t.irreducibles[p.irreducible].degree;
        CHECK(BigInt(total) == binomial(2 + n - 1, n));
    }
}
