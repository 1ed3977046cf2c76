#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exceptcheck/molien.hpp"
#include "test_tables.hpp"

using namespace ec;

TEST_CASE("cyclic group linear rep") {
    CharacterTable t = testdata::c3();
    CHECK(min_invariant_degree(t, 12) == 3u);
    CHECK(min_semiinvariant_degree(t, 12) == 1u);
    CHECK(!has_degree2_invariant(t));
}

TEST_CASE("S3 standard rep: real, so a quadric invariant") {
    CharacterTable t = testdata::s3();
    CHECK(min_invariant_degree(t, 12) == 2u);
    CHECK(min_semiinvariant_degree(t, 12) == 2u);
    CHECK(has_degree2_invariant(t));
    // invariant dimensions of C[x,y]^{S3}: free on degrees 2 and 3
    auto rows = molien_multiplicities(t, 6);
    CHECK(rows[0].invariants == 0);
    CHECK(rows[1].invariants == 1);
    CHECK(rows[2].invariants == 1);
    CHECK(rows[3].invariants == 1);
    CHECK(rows[4].invariants == 1);
    CHECK(rows[5].invariants == 2);
    // the discriminant: sign semi-invariant first appears in degree 3
    CHECK(rows[0].semiinvariants.at("sgn") == 0);
    CHECK(rows[1].semiinvariants.at("sgn") == 0);
    CHECK(rows[2].semiinvariants.at("sgn") == 1);
}

TEST_CASE("Q8 symplectic rep: semi-invariants strictly earlier") {
    CharacterTable t = testdata::q8();
    CHECK(min_invariant_degree(t, 12) == 4u);
    CHECK(min_semiinvariant_degree(t, 12) == 2u);
    CHECK(!has_degree2_invariant(t));
    auto rows = molien_multiplicities(t, 4);
    CHECK(rows[1].invariants == 0);
    CHECK(rows[1].semiinvariants.at("a") == 1);
    CHECK(rows[1].semiinvariants.at("b") == 1);
    CHECK(rows[1].semiinvariants.at("c") == 1);
    CHECK(rows[3].invariants == 2);
}

TEST_CASE("semi-invariant degree never exceeds invariant degree") {
    for (auto make : {testdata::c3, testdata::s3, testdata::q8}) {
        CharacterTable t = make();
        auto inv = min_invariant_degree(t, 12);
        auto semi = min_semiinvariant_degree(t, 12);
        REQUIRE(inv.has_value());
        REQUIRE(semi.has_value());
        CHECK(*semi <= *inv);
    }
}

TEST_CASE("not found within max degree") {
    CharacterTable t = testdata::c3();
    CHECK(min_invariant_degree(t, 2) == std::nullopt);
}
