#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exceptcheck/chartable.hpp"
#include "test_tables.hpp"

using namespace ec;

TEST_CASE("handmade tables validate cleanly") {
    for (auto make : {testdata::c3, testdata::s3, testdata::q8}) {
        CharacterTable t = make();
        ValidationReport rep = validate(t);
        for (const auto& v : rep.violations)
            MESSAGE(t.group_name, ": ", v.check, " at ", v.where, ": ", v.detail);
        CHECK(rep.ok());
    }
}

TEST_CASE("json round trip") {
    CharacterTable t = testdata::q8();
    CharacterTable t2 = parse_table(table_to_json(t), "roundtrip");
    CHECK(t2.group_name == t.group_name);
    CHECK(t2.order == t.order);
    CHECK(t2.classes.size() == t.classes.size());
    CHECK(t2.irreducibles.size() == t.irreducibles.size());
    for (size_t i = 0; i < t.irreducibles.size(); ++i)
        CHECK(t2.irreducibles[i].values == t.irreducibles[i].values);
    CHECK(table_to_json(t2) == table_to_json(t));
}

TEST_CASE("malformed literal is a load error") {
    std::string text = testdata::kS3;
    auto pos = text.find("\"-1\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 4, "\"z0^2\"");
    CHECK_THROWS_AS(parse_table(text, "bad"), TableFormatError);
}

TEST_CASE("missing field is a load error") {
    CHECK_THROWS_AS(parse_table("{}", "empty"), TableFormatError);
    CHECK_THROWS_AS(parse_table("[1,2]", "arr"), TableFormatError);
    CHECK_THROWS_AS(parse_table("not json", "txt"), TableFormatError);
}

TEST_CASE("perturbed class size breaks validation") {
    CharacterTable t = testdata::s3();
    t.classes[1].size += 1;
    ValidationReport rep = validate(t);
    CHECK(!rep.ok());
    bool found = false;
    for (const auto& v : rep.violations)
        if (v.check == "class-size-sum") found = true;
    CHECK(found);
}

TEST_CASE("duplicated irreducible breaks orthogonality") {
    CharacterTable t = testdata::s3();
    t.irreducibles[2] = t.irreducibles[1];  // two copies of sgn
    ValidationReport rep = validate(t);
    bool ortho = false;
    for (const auto& v : rep.violations)
        if (v.check == "row-orthogonality") ortho = true;
    CHECK(ortho);
}

TEST_CASE("any single perturbed character value breaks validation") {
    for (auto make : {testdata::c3, testdata::s3, testdata::q8}) {
        for (size_t i = 0; i < make().irreducibles.size(); ++i) {
            for (size_t c = 0; c < make().classes.size(); ++c) {
                CharacterTable t = make();
                t.irreducibles[i].values[c] += CyclotomicNumber(1);
                CHECK(!validate(t).ok());
            }
        }
    }
}

TEST_CASE("power_class basics") {
    CharacterTable t = testdata::q8();
    for (uint32_t c = 0; c < t.classes.size(); ++c) {
        CHECK(power_class(t, c, 1) == c);
        CHECK(power_class(t, c, t.classes[c].element_order) == 0);
    }
    // i^2 = -1
    CHECK(power_class(t, 2, 2) == 1);
    // composition order independence for k = 6
    for (uint32_t c = 0; c < t.classes.size(); ++c) {
        uint32_t via23 = t.classes[t.classes[c].power_maps.at(2)].power_maps.at(3);
        uint32_t via32 = t.classes[t.classes[c].power_maps.at(3)].power_maps.at(2);
        CHECK(via23 == via32);
        CHECK(power_class(t, c, 6) == via23);
    }
}

TEST_CASE("power_class missing prime") {
    CharacterTable t = testdata::s3();
    t.classes[2].power_maps.erase(3);
    CHECK_THROWS_AS(power_class(t, 2, 3), MissingPowerMapError);
    CHECK_THROWS_AS(power_class(t, 2, 12), MissingPowerMapError);
    CHECK_NOTHROW(power_class(t, 2, 2));
}

TEST_CASE("inner product basics") {
    CharacterTable t = testdata::s3();
    // <trivial, trivial> = 1
    CHECK(inner_product(t, t.irreducibles[0].values, t.irreducibles[0].values) == Rational(1));
    // regular character decomposes with multiplicity = degree
    std::vector<CyclotomicNumber> reg(t.classes.size());
    reg[0] = CyclotomicNumber(static_cast<long long>(t.order));
    for (const auto& ch : t.irreducibles)
        CHECK(inner_product(t, reg, ch.values) == Rational(static_cast<long long>(ch.degree)));
}

TEST_CASE("bundled irreducibles are orthonormal (delta_ij)") {
    CharacterTable t = testdata::q8();
    for (size_t i = 0; i < t.irreducibles.size(); ++i)
        for (size_t j = 0; j < t.irreducibles.size(); ++j)
            CHECK(inner_product(t, t.irreducibles[i].values, t.irreducibles[j].values) ==
                  Rational(i == j ? 1 : 0));
}

TEST_CASE("centre order counts singleton classes") {
    CHECK(testdata::q8().centre_order() == 2);
    CHECK(testdata::s3().centre_order() == 1);
    CHECK(testdata::c3().centre_order() == 3);
}
