#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exceptcheck/matgroup.hpp"

using namespace ec;

namespace {

CyclotomicNumber lit(const char* s) { return CyclotomicNumber::parse(s); }

ExactMatrix mat2(const char* a, const char* b, const char* c, const char* d) {
    return ExactMatrix(2, {lit(a), lit(b), lit(c), lit(d)});
}

// diag(1, z7, z7^2, ..., z7^6) and the cyclic shift: the Heisenberg pair
std::vector<ExactMatrix> heisenberg7() {
    std::vector<CyclotomicNumber> dm(49), pm(49);
    for (uint32_t i = 0; i < 7; ++i) {
        dm[i * 7 + i] = CyclotomicNumber::root_of_unity(7, i);
        pm[((i + 1) % 7) * 7 + i] = CyclotomicNumber(1);
    }
    return {ExactMatrix(7, std::move(dm)), ExactMatrix(7, std::move(pm))};
}

// binary icosahedral group from two unit icosians, mapped into SL2:
//   q1 = (1 + i + j + k)/2          (order 6)
//   s  = (tau - g i + j)/2           with g = z5 + z5^4, tau = 1 + g (order 10)
std::vector<ExactMatrix> binary_icosahedral() {
    ExactMatrix q1 = mat2("(1 + z4)/2", "(1 + z4)/2", "(-1 + z4)/2", "(1 - z4)/2");
    ExactMatrix s = mat2("(1 + z5 + z5^4)/2 - (z5 + z5^4)/2*z4", "1/2",
                         "-1/2", "(1 + z5 + z5^4)/2 + (z5 + z5^4)/2*z4");
    return {q1, s};
}

}  // namespace

TEST_CASE("cyclic group closure") {
    ExactMatrix g = mat2("z5", "0", "0", "z5^4");
    MatrixGroup grp = MatrixGroup::closure({g}, 100);
    CHECK(grp.order() == 5);
    CHECK(grp.element(0) == ExactMatrix::identity(2));
    CHECK(grp.contains(g * g));
    // closed under sampled products
    for (size_t i = 0; i < grp.order(); ++i)
        for (size_t j = 0; j < grp.order(); ++j)
            CHECK(grp.contains(grp.element(i) * grp.element(j)));
}

TEST_CASE("order exceeded") {
    ExactMatrix g = mat2("z5", "0", "0", "z5^4");
    CHECK_THROWS_AS(MatrixGroup::closure({g}, 3), OrderExceededError);
}

TEST_CASE("singular generator rejected") {
    ExactMatrix g = mat2("1", "0", "0", "0");
    CHECK_THROWS_AS(MatrixGroup::closure({g}, 10), std::domain_error);
}

TEST_CASE("cyclic molien coefficients") {
    // (x, y) -> (z5 x, z5^-1 y): invariants are monomials x^a y^b, a = b mod 5
    ExactMatrix g = mat2("z5", "0", "0", "z5^4");
    MatrixGroup grp = MatrixGroup::closure({g}, 100);
    auto c = grp.molien_coefficients(6);
    CHECK(c[0] == 1);
    CHECK(c[1] == 0);
    CHECK(c[2] == 1);  // xy
    CHECK(c[3] == 0);
    CHECK(c[4] == 1);  // x^2 y^2
    CHECK(c[5] == 2);  // x^5 and y^5
}

TEST_CASE("cyclic trace classes") {
    ExactMatrix g = mat2("z3", "0", "0", "z3^2");
    MatrixGroup grp = MatrixGroup::closure({g}, 100);
    auto classes = grp.trace_classes();
    REQUIRE(classes.size() == 3);
    std::multiset<std::string> traces;
    for (const auto& c : classes) {
        CHECK(c.size == 1);
        traces.insert(c.trace.to_string());
    }
    CHECK(traces == std::multiset<std::string>{"2", "-1", "-1"});
}

TEST_CASE("Heisenberg group of order 343") {
    MatrixGroup grp = MatrixGroup::closure(heisenberg7(), 1000);
    CHECK(grp.order() == 343);
    auto classes = grp.trace_classes();
    // 7 central classes (traces 7 zeta^k) and 48 classes of size 7 (trace 0)
    CHECK(classes.size() == 55);
    size_t central = 0, zero_trace = 0;
    for (const auto& c : classes) {
        if (c.size == 1) {
            ++central;
            bool is7zk = false;
            for (uint32_t k = 0; k < 7; ++k)
                if (c.trace == Rational(7) * CyclotomicNumber::root_of_unity(7, k)) is7zk = true;
            CHECK(is7zk);
        } else {
            CHECK(c.size == 7);
            CHECK(c.trace.is_zero());
            ++zero_trace;
        }
    }
    CHECK(central == 7);
    CHECK(zero_trace == 48);
}

TEST_CASE("binary icosahedral group") {
    MatrixGroup grp = MatrixGroup::closure(binary_icosahedral(), 500);
    CHECK(grp.order() == 120);

    // -I is the unique central involution
    std::vector<CyclotomicNumber> mi = {lit("-1"), lit("0"), lit("0"), lit("-1")};
    CHECK(grp.contains(ExactMatrix(2, mi)));

    // golden-ratio trace appears
    auto classes = grp.trace_classes();
    CHECK(classes.size() == 9);
    bool golden = false;
    for (const auto& c : classes)
        if (c.trace == lit("1 + z5 + z5^4")) golden = true;
    CHECK(golden);

    // first invariant of the icosahedral action sits in degree 12
    auto m = grp.molien_coefficients(12);
    CHECK(m[0] == 1);
    for (uint32_t n = 1; n <= 11; ++n) CHECK(m[n] == 0);
    CHECK(m[12] == 1);
}

TEST_CASE("generator file round trip") {
    GeneratorFile gf;
    gf.dimension = 2;
    gf.conductor_hint = 20;
    gf.generators = binary_icosahedral();
    GeneratorFile gf2 = parse_generators(generators_to_json(gf), "roundtrip");
    CHECK(gf2.dimension == 2);
    CHECK(gf2.generators.size() == 2);
    for (size_t i = 0; i < 2; ++i) CHECK(gf2.generators[i] == gf.generators[i]);
}

TEST_CASE("matrix inverse and determinant") {
    ExactMatrix s = binary_icosahedral()[1];
    CHECK(s.determinant() == CyclotomicNumber(1));
    CHECK(s * s.inverse() == ExactMatrix::identity(2));
    ExactMatrix h = heisenberg7()[1];
    CHECK(h * h.inverse() == ExactMatrix::identity(7));
}
