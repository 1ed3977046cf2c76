#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exceptcheck/cyclotomic.hpp"

using ec::BigInt;
using ec::CyclotomicNumber;
using ec::Rational;

namespace {

CyclotomicNumber lit(const char* s) { return CyclotomicNumber::parse(s); }

std::mt19937_64 rng(20240517);

BigInt random_bigint(int max_limbs) {
    std::uniform_int_distribution<int> limbs(1, max_limbs);
    std::uniform_int_distribution<uint64_t> word;
    int n = limbs(rng);
    BigInt v(0);
    for (int i = 0; i < n; ++i) v = v * BigInt(uint64_t(1) << 32) + BigInt(word(rng) & 0xffffffffu);
    if (word(rng) & 1) v = -v;
    return v;
}

CyclotomicNumber random_cyc(uint32_t conductor) {
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<int> expd(0, static_cast<int>(conductor) - 1);
    std::uniform_int_distribution<int> numd(-4, 4);
    std::uniform_int_distribution<int> dend(1, 3);
    std::vector<std::pair<uint64_t, Rational>> terms;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) terms.emplace_back(expd(rng), Rational(numd(rng), dend(rng)));
    return CyclotomicNumber::from_terms(conductor, terms);
}

}  // namespace

TEST_CASE("bigint arithmetic matches int64 reference") {
    std::uniform_int_distribution<long long> d(-1000000000LL, 1000000000LL);
    for (int i = 0; i < 2000; ++i) {
        long long a = d(rng), b = d(rng);
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
        CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
        if (b != 0) {
            CHECK(BigInt(a) / BigInt(b) == BigInt(a / b));
            CHECK(BigInt(a) % BigInt(b) == BigInt(a % b));
        }
    }
}

TEST_CASE("bigint divmod identity on large operands") {
    for (int i = 0; i < 500; ++i) {
        BigInt a = random_bigint(6), b = random_bigint(3);
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("bigint string roundtrip") {
    for (int i = 0; i < 200; ++i) {
        BigInt a = random_bigint(5);
        CHECK(BigInt(a.to_string()) == a);
    }
    CHECK(BigInt("0").to_string() == "0");
    CHECK(BigInt("-123456789012345678901234567890").to_string() == "-123456789012345678901234567890");
}

TEST_CASE("bigint gcd") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(-18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    for (int i = 0; i < 200; ++i) {
        BigInt a = random_bigint(3), b = random_bigint(3), g = BigInt::gcd(a, b);
        if (g.is_zero()) continue;
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
    }
}

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(3, 2).to_string() == "3/2");
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 3) * Rational(3, 5)) == Rational(1, 5));
    CHECK(Rational(7, 2).floor() == BigInt(3));
    CHECK(Rational(-7, 2).floor() == BigInt(-4));
    CHECK(Rational(7, 2).ceil() == BigInt(4));
    CHECK(Rational(-7, 2).ceil() == BigInt(-3));
}

TEST_CASE("vanishing sums of roots of unity") {
    CHECK(lit("1 + z3 + z3^2").is_zero());
    CHECK(lit("z7 * z7^6") == CyclotomicNumber(1));
    CyclotomicNumber sum;
    for (int k = 0; k < 5; ++k) sum += CyclotomicNumber::root_of_unity(5, k);
    CHECK(sum.is_zero());
}

TEST_CASE("golden ratio identity") {
    CyclotomicNumber g = lit("z5 + z5^4");
    CHECK((g * g + g - CyclotomicNumber(1)).is_zero());
}

TEST_CASE("conjugation") {
    CHECK(lit("z3").conjugate() == lit("z3^2"));
    CHECK(lit("5/3").conjugate() == lit("5/3"));
    CHECK(lit("2*z8 - z8^3").conjugate() == lit("2*z8^7 - z8^5"));
    for (uint32_t n : {5u, 8u, 12u}) {
        for (int i = 0; i < 50; ++i) {
            CyclotomicNumber v = random_cyc(n);
            CHECK(v.conjugate().conjugate() == v);
        }
    }
}

TEST_CASE("as_rational") {
    CHECK(lit("z6 + z6^5").as_rational() == Rational(1));
    CHECK(CyclotomicNumber().as_rational() == Rational(0));
    CHECK_THROWS_AS(lit("z4").as_rational(), ec::NotRationalError);
}

TEST_CASE("conductor minimization") {
    CHECK(CyclotomicNumber::root_of_unity(6).conductor() == 3);
    CHECK(CyclotomicNumber::root_of_unity(4, 2).conductor() == 1);  // zeta_4^2 = -1
    CHECK(lit("z4^2") == CyclotomicNumber(-1));
    CHECK(lit("z8^2").conductor() == 4);
    CHECK(lit("z12^3").conductor() == 4);
    CHECK(lit("z12^4").conductor() == 3);
    // sqrt5 = z5 - z5^2 - z5^3 + z5^4 has conductor 5
    CHECK(lit("z5 - z5^2 - z5^3 + z5^4").conductor() == 5);
}

TEST_CASE("field axioms on random values") {
    for (uint32_t n : {3u, 4u, 5u, 8u, 12u, 15u}) {
        for (int i = 0; i < 40; ++i) {
            CyclotomicNumber a = random_cyc(n), b = random_cyc(n), c = random_cyc(n);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
        }
    }
}

TEST_CASE("cross-conductor arithmetic canonicalizes") {
    // values built at different conductors but equal must compare equal
    CHECK(lit("z3") + lit("z4") == lit("z12^4") + lit("z12^3"));
    CHECK((lit("z8 - z8^3") * lit("z8 - z8^3")) == CyclotomicNumber(2));  // sqrt(2)^2
}

TEST_CASE("embedding roundtrip") {
    for (uint32_t m : {3u, 5u, 8u}) {
        for (int i = 0; i < 30; ++i) {
            CyclotomicNumber v = random_cyc(m);
            uint32_t big = m * 3 * (m % 2 == 0 ? 1 : 4);
            auto dense = v.dense_in(big);
            CHECK(CyclotomicNumber::from_reduced(big, dense) == v);
        }
    }
}

TEST_CASE("inverse and division") {
    CHECK(lit("z7").inverse() == lit("z7^6"));
    CyclotomicNumber v = lit("1 + z5");
    CHECK(v * v.inverse() == CyclotomicNumber(1));
    CHECK(lit("(1+z5)/(1+z5)") == CyclotomicNumber(1));
    for (uint32_t n : {5u, 8u}) {
        for (int i = 0; i < 20; ++i) {
            CyclotomicNumber a = random_cyc(n);
            if (a.is_zero()) continue;
            CHECK(a * a.inverse() == CyclotomicNumber(1));
        }
    }
}

TEST_CASE("galois automorphisms") {
    CHECK(lit("z5").galois(2) == lit("z5^2"));
    CHECK(lit("z5 + z5^4").galois(2) == lit("z5^2 + z5^3"));
    CHECK_THROWS(lit("z8").galois(2));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(lit("z0^2"), ec::ParseError);
    CHECK_THROWS_AS(lit("z"), ec::UnknownConductorError);
    CHECK_THROWS_AS(lit("1 +"), ec::ParseError);
    CHECK_THROWS_AS(lit("(1"), ec::ParseError);
    CHECK_THROWS_AS(lit("1/0"), ec::ParseError);
    CHECK_THROWS_AS(lit("q"), ec::ParseError);
}

TEST_CASE("print/parse roundtrip") {
    for (uint32_t n : {1u, 3u, 4u, 5u, 8u, 12u, 15u}) {
        for (int i = 0; i < 60; ++i) {
            CyclotomicNumber v = random_cyc(n);
            CHECK(CyclotomicNumber::parse(v.to_string()) == v);
        }
    }
    CHECK(lit("3*z7^2 - z7 + 1/2").to_string() == "3*z7^2 - z7 + 1/2");
}

TEST_CASE("hash equality contract") {
    for (uint32_t n : {5u, 12u}) {
        for (int i = 0; i < 50; ++i) {
            CyclotomicNumber a = random_cyc(n);
            CyclotomicNumber b = a + CyclotomicNumber(1) - CyclotomicNumber(1);
            CHECK(a == b);
            CHECK(a.hash() == b.hash());
        }
    }
}

TEST_CASE("accumulator matches naive summation") {
    for (int trial = 0; trial < 30; ++trial) {
        ec::CycSum sum;
        CyclotomicNumber naive;
        for (int i = 0; i < 8; ++i) {
            CyclotomicNumber a = random_cyc(12), b = random_cyc(8);
            Rational q(i - 3, 2);
            sum.add_product_conj(a, b, q);
            naive += q * a * b.conjugate();
            CyclotomicNumber c = random_cyc(5);
            sum.add_scaled(c, Rational(2, 3));
            naive += Rational(2, 3) * c;
        }
        CHECK(sum.value() == naive);
    }
}

TEST_CASE("powers") {
    CHECK(lit("z5").pow(5) == CyclotomicNumber(1));
    CHECK(lit("(z8 - z8^3)^2") == CyclotomicNumber(2));
    CHECK(lit("2^10") == CyclotomicNumber(1024));
}
