#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gradix/field.hpp"
#include "gradix/parse.hpp"

using namespace gradix;

namespace {

// Independent inverse oracle: plain extended Euclid on int64, kept free of
// the FieldElement implementation.
std::int64_t euclid_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t old_r = p, r = a, old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    REQUIRE(old_r == 1);  // gcd must be 1 in a prime field
    return ((old_t % p) + p) % p;
}

FieldElement qq(long num, long den = 1) {
    return FieldElement::fraction(Field::rationals(), num, den);
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
    CHECK(qq(1, 2) + qq(1, 3) == qq(5, 6));
    CHECK(qq(2, 3).invert() == qq(3, 2));
    CHECK((qq(7, 3) + (-qq(7, 3))).is_zero());
    CHECK(qq(2, 4) == qq(1, 2));  // lowest terms at construction
    CHECK(qq(-1, -2) == qq(1, 2));
    CHECK(qq(1, -2) == qq(-1, 2));  // positive denominator
}

TEST_CASE("prime field arithmetic") {
    Field f7 = Field::prime(7);
    auto g = [&](long v) { return FieldElement::from_integer(f7, v); };
    CHECK(g(5) * g(3) == g(1));
    CHECK(g(3).invert() == g(5));
    CHECK((g(4) + g(3)).is_zero());
    CHECK(g(-1) == g(6));  // residues normalized into [0, p)
}

TEST_CASE("GF(32003) inversion matches the extended-Euclid oracle") {
    Field f = Field::prime(32003);
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        std::int64_t a = 1 + static_cast<std::int64_t>(rng() % 32002);
        FieldElement x = FieldElement::from_integer(f, a);
        FieldElement y = x.invert();
        CHECK(y.residue_value() == euclid_inverse(a, 32003));
        CHECK((x * y).is_one());
    }
}

TEST_CASE("field axioms hold on random triples") {
    std::mt19937_64 rng(20260810);
    auto random_qq = [&]() {
        long num = static_cast<long>(rng() % 41) - 20;
        long den = 1 + static_cast<long>(rng() % 20);
        return qq(num, den);
    };
    Field fp = Field::prime(32003);
    auto random_fp = [&]() { return FieldElement::from_integer(fp, static_cast<long>(rng() % 32003)); };

    for (int i = 0; i < 300; ++i) {
        for (int which = 0; which < 2; ++which) {
            FieldElement a = which ? random_fp() : random_qq();
            FieldElement b = which ? random_fp() : random_qq();
            FieldElement c = which ? random_fp() : random_qq();
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + (-a)).is_zero());
            if (!a.is_zero()) CHECK((a * a.invert()).is_one());
        }
    }
}

TEST_CASE("errorcases") {
    CHECK_THROWS_AS(qq(1, 1) + FieldElement::from_integer(Field::prime(7), 1), usage_error);
    CHECK_THROWS_AS(qq(0).invert(), division_by_zero);
    CHECK_THROWS_AS(FieldElement::zero(Field::prime(32003)).invert(), division_by_zero);
    CHECK_THROWS_AS(Field::prime(4), usage_error);
    CHECK_THROWS_AS(Field::prime(1), usage_error);
    CHECK_THROWS_AS(qq(1, 0), division_by_zero);
}

TEST_CASE("text round-trip through the polynomial parser") {
    Ring ring = parse_ring("QQ[x]");
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        long num = static_cast<long>(rng() % 101) - 50;
        long den = 1 + static_cast<long>(rng() % 30);
        FieldElement a = qq(num, den);
        Polynomial p = parse_polynomial(a.to_string(), ring);
        CHECK(p.equals(Polynomial::constant(ring, MonomialOrder::grevlex(), a)));
    }
    Ring gring = parse_ring("GF(32003)[x]");
    for (int i = 0; i < 100; ++i) {
        FieldElement a = FieldElement::from_integer(Field::prime(32003),
                                                    static_cast<long>(rng() % 32003));
        Polynomial p = parse_polynomial(a.to_string(), gring);
        CHECK(p.equals(Polynomial::constant(gring, MonomialOrder::grevlex(), a)));
    }
}
