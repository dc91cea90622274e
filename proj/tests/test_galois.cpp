#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "coltrs/galois.hpp"

using namespace coltrs;

TEST_CASE("prime field basics") {
    auto F = Field::make(29, 1);
    CHECK(F->q() == 29);
    CHECK(F->primitive() == 2);
    CHECK(F->describe() == "GF(29)/0;1/2");

    for (gf a = 0; a < 29; ++a) {
        CHECK(F->add(a, F->neg(a)) == 0);
        CHECK(F->pow(a, 29) == a);
        if (a) CHECK(F->mul(a, F->inv(a)) == 1);
    }
    CHECK(F->sub(3, 10) == 22);
    CHECK_THROWS_AS(F->inv(0), std::domain_error);
    CHECK_THROWS_AS(F->div(5, 0), std::domain_error);
}

TEST_CASE("squares of GF(29) are the order-14 subgroup") {
    auto F = Field::make(29, 1);
    std::set<gf> squares;
    for (gf a = 1; a < 29; ++a) squares.insert(F->mul(a, a));
    std::set<gf> expect{1, 4, 5, 6, 7, 9, 13, 16, 20, 22, 23, 24, 25, 28};
    CHECK(squares == expect);

    Subgroup H = subgroup(F, 14);
    std::set<gf> elems(H.elements.begin(), H.elements.end());
    CHECK(elems == expect);
    CHECK(H.generator == F->mul(2, 2));
    CHECK(in_subgroup(F, 4, H));
    CHECK(!in_subgroup(F, 2, H));
    CHECK_THROWS_AS(in_subgroup(F, 0, H), std::domain_error);
    CHECK_THROWS_AS(subgroup(F, 5), std::invalid_argument);
}

TEST_CASE("canonical extension fields") {
    auto F27 = Field::make(3, 3);
    CHECK(F27->modulus() == std::vector<std::uint32_t>{1, 2, 0, 1});
    CHECK(F27->primitive() == 3);  // x
    CHECK(F27->describe() == "GF(3^3)/1;2;0;1/0;1;0");

    auto F64 = Field::make(2, 6);
    CHECK(F64->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 0, 0, 1});
    CHECK(F64->primitive() == 2);

    // an alternative modulus for the same field, x still primitive
    auto F64b = Field::make(2, 6, {1, 1, 0, 1, 1, 0, 1});
    CHECK(F64b->element_order(2) == 63);
    CHECK(*F64 != *F64b);
}

TEST_CASE("extension arithmetic identities") {
    for (auto F : {Field::make(3, 3), Field::make(2, 4), Field::make(5, 2)}) {
        const std::uint32_t q = F->q();
        for (gf a = 0; a < q; ++a) {
            CHECK(F->add(a, F->neg(a)) == 0);
            CHECK(F->pow(a, q) == a);
            if (a) {
                CHECK(F->mul(a, F->inv(a)) == 1);
                CHECK(F->pow(a, q - 1) == 1);
            }
        }
        // distributivity spot checks across the whole field
        for (gf a = 0; a < q; ++a)
            for (gf b = 0; b < q; ++b)
                CHECK(F->mul(a, F->add(b, 1)) == F->add(F->mul(a, b), F->mul(a, 1)));
    }
}

TEST_CASE("element order and discrete log") {
    auto F = Field::make(29, 1);
    CHECK(F->element_order(2) == 28);
    CHECK(F->element_order(F->w_pow(2)) == 14);
    CHECK(F->element_order(1) == 1);
    CHECK(F->element_order(28) == 2);  // -1
    for (gf a = 1; a < 29; ++a) CHECK(F->w_pow(F->log(a)) == a);
    CHECK_THROWS_AS(F->log(0), std::domain_error);
    CHECK(F->w_pow(-1) == F->inv(2));
    CHECK(F->w_pow(28 * 5 + 3) == F->w_pow(3));
}

TEST_CASE("format and parse round-trip") {
    auto F = Field::make(3, 3);
    CHECK(F->format(0) == "0");
    CHECK(F->format(1) == "1");
    CHECK(F->format(3) == "w");
    for (gf a = 0; a < F->q(); ++a) CHECK(F->parse_element(F->format(a)) == a);
    CHECK(F->parse_element("w^5") == F->w_pow(5));
    CHECK(F->parse_element("13") == 13);

    auto P = Field::make(13, 1);
    for (gf a = 0; a < 13; ++a) CHECK(P->parse_element(P->format(a)) == a);
    CHECK_THROWS_AS(P->parse_element("nope"), std::invalid_argument);
    CHECK_THROWS_AS(P->parse_element("99"), std::invalid_argument);
}

TEST_CASE("coeffs round trip and describe parse") {
    auto F = Field::make(2, 6, {1, 1, 0, 1, 1, 0, 1});
    for (gf a = 0; a < F->q(); ++a) CHECK(F->from_coeffs(F->coeffs(a)) == a);
    auto G = Field::parse(F->describe());
    CHECK(*G == *F);
    auto H = Field::parse("GF(29)/0;1/2");
    CHECK(H->q() == 29);
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);   // not prime
    CHECK_THROWS_AS(Field::make(2, 17), std::invalid_argument);  // q > 2^16
    CHECK_THROWS_AS(Field::make(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 2, {1, 0, 1}), std::invalid_argument);  // (x+1)^2
    CHECK_THROWS_AS(Field::make(3, 2, {1, 0}), std::invalid_argument);     // wrong degree
    CHECK_THROWS_AS(Field::parse("GF(29)"), std::invalid_argument);
}

TEST_CASE("primality helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(29));
    CHECK(!is_prime(1));
    CHECK(!is_prime(91));
    CHECK(prime_factors(28) == std::vector<std::uint64_t>{2, 7});
    CHECK(prime_factors(63) == std::vector<std::uint64_t>{3, 7});
}
