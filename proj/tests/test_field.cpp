#include <doctest.h>

#include "hgq/field.hpp"
#include "oracles.hpp"

using namespace hgq;

TEST_CASE("select_prime matches the direct primality scan") {
    CHECK(select_prime(10, 2) == 11);
    CHECK(select_prime(1, 3) == 7);  // smallest prime above max(1, 3!) = 6
    CHECK(select_prime(4, 2) == 5);
    CHECK(select_prime(2, 3) == 7);

    for (int64_t m = 1; m <= 60; ++m)
        for (int d = 1; d <= 4; ++d)
            CHECK(select_prime(m, d) == testing::oracle_next_prime_above(std::max(m, factorial(d))));

    // Deterministic by construction.
    CHECK(select_prime(37, 3) == select_prime(37, 3));
    CHECK_THROWS_AS(select_prime(0, 2), std::invalid_argument);
}

TEST_CASE("select_prime lands below twice the lower bound") {
    for (int64_t m = 2; m <= 200; ++m) {
        const int64_t p = select_prime(m, 1);
        CHECK(p > m);
        CHECK(p < 2 * m);
    }
}

TEST_CASE("modular inverse") {
    CHECK(mod_inverse(2, 7) == 4);
    CHECK(mod_inverse(1, 5) == 1);
    CHECK(mod_inverse(6, 7) == 6);
    CHECK_THROWS_AS(mod_inverse(0, 7), std::invalid_argument);

    for (int64_t p : {2, 3, 5, 7, 13, 101}) {
        ZpField f(p);
        for (int64_t a = 1; a < p; ++a) CHECK(f.mul(a, f.inv(a)) == f.one());
    }
}

TEST_CASE("FieldSpec validation and description") {
    CHECK(FieldSpec::prime(7).finite());
    CHECK(FieldSpec::prime(7).modulus() == 7);
    CHECK(FieldSpec::prime(7).describe() == "7");
    CHECK_FALSE(FieldSpec::infinity().finite());
    CHECK(FieldSpec::infinity().describe() == "inf");
    CHECK_THROWS_AS(FieldSpec::prime(6), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::infinity().modulus(), std::logic_error);
}

TEST_CASE("rational field is exact") {
    RationalField f;
    auto third = f.div(f.from_int(1), f.from_int(3));
    CHECK(f.mul(third, f.from_int(3)) == f.one());
    CHECK(f.is_zero(f.sub(f.add(third, third), f.div(f.from_int(2), f.from_int(3)))));
    CHECK_THROWS_AS(f.inv(f.zero()), std::invalid_argument);
}

TEST_CASE("factorial small values") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(3) == 6);
    CHECK(factorial(8) == 40320);
}
