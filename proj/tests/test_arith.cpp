#include <doctest.h>

#include "twistk/arith.hpp"

using namespace twistk;
using arith::binom;
using arith::factorize;
using arith::is_prime;
using arith::lcm_range;
using arith::nu_p;
using arith::odd_part;

TEST_SUITE_BEGIN("arith");

TEST_CASE("nu_p on known values")
{
    CHECK(nu_p(2, 12) == 2);
    CHECK(nu_p(3, 1) == 0);
    CHECK(nu_p(5, 250) == 3);
    CHECK(nu_p(7, 7) == 1);
}

TEST_CASE("nu_p rejects bad input")
{
    CHECK_THROWS_AS(nu_p(1, 5), std::domain_error);
    CHECK_THROWS_AS(nu_p(0, 5), std::domain_error);
    CHECK_THROWS_AS(nu_p(4, 5), std::domain_error);   // composite
    CHECK_THROWS_AS(nu_p(91, 5), std::domain_error);  // 7 * 13
    CHECK_THROWS_AS(nu_p(2, 0), std::domain_error);
}

TEST_CASE("odd_part")
{
    CHECK(odd_part(60) == 15);
    CHECK(odd_part(7) == 7);
    CHECK(odd_part(1024) == 1);
    CHECK(odd_part(1) == 1);
    CHECK_THROWS_AS(odd_part(0), std::domain_error);
}

TEST_CASE("odd_part splits off the exact 2-power")
{
    for (Int x = 1; x <= 1000000; ++x) {
        Int o = odd_part(x);
        Int back = o << nu_p(2, x).convert_to<unsigned>();
        if (back != x) {
            REQUIRE(back == x);  // report the first failure only
        }
    }
}

TEST_CASE("lcm_range")
{
    CHECK(lcm_range(1, 3) == 6);
    CHECK(lcm_range(1, 1) == 1);
    CHECK(lcm_range(1, 6) == 60);
    CHECK(lcm_range(4, 6) == 60);
    CHECK_THROWS_AS(lcm_range(3, 2), std::domain_error);
    CHECK_THROWS_AS(lcm_range(0, 2), std::domain_error);
}

TEST_CASE("binom basics and negative upper argument")
{
    CHECK(binom(5, 2) == 10);
    CHECK(binom(-4, 2) == 10);  // (-4)(-5)/2
    CHECK(binom(0, 2) == 0);
    CHECK(binom(-1, 3) == -1);
    CHECK(binom(7, 0) == 1);
    CHECK(binom(-9, 0) == 1);
    CHECK_THROWS_AS(binom(3, -1), std::domain_error);
}

TEST_CASE("binom satisfies the Pascal recurrence for all integer n")
{
    for (int n = -50; n <= 50; ++n) {
        CHECK(binom(n, 0) == 1);
        for (int k = 1; k <= 12; ++k)
            CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
    }
}

TEST_CASE("is_prime across the trial-division boundary")
{
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(999983));
    CHECK(is_prime(1000003));
    CHECK(is_prime(Int("1000000007")));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));    // Carmichael
    CHECK_FALSE(is_prime(41041));  // Carmichael
    CHECK_FALSE(is_prime(Int("1000000007") * Int("1000000009")));
}

TEST_CASE("every x factors as the product of its prime powers")
{
    for (Int x : {Int(1), Int(2), Int(97), Int(360), Int(999999), Int("2329089562800")}) {
        Int rebuilt = 1;
        for (const auto& [p, e] : factorize(x)) {
            CHECK(is_prime(p));
            CHECK(nu_p(p, x) == e);
            for (Int i = 0; i < e; ++i)
                rebuilt *= p;
        }
        CHECK(rebuilt == x);
    }
}

TEST_SUITE_END();
