#include <doctest.h>

#include <random>
#include <stdexcept>

#include "socialist/collision.hpp"
#include "socialist/oracle.hpp"
#include "socialist/primegen.hpp"

using namespace socialist;

TEST_CASE("brute_force_socialist examples") {
    auto v5 = brute_force_socialist(5);
    CHECK(v5.is_socialist);
    CHECK_FALSE(v5.duplicate);
    CHECK(v5.missing_residue == 3u);
    CHECK(v5.res_r_consistent == true);

    auto v7 = brute_force_socialist(7);
    CHECK_FALSE(v7.is_socialist);
    REQUIRE(v7.duplicate);
    CHECK(*v7.duplicate == DuplicatePair{3, 6});
    CHECK_FALSE(v7.missing_residue);
    CHECK_FALSE(v7.res_r_consistent);

    CHECK_THROWS_AS(brute_force_socialist(3), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_socialist(9), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_socialist(kOracleLimit + 43), std::invalid_argument);
}

TEST_CASE("no socialist prime in (5, 10^5)") {
    for (u64 p : primes_in_range({7, 100000})) {
        auto v = brute_force_socialist(p);
        REQUIRE_FALSE(v.is_socialist);
        REQUIRE(v.duplicate);
        REQUIRE(v.duplicate->i < v.duplicate->j);
    }
}

TEST_CASE("oracle and collision scan agree on (5, 10^4]") {
    for (unsigned bits : {12u, 16u, 19u}) {
        CollisionScanner scanner(CollisionConfig{bits, false, std::nullopt});
        for (u64 p : primes_in_range({7, 10001})) {
            bool eliminated = scanner.scan(p).status == CollisionStatus::Eliminated;
            REQUIRE(eliminated == brute_force_socialist(p).duplicate.has_value());
        }
    }
}

TEST_CASE("quadruple_decomposition examples") {
    auto d5 = quadruple_decomposition(5);
    CHECK(d5.quadruples.empty());
    CHECK_FALSE(d5.defect);

    CHECK(quadruple_decomposition(13).defect.has_value());
    CHECK(quadruple_decomposition(29).defect.has_value());
    CHECK_THROWS_AS(quadruple_decomposition(7), std::invalid_argument);
}

TEST_CASE("every p = 5 (mod 8) in (5, 10^4) has a defect") {
    for (u64 p : primes_5_mod_8({7, 10000})) {
        auto d = quadruple_decomposition(p);
        REQUIRE(d.defect);
        REQUIRE(*d.defect >= 2);
        REQUIRE(*d.defect <= p - 3);
    }
}

TEST_CASE("wilson_identity_check examples") {
    CHECK(wilson_identity_check(13, 1));
    CHECK(wilson_identity_check(13, 7));
    CHECK(wilson_identity_check(7, 3));
    CHECK(wilson_identity_check(7, 7));
    CHECK_THROWS_AS(wilson_identity_check(7, 0), std::invalid_argument);
    CHECK_THROWS_AS(wilson_identity_check(7, 8), std::invalid_argument);
}

TEST_CASE("wilson identity for 10^4 random pairs") {
    const auto primes = primes_in_range({3, 20000});
    std::mt19937_64 rng(41);
    for (int n = 0; n < 10000; ++n) {
        u64 p = primes[rng() % primes.size()];
        u64 k = 1 + rng() % p;
        REQUIRE(wilson_identity_check(p, k));
    }
}
