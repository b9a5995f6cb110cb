#include <doctest.h>

#include <random>
#include <stdexcept>

#include "socialist/modmath.hpp"
#include "socialist/primegen.hpp"

using namespace socialist;

namespace {

// Double-and-add reference; shares nothing with the 128-bit path.
u64 slow_mul_mod(u64 a, u64 b, u64 m) {
    u64 result = 0;
    a %= m;
    while (b > 0) {
        if (b & 1) result = add_mod(result, a, m);
        a = add_mod(a, a, m);
        b >>= 1;
    }
    return result;
}

bool trial_division_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int euler_criterion(u64 a, u64 p) {
    u64 e = pow_mod(a % p, (p - 1) / 2, p);
    return e == 0 ? 0 : (e == 1 ? 1 : -1);
}

}  // namespace

TEST_CASE("mul_mod examples") {
    CHECK(mul_mod(0, 12345, 99991) == 0);
    CHECK(mul_mod(777, 1, 99991) == 777);
    const u64 two62 = u64{1} << 62;
    CHECK(mul_mod(two62, 2, two62 + 1) == two62 - 1);
}

TEST_CASE("mul_mod agrees with double-and-add for random triples below 2^62") {
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 10000; ++i) {
        u64 m = (rng() % (kModulusLimit - 2)) + 2;
        u64 a = rng() % m, b = rng() % m;
        REQUIRE(mul_mod(a, b, m) == slow_mul_mod(a, b, m));
    }
}

TEST_CASE("Montgomery products match mul_mod") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        u64 m = ((rng() % (kModulusLimit - 3)) + 3) | 1;
        Montgomery mont(m);
        u64 a = rng() % m, b = rng() % m;
        REQUIRE(mont.from(mont.mul(mont.to(a), mont.to(b))) == mul_mod(a, b, m));
        REQUIRE(mont.from(mont.one()) == 1);
    }
}

TEST_CASE("pow_mod examples") {
    CHECK(pow_mod(5, 0, 7) == 1);
    CHECK(pow_mod(3, 4, 5) == 1);
    CHECK(pow_mod(2, 1000000006, 1000000007) == 1);
}

TEST_CASE("jacobi examples") {
    CHECK(jacobi(1, 13) == 1);
    CHECK(jacobi(5, 13) == -1);
    CHECK(jacobi(-23, 13) == 1);
    CHECK(jacobi(0, 13) == 0);
    CHECK(jacobi(21, 15) == 0);
    CHECK(jacobi(INT64_MIN, 3) == jacobi(-(INT64_MAX % 3) - 1, 3));
    CHECK_THROWS_AS(jacobi(3, 10), std::invalid_argument);
    CHECK_THROWS_AS(jacobi(3, 1), std::invalid_argument);
}

TEST_CASE("jacobi equals the Euler criterion on random primes below 10^6") {
    const auto primes = primes_in_range(PrimeRange{3, 1000000});
    std::mt19937_64 rng(99);
    for (int i = 0; i < 1000; ++i) {
        u64 p = primes[rng() % primes.size()];
        std::int64_t a = static_cast<std::int64_t>(rng() % 2000000) - 1000000;
        u64 reduced = static_cast<u64>(((a % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                                       static_cast<std::int64_t>(p));
        REQUIRE(jacobi(a, p) == euler_criterion(reduced, p));
    }
}

TEST_CASE("jacobi is multiplicative in the numerator") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 2000; ++i) {
        u64 n = (rng() % 1000000) * 2 + 3;
        std::int64_t a = static_cast<std::int64_t>(rng() % 100000) - 50000;
        std::int64_t b = static_cast<std::int64_t>(rng() % 100000) - 50000;
        REQUIRE(jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n));
    }
}

TEST_CASE("is_prime agrees with trial division below 10^6") {
    for (u64 n = 0; n < 1000000; ++n) REQUIRE(is_prime(n) == trial_division_prime(n));
}

TEST_CASE("is_prime on large and adversarial inputs") {
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(561));
    CHECK(is_prime((u64{1} << 61) - 1));
    CHECK_FALSE(is_prime(3215031751ull));          // strong pseudoprime to bases 2, 3, 5, 7
    CHECK_FALSE(is_prime(3825123056546413051ull)); // strong pseudoprime to bases 2..23
    CHECK(is_prime(18446744073709551557ull));      // largest 64-bit prime
    CHECK_FALSE(is_prime(18446744073709551615ull));
}

TEST_CASE("sqrt_mod examples") {
    CHECK(sqrt_mod(4, 13) == 2u);
    CHECK(sqrt_mod(4, 1000003) == 2u);
    CHECK(sqrt_mod(12, 13) == 5u);
    CHECK_FALSE(sqrt_mod(5, 13).has_value());
    CHECK(sqrt_mod(0, 13) == 0u);
}

TEST_CASE("sqrt_mod roots square back and exist exactly for residues") {
    // Covers p = 3 (mod 4), p = 5 (mod 8) and Tonelli-Shanks for p = 1 (mod 8).
    const auto primes = primes_in_range(PrimeRange{3, 5000});
    std::mt19937_64 rng(11);
    for (u64 p : primes) {
        for (int i = 0; i < 20; ++i) {
            u64 a = rng() % p;
            auto x = sqrt_mod(a, p);
            REQUIRE(x.has_value() == (jacobi_unsigned(a, p) != -1));
            if (x) {
                REQUIRE(mul_mod(*x, *x, p) == a);
                REQUIRE(*x <= p - *x);
            }
        }
    }
    // a large p = 1 (mod 8)
    const u64 big = 1000000000000000177ull;  // prime, = 1 (mod 8)
    REQUIRE(is_prime(big));
    REQUIRE(big % 8 == 1);
    for (u64 a = 2; a < 200; ++a) {
        auto x = sqrt_mod(a, big);
        REQUIRE(x.has_value() == (jacobi_unsigned(a, big) == 1));
        if (x) REQUIRE(mul_mod(*x, *x, big) == a);
    }
}

TEST_CASE("Modulus enforces the 2^62 cap") {
    CHECK(Modulus(2).value() == 2);
    CHECK_THROWS_AS(Modulus{1}, std::invalid_argument);
    CHECK_THROWS_AS(Modulus{kModulusLimit}, std::invalid_argument);
}
