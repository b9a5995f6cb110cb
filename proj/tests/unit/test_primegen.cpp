#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "socialist/modmath.hpp"
#include "socialist/primegen.hpp"

using namespace socialist;

namespace {

std::vector<u64> naive_sieve(u64 n) {
    std::vector<bool> composite(n, false);
    std::vector<u64> out;
    for (u64 i = 2; i < n; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j < n; j += i) composite[j] = true;
    }
    return out;
}

std::vector<u64> drain(PrimeStream& s) {
    std::vector<u64> out;
    while (auto p = s.next()) out.push_back(*p);
    return out;
}

}  // namespace

TEST_CASE("primes_in_range examples") {
    CHECK(primes_in_range({10, 20}) == std::vector<u64>{11, 13, 17, 19});
    CHECK(primes_in_range({2, 2}).empty());
    CHECK(primes_in_range({2, 3}) == std::vector<u64>{2});
    CHECK(primes_in_range({0, 10}) == std::vector<u64>{2, 3, 5, 7});
    CHECK(primes_in_range({2, 1000000}).size() == 78498);
}

TEST_CASE("primes_5_mod_8 examples") {
    CHECK(primes_5_mod_8({2, 100}) == std::vector<u64>{5, 13, 29, 37, 53, 61});
    CHECK(primes_5_mod_8({2, 5}).empty());
    const auto count = primes_5_mod_8({2, 1000000}).size();
    CHECK(count == 19623);
    CHECK(static_cast<double>(count) == doctest::Approx(78498 / 4.0).epsilon(0.01));
}

TEST_CASE("segmentation does not change the output") {
    const auto expected = naive_sieve(1000000);
    for (u64 seg : {u64{1024}, u64{4096}, u64{65536}, u64{100000}, kDefaultSegmentSize}) {
        CAPTURE(seg);
        REQUIRE(primes_in_range({2, 1000000, seg}) == expected);
    }
}

TEST_CASE("adjacent ranges concatenate") {
    const u64 cuts[][3] = {{2, 3, 100}, {2, 1000, 50000}, {7, 8, 9}, {1000, 70001, 200000}, {99991, 99991, 100003}};
    for (const auto& c : cuts) {
        auto left = primes_in_range({c[0], c[1], 1024});
        auto right = primes_in_range({c[1], c[2], 2048});
        left.insert(left.end(), right.begin(), right.end());
        CHECK(left == primes_in_range({c[0], c[2]}));
    }
}

TEST_CASE("every yielded value is prime, including far from the origin") {
    for (u64 p : primes_in_range({2, 200000})) REQUIRE(is_prime(p));
    const u64 lo = 1000000000000ull;
    const auto window = primes_in_range({lo, lo + 100000, 4096});
    CHECK(!window.empty());
    u64 count = 0;
    for (u64 n = lo; n < lo + 100000; ++n) count += is_prime(n);
    CHECK(window.size() == count);
    for (u64 p : window) REQUIRE(is_prime(p));
}

TEST_CASE("stream seek restarts at the new lower bound") {
    PrimeStream s({2, 100});
    CHECK(s.next() == 2u);
    s.seek(50);
    CHECK(drain(s) == std::vector<u64>{53, 59, 61, 67, 71, 73, 79, 83, 89, 97});
}

TEST_CASE("range validation") {
    CHECK_THROWS_AS(primes_in_range({10, 5}), std::invalid_argument);
    CHECK_THROWS_AS(primes_in_range({2, 100, 16}), std::invalid_argument);
    CHECK_THROWS_AS(primes_in_range({2, (u64{1} << 62) + 1}), std::invalid_argument);
}
