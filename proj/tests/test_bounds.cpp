#include <random>

#include <doctest.h>

#include "iamonds/bounds.hpp"
#include "iamonds/spiral.hpp"

using namespace iamonds;

TEST_CASE("p_min matches the known small values") {
    // first 22 values, enumeration-verified for n <= 10 in the enumerate suite
    const long long expected[] = {3, 4, 5, 6, 7, 6,  7,  8,  9,  8,  9,
                                  10, 9, 10, 11, 10, 11, 12, 11, 12, 13, 12};
    for (int n = 1; n <= 22; ++n) CHECK(p_min(n) == expected[n - 1]);
    CHECK_THROWS_AS(p_min(0), std::invalid_argument);
}

TEST_CASE("p_min at hexagon sizes: p_min(6k^2) = 6k") {
    for (long long k = 1; k <= 100; ++k) CHECK(p_min(6 * k * k) == 6 * k);
}

TEST_CASE("isqrt is exact") {
    CHECK(isqrt_u64(0) == 0);
    CHECK(isqrt_u64(1) == 1);
    CHECK(isqrt_u64(3) == 1);
    CHECK(isqrt_u64(4) == 2);
    CHECK(isqrt_u64(~0ull) == 4294967295ull);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20000; ++t) {
        const uint64_t v = rng() >> (t % 40);
        const uint64_t s = isqrt_u64(v);
        CHECK(s * s <= v);
        CHECK((s == 4294967295ull || (s + 1) * (s + 1) > v));
    }
    // perfect squares and straddles
    for (uint64_t s = 1; s < 100000; s += 977) {
        CHECK(isqrt_u64(s * s) == s);
        CHECK(isqrt_u64(s * s - 1) == s - 1);
        CHECK(isqrt_u64(s * s + 1) == s);
    }
}

TEST_CASE("b_min") {
    CHECK(b_min(1) == 0);
    CHECK(b_min(5) == 4);
}

TEST_CASE("m_bound exact rational reports") {
    const BoundReport r1 = m_bound(19, 3);
    CHECK(r1.m_value == Rational{3, 1});
    CHECK(r1.feasible);

    const BoundReport r2 = m_bound(18, 3);
    CHECK(r2.m_value == Rational{7, 3});
    CHECK_FALSE(r2.feasible);
    CHECK(r2.m_value.str() == "7/3");

    const BoundReport r3 = m_bound(1, 0);
    CHECK(r3.m_value == Rational{0, 1});
    CHECK(r3.feasible);
}

TEST_CASE("three times m_value is the integer n + 2 - p_min(n+h)") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<long long> dn(1, 100000), dh(0, 500);
    for (int t = 0; t < 3000; ++t) {
        const long long n = dn(rng), h = dh(rng);
        const BoundReport r = m_bound(n, h);
        CHECK(r.m_value.num * 3 / r.m_value.den == n + 2 - p_min(n + h));
        CHECK((r.m_value.den == 1 || r.m_value.den == 3));
    }
}

TEST_CASE("g_lower_bound") {
    CHECK(g_lower_bound(1) == 9);
    CHECK(g_lower_bound(2) == 14);
    CHECK(g_lower_bound(3) == 19);
    CHECK(g_lower_bound(4) == 23);
    CHECK(g_lower_bound(9) == 43);
    CHECK_THROWS_AS(g_lower_bound(0), std::invalid_argument);
    // tightness against the spiral sequence
    for (long long k = 2; k <= 50; ++k) CHECK(g_lower_bound(seq_h(k)) == seq_n(k));
    // M(g_lower_bound(h)-1, h) must be infeasible
    for (long long h = 1; h <= 40; ++h) {
        const long long g = g_lower_bound(h);
        CHECK(m_bound(g, h).feasible);
        if (g > 1) CHECK_FALSE(m_bound(g - 1, h).feasible);
    }
}

TEST_CASE("p_min increments") {
    CHECK(p_min(2) - p_min(1) == 1);
    CHECK(p_min(6) - p_min(5) == -1);
    CHECK(verify_pmin_increments(10000));
    CHECK_THROWS_AS(verify_pmin_increments(1), std::invalid_argument);
}

TEST_CASE("M is non-decreasing in n") {
    for (long long h : {0LL, 1LL, 3LL, 7LL, 12LL})
        for (long long n = 1; n < 2000; ++n) {
            // compare in exact thirds
            CHECK(n + 3 - p_min(n + 1 + h) >= n + 2 - p_min(n + h));
        }
}
