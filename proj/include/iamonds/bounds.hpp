// Closed-form extremal quantities: the Harary-Harborth minimum perimeter
// p_min(n) = 2*ceil((n+sqrt(6n))/2) - n evaluated in exact integer
// arithmetic, b_min(n) = n-1, and the topological isoperimetric bound
// M(n,h) = (n + 2 - p_min(n+h)) / 3 as an exact rational.

#pragma once

#include <cstdint>
#include <string>

namespace iamonds {

// Floor of sqrt(v), exact for all uint64 inputs.
uint64_t isqrt_u64(uint64_t v);

// Minimum perimeter over all n-cell polyiamonds. No floating point: with
// s = isqrt(6n), the ceiling is (n+s)/2 rounded up unless 6n is a perfect
// square, in which case it is ceil((n+s)/2) exactly.
long long p_min(long long n);

// Minimum interior edge count: n - 1, attained by the strip.
long long b_min(long long n);

// Exact rational with small terms; denominator is 1 or 3 after reduction.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational thirds(long long three_times_value);

    friend bool operator==(const Rational&, const Rational&) = default;
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    bool operator>=(long long v) const { return num >= v * den; }
    bool operator<(long long v) const { return num < v * den; }

    std::string str() const;
};

struct BoundReport {
    long long n = 0;
    long long h = 0;
    long long p_min_at_n_plus_h = 0;
    Rational m_value;    // (n + 2 - p_min(n+h)) / 3
    bool feasible = false;  // m_value >= h (necessary condition for existence)
};

BoundReport m_bound(long long n, long long h);

// min{n : M(n,h) >= h}; a valid lower bound for g(h), equal to it when a
// witness exists. Scans upward from n = 3h (no smaller n can qualify since
// p_min >= 3 forces n + 2 - p_min >= 3h to fail below that).
long long g_lower_bound(long long h);

// Checks the increment lemma for p_min: |p_min(n+1) - p_min(n)| = 1 for all
// n < n_max, p_min(n+k) >= p_min(n) - 1 on a deterministic sample, and
// p_min(n+k) >= p_min(n) whenever p_min steps up at n.
bool verify_pmin_increments(long long n_max);

}  // namespace iamonds
