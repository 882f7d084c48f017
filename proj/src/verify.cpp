#include "iamonds/verify.hpp"

#include <algorithm>
#include <sstream>

#include "iamonds/bounds.hpp"
#include "iamonds/enumerate.hpp"
#include "iamonds/io_render.hpp"
#include "iamonds/spiral.hpp"

namespace iamonds {

namespace {

// Boundary edge count by direct membership scan; deliberately not the
// 3n - 2b shortcut, so the identity check below is two independent routes.
long long direct_perimeter(const Polyiamond& a) {
    long long p = 0;
    for (TriCoord c : a.cells())
        for (TriCoord nb : neighbors(c))
            if (!a.contains(nb)) ++p;
    return p;
}

long long direct_interior_edges(const Polyiamond& a) {
    long long twice = 0;
    for (TriCoord c : a.cells())
        for (TriCoord nb : neighbors(c))
            if (a.contains(nb)) ++twice;
    return twice / 2;
}

struct Failure {
    std::ostringstream msg;
    bool any = false;
    void fail(const std::string& s) {
        if (any) msg << "; ";
        msg << s;
        any = true;
    }
};

CriterionResult criterion_pmin_formula(const VerifyOptions& opts) {
    Failure f;
    for (int n = 1; n <= 10; ++n) {
        const long long emp = empirical_pmin(n, {.jobs = opts.jobs});
        if (emp != p_min(n))
            f.fail("empirical pmin(" + std::to_string(n) + ")=" + std::to_string(emp) +
                   " != formula " + std::to_string(p_min(n)));
    }
    long long bad = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : bad) schedule(static)
#endif
    for (long long n = 1; n < 1000000; ++n) {
        const long long d = p_min(n + 1) - p_min(n);
        if (d != 1 && d != -1) ++bad;
    }
    if (bad) f.fail(std::to_string(bad) + " increments outside {+1,-1}");
    if (!verify_pmin_increments(100000)) f.fail("k-step increment claims failed");
    return {"formula suite: pmin matches enumeration (n<=10), increments +-1 (n<=1e6)",
            !f.any, f.any ? f.msg.str() : "ok"};
}

CriterionResult criterion_identities(const VerifyOptions& opts) {
    Failure f;
    long long checked = 0;
    for (int n = 1; n <= opts.enum_cap; ++n) {
        enumerate_fixed(
            n,
            [&](const Polyiamond& a) {
                ++checked;
                const long long p = direct_perimeter(a);
                const long long b = direct_interior_edges(a);
                if (3LL * n != p + 2 * b) f.fail("3n != p + 2b at n=" + std::to_string(n));
                const HoleSummary hs = holes(a);
                if (p != hs.hole_perimeter + hs.outer_perimeter)
                    f.fail("p != p_out + p_h at n=" + std::to_string(n));
            },
            {.max_n = opts.enum_cap});
    }
    for (int k = 2; k <= 30; ++k) {
        const Polyiamond s = spir(k);
        const long long p = direct_perimeter(s);
        const long long b = direct_interior_edges(s);
        if (3LL * s.size() != p + 2 * b) f.fail("3n != p + 2b for spir(" + std::to_string(k) + ")");
        const HoleSummary hs = holes(s);
        if (p != hs.hole_perimeter + hs.outer_perimeter)
            f.fail("p != p_out + p_h for spir(" + std::to_string(k) + ")");
    }
    return {"identity suite: 3n = p + 2b and p = p_out + p_h (n<=" +
                std::to_string(opts.enum_cap) + ", spir k<=30)",
            !f.any, f.any ? f.msg.str() : std::to_string(checked) + " shapes + 29 spirals"};
}

CriterionResult criterion_bounds(const VerifyOptions& opts) {
    Failure f;
    for (int n = 1; n <= opts.enum_cap; ++n) {
        long long violations = 0;
        enumerate_fixed(
            n,
            [&](const Polyiamond& a) {
                const long long h = holes(a).count;
                if (3LL * h > n + 2 - p_min(n + h)) ++violations;  // h > M(n,h)
            },
            {.max_n = opts.enum_cap});
        if (violations)
            f.fail(std::to_string(violations) + " bound violations at n=" + std::to_string(n));
    }
    long long bad = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : bad) schedule(static)
#endif
    for (long long h = 0; h <= 100; ++h) {
        for (long long n = 1; n < 100000; ++n) {
            // M(n+1,h) >= M(n,h) in exact thirds
            if (n + 3 - p_min(n + 1 + h) < n + 2 - p_min(n + h)) ++bad;
        }
    }
    if (bad) f.fail(std::to_string(bad) + " monotonicity violations");
    return {"bound suite: h <= M(n,h) on all shapes (n<=" + std::to_string(opts.enum_cap) +
                "), M non-decreasing (n<=1e5, h<=100)",
            !f.any, f.any ? f.msg.str() : "ok"};
}

CriterionResult criterion_theorem_1_4() {
    Failure f;
    for (long long k = 2; k <= 1000; ++k) {
        const long long n = seq_n(k), h = seq_h(k);
        const BoundReport at = m_bound(n, h);
        const BoundReport below = m_bound(n - 1, h);
        if (!(at.m_value == Rational{h, 1}))
            f.fail("M(n_k,h_k) != h_k at k=" + std::to_string(k));
        if (!(below.m_value < h)) f.fail("M(n_k-1,h_k) >= h_k at k=" + std::to_string(k));
        if (g_lower_bound(h) != n) f.fail("g_lower_bound(h_k) != n_k at k=" + std::to_string(k));
    }
    return {"theorem g(h_k)=n_k: M(n_k,h_k)=h_k, M(n_k-1,h_k)<h_k, bound scan hits n_k (k<=1000)",
            !f.any, f.any ? f.msg.str() : "ok"};
}

CriterionResult criterion_theorem_1_5(const VerifyOptions& opts) {
    Failure f;
    for (int k = 2; k <= opts.k_max; ++k) {
        const SpiralCertificate c = certify(k);
        if (!c.passes) f.fail("certificate fails at k=" + std::to_string(k));
    }
    const SpiralCertificate c15 = certify(15);
    if (c15.tiles != 1033 || c15.holes != 315)
        f.fail("k=15 spot check: got " + std::to_string(c15.tiles) + " tiles, " +
               std::to_string(c15.holes) + " holes");
    return {"spiral structure: certify(k) passes (k<=" + std::to_string(opts.k_max) +
                "), k=15 gives 1033 tiles / 315 holes",
            !f.any, f.any ? f.msg.str() : "ok"};
}

CriterionResult criterion_enumeration_ground_truth(const VerifyOptions& opts) {
    Failure f;
    const EnumOptions eopts{.jobs = opts.jobs, .limits = {.max_n = 20}};
    for (int n = 1; n <= 6; ++n) {
        const auto naive = naive_fixed_shapes(n);
        // free classes from the oracle, by canonical dedup
        std::vector<std::vector<TriCoord>> canon;
        canon.reserve(naive.size());
        for (const auto& s : naive) canon.push_back(canonical_cells(s));
        std::sort(canon.begin(), canon.end());
        canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
        const long long oracle_free = static_cast<long long>(canon.size());
        if (count_free(n, eopts) != oracle_free)
            f.fail("count_free(" + std::to_string(n) + ") != oracle " +
                   std::to_string(oracle_free));
        if (count_fixed(n, eopts) != static_cast<long long>(naive.size()))
            f.fail("fixed count(" + std::to_string(n) + ") != oracle " +
                   std::to_string(naive.size()));
    }
    for (int n = 1; n <= 8; ++n) {
        const EnumStats s = f_max_holes(n, eopts);
        if (s.max_holes != 0) f.fail("f(" + std::to_string(n) + ") != 0");
    }
    const EnumStats s9 = f_max_holes(9, eopts);
    if (s9.max_holes != 1) f.fail("f(9) != 1");
    const GSearchResult g1 = g_min_tiles(1, 12, eopts);
    if (g1.tiles != 9 || holes(g1.witness).count < 1) f.fail("g(1) != 9 or bad witness");
    const GSearchResult g3 = g_min_tiles(3, 20, eopts);
    if (g3.tiles != 19 || holes(g3.witness).count < 3) f.fail("g(3) != 19 or bad witness");
    return {"enumeration ground truth: free counts vs naive oracle (n<=6), f(:8)=0, f(9)=1, "
            "g(1)=9, g(3)=19 with witnesses",
            !f.any, f.any ? f.msg.str() : "ok"};
}

CriterionResult criterion_determinism(const VerifyOptions&) {
    Failure f;
    const EnumStats a = enum_stats(10, true, true, {.jobs = 1});
    const EnumStats b = enum_stats(10, true, true, {.jobs = 8});
    const bool same = a.fixed_count == b.fixed_count && a.free_count == b.free_count &&
                      a.min_perimeter == b.min_perimeter &&
                      a.min_interior_edges == b.min_interior_edges &&
                      a.max_holes == b.max_holes &&
                      a.witness_max_holes.has_value() == b.witness_max_holes.has_value() &&
                      (!a.witness_max_holes || *a.witness_max_holes == *b.witness_max_holes);
    if (!same) f.fail("enum_stats(10) differs between jobs=1 and jobs=8");
    const std::string svg1 = to_svg(spir(7));
    const std::string svg2 = to_svg(spir(7));
    if (svg1 != svg2) f.fail("SVG output not byte-stable");
    return {"determinism: enumerate 10 identical for jobs 1 vs 8; SVG byte-stable", !f.any,
            f.any ? f.msg.str() : "ok"};
}

}  // namespace

std::vector<CriterionResult> run_verification(const VerifyOptions& opts) {
    std::vector<CriterionResult> out;
    out.push_back(criterion_pmin_formula(opts));
    out.push_back(criterion_identities(opts));
    out.push_back(criterion_bounds(opts));
    out.push_back(criterion_theorem_1_4());
    out.push_back(criterion_theorem_1_5(opts));
    out.push_back(criterion_enumeration_ground_truth(opts));
    out.push_back(criterion_determinism(opts));
    return out;
}

}  // namespace iamonds
