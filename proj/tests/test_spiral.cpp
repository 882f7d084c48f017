#include <algorithm>
#include <set>

#include <doctest.h>

#include "iamonds/bounds.hpp"
#include "iamonds/lattice.hpp"
#include "iamonds/spiral.hpp"

using namespace iamonds;

TEST_CASE("hole and tile sequences") {
    CHECK(seq_h(2) == 3);
    CHECK(seq_n(2) == 19);
    CHECK(seq_h(3) == 9);
    CHECK(seq_n(3) == 43);
    CHECK(seq_h(4) == 18);
    CHECK(seq_n(4) == 76);
    CHECK(seq_h(15) == 315);
    CHECK(seq_n(15) == 1033);
    CHECK_THROWS_AS(seq_h(1), std::invalid_argument);
    CHECK_THROWS_AS(seq_n(1), std::invalid_argument);
    for (long long k = 2; k <= 1000; ++k) CHECK(seq_n(k) + seq_h(k) == 6 * k * k - 2);
}

TEST_CASE("sequence differences and telescoping") {
    CHECK(seq_diffs(2) == std::pair<long long, long long>{6, 24});
    CHECK(seq_diffs(3) == std::pair<long long, long long>{9, 33});
    for (long long k = 2; k <= 30; ++k)
        CHECK(seq_diffs(k) == std::pair<long long, long long>{3 * k, 9 * k + 6});
    long long h = seq_h(2), n = seq_n(2);
    for (long long k = 2; k < 10; ++k) {
        const auto [dh, dn] = seq_diffs(k);
        h += dh;
        n += dn;
    }
    CHECK(h == seq_h(10));
    CHECK(n == seq_n(10));
}

TEST_CASE("spir tile and hole counts") {
    CHECK_THROWS_AS(spir(1), std::invalid_argument);

    const Polyiamond s2 = spir(2);
    CHECK(s2.size() == 19);
    CHECK(holes(s2).count == 3);

    const Polyiamond s3 = spir(3);
    CHECK(s3.size() == 43);
    CHECK(holes(s3).count == 9);

    const Polyiamond s4 = spir(4);
    CHECK(s4.size() == 76);
    CHECK(holes(s4).count == 18);

    const Polyiamond s5 = spir(5);
    CHECK(s5.size() == 118);
    CHECK(holes(s5).count == 30);
}

TEST_CASE("spir is contained in Hex_k missing exactly h_k + 2 cells") {
    for (int k = 2; k <= 20; ++k) {
        const Polyiamond s = spir(k);
        const auto hex = hex_cells(k);
        CHECK(std::includes(hex.begin(), hex.end(), s.cells().begin(), s.cells().end()));
        CHECK(static_cast<long long>(hex.size()) - s.size() == seq_h(k) + 2);
    }
}

TEST_CASE("hole recurrence h(k) = h(k-2) + 6k - 9") {
    for (int k = 4; k <= 20; ++k)
        CHECK(holes(spir(k)).count == holes(spir(k - 2)).count + 6 * k - 9);
}

TEST_CASE("holes outside the base configuration are single up-triangles") {
    for (int k = 4; k <= 12; ++k) {
        const int base_k = k % 2 == 0 ? 2 : 3;
        const HoleSummary hs = holes(spir(k));
        for (const auto& hole : hs.holes) {
            const bool in_base = hex_contains(base_k, hole.front());
            if (!in_base) {
                CHECK(hole.size() == 1);
                CHECK(is_up(hole.front()));
            }
        }
    }
}

TEST_CASE("the dual graph of spir(k) is a tree") {
    for (int k : {2, 3, 4, 7, 12})
        CHECK(interior_edges(spir(k)) == seq_n(k) - 1);
    for (int k : {2, 3, 4}) CHECK(dual_graph_is_tree(spir(k)));
}

TEST_CASE("the bound is tight exactly at (n_k, h_k)") {
    for (long long k = 2; k <= 100; ++k) {
        const long long n = seq_n(k), h = seq_h(k);
        CHECK(m_bound(n, h).m_value == Rational{h, 1});
        CHECK(m_bound(n - 1, h).m_value < h);
    }
}

TEST_CASE("certificates") {
    CHECK_THROWS_AS(certify(0), std::invalid_argument);

    const SpiralCertificate c2 = certify(2);
    CHECK(c2.passes);
    CHECK(c2.tiles == 19);
    CHECK(c2.holes == 3);
    CHECK(c2.all_holes_area_one);
    CHECK(c2.dual_tree);
    CHECK(c2.outer_perimeter == 12);

    const SpiralCertificate c7 = certify(7);
    CHECK(c7.passes);
    CHECK(c7.outer_perimeter == 42);
    CHECK(c7.p_min_of_filled == p_min(6 * 49 - 2));

    const SpiralCertificate c15 = certify(15);
    CHECK(c15.passes);
    CHECK(c15.tiles == 1033);
    CHECK(c15.holes == 315);
}
