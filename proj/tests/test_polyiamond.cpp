#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>

#include <doctest.h>

#include "iamonds/enumerate.hpp"
#include "iamonds/lattice.hpp"
#include "iamonds/polyiamond.hpp"

using namespace iamonds;

namespace {

// Random connected shape by frontier growth; uniformity is irrelevant.
Polyiamond random_shape(int n, std::mt19937& rng) {
    std::set<TriCoord> cells{{0, 0}};
    const auto seed_nbs = neighbors({0, 0});
    std::vector<TriCoord> frontier(seed_nbs.begin(), seed_nbs.end());
    while (static_cast<int>(cells.size()) < n) {
        std::uniform_int_distribution<size_t> pick(0, frontier.size() - 1);
        const TriCoord c = frontier[pick(rng)];
        if (cells.insert(c).second)
            for (TriCoord nb : neighbors(c)) frontier.push_back(nb);
    }
    return make_polyiamond({cells.begin(), cells.end()});
}

// Independent hole oracle: union-find over the complement of A inside a hex
// region, with every boundary-layer cell identified into one outside class.
int oracle_hole_count(const Polyiamond& a) {
    int radius = 2;
    for (TriCoord c : a.cells())
        radius = std::max({radius, std::abs(c.row) + 2, std::abs(c.col) + 2});
    const auto region = hex_cells(radius);
    std::map<TriCoord, int> id;
    for (TriCoord c : region)
        if (!a.contains(c)) id.emplace(c, static_cast<int>(id.size()));
    std::vector<int> parent(id.size() + 1);
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
    const int outside = static_cast<int>(id.size());
    for (const auto& [c, i] : id) {
        if (!hex_contains(radius - 1, c)) unite(i, outside);  // boundary identification
        for (TriCoord nb : neighbors(c)) {
            auto it = id.find(nb);
            if (it != id.end()) unite(i, it->second);
        }
    }
    std::set<int> roots;
    for (const auto& [c, i] : id) roots.insert(find(i));
    roots.erase(find(outside));
    return static_cast<int>(roots.size());
}

}  // namespace

TEST_CASE("construction validates") {
    CHECK(make_polyiamond({{0, 0}}).size() == 1);
    CHECK_THROWS_AS(make_polyiamond({}), EmptyShapeError);
    CHECK_THROWS_AS(make_polyiamond({{0, 0}, {0, 0}}), DuplicateCellError);
    CHECK(make_polyiamond(hex_cells(2)).size() == 24);

    // vertex-touching only is not gluing
    try {
        make_polyiamond({{0, 0}, {0, 2}});
        FAIL("expected DisconnectedInteriorError");
    } catch (const DisconnectedInteriorError& e) {
        REQUIRE(e.components.size() == 2);
        CHECK(e.components[0] == std::vector<TriCoord>{{0, 0}});
        CHECK(e.components[1] == std::vector<TriCoord>{{0, 2}});
    }
}

TEST_CASE("perimeter and interior edges") {
    CHECK(perimeter(make_polyiamond({{0, 0}})) == 3);
    CHECK(interior_edges(make_polyiamond({{0, 0}})) == 0);
    CHECK(perimeter(make_polyiamond({{0, 0}, {0, 1}})) == 4);
    CHECK(perimeter(make_polyiamond(hex_cells(1))) == 6);
    CHECK(interior_edges(strip(5)) == 4);

    const Polyiamond h2 = make_polyiamond(hex_cells(2));
    const long long p = perimeter(h2);
    CHECK((3 * 24 - p) % 2 == 0);
    CHECK(interior_edges(h2) == (3 * 24 - p) / 2);
}

TEST_CASE("3n = p + 2b on random shapes") {
    std::mt19937 rng(3);
    for (int t = 0; t < 60; ++t) {
        const Polyiamond a = random_shape(3 + t % 30, rng);
        CHECK(3LL * a.size() == perimeter(a) + 2 * interior_edges(a));
    }
}

TEST_CASE("strip") {
    CHECK(strip(1).size() == 1);
    CHECK(perimeter(strip(4)) == 3 * 4 - 2 * 3);
    CHECK_THROWS_AS(strip(0), std::invalid_argument);
    for (int n = 1; n <= 100; ++n) {
        const Polyiamond s = strip(n);
        CHECK(interior_edges(s) == n - 1);
        CHECK(holes(s).count == 0);
    }
}

TEST_CASE("holes of simply connected shapes") {
    const HoleSummary hs = holes(make_polyiamond(hex_cells(1)));
    CHECK(hs.count == 0);
    CHECK(hs.hole_perimeter == 0);
    CHECK(hs.outer_perimeter == 6);
}

TEST_CASE("hole flood fill matches the union-find oracle on all shapes up to 9 cells") {
    for (int n = 1; n <= 9; ++n) {
        long long with_holes = 0;
        enumerate_fixed(n, [&](const Polyiamond& a) {
            const HoleSummary hs = holes(a);
            CHECK(hs.count == oracle_hole_count(a));
            CHECK(hs.hole_perimeter >= 3 * hs.count);
            CHECK(hs.hole_perimeter + hs.outer_perimeter == perimeter(a));
            if (hs.count > 0) ++with_holes;
        });
        if (n < 9) CHECK(with_holes == 0);
        if (n == 9) CHECK(with_holes > 0);
    }
}

TEST_CASE("fill_holes") {
    const Polyiamond h1 = make_polyiamond(hex_cells(1));
    CHECK(fill_holes(h1) == h1);

    // ring with one enclosed cell: 9-tile minimal 1-hole shape
    const Polyiamond ring = make_polyiamond(
        {{0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 4}, {2, 2}, {2, 3}, {2, 4}});
    const HoleSummary hs = holes(ring);
    REQUIRE(hs.count == 1);
    const Polyiamond filled = fill_holes(ring);
    CHECK(filled.size() == ring.size() + hs.total_area);
    CHECK(holes(filled).count == 0);
    CHECK(perimeter(filled) == hs.outer_perimeter);
}

TEST_CASE("perimeter of fill_holes equals outer perimeter on random shapes") {
    std::mt19937 rng(17);
    for (int t = 0; t < 100; ++t) {
        const Polyiamond a = random_shape(6 + t % 24, rng);
        const HoleSummary hs = holes(a);
        CHECK(perimeter(fill_holes(a)) == hs.outer_perimeter);
    }
}

TEST_CASE("dual graph tree detection") {
    CHECK(dual_graph_is_tree(strip(7)));
    CHECK_FALSE(dual_graph_is_tree(make_polyiamond(hex_cells(1))));  // 6-cycle
}

TEST_CASE("canonical form collapses the isometry orbit") {
    std::mt19937 rng(23);
    for (int t = 0; t < 40; ++t) {
        const Polyiamond a = random_shape(8, rng);
        const Polyiamond canon = canonical_form(a);
        CHECK(canonical_form(canon) == canon);  // idempotent
        for (int i = 0; i < Isometry::count; ++i) {
            std::vector<TriCoord> img;
            for (TriCoord c : a.cells()) img.push_back(apply({i}, c));
            std::sort(img.begin(), img.end());
            CHECK(canonical_form(polyiamond_unchecked(img)) == canon);
        }
    }
}

TEST_CASE("canonical translation preserves orientation") {
    std::mt19937 rng(29);
    for (int t = 0; t < 30; ++t) {
        const Polyiamond a = random_shape(7, rng);
        int ups = 0, canon_ups = 0;
        for (TriCoord c : a.cells()) ups += is_up(c);
        const Polyiamond canon = canonical_form(a);
        for (TriCoord c : canon.cells()) canon_ups += is_up(c);
        // reflections and odd rotations may swap up/down counts, but the
        // multiset {ups, downs} is invariant
        const int downs = a.size() - ups;
        const int canon_downs = canon.size() - canon_ups;
        CHECK(std::minmax(ups, downs) == std::minmax(canon_ups, canon_downs));
    }
}

TEST_CASE("the three free 4-iamonds have distinct canonical forms") {
    std::set<std::vector<TriCoord>> canon;
    enumerate_fixed(4, [&](const Polyiamond& a) { canon.insert(canonical_form(a).cells()); });
    CHECK(canon.size() == 3);
}
