#include <algorithm>
#include <random>
#include <set>

#include <doctest.h>

#include "iamonds/lattice.hpp"
#include "iamonds/tri_coord.hpp"

using namespace iamonds;

TEST_CASE("orientation follows (row+col) parity") {
    CHECK(orientation({0, 0}) == Orientation::Up);
    CHECK(orientation({0, 1}) == Orientation::Down);
    CHECK(orientation({1, 0}) == Orientation::Down);
    CHECK(orientation({-1, -1}) == Orientation::Up);
    CHECK(orientation({-3, 2}) == Orientation::Down);
}

TEST_CASE("neighbors: horizontal pair plus the cell across the base") {
    auto nb = neighbors({0, 0});
    std::set<TriCoord> got(nb.begin(), nb.end());
    CHECK(got == std::set<TriCoord>{{0, -1}, {0, 1}, {-1, 0}});
    nb = neighbors({0, 1});
    got = {nb.begin(), nb.end()};
    CHECK(got == std::set<TriCoord>{{0, 0}, {0, 2}, {1, 1}});
}

TEST_CASE("adjacency is symmetric") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-50, 50);
    for (int i = 0; i < 500; ++i) {
        const TriCoord c{d(rng), d(rng)};
        for (TriCoord nb : neighbors(c)) CHECK(are_neighbors(nb, c));
    }
}

TEST_CASE("EdgeId is unordered and requires adjacency") {
    CHECK(EdgeId::between({0, 0}, {0, 1}) == EdgeId::between({0, 1}, {0, 0}));
    CHECK_THROWS_AS(EdgeId::between({0, 0}, {0, 2}), std::invalid_argument);
}

TEST_CASE("isometries form a group acting on the lattice") {
    CHECK(apply(Isometry::identity(), {3, 5}) == TriCoord{3, 5});

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-40, 40);

    SUBCASE("order of every element divides 12") {
        for (int i = 0; i < Isometry::count; ++i) {
            const TriCoord c{d(rng), d(rng)};
            TriCoord x = c;
            for (int t = 0; t < 12; ++t) x = apply({i}, x);
            CHECK(x == c);
        }
    }

    SUBCASE("adjacency preserved for 1000 random (iso, coord) pairs") {
        std::uniform_int_distribution<int> iso(0, 11);
        for (int t = 0; t < 1000; ++t) {
            const Isometry m{iso(rng)};
            const TriCoord c{d(rng), d(rng)};
            const auto nb = neighbors(c);
            std::set<TriCoord> mapped;
            for (TriCoord x : nb) mapped.insert(apply(m, x));
            const auto nb2 = neighbors(apply(m, c));
            CHECK(mapped == std::set<TriCoord>(nb2.begin(), nb2.end()));
        }
    }

    SUBCASE("compose matches the action and inverses cancel") {
        for (int a = 0; a < 12; ++a)
            for (int b = 0; b < 12; ++b) {
                const TriCoord c{d(rng), d(rng)};
                CHECK(apply(compose({a}, {b}), c) == apply({a}, apply({b}, c)));
            }
        for (int a = 0; a < 12; ++a) {
            CHECK(compose(inverse({a}), {a}) == Isometry::identity());
            CHECK(compose({a}, inverse({a})) == Isometry::identity());
        }
    }
}

TEST_CASE("hexagon and layer cell counts") {
    CHECK(hex_cells(1).size() == 6);
    CHECK(layer_cells(2).size() == 18);
    CHECK(hex_cells(3).size() == 54);
    CHECK_THROWS_AS(hex_cells(0), std::invalid_argument);
    CHECK_THROWS_AS(layer_cells(0), std::invalid_argument);

    for (int k = 1; k <= 12; ++k) {
        CHECK(hex_cells(k).size() == static_cast<size_t>(6) * k * k);
        CHECK(layer_cells(k).size() == static_cast<size_t>(12) * k - 6);
        // layer sum reproduces the hexagon count
        size_t sum = 0;
        for (int i = 1; i <= k; ++i) sum += layer_cells(i).size();
        CHECK(sum == hex_cells(k).size());
    }
}

TEST_CASE("layers split evenly between orientations") {
    for (int k = 1; k <= 8; ++k) {
        int ups = 0;
        for (TriCoord c : layer_cells(k)) ups += is_up(c);
        CHECK(ups == 6 * k - 3);
        CHECK(static_cast<int>(layer_cells(k).size()) - ups == 6 * k - 3);
    }
}

TEST_CASE("layer is the set difference of consecutive hexagons") {
    for (int k = 2; k <= 6; ++k) {
        const auto hk = hex_cells(k);
        const auto hk1 = hex_cells(k - 1);
        std::vector<TriCoord> diff;
        std::set_difference(hk.begin(), hk.end(), hk1.begin(), hk1.end(),
                            std::back_inserter(diff));
        CHECK(diff == layer_cells(k));
    }
}

TEST_CASE("every isometry is a bijection on hex_cells(k)") {
    for (int k = 1; k <= 4; ++k) {
        const auto cells = hex_cells(k);
        const std::set<TriCoord> base(cells.begin(), cells.end());
        for (int i = 0; i < Isometry::count; ++i) {
            std::set<TriCoord> image;
            for (TriCoord c : cells) image.insert(apply({i}, c));
            CHECK(image == base);
        }
    }
}
