#include "iamonds/tri_coord.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace iamonds {

EdgeId EdgeId::between(TriCoord x, TriCoord y) {
    if (!are_neighbors(x, y))
        throw std::invalid_argument("EdgeId::between: cells do not share an edge");
    if (y < x) std::swap(x, y);
    return {x, y};
}

TriCoord apply(Isometry iso, TriCoord c) {
    assert(iso.index >= 0 && iso.index < Isometry::count);
    if (iso.index >= 6) c = mirror_col(c);
    for (int i = iso.index % 6; i > 0; --i) c = rot60(c);
    return c;
}

namespace {

// The 12 maps are distinguished by their action on two generic cells.
constexpr TriCoord kProbeA{3, 7};
constexpr TriCoord kProbeB{-2, 5};

struct GroupTables {
    std::array<std::array<int8_t, 12>, 12> comp;
    std::array<int8_t, 12> inv;

    GroupTables() {
        std::array<std::pair<TriCoord, TriCoord>, 12> action;
        for (int i = 0; i < 12; ++i)
            action[i] = {apply({i}, kProbeA), apply({i}, kProbeB)};
        for (int i = 0; i < 12; ++i)
            for (int j = 0; j < 12; ++j)
                assert(i == j || action[i] != action[j]);

        auto find = [&](std::pair<TriCoord, TriCoord> act) {
            for (int i = 0; i < 12; ++i)
                if (action[i] == act) return i;
            assert(false && "composite is not one of the 12 isometries");
            return -1;
        };
        for (int a = 0; a < 12; ++a) {
            for (int b = 0; b < 12; ++b) {
                std::pair<TriCoord, TriCoord> act = {
                    apply({a}, apply({b}, kProbeA)), apply({a}, apply({b}, kProbeB))};
                comp[a][b] = static_cast<int8_t>(find(act));
            }
            for (int b = 0; b < 12; ++b)
                if (comp[a][b] == 0) inv[a] = static_cast<int8_t>(b);
        }
    }
};

const GroupTables& tables() {
    static const GroupTables t;
    return t;
}

}  // namespace

Isometry compose(Isometry a, Isometry b) {
    return {tables().comp[a.index][b.index]};
}

Isometry inverse(Isometry iso) { return {tables().inv[iso.index]}; }

}  // namespace iamonds
