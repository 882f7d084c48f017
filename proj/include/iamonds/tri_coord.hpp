// Coordinates, adjacency and the 12 vertex-fixing isometries of the
// triangular lattice.
//
// A cell (row, col) is an up-triangle iff row+col is even. Rows increase
// upward, cols increase rightward; within a row consecutive cells alternate
// orientation and share an inclined edge. The horizontal edge of an
// up-triangle is shared with (row-1, col), that of a down-triangle with
// (row+1, col). Planar anchor of a cell: x = col/2, y = row*sqrt(3)/2.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>

namespace iamonds {

enum class Orientation : uint8_t { Up, Down };

struct TriCoord {
    int row = 0;
    int col = 0;

    friend constexpr auto operator<=>(const TriCoord&, const TriCoord&) = default;
};

constexpr Orientation orientation(TriCoord c) {
    return ((c.row + c.col) & 1) == 0 ? Orientation::Up : Orientation::Down;
}

constexpr bool is_up(TriCoord c) { return orientation(c) == Orientation::Up; }

// The three edge-neighbors: both horizontal ones, then the cell across the
// horizontal edge.
constexpr std::array<TriCoord, 3> neighbors(TriCoord c) {
    const int third_row = is_up(c) ? c.row - 1 : c.row + 1;
    return {TriCoord{c.row, c.col - 1}, TriCoord{c.row, c.col + 1},
            TriCoord{third_row, c.col}};
}

constexpr bool are_neighbors(TriCoord a, TriCoord b) {
    for (TriCoord nb : neighbors(a))
        if (nb == b) return true;
    return false;
}

// Unordered pair of the two cells sharing an edge, stored sorted.
struct EdgeId {
    TriCoord a, b;

    static EdgeId between(TriCoord x, TriCoord y);

    friend constexpr auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

// One of the 12 symmetries of the tiling fixing the origin vertex
// (the planar point (0,0), shared by the six cells of hex_cells(1)).
// Index 0..5: rotations by 60*index degrees counterclockwise;
// index 6..11: the same rotations composed with the reflection across the
// vertical axis through the origin.
struct Isometry {
    int index = 0;

    static constexpr int count = 12;
    static constexpr Isometry identity() { return {0}; }

    friend constexpr auto operator<=>(const Isometry&, const Isometry&) = default;
};

// Generators, fixing the origin vertex:
//   rot60:  (r, c) -> (floor((r+c+1)/2), floor((c-3r-2)/2))
//   mirror: (r, c) -> (r, -c-2)
constexpr TriCoord rot60(TriCoord c) {
    return {(c.row + c.col + 1) >> 1, (c.col - 3 * c.row - 2) >> 1};
}

constexpr TriCoord mirror_col(TriCoord c) { return {c.row, -c.col - 2}; }

TriCoord apply(Isometry iso, TriCoord c);

// Group structure, recovered from the action (compose(a,b) acts as a after b).
Isometry compose(Isometry a, Isometry b);
Isometry inverse(Isometry iso);

struct TriCoordHash {
    size_t operator()(TriCoord c) const {
        uint64_t v = (static_cast<uint64_t>(static_cast<uint32_t>(c.row)) << 32) |
                     static_cast<uint32_t>(c.col);
        v *= 0x9e3779b97f4a7c15ull;
        return static_cast<size_t>(v ^ (v >> 29));
    }
};

}  // namespace iamonds
