// The validated polyiamond value and its topological invariants: perimeter,
// interior edges, dual graph, holes (bounded complement components).

#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "iamonds/tri_coord.hpp"

namespace iamonds {

struct EmptyShapeError : std::invalid_argument {
    EmptyShapeError() : std::invalid_argument("polyiamond must have at least one cell") {}
};

struct DuplicateCellError : std::invalid_argument {
    explicit DuplicateCellError(TriCoord c)
        : std::invalid_argument("duplicate cell (" + std::to_string(c.row) + "," +
                                std::to_string(c.col) + ")"),
          cell(c) {}
    TriCoord cell;
};

struct DisconnectedInteriorError : std::invalid_argument {
    explicit DisconnectedInteriorError(std::vector<std::vector<TriCoord>> comps)
        : std::invalid_argument("cells do not form a connected interior (" +
                                std::to_string(comps.size()) + " components)"),
          components(std::move(comps)) {}
    std::vector<std::vector<TriCoord>> components;
};

// Immutable, validated at construction: nonempty, duplicate-free, and
// edge-connected. Cells are stored sorted by (row, col).
class Polyiamond {
  public:
    const std::vector<TriCoord>& cells() const { return cells_; }
    int size() const { return static_cast<int>(cells_.size()); }
    bool contains(TriCoord c) const;

    friend bool operator==(const Polyiamond&, const Polyiamond&) = default;

  private:
    explicit Polyiamond(std::vector<TriCoord> sorted_unique)
        : cells_(std::move(sorted_unique)) {}

    friend Polyiamond make_polyiamond(std::vector<TriCoord> cells);
    friend Polyiamond polyiamond_unchecked(std::vector<TriCoord> sorted_unique);

    std::vector<TriCoord> cells_;
};

// Validates and constructs. Throws EmptyShapeError, DuplicateCellError, or
// DisconnectedInteriorError (listing the components).
Polyiamond make_polyiamond(std::vector<TriCoord> cells);

// Trusted constructor for callers that produce connected shapes by
// construction (enumerator, isometry images). Cells must be sorted unique.
Polyiamond polyiamond_unchecked(std::vector<TriCoord> sorted_unique);

struct HoleSummary {
    std::vector<std::vector<TriCoord>> holes;  // one sorted cell set per hole
    int count = 0;
    long long total_area = 0;
    long long hole_perimeter = 0;   // edges between a hole cell and a shape cell
    long long outer_perimeter = 0;  // perimeter - hole_perimeter
};

// Boundary edges: edges with exactly one endpoint cell in A.
long long perimeter(const Polyiamond& a);

// Edges shared by two cells of A; satisfies 3n = perimeter + 2*interior_edges.
long long interior_edges(const Polyiamond& a);

// Bounded complement components, found by edge-adjacency flood fill over the
// bounding box of A expanded by a 2-cell margin.
HoleSummary holes(const Polyiamond& a);

// True iff interior_edges(a) == size - 1 (connectivity already guaranteed).
bool dual_graph_is_tree(const Polyiamond& a);

// Union of A with all of its hole cells.
Polyiamond fill_holes(const Polyiamond& a);

// Representative of the isometry orbit: least cell sequence over the 12
// isometry images, each translated so its scan-minimal cell lands on (0,0)
// or (0,1) (translations preserve (row+col) parity).
Polyiamond canonical_form(const Polyiamond& a);

// n cells in a row: (0,0) .. (0,n-1).
Polyiamond strip(int n);

// Translation normal form used by canonical_form and the enumerator.
// Returns cells sorted, shifted so the (row, col)-minimal cell maps to
// (0,0) or (0,1) depending on parity.
std::vector<TriCoord> normalize_translation(std::span<const TriCoord> cells);

std::vector<TriCoord> canonical_cells(std::span<const TriCoord> cells);

}  // namespace iamonds
