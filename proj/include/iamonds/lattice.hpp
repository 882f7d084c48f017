// Benchmark shapes on the lattice: the regular hexagon Hex_k (6k^2 cells,
// centered at the origin vertex) and its concentric layers L_k (12k-6 cells).

#pragma once

#include <vector>

#include "iamonds/tri_coord.hpp"

namespace iamonds {

// Cells of the side-k regular hexagon centered at the origin vertex,
// sorted (row, col). Row r of Hex_k, with m = r >= 0 ? r : -1-r, spans
// cols [m-2k, 2k-m-2].
std::vector<TriCoord> hex_cells(int k);

// layer_cells(k) = hex_cells(k) \ hex_cells(k-1); layer_cells(1) = hex_cells(1).
std::vector<TriCoord> layer_cells(int k);

bool hex_contains(int k, TriCoord c);

}  // namespace iamonds
