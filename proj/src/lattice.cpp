#include "iamonds/lattice.hpp"

#include <stdexcept>

namespace iamonds {

namespace {
void require_positive(int k, const char* op) {
    if (k < 1) throw std::invalid_argument(std::string(op) + ": k must be >= 1");
}
}  // namespace

std::vector<TriCoord> hex_cells(int k) {
    require_positive(k, "hex_cells");
    std::vector<TriCoord> cells;
    cells.reserve(static_cast<size_t>(6) * k * k);
    for (int r = -k; r < k; ++r) {
        const int m = r >= 0 ? r : -1 - r;
        for (int c = m - 2 * k; c <= 2 * k - m - 2; ++c) cells.push_back({r, c});
    }
    return cells;
}

std::vector<TriCoord> layer_cells(int k) {
    require_positive(k, "layer_cells");
    if (k == 1) return hex_cells(1);
    std::vector<TriCoord> cells;
    cells.reserve(static_cast<size_t>(12) * k - 6);
    for (TriCoord c : hex_cells(k))
        if (!hex_contains(k - 1, c)) cells.push_back(c);
    return cells;
}

bool hex_contains(int k, TriCoord c) {
    if (c.row < -k || c.row >= k) return false;
    const int m = c.row >= 0 ? c.row : -1 - c.row;
    return c.col >= m - 2 * k && c.col <= 2 * k - m - 2;
}

}  // namespace iamonds
