#include "iamonds/spiral.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "iamonds/bounds.hpp"
#include "iamonds/lattice.hpp"

namespace iamonds {

namespace {

void require_k(long long k, const char* op) {
    if (k < 2) throw std::invalid_argument(std::string(op) + ": k must be >= 2");
}

// Spir_2: the down-triangles of L_1 plus all of L_2 except its two
// bottom-right corner cells. Holes are the three up-triangles of L_1.
constexpr TriCoord kSpir2[] = {
    {-2, -3}, {-2, -2}, {-2, -1},
    {-1, -4}, {-1, -3}, {-1, -2}, {-1, 0}, {-1, 1}, {-1, 2},
    {0, -4},  {0, -3},  {0, -1},  {0, 1},  {0, 2},
    {1, -3},  {1, -2},  {1, -1},  {1, 0},  {1, 1},
};

// Spir_3: Hex_3 minus the two bottom-right corner cells and nine enclosed
// up-triangles. The layout is pinned by certification (43 tiles, 9 area-1
// holes, dual tree, p_out = p_min(52)), not by the paper's figure.
constexpr TriCoord kSpir3[] = {
    {-3, -4}, {-3, -3}, {-3, -2}, {-3, -1}, {-3, 0},
    {-2, -5}, {-2, -3}, {-2, -2}, {-2, -1}, {-2, 1}, {-2, 2}, {-2, 3},
    {-1, -6}, {-1, -5}, {-1, -4}, {-1, -3}, {-1, -2}, {-1, 0}, {-1, 2}, {-1, 3}, {-1, 4},
    {0, -6},  {0, -5},  {0, -3},  {0, -2},  {0, -1},  {0, 0},  {0, 1},  {0, 3},  {0, 4},
    {1, -5},  {1, -4},  {1, -2},  {1, 0},   {1, 2},   {1, 3},
    {2, -4},  {2, -3},  {2, -2},  {2, -1},  {2, 0},   {2, 1},  {2, 2},
};

using CellSet = std::unordered_set<TriCoord, TriCoordHash>;

bool set_connected(const CellSet& cells) {
    if (cells.empty()) return false;
    CellSet seen;
    std::vector<TriCoord> stack{*cells.begin()};
    seen.insert(stack.back());
    while (!stack.empty()) {
        TriCoord c = stack.back();
        stack.pop_back();
        for (TriCoord nb : neighbors(c))
            if (cells.contains(nb) && seen.insert(nb).second) stack.push_back(nb);
    }
    return seen.size() == cells.size();
}

}  // namespace

long long seq_h(long long k) {
    require_k(k, "seq_h");
    return 3 * k * (k - 1) / 2;
}

long long seq_n(long long k) {
    require_k(k, "seq_n");
    return (9 * k * k + 3 * k - 4) / 2;
}

std::pair<long long, long long> seq_diffs(long long k) {
    require_k(k, "seq_diffs");
    return {seq_h(k + 1) - seq_h(k), seq_n(k + 1) - seq_n(k)};
}

Polyiamond spir(int k) {
    require_k(k, "spir");
    CellSet cells;
    int j0;
    if (k % 2 == 0) {
        cells.insert(std::begin(kSpir2), std::end(kSpir2));
        j0 = 2;
    } else {
        cells.insert(std::begin(kSpir3), std::end(kSpir3));
        j0 = 3;
    }
    for (int j = j0 + 2; j <= k; j += 2) {
        // (a) complete the bottom-right corner of L_{j-2}
        cells.insert({2 - j, j - 4});
        cells.insert({2 - j, j - 3});
        // (b) all down-triangles of L_{j-1}
        for (TriCoord c : layer_cells(j - 1))
            if (!is_up(c)) cells.insert(c);
        // (c) all of L_j except its bottom-right corner
        for (TriCoord c : layer_cells(j)) cells.insert(c);
        cells.erase({-j, j - 2});
        cells.erase({-j, j - 1});
        // (d) shift the penultimate bottom-row up-triangle of L_{j-2} into
        // the penultimate bottom-row up-slot of L_{j-1}
        const TriCoord vacated{2 - j, j - 6};
        const TriCoord filled{1 - j, j - 5};
        if (!cells.contains(vacated) || cells.contains(filled))
            throw SpiralConstructionError("spir: move step does not match conventions at j=" +
                                          std::to_string(j));
        cells.erase(vacated);
        cells.insert(filled);
        if (!set_connected(cells))
            throw SpiralConstructionError("spir: disconnected after step j=" +
                                          std::to_string(j));
    }
    std::vector<TriCoord> out(cells.begin(), cells.end());
    std::sort(out.begin(), out.end());
    return make_polyiamond(std::move(out));
}

SpiralCertificate certify(int k) {
    require_k(k, "certify");
    const Polyiamond s = spir(k);
    const HoleSummary hs = holes(s);
    SpiralCertificate cert;
    cert.k = k;
    cert.tiles = s.size();
    cert.holes = hs.count;
    cert.all_holes_area_one = hs.total_area == hs.count;
    cert.dual_tree = dual_graph_is_tree(s);
    cert.outer_perimeter = hs.outer_perimeter;
    cert.p_min_of_filled = p_min(seq_n(k) + seq_h(k));
    cert.passes = cert.tiles == seq_n(k) && cert.holes == seq_h(k) &&
                  cert.all_holes_area_one && cert.dual_tree &&
                  cert.outer_perimeter == cert.p_min_of_filled;
    return cert;
}

}  // namespace iamonds
