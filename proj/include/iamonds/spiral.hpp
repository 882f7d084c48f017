// The sequences h_k = 3*C(k,2) and n_k = (9k^2 + 3k - 4)/2, the inductive
// spiral construction Spir_k realizing g(h_k) = n_k, and certification of
// its structural properties (dual tree, area-1 holes, minimal outer
// perimeter).

#pragma once

#include <stdexcept>
#include <utility>

#include "iamonds/polyiamond.hpp"

namespace iamonds {

struct SpiralConstructionError : std::logic_error {
    using std::logic_error::logic_error;
};

// h_k = (3/2)k(k-1), n_k = (9k^2 + 3k - 4)/2; n_k + h_k = 6k^2 - 2. k >= 2.
long long seq_h(long long k);
long long seq_n(long long k);

// (seq_h(k+1) - seq_h(k), seq_n(k+1) - seq_n(k)) = (3k, 9k+6).
std::pair<long long, long long> seq_diffs(long long k);

// Builds Spir_k inside Hex_k, inductively from the hardcoded Spir_2 / Spir_3
// base (by parity of k). Each step from Spir_{j-2} adds the two bottom-right
// corner cells of L_{j-2}, all down-triangles of L_{j-1}, all of L_j except
// its two bottom-right corner cells, and then moves the penultimate
// bottom-row up-triangle of L_{j-2} into the penultimate bottom-row up-slot
// of L_{j-1}. Any step that breaks connectivity throws
// SpiralConstructionError (it would mean the orientation conventions are
// wrong, not that the input is bad).
Polyiamond spir(int k);

struct SpiralCertificate {
    int k = 0;
    long long tiles = 0;
    long long holes = 0;
    bool all_holes_area_one = false;
    bool dual_tree = false;
    long long outer_perimeter = 0;
    long long p_min_of_filled = 0;
    bool passes = false;
};

// Verifies the full property bundle for spir(k).
SpiralCertificate certify(int k);

}  // namespace iamonds
