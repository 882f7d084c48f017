// Exhaustive ground truth: Redelmeier-style enumeration of fixed polyiamonds
// (translation classes, canonical root + forbidden-cell marking adapted to
// 3-neighbor adjacency), free counting via canonical representatives,
// empirical extremal values, and the hole-maximization searches.
//
// Two implementations are kept side by side: a serial recursive reference
// and an OpenMP runner that partitions the search tree by its first growth
// choices and merges per-task results in task order, so results are
// identical for any job count.

#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "iamonds/polyiamond.hpp"

namespace iamonds {

struct EnumLimits {
    int max_n = 16;  // guard against accidental huge runs; configuration, not constant
};

struct EnumOptions {
    int jobs = 0;  // 0 = all available parallelism
    EnumLimits limits{};
};

struct EnumerationCapError : std::invalid_argument {
    EnumerationCapError(int n, int cap)
        : std::invalid_argument("enumeration size " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap)),
          n(n),
          cap(cap) {}
    int n, cap;
};

struct WitnessNotFoundError : std::runtime_error {
    WitnessNotFoundError(long long h, long long bound, long long cap)
        : std::runtime_error("no polyiamond with " + std::to_string(h) +
                             " holes found for n in [" + std::to_string(bound) + ", " +
                             std::to_string(cap) + "]"),
          h(h),
          lower_bound(bound),
          cap(cap) {}
    long long h, lower_bound, cap;
};

// Serial reference enumeration. Invokes the visitor exactly once per
// translation class of connected n-cell shapes, in a deterministic DFS
// order; shapes are normalized (scan-minimal cell at (0,0) or (0,1)).
void enumerate_fixed(int n, const std::function<void(const Polyiamond&)>& visitor,
                     const EnumLimits& limits = {});

struct EnumStats {
    int n = 0;
    long long fixed_count = 0;
    long long free_count = -1;    // -1 when not requested
    long long min_perimeter = 0;
    long long min_interior_edges = 0;
    long long max_holes = -1;     // -1 when not requested
    std::optional<Polyiamond> witness_max_holes;
};

// Parallel fold over all fixed n-cell shapes.
EnumStats enum_stats(int n, bool with_free, bool with_holes, const EnumOptions& opts = {});

long long count_fixed(int n, const EnumOptions& opts = {});

// Number of canonical_form-distinct classes (free polyiamonds), counted by
// visiting each class exactly once at its canonical representative.
long long count_free(int n, const EnumOptions& opts = {});

// Exhaustive maximum hole count with a stored witness. Skips the flood fill
// for shapes whose interior edge count already caps their hole count below
// the running maximum (Lemma 2.2 algebra with the shape's own b), and skips
// everything when even one hole is infeasible at this n.
EnumStats f_max_holes(int n, const EnumOptions& opts = {});

struct GSearchResult {
    long long h = 0;            // requested hole count
    long long tiles = 0;        // minimal n admitting >= h holes
    long long holes_found = 0;  // holes of the witness
    bool exact = false;         // holes_found == h
    Polyiamond witness;
};

// Searches upward from g_lower_bound(h) for the first n admitting a shape
// with at least h holes. Deterministic for any job count. Throws
// WitnessNotFoundError when n_cap is exhausted.
GSearchResult g_min_tiles(long long h, int n_cap, const EnumOptions& opts = {});

// Exhaustive minima; equal to p_min(n) and n-1 by the paper's results.
long long empirical_pmin(int n, const EnumOptions& opts = {});
long long empirical_bmin(int n, const EnumOptions& opts = {});

// Independent oracle: connected n-subsets of a bounding box, one
// representative per translation class (scan-minimal cell fixed at (0,0) or
// (0,1)). Exponential; practical for n <= 7. Returns sorted shapes.
std::vector<std::vector<TriCoord>> naive_fixed_shapes(int n);

}  // namespace iamonds
