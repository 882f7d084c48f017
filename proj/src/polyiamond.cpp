#include "iamonds/polyiamond.hpp"

#include <algorithm>
#include <stdexcept>

namespace iamonds {

namespace {

std::vector<std::vector<TriCoord>> dual_components(const std::vector<TriCoord>& sorted) {
    const int n = static_cast<int>(sorted.size());
    std::vector<char> visited(n, 0);
    auto index_of = [&](TriCoord c) -> int {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), c);
        if (it == sorted.end() || *it != c) return -1;
        return static_cast<int>(it - sorted.begin());
    };
    std::vector<std::vector<TriCoord>> comps;
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (visited[start]) continue;
        visited[start] = 1;
        stack.assign(1, start);
        std::vector<TriCoord> comp;
        while (!stack.empty()) {
            const int i = stack.back();
            stack.pop_back();
            comp.push_back(sorted[i]);
            for (TriCoord nb : neighbors(sorted[i])) {
                const int j = index_of(nb);
                if (j >= 0 && !visited[j]) {
                    visited[j] = 1;
                    stack.push_back(j);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Dense occupancy grid over the shape's bounding box plus margin.
class CellGrid {
  public:
    CellGrid(const std::vector<TriCoord>& cells, int margin) {
        row0_ = cells.front().row;
        int row1 = cells.back().row;
        col0_ = cells.front().col;
        int col1 = col0_;
        for (TriCoord c : cells) {
            col0_ = std::min(col0_, c.col);
            col1 = std::max(col1, c.col);
        }
        row0_ -= margin;
        col0_ -= margin;
        height_ = row1 + margin - row0_ + 1;
        width_ = col1 + margin - col0_ + 1;
        state_.assign(static_cast<size_t>(height_) * width_, kEmpty);
        for (TriCoord c : cells) state_[index(c)] = kShape;
    }

    static constexpr uint8_t kEmpty = 0, kShape = 1, kOutside = 2, kHole = 3;

    size_t index(TriCoord c) const {
        return static_cast<size_t>(c.row - row0_) * width_ + (c.col - col0_);
    }
    bool in_bounds(TriCoord c) const {
        return c.row >= row0_ && c.row < row0_ + height_ && c.col >= col0_ &&
               c.col < col0_ + width_;
    }
    bool on_border(TriCoord c) const {
        return c.row == row0_ || c.row == row0_ + height_ - 1 || c.col == col0_ ||
               c.col == col0_ + width_ - 1;
    }
    uint8_t& at(TriCoord c) { return state_[index(c)]; }
    uint8_t at(TriCoord c) const { return state_[index(c)]; }

    int row0() const { return row0_; }
    int col0() const { return col0_; }
    int height() const { return height_; }
    int width() const { return width_; }

  private:
    int row0_, col0_, height_, width_;
    std::vector<uint8_t> state_;
};

}  // namespace

bool Polyiamond::contains(TriCoord c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

Polyiamond make_polyiamond(std::vector<TriCoord> cells) {
    if (cells.empty()) throw EmptyShapeError();
    std::sort(cells.begin(), cells.end());
    for (size_t i = 1; i < cells.size(); ++i)
        if (cells[i] == cells[i - 1]) throw DuplicateCellError(cells[i]);
    auto comps = dual_components(cells);
    if (comps.size() != 1) throw DisconnectedInteriorError(std::move(comps));
    return Polyiamond(std::move(cells));
}

Polyiamond polyiamond_unchecked(std::vector<TriCoord> sorted_unique) {
    return Polyiamond(std::move(sorted_unique));
}

long long interior_edges(const Polyiamond& a) {
    long long twice = 0;
    for (TriCoord c : a.cells())
        for (TriCoord nb : neighbors(c))
            if (a.contains(nb)) ++twice;
    return twice / 2;
}

long long perimeter(const Polyiamond& a) {
    return 3LL * a.size() - 2 * interior_edges(a);
}

bool dual_graph_is_tree(const Polyiamond& a) {
    return interior_edges(a) == a.size() - 1;
}

HoleSummary holes(const Polyiamond& a) {
    CellGrid grid(a.cells(), 2);

    // Flood the unbounded component inward from the margin.
    std::vector<TriCoord> stack;
    for (int r = grid.row0(); r < grid.row0() + grid.height(); ++r)
        for (int c = grid.col0(); c < grid.col0() + grid.width(); ++c) {
            TriCoord cell{r, c};
            if (grid.on_border(cell) && grid.at(cell) == CellGrid::kEmpty) {
                grid.at(cell) = CellGrid::kOutside;
                stack.push_back(cell);
            }
        }
    while (!stack.empty()) {
        TriCoord c = stack.back();
        stack.pop_back();
        for (TriCoord nb : neighbors(c)) {
            if (grid.in_bounds(nb) && grid.at(nb) == CellGrid::kEmpty) {
                grid.at(nb) = CellGrid::kOutside;
                stack.push_back(nb);
            }
        }
    }

    // Remaining empty cells are hole cells; group them into components.
    HoleSummary summary;
    for (int r = grid.row0(); r < grid.row0() + grid.height(); ++r)
        for (int c = grid.col0(); c < grid.col0() + grid.width(); ++c) {
            TriCoord seed{r, c};
            if (grid.at(seed) != CellGrid::kEmpty) continue;
            std::vector<TriCoord> comp;
            grid.at(seed) = CellGrid::kHole;
            stack.assign(1, seed);
            while (!stack.empty()) {
                TriCoord x = stack.back();
                stack.pop_back();
                comp.push_back(x);
                for (TriCoord nb : neighbors(x))
                    if (grid.at(nb) == CellGrid::kEmpty) {
                        grid.at(nb) = CellGrid::kHole;
                        stack.push_back(nb);
                    }
            }
            std::sort(comp.begin(), comp.end());
            summary.total_area += static_cast<long long>(comp.size());
            for (TriCoord x : comp)
                for (TriCoord nb : neighbors(x))
                    if (grid.in_bounds(nb) && grid.at(nb) == CellGrid::kShape)
                        ++summary.hole_perimeter;
            summary.holes.push_back(std::move(comp));
        }
    summary.count = static_cast<int>(summary.holes.size());
    summary.outer_perimeter = perimeter(a) - summary.hole_perimeter;
    return summary;
}

Polyiamond fill_holes(const Polyiamond& a) {
    HoleSummary hs = holes(a);
    if (hs.count == 0) return a;
    std::vector<TriCoord> cells = a.cells();
    for (const auto& hole : hs.holes) cells.insert(cells.end(), hole.begin(), hole.end());
    std::sort(cells.begin(), cells.end());
    return polyiamond_unchecked(std::move(cells));
}

std::vector<TriCoord> normalize_translation(std::span<const TriCoord> cells) {
    TriCoord lo = cells[0];
    for (TriCoord c : cells)
        if (c < lo) lo = c;
    int dr = -lo.row;
    int dc = -lo.col;
    if ((dr + dc) & 1) ++dc;  // keep (row+col) parity, so orientation survives
    std::vector<TriCoord> out;
    out.reserve(cells.size());
    for (TriCoord c : cells) out.push_back({c.row + dr, c.col + dc});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TriCoord> canonical_cells(std::span<const TriCoord> cells) {
    std::vector<TriCoord> best;
    std::vector<TriCoord> image(cells.size());
    for (int i = 0; i < Isometry::count; ++i) {
        for (size_t j = 0; j < cells.size(); ++j) image[j] = apply({i}, cells[j]);
        std::vector<TriCoord> norm = normalize_translation(image);
        if (best.empty() || norm < best) best = std::move(norm);
    }
    return best;
}

Polyiamond canonical_form(const Polyiamond& a) {
    return polyiamond_unchecked(canonical_cells(a.cells()));
}

Polyiamond strip(int n) {
    if (n < 1) throw std::invalid_argument("strip: n must be >= 1");
    std::vector<TriCoord> cells;
    cells.reserve(n);
    for (int c = 0; c < n; ++c) cells.push_back({0, c});
    return polyiamond_unchecked(std::move(cells));
}

}  // namespace iamonds
