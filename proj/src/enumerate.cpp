#include "iamonds/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstring>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "iamonds/bounds.hpp"

namespace iamonds {

namespace {

constexpr int kEngineMaxN = 24;
constexpr int kMaxUntried = 2 * kEngineMaxN + 4;

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

struct Task {
    std::vector<uint16_t> shape;
    std::vector<uint16_t> untried;
    std::vector<uint8_t> occupied;
    std::vector<uint8_t> seen;
    int b = 0;
    int root_col = 0;
};

// Grid-backed Redelmeier search state. The grid covers rows [-2, n+2) and
// cols [-(n+1), n+3) so a 2-cell margin always surrounds any reachable
// shape, which lets hole flood fills run in place.
class Engine {
  public:
    using LeafFn = bool (*)(void*, Engine&);  // return false to stop this task

    explicit Engine(int n)
        : n_(n),
          width_(2 * n + 4),
          height_(n + 4),
          row0_(-2),
          col0_(-(n + 1)),
          cells_(static_cast<size_t>(width_) * height_) {
        occupied_.assign(cells_, 0);
        seen_.assign(cells_, 0);
        allowed_.assign(cells_, 0);
        is_up_.assign(cells_, 0);
        stamp_.assign(cells_, 0);
        for (int idx = 0; idx < static_cast<int>(cells_); ++idx)
            is_up_[idx] = ((decode(idx).row + decode(idx).col) & 1) == 0;
        shape_.reserve(n);
    }

    int n() const { return n_; }
    int b() const { return b_; }
    void set_bcap(int bcap) { bcap_ = bcap; }

    TriCoord decode(int idx) const {
        return {idx / width_ + row0_, idx % width_ + col0_};
    }
    int encode(TriCoord c) const {
        return (c.row - row0_) * width_ + (c.col - col0_);
    }

    void run_serial(int root_col, LeafFn leaf, void* ctx) {
        set_root(root_col);
        if (n_ == 1) {
            if (!leaf(ctx, *this)) stop_ = true;
        } else {
            uint16_t untried[kMaxUntried];
            const int cnt = root_candidates(untried);
            rec(untried, cnt, leaf, ctx);
        }
        clear_root();
    }

    void collect_tasks(int root_col, int depth, std::vector<Task>& out) {
        set_root(root_col);
        if (n_ == 1) {
            out.push_back(snapshot(nullptr, 0));
        } else {
            uint16_t untried[kMaxUntried];
            const int cnt = root_candidates(untried);
            collect(untried, cnt, depth, out);
        }
        clear_root();
    }

    void run_task(const Task& t, LeafFn leaf, void* ctx) {
        set_root(t.root_col);
        std::copy(t.occupied.begin(), t.occupied.end(), occupied_.begin());
        std::copy(t.seen.begin(), t.seen.end(), seen_.begin());
        shape_.assign(t.shape.begin(), t.shape.end());
        b_ = t.b;
        stop_ = false;
        if (static_cast<int>(shape_.size()) == n_) {
            if (!leaf(ctx, *this)) stop_ = true;
        } else {
            rec(t.untried.data(), static_cast<int>(t.untried.size()), leaf, ctx);
        }
        std::fill(occupied_.begin(), occupied_.end(), 0);
        std::fill(seen_.begin(), seen_.end(), 0);
        shape_.clear();
        b_ = 0;
    }

    // Cells of the current leaf, sorted.
    void leaf_cells(std::vector<TriCoord>& out) const {
        out.clear();
        for (uint16_t idx : shape_) out.push_back(decode(idx));
        std::sort(out.begin(), out.end());
    }

    // Bounded complement components of the current leaf, by flood fill over
    // its bounding box expanded by 2 (fits in the grid margin).
    int leaf_hole_count() {
        int r0 = INT_MAX, r1 = INT_MIN, c0 = INT_MAX, c1 = INT_MIN;
        for (uint16_t idx : shape_) {
            const int gr = idx / width_, gc = idx % width_;
            r0 = std::min(r0, gr); r1 = std::max(r1, gr);
            c0 = std::min(c0, gc); c1 = std::max(c1, gc);
        }
        r0 -= 2; r1 += 2; c0 -= 2; c1 += 2;
        next_gen();
        fill_stack_.clear();
        auto push_outside = [&](int idx) {
            if (stamp_[idx] != gen_ && !occupied_[idx]) {
                stamp_[idx] = gen_;
                fill_stack_.push_back(static_cast<uint16_t>(idx));
            }
        };
        for (int gc = c0; gc <= c1; ++gc) {
            push_outside(r0 * width_ + gc);
            push_outside(r1 * width_ + gc);
        }
        for (int gr = r0; gr <= r1; ++gr) {
            push_outside(gr * width_ + c0);
            push_outside(gr * width_ + c1);
        }
        flood(r0, r1, c0, c1);
        int count = 0;
        for (int gr = r0 + 1; gr < r1; ++gr)
            for (int gc = c0 + 1; gc < c1; ++gc) {
                const int idx = gr * width_ + gc;
                if (!occupied_[idx] && stamp_[idx] != gen_) {
                    ++count;
                    stamp_[idx] = gen_;
                    fill_stack_.assign(1, static_cast<uint16_t>(idx));
                    flood(r0, r1, c0, c1);
                }
            }
        return count;
    }

    // True iff no normalized isometry image precedes the (already
    // normalized) leaf in cell-sequence order.
    bool leaf_is_canonical_rep() {
        uint32_t self_keys[kEngineMaxN];
        const int n = n_;
        {
            int i = 0;
            for (uint16_t idx : shape_) {
                const TriCoord c = decode(idx);
                self_keys[i++] = pack(c.row, c.col);
            }
            insertion_sort(self_keys, n);
        }
        TriCoord img[kEngineMaxN];
        uint32_t keys[kEngineMaxN];
        for (int iso = 1; iso < Isometry::count; ++iso) {
            TriCoord lo{INT_MAX, INT_MAX};
            {
                int i = 0;
                for (uint16_t idx : shape_) {
                    img[i] = apply({iso}, decode(idx));
                    if (img[i] < lo) lo = img[i];
                    ++i;
                }
            }
            int dr = -lo.row, dc = -lo.col;
            if ((dr + dc) & 1) ++dc;
            for (int i = 0; i < n; ++i) keys[i] = pack(img[i].row + dr, img[i].col + dc);
            insertion_sort(keys, n);
            if (std::lexicographical_compare(keys, keys + n, self_keys, self_keys + n))
                return false;
        }
        return true;
    }

  private:
    void set_root(int root_col) {
        root_col_ = root_col;
        std::fill(allowed_.begin(), allowed_.end(), 0);
        for (int r = 0; r < n_; ++r)
            for (int c = root_col - (n_ - 1); c <= root_col + (n_ - 1); ++c)
                if (r > 0 || c > root_col) allowed_[encode({r, c})] = 1;
        const int root = encode({0, root_col});
        occupied_[root] = 1;
        seen_[root] = 1;
        shape_.assign(1, static_cast<uint16_t>(root));
        b_ = 0;
        stop_ = false;
    }

    void clear_root() {
        std::fill(occupied_.begin(), occupied_.end(), 0);
        std::fill(seen_.begin(), seen_.end(), 0);
        shape_.clear();
        b_ = 0;
    }

    int root_candidates(uint16_t* untried) {
        int cnt = 0;
        const int root = shape_[0];
        for (int nb : {root - 1, root + 1, third_neighbor(root)})
            if (allowed_[nb] && !seen_[nb]) {
                seen_[nb] = 1;
                untried[cnt++] = static_cast<uint16_t>(nb);
            }
        return cnt;
    }

    int third_neighbor(int idx) const { return is_up_[idx] ? idx - width_ : idx + width_; }

    void rec(const uint16_t* untried, int cnt, LeafFn leaf, void* ctx) {
        uint16_t local[kMaxUntried];
        std::memcpy(local, untried, static_cast<size_t>(cnt) * sizeof(uint16_t));
        const int size_after = static_cast<int>(shape_.size()) + 1;
        while (cnt > 0) {
            const int c = local[--cnt];
            const int third = third_neighbor(c);
            const int db = occupied_[c - 1] + occupied_[c + 1] + occupied_[third];
            if (b_ + db + (n_ - size_after) <= bcap_) {
                occupied_[c] = 1;
                shape_.push_back(static_cast<uint16_t>(c));
                b_ += db;
                if (size_after == n_) {
                    if (!leaf(ctx, *this)) stop_ = true;
                } else {
                    int added = 0;
                    for (int nb : {c - 1, c + 1, third})
                        if (allowed_[nb] && !seen_[nb]) {
                            seen_[nb] = 1;
                            local[cnt + added++] = static_cast<uint16_t>(nb);
                        }
                    rec(local, cnt + added, leaf, ctx);
                    for (int i = 0; i < added; ++i) seen_[local[cnt + i]] = 0;
                }
                occupied_[c] = 0;
                shape_.pop_back();
                b_ -= db;
                if (stop_) return;
            }
        }
    }

    void collect(const uint16_t* untried, int cnt, int depth, std::vector<Task>& out) {
        if (static_cast<int>(shape_.size()) == depth) {
            out.push_back(snapshot(untried, cnt));
            return;
        }
        uint16_t local[kMaxUntried];
        std::memcpy(local, untried, static_cast<size_t>(cnt) * sizeof(uint16_t));
        const int size_after = static_cast<int>(shape_.size()) + 1;
        while (cnt > 0) {
            const int c = local[--cnt];
            const int third = third_neighbor(c);
            const int db = occupied_[c - 1] + occupied_[c + 1] + occupied_[third];
            occupied_[c] = 1;
            shape_.push_back(static_cast<uint16_t>(c));
            b_ += db;
            if (size_after == n_) {
                out.push_back(snapshot(nullptr, 0));
            } else {
                int added = 0;
                for (int nb : {c - 1, c + 1, third})
                    if (allowed_[nb] && !seen_[nb]) {
                        seen_[nb] = 1;
                        local[cnt + added++] = static_cast<uint16_t>(nb);
                    }
                collect(local, cnt + added, depth, out);
                for (int i = 0; i < added; ++i) seen_[local[cnt + i]] = 0;
            }
            occupied_[c] = 0;
            shape_.pop_back();
            b_ -= db;
        }
    }

    Task snapshot(const uint16_t* untried, int cnt) const {
        Task t;
        t.shape.assign(shape_.begin(), shape_.end());
        t.untried.assign(untried, untried + cnt);
        t.occupied = occupied_;
        t.seen = seen_;
        t.b = b_;
        t.root_col = root_col_;
        return t;
    }

    void next_gen() {
        if (++gen_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            gen_ = 1;
        }
    }

    void flood(int r0, int r1, int c0, int c1) {
        while (!fill_stack_.empty()) {
            const int idx = fill_stack_.back();
            fill_stack_.pop_back();
            const int gr = idx / width_, gc = idx % width_;
            const int tr = is_up_[idx] ? gr - 1 : gr + 1;
            const int nbs[3] = {gc > c0 ? idx - 1 : -1, gc < c1 ? idx + 1 : -1,
                                (tr >= r0 && tr <= r1) ? third_neighbor(idx) : -1};
            for (int nb : nbs)
                if (nb >= 0 && !occupied_[nb] && stamp_[nb] != gen_) {
                    stamp_[nb] = gen_;
                    fill_stack_.push_back(static_cast<uint16_t>(nb));
                }
        }
    }

    static uint32_t pack(int row, int col) {
        return (static_cast<uint32_t>(row) << 16) | static_cast<uint16_t>(col + 32);
    }
    static void insertion_sort(uint32_t* a, int n) {
        for (int i = 1; i < n; ++i) {
            const uint32_t v = a[i];
            int j = i - 1;
            while (j >= 0 && a[j] > v) {
                a[j + 1] = a[j];
                --j;
            }
            a[j + 1] = v;
        }
    }

    int n_, width_, height_, row0_, col0_;
    size_t cells_;
    std::vector<uint8_t> occupied_, seen_, allowed_, is_up_;
    std::vector<uint32_t> stamp_;
    uint32_t gen_ = 0;
    std::vector<uint16_t> shape_;
    std::vector<uint16_t> fill_stack_;
    int b_ = 0;
    int bcap_ = std::numeric_limits<int>::max();
    int root_col_ = 0;
    bool stop_ = false;
};

int partition_depth(int n) { return std::min(n >= 10 ? 6 : (n >= 4 ? 2 : 1), n - 1); }

std::vector<Task> build_tasks(int n, int bcap = std::numeric_limits<int>::max()) {
    Engine eng(n);
    eng.set_bcap(bcap);
    std::vector<Task> tasks;
    const int depth = partition_depth(n);
    eng.collect_tasks(0, depth, tasks);
    eng.collect_tasks(1, depth, tasks);
    return tasks;
}

void check_cap(int n, const EnumLimits& limits) {
    if (n < 1 || n > limits.max_n) throw EnumerationCapError(n, limits.max_n);
    if (n > kEngineMaxN) throw EnumerationCapError(n, kEngineMaxN);
}

// ---- stats fold ------------------------------------------------------------

struct StatsAcc {
    long long fixed = 0;
    long long free_cnt = 0;
    int min_b = INT_MAX;
    int max_b = -1;
    long long max_holes = -1;
    std::vector<TriCoord> witness;
};

struct StatsCtx {
    StatsAcc acc;
    bool want_free = false;
    bool want_holes = false;
    const std::vector<int>* hcap_by_b = nullptr;  // indexed by b - (n-1)
    int n = 0;
};

bool stats_leaf(void* vctx, Engine& eng) {
    auto& ctx = *static_cast<StatsCtx*>(vctx);
    auto& acc = ctx.acc;
    ++acc.fixed;
    const int b = eng.b();
    acc.min_b = std::min(acc.min_b, b);
    acc.max_b = std::max(acc.max_b, b);
    if (ctx.want_free && eng.leaf_is_canonical_rep()) ++acc.free_cnt;
    if (ctx.want_holes) {
        const long long cap = (*ctx.hcap_by_b)[b - (ctx.n - 1)];
        if (cap > acc.max_holes) {
            const long long h = eng.leaf_hole_count();
            if (h > acc.max_holes) {
                acc.max_holes = h;
                eng.leaf_cells(acc.witness);
            }
        }
    }
    return true;
}

void merge_stats(StatsAcc& into, StatsAcc&& from) {
    into.fixed += from.fixed;
    into.free_cnt += from.free_cnt;
    into.min_b = std::min(into.min_b, from.min_b);
    into.max_b = std::max(into.max_b, from.max_b);
    if (from.max_holes > into.max_holes) {
        into.max_holes = from.max_holes;
        into.witness = std::move(from.witness);
    }
}

StatsAcc run_stats(int n, bool want_free, bool want_holes, int jobs) {
    const std::vector<Task> tasks = build_tasks(n);
    std::vector<int> hcaps;
    if (want_holes) {
        // largest h with 3h <= 3n - 2b - p_min(n+h): the isoperimetric bound
        // with the shape's own interior edge count; used to skip flood fills
        hcaps.assign(static_cast<size_t>(2 * n + 2), 0);
        for (int b = n - 1; b <= 3 * n / 2; ++b) {
            int h = 0;
            while (3LL * (h + 1) <= 3LL * n - 2LL * b - p_min(n + h + 1)) ++h;
            hcaps[b - (n - 1)] = h;
        }
    }
    const int ntasks = static_cast<int>(tasks.size());
    std::vector<StatsCtx> ctxs(ntasks);
    for (auto& c : ctxs) {
        c.want_free = want_free;
        c.want_holes = want_holes;
        c.hcap_by_b = &hcaps;
        c.n = n;
    }
    jobs = resolve_jobs(jobs);
#ifdef _OPENMP
#pragma omp parallel num_threads(jobs) if (jobs > 1)
    {
        Engine eng(n);
#pragma omp for schedule(dynamic, 1)
        for (int i = 0; i < ntasks; ++i) eng.run_task(tasks[i], stats_leaf, &ctxs[i]);
    }
#else
    {
        Engine eng(n);
        for (int i = 0; i < ntasks; ++i) eng.run_task(tasks[i], stats_leaf, &ctxs[i]);
    }
#endif
    StatsAcc total;
    for (auto& c : ctxs) merge_stats(total, std::move(c.acc));
    return total;
}

// ---- g search fold ---------------------------------------------------------

struct GCtx {
    long long h_target = 0;
    int task_idx = 0;
    std::atomic<int>* winner = nullptr;
    std::vector<TriCoord> witness;
    long long holes_found = 0;
    bool found = false;
};

bool g_leaf(void* vctx, Engine& eng) {
    auto& ctx = *static_cast<GCtx*>(vctx);
    if (ctx.winner->load(std::memory_order_relaxed) < ctx.task_idx) return false;
    const long long h = eng.leaf_hole_count();
    if (h >= ctx.h_target) {
        eng.leaf_cells(ctx.witness);
        ctx.holes_found = h;
        ctx.found = true;
        int cur = ctx.winner->load(std::memory_order_relaxed);
        while (ctx.task_idx < cur &&
               !ctx.winner->compare_exchange_weak(cur, ctx.task_idx)) {
        }
        return false;
    }
    return true;
}

}  // namespace

void enumerate_fixed(int n, const std::function<void(const Polyiamond&)>& visitor,
                     const EnumLimits& limits) {
    check_cap(n, limits);
    struct Ctx {
        const std::function<void(const Polyiamond&)>* visitor;
        std::vector<TriCoord> cells;
    } ctx{&visitor, {}};
    Engine eng(n);
    auto leaf = +[](void* vctx, Engine& e) {
        auto& c = *static_cast<Ctx*>(vctx);
        e.leaf_cells(c.cells);
        (*c.visitor)(polyiamond_unchecked(c.cells));
        return true;
    };
    eng.run_serial(0, leaf, &ctx);
    eng.run_serial(1, leaf, &ctx);
}

EnumStats enum_stats(int n, bool with_free, bool with_holes, const EnumOptions& opts) {
    check_cap(n, opts.limits);
    StatsAcc acc = run_stats(n, with_free, with_holes, opts.jobs);
    EnumStats s;
    s.n = n;
    s.fixed_count = acc.fixed;
    s.free_count = with_free ? acc.free_cnt : -1;
    s.min_perimeter = 3LL * n - 2 * acc.max_b;
    s.min_interior_edges = acc.min_b;
    s.max_holes = with_holes ? acc.max_holes : -1;
    if (with_holes && !acc.witness.empty())
        s.witness_max_holes = polyiamond_unchecked(acc.witness);
    return s;
}

long long count_fixed(int n, const EnumOptions& opts) {
    return enum_stats(n, false, false, opts).fixed_count;
}

long long count_free(int n, const EnumOptions& opts) {
    return enum_stats(n, true, false, opts).free_count;
}

EnumStats f_max_holes(int n, const EnumOptions& opts) {
    check_cap(n, opts.limits);
    if (!m_bound(n, 1).feasible) {
        // no hole can exist at this n; still report the cheap stats
        EnumStats s = enum_stats(n, false, false, opts);
        s.max_holes = 0;
        return s;
    }
    return enum_stats(n, false, true, opts);
}

GSearchResult g_min_tiles(long long h, int n_cap, const EnumOptions& opts) {
    if (h < 1) throw std::invalid_argument("g_min_tiles: h must be >= 1");
    const long long start = g_lower_bound(h);
    if (n_cap > kEngineMaxN) throw EnumerationCapError(n_cap, kEngineMaxN);
    const int jobs = resolve_jobs(opts.jobs);
    for (long long n = start; n <= n_cap; ++n) {
        // any witness needs b <= (3n - p_min(n+h) - 3h)/2; growth adds at
        // least one interior edge per cell, so prune subtrees above the cap
        const long long bcap = (3 * n - p_min(n + h) - 3 * h) / 2;
        if (bcap < n - 1) continue;
        const std::vector<Task> tasks = build_tasks(static_cast<int>(n),
                                                    static_cast<int>(bcap));
        const int ntasks = static_cast<int>(tasks.size());
        std::atomic<int> winner{INT_MAX};
        std::vector<GCtx> ctxs(ntasks);
        for (int i = 0; i < ntasks; ++i) {
            ctxs[i].h_target = h;
            ctxs[i].task_idx = i;
            ctxs[i].winner = &winner;
        }
#ifdef _OPENMP
#pragma omp parallel num_threads(jobs) if (jobs > 1)
        {
            Engine eng(static_cast<int>(n));
            eng.set_bcap(static_cast<int>(bcap));
#pragma omp for schedule(dynamic, 1)
            for (int i = 0; i < ntasks; ++i) {
                if (winner.load(std::memory_order_relaxed) < i) continue;
                eng.run_task(tasks[i], g_leaf, &ctxs[i]);
            }
        }
#else
        {
            Engine eng(static_cast<int>(n));
            eng.set_bcap(static_cast<int>(bcap));
            for (int i = 0; i < ntasks; ++i) {
                if (winner.load(std::memory_order_relaxed) < i) break;
                eng.run_task(tasks[i], g_leaf, &ctxs[i]);
            }
        }
#endif
        const int w = winner.load();
        if (w != INT_MAX) {
            GSearchResult r{h, n, ctxs[w].holes_found, ctxs[w].holes_found == h,
                            make_polyiamond(ctxs[w].witness)};
            return r;
        }
    }
    throw WitnessNotFoundError(h, start, n_cap);
}

long long empirical_pmin(int n, const EnumOptions& opts) {
    return enum_stats(n, false, false, opts).min_perimeter;
}

long long empirical_bmin(int n, const EnumOptions& opts) {
    return enum_stats(n, false, false, opts).min_interior_edges;
}

std::vector<std::vector<TriCoord>> naive_fixed_shapes(int n) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("naive_fixed_shapes: practical only for 1 <= n <= 7");
    std::vector<std::vector<TriCoord>> out;
    std::vector<TriCoord> box;
    for (int r = 0; r < n; ++r)
        for (int c = -(n - 1); c <= n; ++c) box.push_back({r, c});
    std::sort(box.begin(), box.end());

    std::vector<TriCoord> chosen;
    auto is_connected = [&]() {
        std::vector<char> vis(chosen.size(), 0);
        std::vector<int> stack{0};
        vis[0] = 1;
        int seen = 1;
        while (!stack.empty()) {
            TriCoord c = chosen[stack.back()];
            stack.pop_back();
            for (TriCoord nb : neighbors(c))
                for (size_t j = 0; j < chosen.size(); ++j)
                    if (!vis[j] && chosen[j] == nb) {
                        vis[j] = 1;
                        ++seen;
                        stack.push_back(static_cast<int>(j));
                    }
        }
        return seen == static_cast<int>(chosen.size());
    };
    // scan-minimal cell pinned to the root: one representative per
    // translation class, no dedup step needed
    for (TriCoord root : {TriCoord{0, 0}, TriCoord{0, 1}}) {
        const auto first = std::upper_bound(box.begin(), box.end(), root);
        chosen.assign(1, root);
        auto rec = [&](auto&& self, std::vector<TriCoord>::const_iterator from) -> void {
            if (static_cast<int>(chosen.size()) == n) {
                if (is_connected()) out.push_back(chosen);
                return;
            }
            for (auto it = from; it != box.end(); ++it) {
                chosen.push_back(*it);
                self(self, it + 1);
                chosen.pop_back();
            }
        };
        rec(rec, first);
    }
    for (auto& s : out) std::sort(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace iamonds
