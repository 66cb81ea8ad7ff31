#include "packkit/solvers.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace packkit {

// ---- brute force ------------------------------------------------------------

namespace {

// Tries to extend a partial coloring of vertices 0..v-1 by colors <= k.
bool brute_extend(const Graph& g, const DistanceMatrix& dm, int k, int v,
                  std::vector<int>& colors) {
    if (v == g.n())
        return true;
    for (int c = 1; c <= k; ++c) {
        bool ok = true;
        for (int u = 0; u < v; ++u) {
            if (colors[static_cast<size_t>(u)] == c && dm.at(u, v) <= c) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        colors[static_cast<size_t>(v)] = c;
        if (brute_extend(g, dm, k, v + 1, colors))
            return true;
        colors[static_cast<size_t>(v)] = 0;
    }
    return false;
}

} // namespace

SolveResult brute_force_chi_p(const Graph& g) {
    if (g.n() > 12)
        throw Error("brute_force_chi_p is guarded at 12 vertices, got " + std::to_string(g.n()));
    if (!is_connected(g))
        throw Error("brute_force_chi_p needs a connected graph");
    DistanceMatrix dm = bfs_distances(g);
    std::vector<int> colors(static_cast<size_t>(g.n()), 0);
    for (int k = 1; k <= g.n(); ++k) {
        if (brute_extend(g, dm, k, 0, colors)) {
            SolveResult result;
            result.k = k;
            result.witness = PackingColoring(g.n());
            for (int v = 0; v < g.n(); ++v)
                result.witness.set_color(v, colors[static_cast<size_t>(v)]);
            return result;
        }
    }
    throw Error("internal: no coloring with n colors found"); // unreachable
}

// ---- greedy ------------------------------------------------------------------

PackingColoring greedy_heuristic(const Graph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.n())
        throw Error("order has wrong length");
    std::vector<char> seen(static_cast<size_t>(g.n()), 0);
    for (int v : order) {
        if (v < 0 || v >= g.n() || seen[static_cast<size_t>(v)])
            throw Error("order is not a permutation of the vertices");
        seen[static_cast<size_t>(v)] = 1;
    }

    DistanceMatrix dm = bfs_distances(g);
    PackingColoring col(g.n());
    std::vector<int> done;
    done.reserve(static_cast<size_t>(g.n()));
    for (int v : order) {
        for (int c = 1;; ++c) {
            bool ok = true;
            for (int u : done) {
                if (col.color(u) == c && dm.at(u, v) <= c) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                col.set_color(v, c);
                break;
            }
        }
        done.push_back(v);
    }
    return col;
}

int greedy_clique_bound(const Graph& g) {
    std::vector<int> by_degree(static_cast<size_t>(g.n()));
    std::iota(by_degree.begin(), by_degree.end(), 0);
    auto degree_desc = [&g](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    };
    std::sort(by_degree.begin(), by_degree.end(), degree_desc);

    int best = g.n() > 0 ? 1 : 0;
    std::vector<int> clique;
    for (int seed : by_degree) {
        if (g.degree(seed) + 1 <= best)
            continue;
        clique.assign(1, seed);
        std::vector<int> candidates = g.neighbors(seed);
        std::sort(candidates.begin(), candidates.end(), degree_desc);
        for (int u : candidates) {
            bool all = std::all_of(clique.begin(), clique.end(),
                                   [&](int w) { return g.adjacent(u, w); });
            if (all)
                clique.push_back(u);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

// ---- independence number ------------------------------------------------------

namespace {

int mis_mask(std::uint32_t candidates, const std::vector<std::uint32_t>& closed_nbhd) {
    if (candidates == 0)
        return 0;
    int v = std::countr_zero(candidates);
    int without = mis_mask(candidates & ~(1u << v), closed_nbhd);
    int with = 1 + mis_mask(candidates & ~closed_nbhd[static_cast<size_t>(v)], closed_nbhd);
    return std::max(without, with);
}

} // namespace

int independence_number(const Graph& g) {
    if (g.n() > 20)
        throw Error("independence_number is guarded at 20 vertices, got " + std::to_string(g.n()));
    std::vector<std::uint32_t> closed(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        std::uint32_t mask = 1u << v;
        for (int u : g.neighbors(v))
            mask |= 1u << u;
        closed[static_cast<size_t>(v)] = mask;
    }
    std::uint32_t all = (1u << g.n()) - 1;
    return mis_mask(all, closed);
}

// ---- branch and bound ----------------------------------------------------------

namespace {

constexpr int kMaxSearchColors = 128;

// Colors 1..128 as bits 0..127.
struct ColorSet {
    std::uint64_t w0 = ~0ull, w1 = ~0ull;

    bool test(int c) const {
        int b = c - 1;
        return ((b < 64 ? w0 : w1) >> (b & 63)) & 1;
    }
    void clear(int c) {
        int b = c - 1;
        (b < 64 ? w0 : w1) &= ~(1ull << (b & 63));
    }
    void set(int c) {
        int b = c - 1;
        (b < 64 ? w0 : w1) |= 1ull << (b & 63);
    }
    void intersect(const ColorSet& other) {
        w0 &= other.w0;
        w1 &= other.w1;
    }
    void keep_up_to(int limit) { // drop colors > limit
        if (limit < 64) {
            w0 &= limit <= 0 ? 0 : (~0ull >> (64 - limit));
            w1 = 0;
        } else if (limit < 128) {
            w1 &= limit == 64 ? 0 : (~0ull >> (128 - limit));
        }
    }
    bool empty() const { return w0 == 0 && w1 == 0; }
};

struct Searcher {
    const Graph& g;
    const DistanceMatrix& dm;
    int n;
    std::vector<int> order;    // position -> vertex, fixed for the whole search
    std::vector<int> color_of; // vertex -> assigned color, 0 = free
    std::vector<ColorSet> feasible;
    std::vector<int> class_size;
    std::vector<int> cap;
    ColorSet available;        // colors whose class may still grow
    int singleton_from;        // colors >= this can never be reused
    int symmetry_floor;        // fresh colors >= this are interchangeable

    std::uint64_t nodes = 0;
    std::uint64_t budget;
    bool budget_hit = false;
    bool stop = false;
    bool first_solution_only = false;

    int incumbent_k;           // search explores colorings with max color < incumbent_k
    std::vector<int> incumbent;
    int lower_bound = 1;

    struct TrailEntry {
        int vertex;
        ColorSet old_mask;
    };
    std::vector<TrailEntry> trail;

    Searcher(const Graph& graph, const DistanceMatrix& distances, std::uint64_t node_budget)
        : g(graph), dm(distances), n(graph.n()), color_of(static_cast<size_t>(n), 0),
          feasible(static_cast<size_t>(n)),
          class_size(static_cast<size_t>(kMaxSearchColors) + 1, 0),
          cap(static_cast<size_t>(kMaxSearchColors) + 1, std::numeric_limits<int>::max()),
          budget(node_budget), incumbent_k(n + 1) {
        order.resize(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&graph](int a, int b) {
            return graph.degree(a) != graph.degree(b) ? graph.degree(a) > graph.degree(b)
                                                      : a < b;
        });
        // A color c is reusable only if some pair sits at distance >= c+1.
        int diam = dm.max_finite();
        singleton_from = std::max(diam, 1);
        symmetry_floor = singleton_from;
        for (int c = singleton_from; c <= kMaxSearchColors; ++c)
            cap[static_cast<size_t>(c)] = 1;
    }

    void cap_color(int c, int limit) {
        if (c >= 1 && c <= kMaxSearchColors)
            cap[static_cast<size_t>(c)] = std::min(cap[static_cast<size_t>(c)], limit);
    }

    // Assigns v <- c and prunes c from every free vertex within distance c.
    // Returns the trail position to pass back to undo().
    size_t assign(int v, int c) {
        size_t mark = trail.size();
        color_of[static_cast<size_t>(v)] = c;
        if (++class_size[static_cast<size_t>(c)] >= cap[static_cast<size_t>(c)])
            available.clear(c);
        for (int u = 0; u < n; ++u) {
            if (color_of[static_cast<size_t>(u)] != 0)
                continue;
            if (dm.at(u, v) <= c && feasible[static_cast<size_t>(u)].test(c)) {
                trail.push_back({u, feasible[static_cast<size_t>(u)]});
                feasible[static_cast<size_t>(u)].clear(c);
            }
        }
        return mark;
    }

    void undo(int v, int c, size_t mark) {
        while (trail.size() > mark) {
            feasible[static_cast<size_t>(trail.back().vertex)] = trail.back().old_mask;
            trail.pop_back();
        }
        --class_size[static_cast<size_t>(c)];
        if (class_size[static_cast<size_t>(c)] < cap[static_cast<size_t>(c)])
            available.set(c);
        color_of[static_cast<size_t>(v)] = 0;
    }

    bool forward_ok(int limit) {
        for (int u = 0; u < n; ++u) {
            if (color_of[static_cast<size_t>(u)] != 0)
                continue;
            ColorSet candidates = feasible[static_cast<size_t>(u)];
            candidates.intersect(available);
            candidates.keep_up_to(limit);
            if (candidates.empty())
                return false;
        }
        return true;
    }

    void dfs(size_t idx, int cur_max) {
        if (stop || budget_hit)
            return;
        while (idx < order.size() && color_of[static_cast<size_t>(order[idx])] != 0)
            ++idx;
        if (idx == order.size()) {
            incumbent_k = cur_max;
            incumbent = color_of;
            if (first_solution_only || incumbent_k <= lower_bound)
                stop = true;
            return;
        }
        int v = order[static_cast<size_t>(idx)];
        ColorSet candidates = feasible[static_cast<size_t>(v)];
        candidates.intersect(available);
        candidates.keep_up_to(std::min(incumbent_k - 1, kMaxSearchColors));

        bool tried_fresh_singleton = false;
        std::uint64_t word = candidates.w0;
        int base = 0;
        for (;;) {
            while (word != 0) {
                int c = base + std::countr_zero(word) + 1;
                word &= word - 1;
                if (c > std::min(incumbent_k - 1, kMaxSearchColors))
                    return; // incumbent tightened while iterating
                if (class_size[static_cast<size_t>(c)] == 0 && c >= symmetry_floor) {
                    // Fresh colors that can never be reused are interchangeable;
                    // one representative branch suffices.
                    if (tried_fresh_singleton)
                        continue;
                    tried_fresh_singleton = true;
                }
                if (++nodes > budget) {
                    budget_hit = true;
                    return;
                }
                size_t mark = assign(v, c);
                if (forward_ok(std::min(incumbent_k - 1, kMaxSearchColors)))
                    dfs(idx + 1, std::max(cur_max, c));
                undo(v, c, mark);
                if (stop || budget_hit)
                    return;
            }
            if (base == 64)
                break;
            word = candidates.w1;
            base = 64;
        }
    }
};

} // namespace

ExactResult exact_chi_p(const Graph& g, const ExactOptions& options) {
    if (!is_connected(g))
        throw Error("exact_chi_p needs a connected graph");
    if (g.n() > kMaxSearchColors)
        throw Error("exact_chi_p is guarded at 128 vertices, got " + std::to_string(g.n()));

    ExactResult result;
    if (g.n() == 1) {
        result.k = 1;
        result.witness = PackingColoring(1);
        result.witness.set_color(0, 1);
        return result;
    }

    DistanceMatrix dm = bfs_distances(g);
    Searcher search(g, dm, options.node_budget);
    if (options.interval_diameter) {
        int d = *options.interval_diameter;
        for (int c = 2; c <= d - 1; ++c)
            search.cap_color(c, multiplicity_bound(d, c));
    }

    search.lower_bound = greedy_clique_bound(g);
    PackingColoring greedy = greedy_heuristic(g, search.order);
    search.incumbent_k = greedy.max_color();
    search.incumbent = greedy.raw();

    if (search.incumbent_k > search.lower_bound)
        search.dfs(0, 0);

    result.status = search.budget_hit ? ExactResult::Status::budget_exhausted
                                      : ExactResult::Status::solved;
    result.k = search.incumbent_k;
    result.nodes = search.nodes;
    result.witness = PackingColoring(g.n());
    for (int v = 0; v < g.n(); ++v)
        result.witness.set_color(v, search.incumbent[static_cast<size_t>(v)]);
    return result;
}

FeasibilityResult find_coloring(const Graph& g, int k_limit, const ColoringConstraints& cs,
                                std::uint64_t node_budget) {
    if (!is_connected(g))
        throw Error("find_coloring needs a connected graph");
    if (g.n() > kMaxSearchColors || k_limit > kMaxSearchColors)
        throw Error("find_coloring is guarded at 128 vertices / colors");
    if (k_limit < 1)
        throw Error("find_coloring needs k_limit >= 1");
    if (!cs.fixed.empty() && static_cast<int>(cs.fixed.size()) != g.n())
        throw Error("constraints.fixed has wrong length");
    if (!cs.forbidden.empty() && static_cast<int>(cs.forbidden.size()) != g.n())
        throw Error("constraints.forbidden has wrong length");

    DistanceMatrix dm = bfs_distances(g);
    Searcher search(g, dm, node_budget);
    search.first_solution_only = true;
    search.incumbent_k = k_limit + 1;
    search.lower_bound = 0;

    FeasibilityResult result;

    int max_mentioned = 0;
    for (int v = 0; v < g.n() && !cs.forbidden.empty(); ++v) {
        for (int c : cs.forbidden[static_cast<size_t>(v)]) {
            if (c >= 1 && c <= kMaxSearchColors)
                search.feasible[static_cast<size_t>(v)].clear(c);
            max_mentioned = std::max(max_mentioned, c);
        }
    }
    // Fixed colors are applied up front; a conflict among them is infeasible.
    for (int v = 0; v < g.n() && !cs.fixed.empty(); ++v) {
        int c = cs.fixed[static_cast<size_t>(v)];
        if (c == 0)
            continue;
        max_mentioned = std::max(max_mentioned, c);
        if (c < 1 || c > k_limit || !search.feasible[static_cast<size_t>(v)].test(c) ||
            !search.available.test(c))
            return result;
        search.assign(v, c);
    }
    // Color symmetry is only safe above every color the constraints mention.
    search.symmetry_floor = std::max(search.singleton_from, max_mentioned + 1);

    if (search.forward_ok(k_limit))
        search.dfs(0, 0);

    result.nodes = search.nodes;
    if (search.budget_hit) {
        result.status = FeasibilityResult::Status::budget_exhausted;
        return result;
    }
    if (search.incumbent_k <= k_limit) {
        result.status = FeasibilityResult::Status::found;
        result.coloring = PackingColoring(g.n());
        for (int v = 0; v < g.n(); ++v)
            result.coloring.set_color(v, search.incumbent[static_cast<size_t>(v)]);
    }
    return result;
}

} // namespace packkit
