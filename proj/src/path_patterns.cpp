#include "packkit/path_patterns.hpp"

#include <algorithm>
#include <numeric>

namespace packkit {

namespace {

struct CyclicSearch {
    int period;
    int lo, hi; // color window, already clamped to period-1
    std::uint64_t* budget;
    std::vector<int> colors;    // position -> color, 0 = unset
    std::vector<int> first, last, count; // per color

    CyclicSearch(int L, int lo_color, int hi_color, std::uint64_t* node_budget)
        : period(L), lo(lo_color), hi(hi_color), budget(node_budget),
          colors(static_cast<size_t>(L), 0), first(static_cast<size_t>(hi_color) + 1, -1),
          last(static_cast<size_t>(hi_color) + 1, -1),
          count(static_cast<size_t>(hi_color) + 1, 0) {}

    // Gaps between consecutive occurrences must reach c+1 both within the
    // period (check against the last occurrence) and across the wrap (the
    // span first..last may cover at most period-c-1 positions).
    bool feasible(int i, int c) const {
        if (count[static_cast<size_t>(c)] == 0)
            return true;
        return i - last[static_cast<size_t>(c)] >= c + 1 &&
               i - first[static_cast<size_t>(c)] <= period - c - 1;
    }

    bool fill(int i) {
        if (i == period)
            return true;
        for (int c = lo; c <= hi; ++c) {
            if (*budget == 0)
                return false;
            --*budget;
            if (!feasible(i, c))
                continue;
            colors[static_cast<size_t>(i)] = c;
            int saved_first = first[static_cast<size_t>(c)];
            int saved_last = last[static_cast<size_t>(c)];
            if (count[static_cast<size_t>(c)]++ == 0)
                first[static_cast<size_t>(c)] = i;
            last[static_cast<size_t>(c)] = i;
            if (fill(i + 1))
                return true;
            --count[static_cast<size_t>(c)];
            first[static_cast<size_t>(c)] = saved_first;
            last[static_cast<size_t>(c)] = saved_last;
            colors[static_cast<size_t>(i)] = 0;
        }
        return false;
    }
};

// Each color c fits at most floor(L/(c+1)) times into a period of L.
bool period_capacity_ok(int L, int lo, int hi) {
    long long capacity = 0;
    for (int c = lo; c <= std::min(hi, L - 1); ++c)
        capacity += L / (c + 1);
    return capacity >= L;
}

} // namespace

std::vector<int> find_path_pattern(int s, const PatternOptions& options) {
    if (s < 1)
        throw Error("find_path_pattern needs s >= 1");
    if (s > options.max_s)
        throw Error("find_path_pattern is guarded at s <= " + std::to_string(options.max_s) +
                    "; raise PatternOptions::max_s to go further");

    int hi = 3 * s + 2;
    int min_period = hi / 2 + 1; // keeps every constrained pair within two copies
    int cap = options.period_cap_factor * (s + 1);
    std::uint64_t budget = options.node_budget;

    for (int L = min_period; L <= cap; ++L) {
        if (!period_capacity_ok(L, s, hi))
            continue;
        CyclicSearch search(L, s, std::min(hi, L - 1), &budget);
        if (search.fill(0)) {
            // Certify on three concatenated copies before handing it out.
            PackingColoring tiled(3 * L);
            for (int i = 0; i < 3 * L; ++i)
                tiled.set_color(i, search.colors[static_cast<size_t>(i % L)]);
            Graph path = make_path(3 * L);
            if (!verify(path, bfs_distances(path), tiled).valid)
                throw Error("internal: cyclic pattern failed certification");
            return search.colors;
        }
        if (budget == 0)
            throw Error("pattern search budget exhausted before period cap " +
                        std::to_string(cap));
    }
    throw Error("pattern search exhausted periods up to " + std::to_string(cap) +
                " for s = " + std::to_string(s) +
                "; raise PatternOptions::period_cap_factor");
}

PackingColoring color_path(int n, int s, const PatternOptions& options) {
    if (n < 1)
        throw Error("color_path needs n >= 1");
    std::vector<int> pattern = find_path_pattern(s, options);
    PackingColoring col(n);
    for (int i = 0; i < n; ++i)
        col.set_color(i, pattern[static_cast<size_t>(i) % pattern.size()]);
    Graph path = make_path(n);
    if (!verify(path, bfs_distances(path), col).valid)
        throw Error("internal: tiled path coloring failed verification");
    return col;
}

std::vector<int> windowed_path_colors(int n, int s, std::uint64_t node_budget) {
    if (n < 1)
        throw Error("windowed_path_colors needs n >= 1");
    if (s < 1)
        throw Error("windowed_path_colors needs s >= 1");
    int hi = 3 * s + 2;
    std::vector<int> colors(static_cast<size_t>(n), 0);
    std::vector<int> last(static_cast<size_t>(hi) + 1, -1);

    // Plain backtracking, smallest color first. On a path only the most
    // recent occurrence of a color constrains the next one.
    std::uint64_t budget = node_budget;
    std::vector<int> saved(static_cast<size_t>(n), -1);
    int i = 0;
    int start_color = s;
    while (i < n) {
        bool placed = false;
        for (int c = start_color; c <= hi; ++c) {
            if (budget == 0)
                throw Error("windowed path search budget exhausted");
            --budget;
            if (last[static_cast<size_t>(c)] != -1 && i - last[static_cast<size_t>(c)] < c + 1)
                continue;
            colors[static_cast<size_t>(i)] = c;
            saved[static_cast<size_t>(i)] = last[static_cast<size_t>(c)];
            last[static_cast<size_t>(c)] = i;
            placed = true;
            break;
        }
        if (placed) {
            ++i;
            start_color = s;
        } else {
            if (i == 0)
                throw Error("no windowed path coloring with colors " + std::to_string(s) +
                            ".." + std::to_string(hi));
            --i;
            int c = colors[static_cast<size_t>(i)];
            last[static_cast<size_t>(c)] = saved[static_cast<size_t>(i)];
            colors[static_cast<size_t>(i)] = 0;
            start_color = c + 1;
        }
    }
    return colors;
}

long long band_bottom(int level) {
    if (level < 1 || level > 30)
        throw Error("band level out of range");
    long long pow3 = 1;
    for (int i = 1; i < level; ++i)
        pow3 *= 3;
    return 5 * (pow3 - 1) / 2 + 1;
}

long long band_top(int level) {
    if (level < 1 || level > 30)
        throw Error("band level out of range");
    long long pow3 = 1;
    for (int i = 0; i < level; ++i)
        pow3 *= 3;
    return 5 * (pow3 - 1) / 2;
}

PackingColoring unit_interval_coloring(const IntervalRep& rep,
                                       const UnitColoringOptions& options) {
    if (!rep.unit())
        throw Error("unit_interval_coloring needs a unit interval representation");
    Graph g = intersection_graph(rep);
    if (!is_connected(g))
        throw Error("unit_interval_coloring needs a connected intersection graph");
    int k = clique_number(rep);
    if (k > options.clique_guard)
        throw Error("clique number " + std::to_string(k) + " exceeds the guard " +
                    std::to_string(options.clique_guard));

    // Greedy least-class proper coloring by left endpoint. For unit intervals
    // the last member of a class has the rightmost endpoint, so checking it
    // alone keeps every class an independent set.
    std::vector<int> by_left(static_cast<size_t>(rep.n()));
    std::iota(by_left.begin(), by_left.end(), 0);
    std::sort(by_left.begin(), by_left.end(), [&rep](int a, int b) {
        const auto& ia = rep.intervals[static_cast<size_t>(a)];
        const auto& ib = rep.intervals[static_cast<size_t>(b)];
        return ia.first != ib.first ? ia.first < ib.first : a < b;
    });
    std::vector<std::vector<int>> classes(static_cast<size_t>(k));
    for (int v : by_left) {
        bool placed = false;
        for (auto& cls : classes) {
            if (cls.empty() ||
                rep.intervals[static_cast<size_t>(cls.back())].second <
                    rep.intervals[static_cast<size_t>(v)].first) {
                cls.push_back(v);
                placed = true;
                break;
            }
        }
        if (!placed)
            throw Error("internal: greedy partition needed more than clique-number classes");
    }

    DistanceMatrix dm = bfs_distances(g);
    PackingColoring col(rep.n());
    for (int level = 1; level <= k; ++level) {
        const auto& cls = classes[static_cast<size_t>(level - 1)];
        if (cls.empty())
            continue;
        // The class sorted by endpoint must be an independence set whose i-th
        // and j-th members sit at graph distance >= j-i; a path coloring
        // transfers onto it only under that claim, so it is checked outright.
        for (size_t i = 0; i < cls.size(); ++i) {
            for (size_t j = i + 1; j < cls.size(); ++j) {
                if (g.adjacent(cls[i], cls[j]))
                    throw Error("in-class independence violated between vertices " +
                                std::to_string(cls[i]) + " and " + std::to_string(cls[j]));
                if (dm.at(cls[i], cls[j]) < static_cast<int>(j - i))
                    throw Error("in-class distance assertion failed: d(" +
                                std::to_string(cls[i]) + "," + std::to_string(cls[j]) +
                                ") = " + std::to_string(dm.at(cls[i], cls[j])) +
                                " < " + std::to_string(j - i));
            }
        }

        long long s = band_bottom(level);
        std::vector<int> path_colors;
        if (s <= 6) {
            PatternOptions popt;
            std::vector<int> pattern = find_path_pattern(static_cast<int>(s), popt);
            path_colors.resize(cls.size());
            for (size_t i = 0; i < cls.size(); ++i)
                path_colors[i] = pattern[i % pattern.size()];
        } else {
            path_colors = windowed_path_colors(static_cast<int>(cls.size()),
                                               static_cast<int>(s), options.node_budget);
        }
        for (size_t i = 0; i < cls.size(); ++i)
            col.set_color(cls[i], path_colors[i]);
    }

    if (!verify(g, dm, col).valid)
        throw Error("unit interval coloring failed verification; the partition "
                    "assumption does not hold on this instance");
    return col;
}

} // namespace packkit
