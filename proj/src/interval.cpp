#include "packkit/interval.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace packkit {

bool IntervalRep::unit() const {
    if (intervals.empty())
        return true;
    int len = intervals.front().second - intervals.front().first;
    return std::all_of(intervals.begin(), intervals.end(),
                       [len](const auto& iv) { return iv.second - iv.first == len; });
}

Graph intersection_graph(const IntervalRep& rep) {
    Graph g(rep.n());
    for (int u = 0; u < rep.n(); ++u) {
        for (int v = u + 1; v < rep.n(); ++v) {
            const auto& a = rep.intervals[static_cast<size_t>(u)];
            const auto& b = rep.intervals[static_cast<size_t>(v)];
            if (std::max(a.first, b.first) <= std::min(a.second, b.second))
                g.add_edge(u, v);
        }
    }
    return g;
}

int clique_number(const IntervalRep& rep) {
    // Coverage changes only at endpoints; +1 at left, -1 just past right.
    std::vector<std::pair<int, int>> events;
    events.reserve(static_cast<size_t>(rep.n()) * 2);
    for (const auto& [l, r] : rep.intervals) {
        events.emplace_back(l, +1);
        events.emplace_back(r + 1, -1);
    }
    std::sort(events.begin(), events.end());
    int cover = 0, best = 0;
    for (const auto& [coord, delta] : events) {
        cover += delta;
        best = std::max(best, cover);
    }
    return best;
}

IntervalRep parse_intervals(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    IntervalRep rep;
    std::vector<char> seen;
    int remaining = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n <= 0)
                throw Error("line " + std::to_string(lineno) +
                            ": malformed interval header, expected \"n\"");
            rep.intervals.assign(static_cast<size_t>(n), {0, -1});
            seen.assign(static_cast<size_t>(n), 0);
            remaining = n;
            continue;
        }
        if (remaining == 0)
            throw Error("line " + std::to_string(lineno) + ": trailing content after intervals");
        int v, l, r;
        if (!(ls >> v >> l >> r))
            throw Error("line " + std::to_string(lineno) + ": malformed interval line");
        if (v < 0 || v >= n)
            throw Error("line " + std::to_string(lineno) + ": vertex id out of range");
        if (seen[static_cast<size_t>(v)])
            throw Error("line " + std::to_string(lineno) + ": vertex " + std::to_string(v) +
                        " listed twice");
        if (l > r)
            throw Error("line " + std::to_string(lineno) + ": interval has left > right");
        seen[static_cast<size_t>(v)] = 1;
        rep.intervals[static_cast<size_t>(v)] = {l, r};
        --remaining;
    }
    if (n < 0)
        throw Error("empty interval document");
    if (remaining > 0)
        throw Error("interval document ended before all " + std::to_string(n) +
                    " intervals were given");
    return rep;
}

std::string serialize_intervals(const IntervalRep& rep) {
    std::ostringstream out;
    out << rep.n() << '\n';
    for (int v = 0; v < rep.n(); ++v)
        out << v << ' ' << rep.intervals[static_cast<size_t>(v)].first << ' '
            << rep.intervals[static_cast<size_t>(v)].second << '\n';
    return out.str();
}

IntervalRep random_interval_rep(int n, std::uint64_t seed, int coord_range, int max_len) {
    if (n < 1)
        throw Error("random_interval_rep needs n >= 1");
    if (coord_range <= 0)
        coord_range = 2 * n;
    std::mt19937_64 rng(seed);
    IntervalRep rep;
    rep.intervals.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        int l = static_cast<int>(rng() % static_cast<std::uint64_t>(coord_range));
        int len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_len + 1));
        rep.intervals.emplace_back(l, l + len);
    }
    return rep;
}

IntervalRep random_unit_interval_rep(int n, std::uint64_t seed, int length, int coord_range) {
    if (n < 1)
        throw Error("random_unit_interval_rep needs n >= 1");
    if (length < 0)
        throw Error("random_unit_interval_rep needs length >= 0");
    if (coord_range <= 0)
        coord_range = 2 * n;
    std::mt19937_64 rng(seed);
    IntervalRep rep;
    rep.intervals.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        int l = static_cast<int>(rng() % static_cast<std::uint64_t>(coord_range));
        rep.intervals.emplace_back(l, l + length);
    }
    return rep;
}

// ---- the DP -------------------------------------------------------------------

namespace {

struct DpNode {
    int count = -1;
    std::uint64_t prev = 0;
    int assigned_color = 0; // 0 = the vertex of this layer was skipped
};

// States are frontier tuples over V union {N}; entry i-1 is the vertex of
// color i (or -1 for N), packed in base n+1.
std::uint64_t pack_state(const std::vector<int>& entries, int n) {
    std::uint64_t key = 0;
    for (auto it = entries.rbegin(); it != entries.rend(); ++it)
        key = key * static_cast<std::uint64_t>(n + 1) + static_cast<std::uint64_t>(*it + 1);
    return key;
}

std::vector<int> unpack_state(std::uint64_t key, int n, int k) {
    std::vector<int> entries(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        entries[static_cast<size_t>(i)] =
            static_cast<int>(key % static_cast<std::uint64_t>(n + 1)) - 1;
        key /= static_cast<std::uint64_t>(n + 1);
    }
    return entries;
}

} // namespace

DpResult max_partial_coloring_dp(const IntervalRep& rep, int k, const DpOptions& options) {
    if (k < 1)
        throw Error("max_partial_coloring_dp needs k >= 1");
    if (k > options.k_cap)
        throw Error("k = " + std::to_string(k) + " exceeds the DP cap " +
                    std::to_string(options.k_cap));
    int n = rep.n();
    // Key packing must not overflow.
    double width = 1.0;
    for (int i = 0; i < k; ++i)
        width *= n + 1;
    if (width > 9.0e18)
        throw Error("state space too large to index");

    Graph g = intersection_graph(rep);
    DistanceMatrix dm = bfs_distances(g);

    // Right endpoint ascending, ties by left endpoint then id.
    std::vector<int> sorted(static_cast<size_t>(n));
    std::iota(sorted.begin(), sorted.end(), 0);
    std::sort(sorted.begin(), sorted.end(), [&rep](int a, int b) {
        const auto& ia = rep.intervals[static_cast<size_t>(a)];
        const auto& ib = rep.intervals[static_cast<size_t>(b)];
        if (ia.second != ib.second)
            return ia.second < ib.second;
        if (ia.first != ib.first)
            return ia.first < ib.first;
        return a < b;
    });

    std::vector<std::map<std::uint64_t, DpNode>> layer(static_cast<size_t>(n) + 1);
    std::uint64_t start = pack_state(std::vector<int>(static_cast<size_t>(k), -1), n);
    layer[0][start] = DpNode{0, 0, 0};

    auto relax = [](std::map<std::uint64_t, DpNode>& next, std::uint64_t key, int count,
                    std::uint64_t prev, int color) {
        DpNode& node = next[key];
        if (count > node.count) {
            node.count = count;
            node.prev = prev;
            node.assigned_color = color;
        }
    };

    for (int t = 0; t < n; ++t) {
        int v = sorted[static_cast<size_t>(t)];
        auto& current = layer[static_cast<size_t>(t)];
        auto& next = layer[static_cast<size_t>(t) + 1];
        for (const auto& [key, node] : current) {
            relax(next, key, node.count, key, 0); // leave v uncolored
            std::vector<int> entries = unpack_state(key, n, k);
            for (int i = 1; i <= k; ++i) {
                int frontier = entries[static_cast<size_t>(i - 1)];
                if (frontier != -1 && dm.at(v, frontier) < i + 1)
                    continue;
                int saved = entries[static_cast<size_t>(i - 1)];
                entries[static_cast<size_t>(i - 1)] = v;
                relax(next, pack_state(entries, n), node.count + 1, key, i);
                entries[static_cast<size_t>(i - 1)] = saved;
            }
        }
    }

    // Best final state; map order makes the tie-break deterministic.
    const auto& last = layer[static_cast<size_t>(n)];
    auto best = last.begin();
    for (auto it = last.begin(); it != last.end(); ++it)
        if (it->second.count > best->second.count)
            best = it;

    DpResult result;
    result.count = best->second.count;
    result.coloring = PackingColoring(n);
    std::uint64_t key = best->first;
    for (int t = n; t > 0; --t) {
        const DpNode& node = layer[static_cast<size_t>(t)].at(key);
        if (node.assigned_color != 0)
            result.coloring.set_color(sorted[static_cast<size_t>(t - 1)], node.assigned_color);
        key = node.prev;
    }
    return result;
}

IntervalChiResult chi_p_interval_via_dp(const IntervalRep& rep, const DpOptions& options) {
    Graph g = intersection_graph(rep);
    std::optional<int> d = diameter(g);
    if (!d)
        throw Error("chi_p_interval_via_dp needs a connected interval graph");
    if (*d - 1 > options.k_cap)
        throw Error("diameter " + std::to_string(*d) + " needs " + std::to_string(*d - 1) +
                    " reusable colors, over the DP cap " + std::to_string(options.k_cap));

    int n = rep.n();
    int t_max = std::min(*d - 1, n);

    IntervalChiResult result;
    result.diameter = *d;
    int best_value = n; // t = 0: no reusable colors, everything unique
    int best_t = 0;
    std::vector<DpResult> dp_by_t(static_cast<size_t>(t_max) + 1);
    for (int t = 1; t <= t_max; ++t) {
        dp_by_t[static_cast<size_t>(t)] = max_partial_coloring_dp(rep, t, options);
        int value = t + n - dp_by_t[static_cast<size_t>(t)].count;
        if (value < best_value) {
            best_value = value;
            best_t = t;
        }
    }

    result.k = best_value;
    result.best_t = best_t;
    if (best_t == 0) {
        result.witness = PackingColoring(n);
        for (int v = 0; v < n; ++v)
            result.witness.set_color(v, v + 1);
    } else {
        result.witness = dp_by_t[static_cast<size_t>(best_t)].coloring;
        int fresh = best_t + 1;
        for (int v = 0; v < n; ++v)
            if (!result.witness.is_colored(v))
                result.witness.set_color(v, fresh++);
    }

    DistanceMatrix dm = bfs_distances(g);
    if (!verify(g, dm, result.witness).valid)
        throw Error("internal: interval chi_p witness failed verification");
    return result;
}

} // namespace packkit
