#include "packkit/chordal.hpp"

#include <algorithm>
#include <deque>

namespace packkit {

namespace {

std::vector<int> lexbfs_order(const Graph& g) {
    int n = g.n();
    std::vector<std::vector<int>> label(static_cast<size_t>(n));
    std::vector<char> visited(static_cast<size_t>(n), 0);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (visited[static_cast<size_t>(v)])
                continue;
            if (pick == -1 || label[static_cast<size_t>(v)] > label[static_cast<size_t>(pick)])
                pick = v;
        }
        visited[static_cast<size_t>(pick)] = 1;
        order.push_back(pick);
        for (int u : g.neighbors(pick))
            if (!visited[static_cast<size_t>(u)])
                label[static_cast<size_t>(u)].push_back(n - step);
    }
    return order;
}

// Shortest u..w path avoiding `blocked`; empty if none.
std::vector<int> restricted_path(const Graph& g, int u, int w, const std::vector<char>& blocked) {
    std::vector<int> parent(static_cast<size_t>(g.n()), -2);
    parent[static_cast<size_t>(u)] = -1;
    std::deque<int> queue{u};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == w)
            break;
        for (int y : g.neighbors(x)) {
            if (blocked[static_cast<size_t>(y)] || parent[static_cast<size_t>(y)] != -2)
                continue;
            parent[static_cast<size_t>(y)] = x;
            queue.push_back(y);
        }
    }
    std::vector<int> path;
    if (parent[static_cast<size_t>(w)] == -2)
        return path;
    for (int x = w; x != -1; x = parent[static_cast<size_t>(x)])
        path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

// Any induced cycle of length >= 4: scan for a vertex v with non-adjacent
// neighbors u, w joined by a path that avoids the rest of N[v]. A shortest
// such path is induced, so v + path closes a chordless cycle.
std::vector<int> find_chordless_cycle(const Graph& g) {
    std::vector<char> blocked(static_cast<size_t>(g.n()), 0);
    for (int v = 0; v < g.n(); ++v) {
        const auto& nb = g.neighbors(v);
        for (size_t i = 0; i < nb.size(); ++i) {
            for (size_t j = i + 1; j < nb.size(); ++j) {
                int u = nb[i], w = nb[j];
                if (g.adjacent(u, w))
                    continue;
                std::fill(blocked.begin(), blocked.end(), 0);
                blocked[static_cast<size_t>(v)] = 1;
                for (int x : nb)
                    blocked[static_cast<size_t>(x)] = 1;
                blocked[static_cast<size_t>(u)] = 0;
                blocked[static_cast<size_t>(w)] = 0;
                std::vector<int> path = restricted_path(g, u, w, blocked);
                if (path.empty())
                    continue;
                std::vector<int> cycle{v};
                cycle.insert(cycle.end(), path.begin(), path.end());
                return cycle;
            }
        }
    }
    return {};
}

} // namespace

bool is_valid_peo(const Graph& g, const std::vector<int>& peo) {
    if (static_cast<int>(peo.size()) != g.n())
        return false;
    std::vector<int> pos(static_cast<size_t>(g.n()), -1);
    for (int i = 0; i < g.n(); ++i) {
        int v = peo[static_cast<size_t>(i)];
        if (v < 0 || v >= g.n() || pos[static_cast<size_t>(v)] != -1)
            return false;
        pos[static_cast<size_t>(v)] = i;
    }
    for (int i = 0; i < g.n(); ++i) {
        int v = peo[static_cast<size_t>(i)];
        std::vector<int> later;
        for (int u : g.neighbors(v))
            if (pos[static_cast<size_t>(u)] > i)
                later.push_back(u);
        if (later.size() < 2)
            continue;
        int first = *std::min_element(later.begin(), later.end(), [&pos](int a, int b) {
            return pos[static_cast<size_t>(a)] < pos[static_cast<size_t>(b)];
        });
        for (int u : later)
            if (u != first && !g.adjacent(first, u))
                return false;
    }
    return true;
}

PeoResult lexbfs_peo(const Graph& g) {
    PeoResult result;
    std::vector<int> order = lexbfs_order(g);
    std::reverse(order.begin(), order.end());
    if (is_valid_peo(g, order)) {
        result.chordal = true;
        result.peo = std::move(order);
        return result;
    }
    result.chordal = false;
    result.chordless_cycle = find_chordless_cycle(g);
    if (result.chordless_cycle.size() < 4)
        throw Error("internal: PEO check failed but no chordless cycle found");
    return result;
}

std::vector<int> mis_chordal(const Graph& g, const std::vector<int>& peo) {
    if (!is_valid_peo(g, peo))
        throw Error("mis_chordal needs a valid perfect elimination ordering");
    std::vector<char> removed(static_cast<size_t>(g.n()), 0);
    std::vector<int> mis;
    for (int v : peo) {
        if (removed[static_cast<size_t>(v)])
            continue;
        mis.push_back(v);
        removed[static_cast<size_t>(v)] = 1;
        for (int u : g.neighbors(v))
            removed[static_cast<size_t>(u)] = 1;
    }
    std::sort(mis.begin(), mis.end());
    return mis;
}

SolveResult chi_p_chordal_diam2(const Graph& g) {
    std::optional<int> d = diameter(g);
    if (!d || *d > 2)
        throw Error("chi_p_chordal_diam2 needs a connected graph of diameter <= 2, got " +
                    (d ? "diameter " + std::to_string(*d) : std::string("a disconnected graph")));
    PeoResult peo = lexbfs_peo(g);
    if (!peo.chordal)
        throw Error("chi_p_chordal_diam2 needs a chordal graph");

    std::vector<int> mis = mis_chordal(g, peo.peo);
    std::vector<char> in_mis(static_cast<size_t>(g.n()), 0);
    for (int v : mis)
        in_mis[static_cast<size_t>(v)] = 1;

    SolveResult result;
    result.witness = PackingColoring(g.n());
    int next = 2;
    for (int v = 0; v < g.n(); ++v)
        result.witness.set_color(v, in_mis[static_cast<size_t>(v)] ? 1 : next++);
    result.k = result.witness.max_color();

    DistanceMatrix dm = bfs_distances(g);
    if (!verify(g, dm, result.witness).valid)
        throw Error("internal: diameter-2 construction produced an invalid coloring");
    return result;
}

} // namespace packkit
