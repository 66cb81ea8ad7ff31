#include "packkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

namespace packkit {

Graph::Graph(int n) {
    if (n < 0)
        throw Error("vertex count must be non-negative, got " + std::to_string(n));
    adj_.resize(static_cast<size_t>(n));
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n() || v < 0 || v >= n())
        throw Error("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v)
        throw Error("self-loop at vertex " + std::to_string(u));
    auto& au = adj_[static_cast<size_t>(u)];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v)
        return; // duplicate
    au.insert(it, v);
    auto& av = adj_[static_cast<size_t>(v)];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++m_;
}

bool Graph::adjacent(int u, int v) const {
    const auto& au = adj_[static_cast<size_t>(u)];
    return std::binary_search(au.begin(), au.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[static_cast<size_t>(u)])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

int DistanceMatrix::max_finite() const {
    int best = 0;
    for (int d : dist_)
        if (d != unreachable)
            best = std::max(best, d);
    return best;
}

// ---- parsing / serialization ----------------------------------------------

namespace {

// Strips a trailing comment and returns true if anything non-blank remains.
bool significant_line(std::string& line) {
    auto hash = line.find('#');
    if (hash != std::string::npos)
        line.erase(hash);
    return line.find_first_not_of(" \t\r") != std::string::npos;
}

} // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;

    while (std::getline(in, line)) {
        ++lineno;
        if (!significant_line(line))
            continue;
        std::istringstream hs(line);
        if (!(hs >> n >> m) || n <= 0 || m < 0)
            throw Error("line " + std::to_string(lineno) + ": malformed header, expected \"n m\"");
        break;
    }
    if (n < 0)
        throw Error("empty graph document, expected \"n m\" header");

    Graph g(n);
    int seen = 0;
    while (seen < m && std::getline(in, line)) {
        ++lineno;
        if (!significant_line(line))
            continue;
        std::istringstream es(line);
        int u, v;
        if (!(es >> u >> v))
            throw Error("line " + std::to_string(lineno) + ": malformed edge line");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error("line " + std::to_string(lineno) + ": vertex id out of range [0," +
                        std::to_string(n) + ")");
        if (u == v)
            throw Error("line " + std::to_string(lineno) + ": self-loop at vertex " +
                        std::to_string(u));
        g.add_edge(u, v);
        ++seen;
    }
    if (seen < m)
        throw Error("unexpected end of input: header promised " + std::to_string(m) +
                    " edges, found " + std::to_string(seen));
    while (std::getline(in, line)) {
        ++lineno;
        if (significant_line(line))
            throw Error("line " + std::to_string(lineno) + ": trailing content after edge list");
    }
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

// ---- distances -------------------------------------------------------------

std::vector<int> bfs_from(const Graph& g, int source) {
    std::vector<int> dist(static_cast<size_t>(g.n()), DistanceMatrix::unreachable);
    dist[static_cast<size_t>(source)] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u)) {
            if (dist[static_cast<size_t>(v)] == DistanceMatrix::unreachable) {
                dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

DistanceMatrix bfs_distances(const Graph& g) {
    if (g.n() > 4096)
        throw Error("distance table capped at 4096 vertices; use bfs_from per query");
    DistanceMatrix dm(g.n());
    for (int s = 0; s < g.n(); ++s) {
        auto row = bfs_from(g, s);
        for (int v = 0; v < g.n(); ++v)
            dm.set(s, v, row[static_cast<size_t>(v)]);
    }
    return dm;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0)
        return true;
    auto row = bfs_from(g, 0);
    return std::none_of(row.begin(), row.end(),
                        [](int d) { return d == DistanceMatrix::unreachable; });
}

std::optional<int> diameter(const Graph& g) {
    if (g.n() == 0)
        return 0;
    int best = 0;
    for (int s = 0; s < g.n(); ++s) {
        auto row = bfs_from(g, s);
        for (int d : row) {
            if (d == DistanceMatrix::unreachable)
                return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

// ---- generators -------------------------------------------------------------

Graph make_path(int n) {
    if (n < 1)
        throw Error("path needs n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3)
        throw Error("cycle needs n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

Graph make_complete(int n) {
    if (n < 1)
        throw Error("complete graph needs n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph make_star(int n) {
    if (n < 1)
        throw Error("star needs n >= 1");
    Graph g(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(0, v);
    return g;
}

Graph make_grid(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw Error("grid needs rows, cols >= 1");
    Graph g(rows * cols);
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols)
                g.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows)
                g.add_edge(id(r, c), id(r + 1, c));
        }
    }
    return g;
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
    if (n < 1)
        throw Error("gnp needs n >= 1");
    if (!(p >= 0.0 && p <= 1.0))
        throw Error("gnp needs probability in [0,1]");
    std::mt19937_64 rng(seed);
    // Fixed conversion instead of std::uniform_real_distribution so the same
    // seed gives the same graph on every standard library.
    auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit() < p)
                g.add_edge(u, v);
    return g;
}

} // namespace packkit
