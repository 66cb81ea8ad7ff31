#include "packkit/coloring.hpp"

#include <algorithm>
#include <sstream>

namespace packkit {

void PackingColoring::set_color(int v, int c) {
    if (c < 1 || c > kMaxColorId)
        throw Error("color must be in [1," + std::to_string(kMaxColorId) + "], got " +
                    std::to_string(c));
    colors_[static_cast<size_t>(v)] = c;
}

int PackingColoring::max_color() const {
    int k = 0;
    for (int c : colors_)
        k = std::max(k, c);
    return k;
}

int PackingColoring::colored_count() const {
    return static_cast<int>(std::count_if(colors_.begin(), colors_.end(),
                                          [](int c) { return c != 0; }));
}

ValidityReport verify(const Graph& g, const DistanceMatrix& dm, const PackingColoring& c) {
    if (c.n() != g.n())
        throw Error("coloring covers " + std::to_string(c.n()) + " vertices but graph has " +
                    std::to_string(g.n()));
    if (dm.n() != g.n())
        throw Error("distance matrix size mismatch");

    ValidityReport report;
    report.colored_count = c.colored_count();
    for (int u = 0; u < g.n(); ++u) {
        if (!c.is_colored(u))
            continue;
        for (int v = u + 1; v < g.n(); ++v) {
            if (c.color(v) != c.color(u))
                continue;
            int d = dm.at(u, v);
            if (d <= c.color(u))
                report.violations.push_back({u, v, c.color(u), d});
        }
    }
    report.valid = report.violations.empty();
    return report;
}

int multiplicity_bound(int diameter, int color) {
    if (diameter < 2)
        throw Error("multiplicity_bound needs diameter >= 2");
    if (color < 2)
        throw Error("multiplicity_bound needs color >= 2");
    return (diameter - 2) / (color - 1) + 1;
}

int reusable_budget(int diameter) {
    if (diameter < 2)
        throw Error("reusable_budget needs diameter >= 2");
    int total = 0;
    for (int c = 2; c <= diameter - 1; ++c)
        total += multiplicity_bound(diameter, c);
    return total;
}

PackingColoring parse_coloring(const std::string& text, int n) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    PackingColoring col(n);
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream ls(line);
        long long v, c;
        if (!(ls >> v >> c))
            throw Error("line " + std::to_string(lineno) + ": malformed coloring line");
        if (v < 0 || v >= n)
            throw Error("line " + std::to_string(lineno) + ": vertex id out of range [0," +
                        std::to_string(n) + ")");
        if (c < 1 || c > kMaxColorId)
            throw Error("line " + std::to_string(lineno) + ": color out of range");
        if (col.is_colored(static_cast<int>(v)))
            throw Error("line " + std::to_string(lineno) + ": vertex " + std::to_string(v) +
                        " colored twice");
        col.set_color(static_cast<int>(v), static_cast<int>(c));
    }
    return col;
}

std::string serialize_coloring(const PackingColoring& c) {
    std::ostringstream out;
    for (int v = 0; v < c.n(); ++v)
        if (c.is_colored(v))
            out << v << ' ' << c.color(v) << '\n';
    return out.str();
}

} // namespace packkit
