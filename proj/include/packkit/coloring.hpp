#pragma once

#include <string>
#include <vector>

#include "packkit/graph.hpp"

namespace packkit {

/// Highest color id accepted from input files. Keeps `dist <= color`
/// comparisons against the unreachable sentinel well-defined.
constexpr int kMaxColorId = 1'000'000'000;

/// Partial or total assignment vertex -> color in {1,2,...}; 0 means
/// uncolored. The maximum color k is always recomputed, never cached.
class PackingColoring {
public:
    PackingColoring() = default;
    explicit PackingColoring(int n) : colors_(static_cast<size_t>(n), 0) {}

    int n() const { return static_cast<int>(colors_.size()); }
    bool is_colored(int v) const { return colors_[static_cast<size_t>(v)] != 0; }
    int color(int v) const { return colors_[static_cast<size_t>(v)]; }

    void set_color(int v, int c);
    void clear_color(int v) { colors_[static_cast<size_t>(v)] = 0; }

    int max_color() const;
    int colored_count() const;
    bool total() const { return colored_count() == n(); }

    const std::vector<int>& raw() const { return colors_; }

private:
    std::vector<int> colors_;
};

struct Violation {
    int u, v;       // same-colored pair, u < v
    int color;
    int distance;
};

struct ValidityReport {
    bool valid = true;
    std::vector<Violation> violations;  // exhaustive, each pair once
    int colored_count = 0;
};

/// Packing condition check: every same-colored assigned pair {u,v} must have
/// dist(u,v) >= color+1. Uncolored vertices impose nothing.
ValidityReport verify(const Graph& g, const DistanceMatrix& dm, const PackingColoring& c);

/// Max size of a color-c class in an interval graph of diameter d:
/// floor((d-2)/(c-1)) + 1. Requires d >= 2, c >= 2.
int multiplicity_bound(int diameter, int color);

/// Sum of multiplicity_bound(d, c) for c = 2..d-1: an upper bound on how many
/// vertices can carry colors 2..d-1 in an interval graph of diameter d.
/// Exact integer arithmetic throughout. Requires d >= 2.
int reusable_budget(int diameter);

// Coloring text format: one "v c" line per colored vertex, sorted by vertex.
PackingColoring parse_coloring(const std::string& text, int n);
std::string serialize_coloring(const PackingColoring& c);

} // namespace packkit
