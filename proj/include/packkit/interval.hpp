#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "packkit/coloring.hpp"
#include "packkit/graph.hpp"

namespace packkit {

/// Closed integer intervals, one per vertex. "Unit" is inferred: all
/// intervals share one length.
struct IntervalRep {
    std::vector<std::pair<int, int>> intervals; // (left, right), left <= right

    int n() const { return static_cast<int>(intervals.size()); }
    bool unit() const;
};

/// uv is an edge iff the closed intervals meet (touching endpoints count).
Graph intersection_graph(const IntervalRep& rep);

/// Largest number of intervals over a common point == clique number.
int clique_number(const IntervalRep& rep);

// Interval file format: first line "n", then n lines "v left right".
IntervalRep parse_intervals(const std::string& text);
std::string serialize_intervals(const IntervalRep& rep);

IntervalRep random_interval_rep(int n, std::uint64_t seed, int coord_range = 0, int max_len = 4);
IntervalRep random_unit_interval_rep(int n, std::uint64_t seed, int length = 2,
                                     int coord_range = 0);

struct DpOptions {
    /// State space is roughly n^k; k above this cap is refused.
    int k_cap = 4;
};

struct DpResult {
    int count = 0;             // colored vertices in an optimal partial coloring
    PackingColoring coloring;  // attains count, passes verify
};

/// Maximum number of vertices colorable with colors 1..k, by dynamic
/// programming over vertices sorted by right endpoint. The state keeps, per
/// color, the vertex of that color whose right endpoint is rightmost (or N
/// for an unused color). Assigning color i to v is allowed when v is at
/// distance >= i+1 from the frontier vertex of color i: among same-colored
/// vertices in right-endpoint order the frontier one is nearest to anything
/// processed later, so the single check covers the whole class. Reachable
/// states live in an ordered map rather than a dense (n+1)^k table.
DpResult max_partial_coloring_dp(const IntervalRep& rep, int k, const DpOptions& options = {});

struct IntervalChiResult {
    int k = 0;
    PackingColoring witness;
    int diameter = 0;
    int best_t = 0; // number of reusable colors in the minimizing split
};

/// chi_p for a connected interval graph of diameter d, as
/// min over t in 0..min(d-1,n) of t + n - M_t where M_t is the DP maximum
/// with t colors: only colors 1..d-1 can repeat, so every vertex missed by
/// the best partial t-coloring takes a fresh unique color. Requires
/// d-1 <= the DP cap.
IntervalChiResult chi_p_interval_via_dp(const IntervalRep& rep, const DpOptions& options = {});

} // namespace packkit
