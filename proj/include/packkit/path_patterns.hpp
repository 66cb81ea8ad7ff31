#pragma once

#include <cstdint>
#include <vector>

#include "packkit/coloring.hpp"
#include "packkit/interval.hpp"

namespace packkit {

struct PatternOptions {
    /// Search guard on s for the standalone pattern operation.
    int max_s = 6;
    /// Periods are tried up to period_cap_factor * (s+1).
    int period_cap_factor = 8;
    std::uint64_t node_budget = 50'000'000;
};

/// A finite color sequence whose infinite repetition packing-colors the
/// infinite path using only colors s..3s+2. Found by iterative deepening over
/// period lengths with cyclic feasibility checks, then certified by running
/// verify on three concatenated copies (periods below (3s+2)/2 are never
/// tried, so two adjacent copies contain every constrained pair).
std::vector<int> find_path_pattern(int s, const PatternOptions& options = {});

/// First n entries of the repeated pattern, laid on the path 0-1-...-(n-1).
PackingColoring color_path(int n, int s, const PatternOptions& options = {});

/// Valid coloring of an n-vertex path using only colors s..3s+2, without
/// requiring periodicity. Used for color bands whose s is beyond the pattern
/// search guard.
std::vector<int> windowed_path_colors(int n, int s, std::uint64_t node_budget = 50'000'000);

// Color band for the level-l independence class: band_bottom(1) = 1 and
// band_top(l) + 1 == band_bottom(l+1), with band_top(l) = (5/2)(3^l - 1).
// Integer arithmetic throughout (3^l - 1 is even).
long long band_bottom(int level);
long long band_top(int level);

struct UnitColoringOptions {
    /// Band tops grow as (5/2)(3^k - 1); clique numbers above this are refused.
    int clique_guard = 4;
    std::uint64_t node_budget = 50'000'000;
};

/// Constructive coloring of a connected unit interval graph with clique
/// number k: partition into k independence classes by greedy left-endpoint
/// proper coloring, then color class l along its sorted order with a path
/// coloring from band l. In-class distances d(v_i, v_j) >= j-i are asserted
/// on every run; the result is returned only after passing verify. Max color
/// is at most band_top(k).
PackingColoring unit_interval_coloring(const IntervalRep& rep,
                                       const UnitColoringOptions& options = {});

} // namespace packkit
