#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "packkit/coloring.hpp"
#include "packkit/graph.hpp"

namespace packkit {

struct SolveResult {
    int k = 0;
    PackingColoring witness;
};

/// Minimum k over all total colorings, by plain enumeration: colors tried in
/// increasing order for k = 1, 2, ... with vertices in id order. No bounds,
/// no symmetry breaking; this is the reference oracle everything else is
/// tested against. Guards: connected, n <= 12.
SolveResult brute_force_chi_p(const Graph& g);

struct ExactOptions {
    std::uint64_t node_budget = 100'000'000;
    /// When the caller knows g is an interval graph of this diameter, color-c
    /// classes are capped at multiplicity_bound(d, c) during search.
    std::optional<int> interval_diameter;
    /// Upper cap on worker threads; the current engine explores sequentially.
    int threads = 1;
};

struct ExactResult {
    enum class Status { solved, budget_exhausted };
    Status status = Status::solved;
    int k = 0;                 // optimal if solved, best incumbent otherwise
    PackingColoring witness;   // always passes verify
    std::uint64_t nodes = 0;

    bool solved() const { return status == Status::solved; }
};

/// Branch and bound: vertices in decreasing-degree order (ties by id), colors
/// increasing, greedy incumbent, clique lower bound, forward checking, and a
/// per-color cap of 1 for colors >= diameter (those can never repeat).
/// A graph of diameter d only reuses colors 1..d-1, which keeps the branching
/// factor near d instead of n. Requires connected input, n <= 128.
ExactResult exact_chi_p(const Graph& g, const ExactOptions& options = {});

/// Colors each vertex, in the given order, with the least color that keeps
/// the packing condition against previously colored vertices.
PackingColoring greedy_heuristic(const Graph& g, const std::vector<int>& order);

/// Size of a clique found greedily (seeded from every vertex, neighbors tried
/// by decreasing degree). A lower bound for chi_p.
int greedy_clique_bound(const Graph& g);

/// Exact independence number by complete branching. Guard: n <= 20.
int independence_number(const Graph& g);

// ---- constrained feasibility ----------------------------------------------
//
// Same search engine as exact_chi_p, but looks for any valid coloring with
// colors <= k_limit under per-vertex constraints. Used to probe the structure
// of optimal colorings (e.g. "is there an optimum with all duplicates on
// color 1").

struct ColoringConstraints {
    std::vector<int> fixed;                        // vertex -> required color, 0 = free
    std::vector<std::vector<int>> forbidden;       // vertex -> disallowed colors
};

struct FeasibilityResult {
    enum class Status { found, infeasible, budget_exhausted };
    Status status = Status::infeasible;
    PackingColoring coloring;  // meaningful when found
    std::uint64_t nodes = 0;
};

FeasibilityResult find_coloring(const Graph& g, int k_limit, const ColoringConstraints& cs,
                                std::uint64_t node_budget = 100'000'000);

} // namespace packkit
