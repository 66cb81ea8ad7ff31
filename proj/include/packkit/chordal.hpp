#pragma once

#include <vector>

#include "packkit/graph.hpp"
#include "packkit/solvers.hpp"

namespace packkit {

struct PeoResult {
    bool chordal = false;
    std::vector<int> peo;             // elimination order when chordal
    std::vector<int> chordless_cycle; // induced cycle of length >= 4 otherwise
};

/// Lexicographic BFS. The reverse visit order is a perfect elimination
/// ordering exactly when the graph is chordal; otherwise a chordless cycle
/// is extracted as the certificate.
PeoResult lexbfs_peo(const Graph& g);

/// Each vertex's later neighbors must form a clique.
bool is_valid_peo(const Graph& g, const std::vector<int>& peo);

/// Maximum independent set of a chordal graph: sweep the PEO, take each
/// surviving vertex and delete its closed neighborhood.
std::vector<int> mis_chordal(const Graph& g, const std::vector<int>& peo);

/// chi_p for chordal graphs of diameter <= 2: only color 1 can repeat, so
/// k = n - alpha + 1 with a maximum independent set on color 1 and the rest
/// on fresh colors 2, 3, ... in id order. Cliques (diameter <= 1) go through
/// the same formula.
SolveResult chi_p_chordal_diam2(const Graph& g);

} // namespace packkit
