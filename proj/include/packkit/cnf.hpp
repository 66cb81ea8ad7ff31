#pragma once

#include <string>
#include <vector>

#include "packkit/coloring.hpp"
#include "packkit/graph.hpp"

namespace packkit {

/// Clauses are literal lists; literal +v / -v is variable v (1-based) plain
/// or negated, DIMACS style.
struct Cnf {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

/// Variable x_{v,c} says "vertex v has color c"; numbered v*k + c.
struct CnfVarMap {
    int n = 0;
    int k = 0;

    int var(int v, int c) const { return v * k + c; }
    int vertex_of(int var) const { return (var - 1) / k; }
    int color_of(int var) const { return (var - 1) % k + 1; }
};

struct CnfEncoding {
    Cnf cnf;
    CnfVarMap map;
};

/// SAT iff g has a packing k-coloring: one color per vertex (at-least-one +
/// pairwise at-most-one), and for every pair u<v with dist(u,v) <= c the
/// clause (-x_{u,c} v -x_{v,c}).
CnfEncoding encode_cnf(const Graph& g, int k);

/// DIMACS with "c map v c var" comment lines describing the variable map.
std::string to_dimacs(const CnfEncoding& enc);

Cnf parse_dimacs(const std::string& text);

struct DpllResult {
    bool sat = false;
    std::vector<bool> model; // 1-based by variable; meaningful when sat
};

/// Unit propagation + two-way branching. Test-scope solver, guarded at 2000
/// variables; external SAT solvers are the real target of encode_cnf.
DpllResult toy_dpll(const Cnf& cnf);

/// Reads one color per vertex out of a satisfying assignment. A vertex with
/// zero or two colors set means the assignment was no model; that throws.
PackingColoring decode_model(const CnfVarMap& map, const std::vector<bool>& model);

} // namespace packkit
