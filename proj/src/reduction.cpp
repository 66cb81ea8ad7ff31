#include "packkit/reduction.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "packkit/chordal.hpp"

namespace packkit {

int ReductionOutput::count(Role r) const {
    return static_cast<int>(std::count(roles.begin(), roles.end(), r));
}

ReductionOutput build_hardness_instance(const Graph& g, int d, DuplicateRule rule) {
    if (g.n() < 2)
        throw Error("build_hardness_instance needs n >= 2");
    if (g.m() < 1)
        throw Error("build_hardness_instance needs at least one edge");
    if (!is_connected(g))
        throw Error("build_hardness_instance needs a connected graph");
    if (d < 3)
        throw Error("build_hardness_instance needs d >= 3");

    ReductionOutput out;
    out.d = d;
    out.g_edges = g.edges();
    int n = g.n(), m = g.m();
    int path_count = d > 3 ? d - 2 : 0;
    int total = 2 * n + m + path_count;

    out.h = Graph(total);
    out.roles.assign(static_cast<size_t>(total), Role::original);
    out.vertex_image.resize(static_cast<size_t>(n));
    out.duplicate_image.resize(static_cast<size_t>(n));
    out.edge_image.resize(static_cast<size_t>(m));

    for (int v = 0; v < n; ++v) {
        out.vertex_image[static_cast<size_t>(v)] = v;
        out.duplicate_image[static_cast<size_t>(v)] = n + m + v;
        out.roles[static_cast<size_t>(n + m + v)] = Role::duplicate;
    }
    for (int e = 0; e < m; ++e) {
        out.edge_image[static_cast<size_t>(e)] = n + e;
        out.roles[static_cast<size_t>(n + e)] = Role::subdivision;
    }

    // (b) subdivide every edge
    for (int e = 0; e < m; ++e) {
        auto [u, v] = out.g_edges[static_cast<size_t>(e)];
        out.h.add_edge(n + e, u);
        out.h.add_edge(n + e, v);
    }
    // (c) S becomes a clique
    for (int e1 = 0; e1 < m; ++e1)
        for (int e2 = e1 + 1; e2 < m; ++e2)
            out.h.add_edge(n + e1, n + e2);
    // (d) duplicates
    for (int v = 0; v < n; ++v)
        out.h.add_edge(v, out.duplicate_image[static_cast<size_t>(v)]);
    if (rule == DuplicateRule::figure_consistent) {
        for (int e = 0; e < m; ++e) {
            auto [u, v] = out.g_edges[static_cast<size_t>(e)];
            out.h.add_edge(out.duplicate_image[static_cast<size_t>(u)], n + e);
            out.h.add_edge(out.duplicate_image[static_cast<size_t>(v)], n + e);
        }
    }
    // (e) diameter-stretching path from the smallest-id S vertex
    if (path_count > 0) {
        out.anchor = n;
        int prev = out.anchor;
        for (int j = 0; j < path_count; ++j) {
            int p = 2 * n + m + j;
            out.roles[static_cast<size_t>(p)] = Role::path_vertex;
            out.path_ids.push_back(p);
            out.h.add_edge(prev, p);
            prev = p;
        }
    }
    return out;
}

int predicted_chi_p(const Graph& g) {
    if (g.n() > 20)
        throw Error("predicted_chi_p is guarded at 20 vertices");
    if (g.m() < 1)
        throw Error("predicted_chi_p needs at least one edge");
    if (!is_connected(g))
        throw Error("predicted_chi_p needs a connected graph");
    return g.m() + g.n() - independence_number(g) + 2;
}

namespace {

// All maximum independent sets, as sorted vertex lists.
void collect_mis(const Graph& g, int alpha, std::vector<std::vector<int>>& out) {
    std::vector<int> chosen;
    // Depth-first over vertices in id order; prune when even taking all
    // remaining vertices cannot reach alpha.
    std::function<void(int)> recurse = [&](int v) {
        if (static_cast<int>(chosen.size()) == alpha) {
            out.push_back(chosen);
            return;
        }
        if (v == g.n() || static_cast<int>(chosen.size()) + (g.n() - v) < alpha)
            return;
        bool free = std::none_of(chosen.begin(), chosen.end(),
                                 [&](int u) { return g.adjacent(u, v); });
        if (free) {
            chosen.push_back(v);
            recurse(v + 1);
            chosen.pop_back();
        }
        recurse(v + 1);
    };
    recurse(0);
}

} // namespace

ReductionReport verify_reduction(const Graph& g, int d, const ReductionVerifyOptions& options) {
    ReductionOutput out = build_hardness_instance(g, d);
    ReductionReport report;
    report.chi_predicted = predicted_chi_p(g);

    report.chordal_ok = lexbfs_peo(out.h).chordal;

    std::optional<int> diam = diameter(out.h);
    report.diameter_actual = diam.value_or(-1);
    report.diameter_ok = diam && *diam == d;

    ExactResult exact = exact_chi_p(out.h, options.solver);
    report.nodes += exact.nodes;
    report.chi_exact = exact.k;
    if (!exact.solved()) {
        report.chi_budget_exhausted = true;
        report.witness_budget_exhausted = true; // needs the optimum to run
        return report;
    }
    report.chi_ok = exact.k == report.chi_predicted;

    // Look for an optimal coloring in the shape the construction predicts:
    // duplicates all on color 1, the color-2 class inside V equal to some
    // maximum independent set of g.
    int alpha = independence_number(g);
    std::vector<std::vector<int>> all_mis;
    collect_mis(g, alpha, all_mis);
    for (const auto& mis : all_mis) {
        ColoringConstraints cs;
        cs.fixed.assign(static_cast<size_t>(out.h.n()), 0);
        cs.forbidden.assign(static_cast<size_t>(out.h.n()), {});
        for (int v = 0; v < g.n(); ++v)
            cs.fixed[static_cast<size_t>(out.duplicate_image[static_cast<size_t>(v)])] = 1;
        std::vector<char> in_mis(static_cast<size_t>(g.n()), 0);
        for (int v : mis)
            in_mis[static_cast<size_t>(v)] = 1;
        for (int v = 0; v < g.n(); ++v) {
            if (in_mis[static_cast<size_t>(v)])
                cs.fixed[static_cast<size_t>(v)] = 2;
            else
                cs.forbidden[static_cast<size_t>(v)].push_back(2);
        }
        FeasibilityResult feas =
            find_coloring(out.h, exact.k, cs, options.solver.node_budget);
        report.nodes += feas.nodes;
        if (feas.status == FeasibilityResult::Status::found) {
            report.witness_ok = true;
            break;
        }
        if (feas.status == FeasibilityResult::Status::budget_exhausted) {
            report.witness_budget_exhausted = true;
            break;
        }
    }

    if (options.compare_text_literal) {
        ReductionOutput text = build_hardness_instance(g, d, DuplicateRule::text_literal);
        ExactResult text_exact = exact_chi_p(text.h, options.solver);
        report.nodes += text_exact.nodes;
        if (text_exact.solved())
            report.text_literal_chi = text_exact.k;
    }
    return report;
}

std::vector<ExperimentRow> approximability_experiment(
    const std::vector<std::pair<std::string, Graph>>& inputs, int d) {
    std::vector<ExperimentRow> rows;
    rows.reserve(inputs.size());
    for (const auto& [name, g] : inputs) {
        ReductionOutput out = build_hardness_instance(g, d);
        std::vector<int> order(static_cast<size_t>(out.h.n()));
        std::iota(order.begin(), order.end(), 0);
        PackingColoring greedy = greedy_heuristic(out.h, order);

        ExperimentRow row;
        row.name = name;
        row.n = g.n();
        row.m = g.m();
        row.h_n = out.h.n();
        row.heuristic_k = greedy.max_color();
        row.predicted_k = predicted_chi_p(g);
        row.ratio = static_cast<double>(row.heuristic_k) / row.predicted_k;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string experiment_table_tsv(const std::vector<ExperimentRow>& rows) {
    std::ostringstream out;
    out << "name\tn\tm\th_n\theuristic\tpredicted\tratio\n";
    for (const auto& row : rows) {
        out << row.name << '\t' << row.n << '\t' << row.m << '\t' << row.h_n << '\t'
            << row.heuristic_k << '\t' << row.predicted_k << '\t' << row.ratio << '\n';
    }
    return out.str();
}

std::string serialize_roles(const ReductionOutput& out) {
    std::ostringstream os;
    for (int v = 0; v < out.h.n(); ++v) {
        char letter = 'V';
        switch (out.roles[static_cast<size_t>(v)]) {
        case Role::original: letter = 'V'; break;
        case Role::subdivision: letter = 'S'; break;
        case Role::duplicate: letter = 'D'; break;
        case Role::path_vertex: letter = 'P'; break;
        }
        os << v << ' ' << letter << '\n';
    }
    return os.str();
}

} // namespace packkit
