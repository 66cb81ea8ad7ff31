#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "packkit/graph.hpp"
#include "packkit/solvers.hpp"

namespace packkit {

enum class Role { original, subdivision, duplicate, path_vertex };

/// The text of the construction only attaches a duplicate v' to v; the
/// worked example and the swap argument both need v' adjacent to every
/// subdivision vertex of an edge at v as well. figure_consistent is the
/// default; text_literal exists so the two readings can be compared.
enum class DuplicateRule { figure_consistent, text_literal };

struct ReductionOutput {
    Graph h;
    int d = 3;
    std::vector<Role> roles;                 // per h vertex
    std::vector<int> vertex_image;           // g vertex -> its copy in h
    std::vector<int> duplicate_image;        // g vertex -> its duplicate in h
    std::vector<std::pair<int, int>> g_edges;
    std::vector<int> edge_image;             // g edge index -> subdivision vertex
    std::vector<int> path_ids;               // appended path, empty for d = 3
    int anchor = -1;                         // S vertex the path hangs off

    int count(Role r) const;
};

/// Chordal hardness instance: subdivide every edge (S), complete S into a
/// clique, duplicate every original vertex (D), and for d > 3 append a path
/// of length d-2 at the smallest-id S vertex.
ReductionOutput build_hardness_instance(const Graph& g, int d,
                                        DuplicateRule rule = DuplicateRule::figure_consistent);

/// m + n - alpha + 2: colors 1 and 2 plus one unique color per subdivision
/// vertex and per original vertex outside a maximum independent set. The
/// appended path recycles colors, so the value does not depend on d.
/// Guard: n <= 20 (alpha is computed exactly).
int predicted_chi_p(const Graph& g);

struct ReductionReport {
    bool chordal_ok = false;
    bool diameter_ok = false;
    int diameter_actual = 0;
    bool chi_ok = false;
    int chi_exact = 0;
    int chi_predicted = 0;
    bool chi_budget_exhausted = false;
    bool witness_ok = false;
    bool witness_budget_exhausted = false;
    std::optional<int> text_literal_chi; // comparison only, no assertion
    std::uint64_t nodes = 0;

    bool all_ok() const { return chordal_ok && diameter_ok && chi_ok && witness_ok; }
    bool any_budget_exhausted() const {
        return chi_budget_exhausted || witness_budget_exhausted;
    }
};

struct ReductionVerifyOptions {
    ExactOptions solver;
    bool compare_text_literal = false;
};

/// End-to-end check of the construction on one input: h chordal, diameter
/// exactly d, exact chi_p equal to the predicted value, and some optimal
/// coloring with every duplicate on color 1 and the color-2 class inside V a
/// maximum independent set of g. Budget exhaustion is reported separately
/// from assertion failure.
ReductionReport verify_reduction(const Graph& g, int d,
                                 const ReductionVerifyOptions& options = {});

struct ExperimentRow {
    std::string name;
    int n = 0, m = 0, h_n = 0;
    int heuristic_k = 0;
    int predicted_k = 0;
    double ratio = 0.0;
};

/// Greedy value vs predicted optimum on each hardness instance.
std::vector<ExperimentRow> approximability_experiment(
    const std::vector<std::pair<std::string, Graph>>& inputs, int d);

std::string experiment_table_tsv(const std::vector<ExperimentRow>& rows);

/// "v ROLE" lines with ROLE in {V, S, D, P}, sorted by vertex.
std::string serialize_roles(const ReductionOutput& out);

} // namespace packkit
