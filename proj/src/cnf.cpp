#include "packkit/cnf.hpp"

#include <algorithm>
#include <sstream>

namespace packkit {

CnfEncoding encode_cnf(const Graph& g, int k) {
    if (k < 1)
        throw Error("encode_cnf needs k >= 1");
    DistanceMatrix dm = bfs_distances(g);

    CnfEncoding enc;
    enc.map.n = g.n();
    enc.map.k = k;
    enc.cnf.num_vars = g.n() * k;

    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> at_least_one;
        at_least_one.reserve(static_cast<size_t>(k));
        for (int c = 1; c <= k; ++c)
            at_least_one.push_back(enc.map.var(v, c));
        enc.cnf.clauses.push_back(std::move(at_least_one));
        for (int c1 = 1; c1 <= k; ++c1)
            for (int c2 = c1 + 1; c2 <= k; ++c2)
                enc.cnf.clauses.push_back({-enc.map.var(v, c1), -enc.map.var(v, c2)});
    }
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            for (int c = 1; c <= k; ++c)
                if (dm.at(u, v) <= c)
                    enc.cnf.clauses.push_back({-enc.map.var(u, c), -enc.map.var(v, c)});
    return enc;
}

std::string to_dimacs(const CnfEncoding& enc) {
    std::ostringstream out;
    for (int v = 0; v < enc.map.n; ++v)
        for (int c = 1; c <= enc.map.k; ++c)
            out << "c map " << v << ' ' << c << ' ' << enc.map.var(v, c) << '\n';
    out << "p cnf " << enc.cnf.num_vars << ' ' << enc.cnf.clauses.size() << '\n';
    for (const auto& clause : enc.cnf.clauses) {
        for (int lit : clause)
            out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

Cnf parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Cnf cnf;
    bool header_seen = false;
    long long promised_clauses = 0;
    std::vector<int> current;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c')
            continue;
        if (line[0] == 'p') {
            std::istringstream hs(line);
            std::string p, fmt;
            if (!(hs >> p >> fmt >> cnf.num_vars >> promised_clauses) || fmt != "cnf")
                throw Error("malformed DIMACS header: " + line);
            header_seen = true;
            continue;
        }
        if (!header_seen)
            throw Error("DIMACS clause before header");
        std::istringstream ls(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                cnf.clauses.push_back(current);
                current.clear();
            } else {
                if (std::abs(lit) > cnf.num_vars)
                    throw Error("literal " + std::to_string(lit) + " out of range");
                current.push_back(lit);
            }
        }
    }
    if (!header_seen)
        throw Error("missing DIMACS header");
    if (!current.empty())
        throw Error("unterminated clause at end of DIMACS input");
    if (static_cast<long long>(cnf.clauses.size()) != promised_clauses)
        throw Error("DIMACS header promised " + std::to_string(promised_clauses) +
                    " clauses, found " + std::to_string(cnf.clauses.size()));
    return cnf;
}

// ---- toy DPLL ---------------------------------------------------------------

namespace {

enum : signed char { kUnset = 0, kTrue = 1, kFalse = -1 };

bool literal_true(int lit, const std::vector<signed char>& value) {
    signed char v = value[static_cast<size_t>(std::abs(lit))];
    return v != kUnset && (v == kTrue) == (lit > 0);
}

bool literal_false(int lit, const std::vector<signed char>& value) {
    signed char v = value[static_cast<size_t>(std::abs(lit))];
    return v != kUnset && (v == kTrue) != (lit > 0);
}

// Returns false on conflict. On success every clause is satisfied or has
// at least two free literals, and all forced assignments are applied.
bool propagate(const Cnf& cnf, std::vector<signed char>& value) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& clause : cnf.clauses) {
            int free_lit = 0, free_count = 0;
            bool satisfied = false;
            for (int lit : clause) {
                if (literal_true(lit, value)) {
                    satisfied = true;
                    break;
                }
                if (!literal_false(lit, value)) {
                    free_lit = lit;
                    ++free_count;
                    if (free_count > 1)
                        break;
                }
            }
            if (satisfied || free_count > 1)
                continue;
            if (free_count == 0)
                return false; // falsified clause
            value[static_cast<size_t>(std::abs(free_lit))] = free_lit > 0 ? kTrue : kFalse;
            changed = true;
        }
    }
    return true;
}

bool dpll(const Cnf& cnf, std::vector<signed char>& value) {
    if (!propagate(cnf, value))
        return false;
    int branch_var = 0;
    for (int v = 1; v <= cnf.num_vars; ++v) {
        if (value[static_cast<size_t>(v)] == kUnset) {
            branch_var = v;
            break;
        }
    }
    if (branch_var == 0)
        return true;
    for (signed char choice : {kTrue, kFalse}) {
        std::vector<signed char> saved = value;
        value[static_cast<size_t>(branch_var)] = choice;
        if (dpll(cnf, value))
            return true;
        value = std::move(saved);
    }
    return false;
}

} // namespace

DpllResult toy_dpll(const Cnf& cnf) {
    if (cnf.num_vars > 2000)
        throw Error("toy_dpll is guarded at 2000 variables, got " +
                    std::to_string(cnf.num_vars));
    std::vector<signed char> value(static_cast<size_t>(cnf.num_vars) + 1, kUnset);
    DpllResult result;
    result.sat = dpll(cnf, value);
    if (result.sat) {
        result.model.assign(static_cast<size_t>(cnf.num_vars) + 1, false);
        for (int v = 1; v <= cnf.num_vars; ++v)
            result.model[static_cast<size_t>(v)] = value[static_cast<size_t>(v)] == kTrue;
    }
    return result;
}

PackingColoring decode_model(const CnfVarMap& map, const std::vector<bool>& model) {
    if (static_cast<int>(model.size()) < map.n * map.k + 1)
        throw Error("model does not cover all variables");
    PackingColoring col(map.n);
    for (int v = 0; v < map.n; ++v) {
        int chosen = 0;
        for (int c = 1; c <= map.k; ++c) {
            if (model[static_cast<size_t>(map.var(v, c))]) {
                if (chosen != 0)
                    throw Error("vertex " + std::to_string(v) + " has two colors set");
                chosen = c;
            }
        }
        if (chosen == 0)
            throw Error("vertex " + std::to_string(v) + " has no color");
        col.set_color(v, chosen);
    }
    return col;
}

} // namespace packkit
