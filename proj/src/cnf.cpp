#include "cdl/cnf.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cdl/errors.hpp"

namespace cdl {

CnfFormula read_dimacs(std::istream& in) {
    CnfFormula f;
    std::string line;
    int lineno = 0;
    long long declared_clauses = -1;
    std::vector<int> current;
    while (std::getline(in, line)) {
        ++lineno;
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == 'c') continue;
        if (line[pos] == 'p') {
            std::istringstream hs(line);
            std::string p, fmt;
            long long nv, nc;
            if (!(hs >> p >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0 || nc < 0)
                throw parse_error("line " + std::to_string(lineno) + ": bad DIMACS header");
            f.var_count = static_cast<int>(nv);
            declared_clauses = nc;
            continue;
        }
        if (declared_clauses < 0)
            throw parse_error("line " + std::to_string(lineno) + ": clause before header");
        std::istringstream ls(line);
        long long lit;
        while (ls >> lit) {
            if (lit == 0) {
                f.clauses.push_back(current);
                current.clear();
            } else {
                if (std::abs(lit) > f.var_count)
                    throw parse_error("line " + std::to_string(lineno) +
                                      ": literal out of range");
                current.push_back(static_cast<int>(lit));
            }
        }
    }
    if (!current.empty()) throw parse_error("unterminated clause at end of file");
    if (declared_clauses != static_cast<long long>(f.clauses.size()))
        throw parse_error("clause count mismatch: header says " +
                          std::to_string(declared_clauses) + ", found " +
                          std::to_string(f.clauses.size()));
    return f;
}

CnfFormula read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return read_dimacs(in);
}

void write_dimacs(const CnfFormula& f, std::ostream& out) {
    out << "p cnf " << f.var_count << ' ' << f.clauses.size() << '\n';
    for (const auto& cl : f.clauses) {
        for (int lit : cl) out << lit << ' ';
        out << "0\n";
    }
}

void write_dimacs_file(const CnfFormula& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open " + path + " for writing");
    write_dimacs(f, out);
}

namespace {

enum : int { t_unset = 0, t_true = 1, t_false = 2 };

struct Dpll {
    const CnfFormula& f;
    std::uint64_t max_nodes;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::vector<int> val;  // 1-based

    Dpll(const CnfFormula& formula, std::uint64_t cap) : f(formula), max_nodes(cap) {
        val.assign(f.var_count + 1, t_unset);
    }

    bool lit_true(int lit) const {
        int v = val[std::abs(lit)];
        return v != t_unset && ((lit > 0) == (v == t_true));
    }
    bool lit_false(int lit) const {
        int v = val[std::abs(lit)];
        return v != t_unset && ((lit > 0) == (v == t_false));
    }

    // Unit propagation to fixed point; records set variables on the trail.
    bool propagate(std::vector<int>& trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& cl : f.clauses) {
                int unassigned = 0, candidate = 0;
                bool satisfied = false;
                for (int lit : cl) {
                    if (lit_true(lit)) {
                        satisfied = true;
                        break;
                    }
                    if (!lit_false(lit)) {
                        ++unassigned;
                        candidate = lit;
                    }
                }
                if (satisfied) continue;
                if (unassigned == 0) return false;
                if (unassigned == 1) {
                    val[std::abs(candidate)] = candidate > 0 ? t_true : t_false;
                    trail.push_back(std::abs(candidate));
                    changed = true;
                }
            }
        }
        return true;
    }

    bool solve() {
        if (++nodes > max_nodes) {
            exhausted = true;
            return false;
        }
        std::vector<int> trail;
        if (!propagate(trail)) {
            for (int v : trail) val[v] = t_unset;
            return false;
        }
        int branch = 0;
        for (int v = 1; v <= f.var_count; ++v)
            if (val[v] == t_unset) {
                branch = v;
                break;
            }
        if (branch == 0) return true;
        for (int choice : {t_true, t_false}) {
            val[branch] = choice;
            if (solve()) return true;
            val[branch] = t_unset;
            if (exhausted) break;
        }
        for (int v : trail) val[v] = t_unset;
        return false;
    }
};

}  // namespace

CnfResult dpll_solve(const CnfFormula& f, std::uint64_t max_nodes) {
    Dpll solver(f, max_nodes);
    bool sat = solver.solve();
    CnfResult res;
    if (sat) {
        res.status = CnfStatus::satisfiable;
        res.assignment.assign(f.var_count + 1, false);
        for (int v = 1; v <= f.var_count; ++v) res.assignment[v] = solver.val[v] == t_true;
    } else {
        res.status = solver.exhausted ? CnfStatus::budget_exceeded : CnfStatus::unsatisfiable;
    }
    return res;
}

CnfExport export_cnf(const DecisionInstance& inst, int symdiff_limit) {
    if (inst.mode != VerifyMode::sum)
        throw std::invalid_argument("CNF export is defined for sum mode");
    const Graph& g = inst.graph;
    const int n = g.vertex_count();

    CnfExport out;
    std::vector<std::vector<int>> var_of(n);  // vertex -> per-domain-value variable
    for (VertexId v = 0; v < n; ++v) {
        for (Label val : inst.domains[v]) {
            out.variables.push_back({v, val});
            var_of[v].push_back(static_cast<int>(out.variables.size()));
        }
    }
    out.formula.var_count = static_cast<int>(out.variables.size());

    // Exactly-one per vertex.
    for (VertexId v = 0; v < n; ++v) {
        out.formula.clauses.push_back(var_of[v]);
        for (std::size_t i = 0; i < var_of[v].size(); ++i)
            for (std::size_t j = i + 1; j < var_of[v].size(); ++j)
                out.formula.clauses.push_back({-var_of[v][i], -var_of[v][j]});
    }

    // Forbidden combinations: assignments of the symmetric difference with
    // equal partial sums on the two sides.
    for (const auto& [u, v] : g.edges()) {
        std::vector<VertexId> a, b;
        const auto& cu = g.closed_neighborhood(u);
        const auto& cv = g.closed_neighborhood(v);
        std::set_difference(cu.begin(), cu.end(), cv.begin(), cv.end(), std::back_inserter(a));
        std::set_difference(cv.begin(), cv.end(), cu.begin(), cu.end(), std::back_inserter(b));
        if (a.empty() || b.empty()) continue;  // twin or one-sided: never violated
        if (static_cast<int>(a.size() + b.size()) > symdiff_limit)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        "): closed-neighborhood symmetric difference " +
                                        std::to_string(a.size() + b.size()) + " exceeds limit " +
                                        std::to_string(symdiff_limit));
        std::vector<VertexId> scope = a;
        scope.insert(scope.end(), b.begin(), b.end());
        std::vector<int> pick(scope.size(), 0);
        std::vector<int> clause;
        auto enumerate = [&](auto&& self, std::size_t pos, Label diff) -> void {
            if (pos == scope.size()) {
                if (diff != 0) return;
                clause.clear();
                for (std::size_t s = 0; s < scope.size(); ++s)
                    clause.push_back(-var_of[scope[s]][pick[s]]);
                out.formula.clauses.push_back(clause);
                return;
            }
            VertexId w = scope[pos];
            Label sign = pos < a.size() ? +1 : -1;
            for (std::size_t i = 0; i < inst.domains[w].size(); ++i) {
                pick[pos] = static_cast<int>(i);
                self(self, pos + 1, diff + sign * inst.domains[w][i]);
            }
        };
        enumerate(enumerate, 0, 0);
    }
    return out;
}

void write_cnf_variable_map(const CnfExport& e, std::ostream& out) {
    for (std::size_t i = 0; i < e.variables.size(); ++i)
        out << (i + 1) << ' ' << e.variables[i].vertex << ' ' << e.variables[i].value << '\n';
}

Labeling decode_cnf_model(const CnfExport& e, const std::vector<bool>& assignment, int n) {
    Labeling f;
    f.values.assign(n, 0);
    for (std::size_t i = 0; i < e.variables.size(); ++i) {
        if (i + 1 < assignment.size() && assignment[i + 1])
            f.values[e.variables[i].vertex] = e.variables[i].value;
    }
    for (VertexId v = 0; v < n; ++v)
        if (f.values[v] == 0)
            throw std::invalid_argument("model assigns no value to vertex " + std::to_string(v));
    return f;
}

}  // namespace cdl
