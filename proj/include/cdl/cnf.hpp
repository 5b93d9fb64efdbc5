#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cdl/labeling.hpp"
#include "cdl/solver.hpp"

namespace cdl {

/// Clause set over variables 1..var_count; literals are signed ints.
struct CnfFormula {
    int var_count = 0;
    std::vector<std::vector<int>> clauses;
};

/// DIMACS: "p cnf V C" header, clause lines terminated by 0, 'c'
/// comment lines skipped.
CnfFormula read_dimacs(std::istream& in);
CnfFormula read_dimacs_file(const std::string& path);
void write_dimacs(const CnfFormula& f, std::ostream& out);
void write_dimacs_file(const CnfFormula& f, const std::string& path);

enum class CnfStatus { satisfiable, unsatisfiable, budget_exceeded };

struct CnfResult {
    CnfStatus status;
    std::vector<bool> assignment;  // 1-based var -> value, index 0 unused
};

/// Small DPLL solver (unit propagation + branching) for round-trip
/// checks and offload fallback on tiny formulas.
CnfResult dpll_solve(const CnfFormula& f, std::uint64_t max_nodes = 10'000'000ULL);

struct CnfVariable {
    VertexId vertex;
    Label value;
};

/// One-hot encoding of a sum-mode decision instance: variable i+1 means
/// "vertex variables[i].vertex takes value variables[i].value".
struct CnfExport {
    CnfFormula formula;
    std::vector<CnfVariable> variables;
};

/// Exactly-one clauses per vertex plus, per constrained edge, blocking
/// clauses for every assignment of the closed-neighborhood symmetric
/// difference with equal partial sums (shared vertices cancel). Refuses
/// edges whose symmetric difference exceeds symdiff_limit.
CnfExport export_cnf(const DecisionInstance& inst, int symdiff_limit = 12);

/// Map file: one line per variable, "var vertex value".
void write_cnf_variable_map(const CnfExport& e, std::ostream& out);

Labeling decode_cnf_model(const CnfExport& e, const std::vector<bool>& assignment, int n);

}  // namespace cdl
