#pragma once

#include <optional>
#include <vector>

#include "cdl/budget.hpp"
#include "cdl/graph.hpp"
#include "cdl/labeling.hpp"

namespace cdl {

/// One exact decision: does a labeling drawn from the given per-vertex
/// domains exist that is closed distinguishing (sum or multiset mode)?
struct DecisionInstance {
    Graph graph;
    VerifyMode mode = VerifyMode::sum;
    std::vector<std::vector<Label>> domains;  // sorted, non-empty

    static DecisionInstance uniform(const Graph& g, VerifyMode mode, int k);
    static DecisionInstance with_lists(const Graph& g, VerifyMode mode,
                                       const ListAssignment& lists);
};

enum class SolveStatus { satisfiable, unsatisfiable, budget_exceeded };

struct SolveResult {
    SolveStatus status;
    std::optional<Labeling> witness;  // verified before being returned
    SearchStats stats;
};

/// Complete backtracking search over vertices in a static order
/// (descending degree, ties by index) with forward-checking: once all
/// but one vertex of an edge's closed-neighborhood symmetric difference
/// are labeled, the value equalizing the two sums is pruned from the
/// last vertex's domain.
SolveResult decide(const DecisionInstance& inst, const Budget& budget = {});

struct DisResult {
    bool exact;               // false only on budget exhaustion
    int value;                // meaningful when exact
    int lower_bound;          // valid either way: all k < lower_bound refuted
    std::optional<Labeling> witness;
    SearchStats stats;
};

/// Least k such that {1..k} admits a closed distinguishing labeling.
/// For max degree <= 1 every edge joins twins and the answer is 1; for
/// max degree >= 2 the ascent is capped by the D^2-D+1 ceiling, and
/// exceeding it raises falsification_error.
DisResult compute_dis(const Graph& g, const Budget& budget = {});

struct DisStrongResult {
    bool exact;
    int value;
    int lower_bound;
    std::optional<Labeling> color_witness;  // k values, multiset-valid
    std::optional<Labeling> sum_witness;    // its power re-valuation, sum-valid
    SearchStats stats;
};

/// Least number of distinct values in a closed distinguishing labeling,
/// computed in multiset mode; the sum witness realizes the colors as
/// integers via power_revaluation.
DisStrongResult compute_dis_s(const Graph& g, const Budget& budget = {});

/// Complete decision over an explicit list assignment (sum mode).
SolveResult decide_list(const Graph& g, const ListAssignment& lists,
                        const Budget& budget = {});

}  // namespace cdl
