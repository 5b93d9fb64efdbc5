#pragma once

#include <iosfwd>
#include <vector>

#include "cdl/budget.hpp"
#include "cdl/graph.hpp"

namespace cdl {

/// f(a) != f(b) in every valid labeling, forced by the edge (u, v):
/// N[u] \ N[v] = {a} and N[v] \ N[u] = {b}, so the shared part cancels
/// and equal labels would equalize the two closed sums.
struct ForcedInequality {
    VertexId a, b;
    VertexId via_u, via_v;
};

/// Graph on V(G) whose edges are the forced inequalities. Any valid
/// labeling (sum or multiset mode) properly colors it, so its chromatic
/// number lower-bounds both dis and dis_s.
struct ConflictGraph {
    Graph graph;
    std::vector<ForcedInequality> witnesses;  // one per conflict edge, deduplicated
};

ConflictGraph derive_forced(const Graph& g);

struct ChromaticBound {
    int bound;                    // certified lower bound on dis / dis_s
    bool exact;                   // true: bound == chi(conflict graph)
    std::vector<int> coloring;    // proper coloring with `bound` colors when exact
    std::vector<VertexId> clique; // clique witness, always populated
};

/// Exact chromatic number by branch and bound within the node budget;
/// on exhaustion falls back to the best clique found (greedy start plus
/// swap-based local search).
ChromaticBound chromatic_lower_bound(const ConflictGraph& cg, const Budget& budget = {});

/// Witness sidecar: one line per conflict edge, "a b via u v".
void write_conflict_witnesses(const ConflictGraph& cg, std::ostream& out);

}  // namespace cdl
