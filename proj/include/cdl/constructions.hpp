#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cdl/graph.hpp"
#include "cdl/labeling.hpp"

namespace cdl {

/// An edge found to violate the sum condition, returned by refuters.
struct RefutedEdge {
    VertexId u, v;
    Label sum;  // common closed sum of the two endpoints
};

/// Family t1(t), t >= 4: 2t-1 complete blocks K_{2t} whose v- and
/// u-vertices are tied together through degree-2 gadget pairs, a g/h
/// layer and one apex. Ships with a canonical labeling on values {1..t}
/// and an adversarial list assignment over 2t-1 element lists that no
/// list-respecting labeling survives.
///
/// Numbering: blocks k = 1..2t-1 first (v_1^k..v_t^k then u_1^k..u_t^k),
/// then x/y pairs in (i,j,k) lexicographic order, then a/b pairs, then
/// g/h pairs in (i,i',k) order, apex last.
struct T1Family {
    int t = 0;
    Graph graph;
    Labeling canonical;
    ListAssignment adversarial_lists;
    std::vector<std::string> roles;

    VertexId v_id(int i, int k) const;
    VertexId u_id(int i, int k) const;
    VertexId x_id(int i, int j, int k) const;
    VertexId y_id(int i, int j, int k) const;
    VertexId a_id(int i, int j, int k) const;
    VertexId b_id(int i, int j, int k) const;
    VertexId g_id(int i, int ip, int k) const;
    VertexId h_id(int i, int ip, int k) const;
    VertexId apex_id() const;
};

T1Family gen_t1(int t);

/// Structural certifier: degree profile, canonical-labeling validity and
/// value usage, per-block gadget-sum targets. Returns the list of checks
/// performed; throws falsification_error when one fails.
std::vector<std::string> certify_t1(const T1Family& fam);

/// Refutes a list-respecting labeling: finds an edge with equal closed
/// sums. Throws std::invalid_argument when f leaves the lists and
/// falsification_error if no violation exists.
RefutedEdge certify_t1_list_obstruction(const T1Family& fam, const Labeling& f);

/// Family tj1(t): bipartite graph on X, Y (t^2 vertices each) plus
/// subset-pair gadgets z_{A,B} -- z'_{A,B}. The pruned variant keeps
/// only pairs with 1 <= |A|,|B| <= t, which already support the
/// refutation argument; the full variant keeps all non-empty pairs.
struct Tj1Family {
    int t = 0;
    bool pruned = true;
    int alpha = 0;  // t^2
    Graph graph;
    std::vector<std::string> roles;
    // subsets in (size, lexicographic) order, shared by A and B positions
    std::vector<std::vector<int>> subsets;   // 1-based ground elements
    // pair p covers (subsets[p / S], subsets[p % S]) with S = subsets.size()
    VertexId x_id(int i) const;              // i 1-based
    VertexId y_id(int j) const;
    VertexId z_id(int pair) const;
    VertexId zp_id(int pair) const;
    int pair_count() const;
    int subset_index(const std::vector<int>& s) const;  // -1 when absent
};

Tj1Family gen_tj1(int t, bool pruned, std::int64_t max_vertices = 1'000'000);

std::vector<std::string> certify_tj1(const Tj1Family& fam);

/// Refutes a labeling with values in {1..t} following the pigeonhole
/// argument: either some x_i, y_j share a value (singleton pair z-edge
/// violates) or a frequent X-value r and Y-value p yield subsets A, B
/// with |A| = p, |B| = r whose z-edge has equal sums.
RefutedEdge refute_tj1(const Tj1Family& fam, const Labeling& f);

/// Family t6(t): clique K_{t^2} with pendant fans (i+j pendants on the
/// (i,j) core vertex) and a two-value labeling that is sum-valid, giving
/// a strong number of 2 while the counting bound pushes dis up.
struct T6Family {
    int t = 0;
    Graph graph;
    Labeling strong;  // values {1, max_degree+1}
    std::vector<std::string> roles;
    VertexId core_id(int i, int j) const;             // 1-based
    VertexId x_pendant_id(int i, int j, int s) const; // s in 1..i
    VertexId y_pendant_id(int i, int j, int s) const; // s in 1..j
};

T6Family gen_t6(int t, int max_t = 6);

std::vector<std::string> certify_t6(const T6Family& fam);

/// ceil((t^2+1)/(2t)): analytic lower bound on dis of gen_t6(t).
std::int64_t t6_counting_lower_bound(std::int64_t t);

/// X -> 1, Y -> max(max_degree, 2) over the canonical bipartition;
/// always sum-valid, at most two distinct values.
Labeling bipartite_two_value_labeling(const Graph& g);

/// Incremental split-graph labeling: clique vertices get 1, independent
/// vertices are added one at a time with the least value in {1..w^2}
/// keeping all current clique closed sums distinct (w = clique size).
/// The result is re-verified on the full graph; failure there is a
/// falsification event.
Labeling split_greedy_labeling(const Graph& g);

/// Clique -> 1, i-th independent vertex -> (max_degree+1)^(i-1); at most
/// |S|+1 distinct values. Overflow is checked, not wrapped.
Labeling split_strong_labeling(const Graph& g);

/// Deterministic seeded instance generators for sampling experiments.
Graph random_split_graph(int omega, int s_size, std::mt19937_64& rng);
Graph random_bipartite_graph(int nx, int ny, double edge_prob, std::mt19937_64& rng);
Labeling random_labeling_from_lists(const ListAssignment& lists, std::mt19937_64& rng);
Labeling random_uniform_labeling(int n, Label max_value, std::mt19937_64& rng);

/// Role sidecar: one line per vertex, "index role".
void write_roles(const std::vector<std::string>& roles, std::ostream& out);

}  // namespace cdl
