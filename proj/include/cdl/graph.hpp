#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cdl {

using VertexId = int;

/// Immutable simple undirected graph. Vertices are dense integers 0..n-1,
/// adjacency lists are kept sorted, and closed neighborhoods (N[v] =
/// N(v) + v) are precomputed. Safe to read concurrently once built.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<VertexId, VertexId>>& edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
    const std::vector<VertexId>& closed_neighborhood(VertexId v) const { return closed_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const { return max_degree_; }

    bool adjacent(VertexId u, VertexId v) const;
    bool same_closed_neighborhood(VertexId u, VertexId v) const;

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

private:
    int n_ = 0;
    int m_ = 0;
    int max_degree_ = 0;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::vector<VertexId>> closed_;
};

/// Reads the line-based graph format: optional '#' comment lines, a
/// header "n m", then exactly m lines "u v". Throws parse_error with a
/// line number on malformed input, self-loops, duplicates or
/// out-of-range endpoints.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(const Graph& g, std::ostream& out);
void write_graph_file(const Graph& g, const std::string& path);

/// Non-increasing degree sequence d_1 >= ... >= d_n.
struct DegreeSequence {
    std::vector<int> degrees;
    int max() const { return degrees.empty() ? 0 : degrees.front(); }
    int min() const { return degrees.empty() ? 0 : degrees.back(); }
};
DegreeSequence degree_sequence(const Graph& g);

/// Two-coloring of a bipartite graph. Per connected component the side
/// holding the lowest-numbered vertex goes to x. side[v] is 0 or 1.
struct Bipartition {
    std::vector<VertexId> x, y;
    std::vector<int> side;
};
std::optional<Bipartition> bipartition(const Graph& g);

/// Canonical split partition: K a clique, S independent, K maximal in
/// the sense that no S-vertex is adjacent to all of K.
struct SplitPartition {
    std::vector<VertexId> clique;
    std::vector<VertexId> independent;
};
std::optional<SplitPartition> split_partition(const Graph& g);

/// Parameters (n, k, lambda, mu) when the graph is strongly regular.
/// Requires at least one adjacent and one non-adjacent pair, so complete
/// and edgeless graphs report absent.
struct SrgParams {
    int n, k, lambda, mu;
};
std::optional<SrgParams> srg_params(const Graph& g);

}  // namespace cdl
