#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdl/graph.hpp"

namespace cdl {

/// One evaluated upper bound. Inapplicable bounds are reported with the
/// reason instead of being dropped.
struct BoundEntry {
    std::string name;
    bool applicable;
    std::int64_t value;  // meaningful when applicable
    std::string note;    // inputs used, or why inapplicable
};

struct BoundReport {
    std::vector<BoundEntry> entries;
    std::optional<std::int64_t> aggregate;  // min over applicable entries
};

/// s+1 where s = d_1+...+d_D - D over the non-increasing degree
/// sequence, D the max degree. Requires D >= 2.
std::optional<std::int64_t> bound_s_plus_one(const Graph& g);

/// Edge count m; requires D >= 2.
std::optional<std::int64_t> bound_edge_count(const Graph& g);

/// min{D^2-2D+t+1, D^2-D+1} with t the number of max-degree vertices;
/// requires D >= 2.
std::optional<std::int64_t> bound_max_degree_count(const Graph& g);

/// D^2-3D+4 when there is exactly one max-degree vertex and D >= 2.
std::optional<std::int64_t> bound_unique_max(const Graph& g);

/// k(k-lambda-1)+1 when the graph is strongly regular.
std::optional<std::int64_t> bound_srg(const Graph& g);

/// floor(((n-1)/2)^2)+1; requires D >= 2.
std::optional<std::int64_t> bound_half_n(const Graph& g);

/// Bipartite two-term floor bound. Requires a bipartite non-star with a
/// degree >= 2 vertex on each side.
std::optional<std::int64_t> bound_bipartite(const Graph& g);

/// All bounds with provenance; aggregate absent when nothing applies.
BoundReport best_upper_bound(const Graph& g);

}  // namespace cdl
