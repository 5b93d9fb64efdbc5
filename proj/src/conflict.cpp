#include "cdl/conflict.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <set>

namespace cdl {

ConflictGraph derive_forced(const Graph& g) {
    std::vector<std::pair<VertexId, VertexId>> conflict_edges;
    std::vector<ForcedInequality> witnesses;
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& [u, v] : g.edges()) {
        const auto& cu = g.closed_neighborhood(u);
        const auto& cv = g.closed_neighborhood(v);
        std::vector<VertexId> a, b;
        std::set_difference(cu.begin(), cu.end(), cv.begin(), cv.end(), std::back_inserter(a));
        std::set_difference(cv.begin(), cv.end(), cu.begin(), cu.end(), std::back_inserter(b));
        if (a.size() != 1 || b.size() != 1) continue;
        auto key = std::minmax(a[0], b[0]);
        if (!seen.insert(key).second) continue;
        conflict_edges.push_back(key);
        witnesses.push_back({key.first, key.second, u, v});
    }
    ConflictGraph cg;
    cg.graph = Graph(g.vertex_count(), conflict_edges);
    cg.witnesses = std::move(witnesses);
    return cg;
}

namespace {

// Greedy clique grown from each start vertex, then (1 out, 2 in) swap
// improvements. Deterministic.
std::vector<VertexId> best_clique(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<VertexId> best;
    for (VertexId start = 0; start < n; ++start) {
        std::vector<VertexId> clique{start};
        std::vector<VertexId> cand = g.neighbors(start);
        while (!cand.empty()) {
            // candidate keeping the most other candidates alive, ties by index
            VertexId pick = -1;
            int pick_score = -1;
            for (VertexId c : cand) {
                int score = 0;
                for (VertexId d : cand)
                    if (d != c && g.adjacent(c, d)) ++score;
                if (score > pick_score) {
                    pick_score = score;
                    pick = c;
                }
            }
            clique.push_back(pick);
            std::vector<VertexId> next;
            for (VertexId c : cand)
                if (c != pick && g.adjacent(c, pick)) next.push_back(c);
            cand = std::move(next);
        }
        if (clique.size() > best.size()) best = clique;
    }
    // local search: removing one member sometimes admits two outsiders
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t drop = 0; drop < best.size() && !improved; ++drop) {
            std::vector<VertexId> base;
            for (std::size_t i = 0; i < best.size(); ++i)
                if (i != drop) base.push_back(best[i]);
            std::vector<VertexId> adds;
            for (VertexId v = 0; v < n; ++v) {
                if (std::find(base.begin(), base.end(), v) != base.end() || v == best[drop])
                    continue;
                bool full = true;
                for (VertexId u : base)
                    if (!g.adjacent(v, u)) {
                        full = false;
                        break;
                    }
                if (full) adds.push_back(v);
            }
            for (std::size_t i = 0; i < adds.size() && !improved; ++i)
                for (std::size_t j = i + 1; j < adds.size() && !improved; ++j)
                    if (g.adjacent(adds[i], adds[j])) {
                        base.push_back(adds[i]);
                        base.push_back(adds[j]);
                        best = base;
                        improved = true;
                    }
        }
    }
    std::sort(best.begin(), best.end());
    return best;
}

struct ChiSearch {
    const Graph& g;
    std::uint64_t node_cap;
    std::chrono::steady_clock::time_point deadline;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    int best_k;                        // current upper bound (greedy, then improved)
    std::vector<int> best_coloring;    // 1-based colors
    std::vector<int> color;
    std::vector<VertexId> order;

    ChiSearch(const Graph& graph, const Budget& budget) : g(graph) {
        node_cap = budget.max_nodes;
        deadline = std::chrono::steady_clock::now() +
                   std::chrono::milliseconds(budget.max_millis);
    }

    bool feasible(VertexId v, int c) const {
        for (VertexId u : g.neighbors(v))
            if (color[u] == c) return false;
        return true;
    }

    void dfs(std::size_t pos, int used, int lb) {
        if (exhausted || used >= best_k || best_k <= lb) return;
        if (++nodes > node_cap ||
            ((nodes & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline)) {
            exhausted = true;
            return;
        }
        if (pos == order.size()) {
            best_k = used;
            best_coloring = color;
            return;
        }
        // most saturated next, ties by degree then index
        VertexId v = -1;
        int v_sat = -1, v_deg = -1;
        for (std::size_t i = pos; i < order.size(); ++i) {
            VertexId w = order[i];
            if (color[w] != 0) continue;
            std::set<int> around;
            for (VertexId u : g.neighbors(w))
                if (color[u] != 0) around.insert(color[u]);
            int sat = static_cast<int>(around.size());
            if (sat > v_sat || (sat == v_sat && g.degree(w) > v_deg)) {
                v_sat = sat;
                v_deg = g.degree(w);
                v = w;
            }
        }
        // keep colored vertices in the prefix; no restore needed, the scan
        // above only cares that uncolored vertices sit at positions >= pos
        std::iter_swap(order.begin() + pos, std::find(order.begin() + pos, order.end(), v));
        for (int c = 1; c <= std::min(used + 1, best_k - 1); ++c) {
            if (!feasible(v, c)) continue;
            color[v] = c;
            dfs(pos + 1, std::max(used, c), lb);
            color[v] = 0;
            if (exhausted) break;
        }
    }
};

}  // namespace

ChromaticBound chromatic_lower_bound(const ConflictGraph& cg, const Budget& budget) {
    const Graph& g = cg.graph;
    const int n = g.vertex_count();
    ChromaticBound out;
    out.clique = best_clique(g);
    if (n == 0 || g.edge_count() == 0) {
        out.bound = n > 0 ? 1 : 0;
        out.exact = true;
        out.coloring.assign(n, 1);
        return out;
    }

    ChiSearch search(g, budget);
    search.order.resize(n);
    for (int v = 0; v < n; ++v) search.order[v] = v;
    std::sort(search.order.begin(), search.order.end(), [&](VertexId a, VertexId b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    // greedy upper bound seeds the search
    search.color.assign(n, 0);
    int greedy_k = 0;
    for (VertexId v : search.order) {
        int c = 1;
        while (!search.feasible(v, c)) ++c;
        search.color[v] = c;
        greedy_k = std::max(greedy_k, c);
    }
    search.best_k = greedy_k;
    search.best_coloring = search.color;
    if (greedy_k > static_cast<int>(out.clique.size())) {
        std::fill(search.color.begin(), search.color.end(), 0);
        search.dfs(0, 0, static_cast<int>(out.clique.size()));
    }

    if (!search.exhausted) {
        out.bound = search.best_k;
        out.exact = true;
        out.coloring = search.best_coloring;
    } else {
        out.bound = static_cast<int>(out.clique.size());
        out.exact = false;
    }
    return out;
}

void write_conflict_witnesses(const ConflictGraph& cg, std::ostream& out) {
    for (const auto& w : cg.witnesses)
        out << w.a << ' ' << w.b << " via " << w.via_u << ' ' << w.via_v << '\n';
}

}  // namespace cdl
