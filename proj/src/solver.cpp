#include "cdl/solver.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

#include "cdl/errors.hpp"

namespace cdl {

DecisionInstance DecisionInstance::uniform(const Graph& g, VerifyMode mode, int k) {
    if (k < 1) throw std::invalid_argument("domain {1..k} needs k >= 1");
    DecisionInstance inst;
    inst.graph = g;
    inst.mode = mode;
    std::vector<Label> dom(k);
    std::iota(dom.begin(), dom.end(), Label{1});
    inst.domains.assign(g.vertex_count(), dom);
    return inst;
}

DecisionInstance DecisionInstance::with_lists(const Graph& g, VerifyMode mode,
                                              const ListAssignment& lists) {
    if (lists.lists.size() != static_cast<std::size_t>(g.vertex_count()))
        throw std::invalid_argument("list assignment size does not match vertex count");
    DecisionInstance inst;
    inst.graph = g;
    inst.mode = mode;
    inst.domains = lists.lists;
    for (auto& dom : inst.domains) {
        std::sort(dom.begin(), dom.end());
        dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
        if (dom.empty() || dom.front() < 1)
            throw std::invalid_argument("domains must be non-empty sets of positive integers");
    }
    return inst;
}

namespace {

// Edge constraint after shared-part cancellation: labels over side_a =
// N[u]\N[v] must not mirror side_b = N[v]\N[u] (equal sums in sum mode,
// equal multisets in multiset mode).
struct Constraint {
    std::vector<VertexId> scope;  // side_a then side_b
    int a_size = 0;
    VertexId via_u = 0, via_v = 0;
};

struct Searcher {
    const DecisionInstance& inst;
    const Budget& budget;
    std::chrono::steady_clock::time_point start;

    std::vector<Constraint> cons;
    std::vector<std::vector<std::pair<int, int>>> membership;  // vertex -> (cons, +-1)
    std::vector<VertexId> order;                               // constrained vertices only
    std::vector<Label> value;
    std::vector<char> assigned;
    std::vector<int> unassigned_count;  // per constraint
    std::vector<Label> diff;            // per constraint, sum mode bookkeeping

    // Domains with trail-based undo.
    std::vector<std::vector<Label>> dom;
    std::vector<std::vector<char>> alive;
    std::vector<int> alive_count;
    std::vector<std::pair<VertexId, int>> trail;

    SearchStats stats;
    bool out_of_budget = false;

    explicit Searcher(const DecisionInstance& i, const Budget& b)
        : inst(i), budget(b), start(std::chrono::steady_clock::now()) {}

    bool budget_ok() {
        if (stats.nodes > budget.max_nodes) return false;
        if ((stats.nodes & 0xfff) == 0) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            if (ms > budget.max_millis) return false;
        }
        return true;
    }

    void build() {
        const Graph& g = inst.graph;
        const int n = g.vertex_count();
        value.assign(n, 0);
        assigned.assign(n, 0);
        dom = inst.domains;
        alive.resize(n);
        alive_count.resize(n);
        for (int v = 0; v < n; ++v) {
            alive[v].assign(dom[v].size(), 1);
            alive_count[v] = static_cast<int>(dom[v].size());
        }

        std::map<std::pair<std::vector<VertexId>, std::vector<VertexId>>, int> seen;
        for (const auto& [u, v] : g.edges()) {
            std::vector<VertexId> a, b;
            const auto& cu = g.closed_neighborhood(u);
            const auto& cv = g.closed_neighborhood(v);
            std::set_difference(cu.begin(), cu.end(), cv.begin(), cv.end(), std::back_inserter(a));
            std::set_difference(cv.begin(), cv.end(), cu.begin(), cu.end(), std::back_inserter(b));
            if (a.empty() && b.empty()) continue;  // twins impose nothing
            if (a.empty() || b.empty()) continue;  // sums of positive labels never reach 0
            if (!feasible_to_violate(a, b)) continue;
            if (b < a) std::swap(a, b);
            auto key = std::make_pair(a, b);
            if (seen.count(key)) continue;
            seen[key] = static_cast<int>(cons.size());
            Constraint c;
            c.scope = a;
            c.scope.insert(c.scope.end(), b.begin(), b.end());
            c.a_size = static_cast<int>(a.size());
            c.via_u = u;
            c.via_v = v;
            cons.push_back(std::move(c));
        }

        membership.assign(n, {});
        unassigned_count.assign(cons.size(), 0);
        diff.assign(cons.size(), 0);
        for (int ci = 0; ci < static_cast<int>(cons.size()); ++ci) {
            const auto& c = cons[ci];
            unassigned_count[ci] = static_cast<int>(c.scope.size());
            for (int s = 0; s < static_cast<int>(c.scope.size()); ++s)
                membership[c.scope[s]].push_back({ci, s < c.a_size ? +1 : -1});
        }

        // Vertices in no surviving constraint cannot affect validity; fix
        // them to their first value and never branch on them.
        for (int v = 0; v < n; ++v) {
            if (membership[v].empty()) {
                value[v] = dom[v].front();
                assigned[v] = 1;
            } else {
                order.push_back(v);
            }
        }
        std::sort(order.begin(), order.end(), [&](VertexId x, VertexId y) {
            if (g.degree(x) != g.degree(y)) return g.degree(x) > g.degree(y);
            return x < y;
        });
    }

    // Whether any assignment from the current (full) domains can violate:
    // sum mode compares achievable sum intervals, multiset mode needs
    // equal cardinalities.
    bool feasible_to_violate(const std::vector<VertexId>& a, const std::vector<VertexId>& b) const {
        if (inst.mode == VerifyMode::multiset) return a.size() == b.size();
        Label a_min = 0, a_max = 0, b_min = 0, b_max = 0;
        for (VertexId w : a) {
            a_min += inst.domains[w].front();
            a_max += inst.domains[w].back();
        }
        for (VertexId w : b) {
            b_min += inst.domains[w].front();
            b_max += inst.domains[w].back();
        }
        return a_min - b_max <= 0 && 0 <= a_max - b_min;
    }

    void remove_value(VertexId w, int idx) {
        alive[w][idx] = 0;
        --alive_count[w];
        trail.emplace_back(w, idx);
        ++stats.propagations;
    }

    // At most one value of the last unassigned vertex can equalize the
    // two sides; prune it. Returns false when a domain wipes out.
    bool prune_last(int ci) {
        const Constraint& c = cons[ci];
        VertexId w = -1;
        bool w_in_a = false;
        for (int s = 0; s < static_cast<int>(c.scope.size()); ++s)
            if (!assigned[c.scope[s]]) {
                w = c.scope[s];
                w_in_a = s < c.a_size;
                break;
            }
        Label forbidden;
        bool have = false;
        if (inst.mode == VerifyMode::sum) {
            forbidden = w_in_a ? -diff[ci] : diff[ci];
            have = true;
        } else {
            // multiset(left without w) must miss multiset(right) by
            // exactly one value; that value is forbidden for w.
            std::map<Label, int> need;
            for (int s = 0; s < static_cast<int>(c.scope.size()); ++s) {
                VertexId z = c.scope[s];
                if (z == w) continue;
                bool in_a = s < c.a_size;
                need[value[z]] += (in_a == w_in_a) ? -1 : +1;
            }
            Label leftover = 0;
            int pos = 0;
            bool bad = false;
            for (auto& [val, cnt] : need) {
                if (cnt < 0) { bad = true; break; }
                if (cnt > 0) { pos += cnt; leftover = val; }
            }
            if (!bad && pos == 1) {
                forbidden = leftover;
                have = true;
            }
        }
        if (!have) return true;
        const auto& d = dom[w];
        auto it = std::lower_bound(d.begin(), d.end(), forbidden);
        if (it == d.end() || *it != forbidden) return true;
        int idx = static_cast<int>(it - d.begin());
        if (!alive[w][idx]) return true;
        remove_value(w, idx);
        return alive_count[w] > 0;
    }

    bool violated_when_complete(int ci) const {
        if (inst.mode == VerifyMode::sum) return diff[ci] == 0;
        const Constraint& c = cons[ci];
        std::vector<Label> a, b;
        for (int s = 0; s < static_cast<int>(c.scope.size()); ++s)
            (s < c.a_size ? a : b).push_back(value[c.scope[s]]);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }

    bool propagate(VertexId v) {
        bool ok = true;
        for (auto [ci, sign] : membership[v]) {
            diff[ci] += sign * value[v];
            --unassigned_count[ci];
            if (!ok) continue;  // keep counters consistent, skip extra work
            if (unassigned_count[ci] == 1) ok = prune_last(ci);
            else if (unassigned_count[ci] == 0 && violated_when_complete(ci)) ok = false;
        }
        return ok;
    }

    void unpropagate(VertexId v) {
        for (auto [ci, sign] : membership[v]) {
            diff[ci] -= sign * value[v];
            ++unassigned_count[ci];
        }
    }

    bool dfs(std::size_t pos) {
        if (pos == order.size()) return true;
        VertexId v = order[pos];
        const auto& d = dom[v];
        for (int idx = 0; idx < static_cast<int>(d.size()); ++idx) {
            if (!alive[v][idx]) continue;
            ++stats.nodes;
            if (!budget_ok()) {
                out_of_budget = true;
                return false;
            }
            value[v] = d[idx];
            assigned[v] = 1;
            std::size_t mark = trail.size();
            if (propagate(v) && dfs(pos + 1)) return true;
            unpropagate(v);
            assigned[v] = 0;
            while (trail.size() > mark) {
                auto [w, i] = trail.back();
                trail.pop_back();
                alive[w][i] = 1;
                ++alive_count[w];
            }
            if (out_of_budget) return false;
        }
        return false;
    }

    SolveResult run() {
        build();
        bool found = dfs(0);
        stats.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        SolveResult res;
        res.stats = stats;
        if (found) {
            Labeling f;
            f.values = value;
            res.status = SolveStatus::satisfiable;
            res.witness = std::move(f);
        } else if (out_of_budget) {
            res.status = SolveStatus::budget_exceeded;
        } else {
            res.status = SolveStatus::unsatisfiable;
        }
        return res;
    }
};

void check_witness(const DecisionInstance& inst, const Labeling& f) {
    auto bad = inst.mode == VerifyMode::sum ? verify_sum(inst.graph, f)
                                            : verify_multiset(inst.graph, f);
    if (bad)
        throw falsification_error("solver produced a witness that fails verification at edge (" +
                                  std::to_string(bad->u) + "," + std::to_string(bad->v) + ")");
    for (VertexId v = 0; v < inst.graph.vertex_count(); ++v)
        if (!std::binary_search(inst.domains[v].begin(), inst.domains[v].end(), f.values[v]))
            throw falsification_error("solver witness leaves the domain of vertex " +
                                      std::to_string(v));
}

}  // namespace

SolveResult decide(const DecisionInstance& inst, const Budget& budget) {
    for (const auto& d : inst.domains)
        if (d.empty()) throw std::invalid_argument("empty domain");
    Searcher s(inst, budget);
    SolveResult res = s.run();
    if (res.status == SolveStatus::satisfiable) check_witness(inst, *res.witness);
    return res;
}

namespace {

int dis_ceiling(int max_degree) {
    return max_degree * max_degree - max_degree + 1;
}

template <typename Result, typename MakeWitness>
Result ascend(const Graph& g, VerifyMode mode, const Budget& budget, MakeWitness&& attach) {
    Result out{};
    out.stats = {};
    if (g.max_degree() <= 1) {
        // Every edge joins twins; the all-ones labeling works.
        Labeling ones;
        ones.values.assign(g.vertex_count(), 1);
        out.exact = true;
        out.value = 1;
        out.lower_bound = 1;
        attach(out, ones);
        return out;
    }
    const int ceiling = dis_ceiling(g.max_degree());
    for (int k = 1; k <= ceiling; ++k) {
        SolveResult r = decide(DecisionInstance::uniform(g, mode, k), budget);
        out.stats.nodes += r.stats.nodes;
        out.stats.propagations += r.stats.propagations;
        out.stats.millis += r.stats.millis;
        if (r.status == SolveStatus::satisfiable) {
            out.exact = true;
            out.value = k;
            out.lower_bound = k;
            attach(out, *r.witness);
            return out;
        }
        if (r.status == SolveStatus::budget_exceeded) {
            out.exact = false;
            out.value = 0;
            out.lower_bound = k;  // every smaller domain was refuted
            return out;
        }
    }
    throw falsification_error("no labeling within the max-degree ceiling " +
                              std::to_string(ceiling) + "; the upper bound is violated");
}

}  // namespace

DisResult compute_dis(const Graph& g, const Budget& budget) {
    return ascend<DisResult>(g, VerifyMode::sum, budget,
                             [](DisResult& out, const Labeling& w) { out.witness = w; });
}

DisStrongResult compute_dis_s(const Graph& g, const Budget& budget) {
    return ascend<DisStrongResult>(
        g, VerifyMode::multiset, budget, [&g](DisStrongResult& out, const Labeling& w) {
            out.color_witness = w;
            Labeling sums = power_revaluation(g, w);
            if (auto bad = verify_sum(g, sums))
                throw falsification_error(
                    "power re-valuation of a multiset-valid labeling fails the sum check at "
                    "edge (" +
                    std::to_string(bad->u) + "," + std::to_string(bad->v) + ")");
            out.sum_witness = std::move(sums);
        });
}

SolveResult decide_list(const Graph& g, const ListAssignment& lists, const Budget& budget) {
    return decide(DecisionInstance::with_lists(g, VerifyMode::sum, lists), budget);
}

}  // namespace cdl
