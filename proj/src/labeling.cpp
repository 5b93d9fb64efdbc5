#include "cdl/labeling.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "cdl/errors.hpp"

namespace cdl {

std::optional<std::size_t> ListAssignment::uniform_size() const {
    if (lists.empty()) return std::nullopt;
    std::size_t k = lists.front().size();
    for (const auto& l : lists)
        if (l.size() != k) return std::nullopt;
    return k;
}

namespace {

Label checked_add(Label a, Label b) {
    Label out;
    if (__builtin_add_overflow(a, b, &out)) throw overflow_error("closed sum overflows");
    return out;
}

void check_total(const Graph& g, const Labeling& f) {
    if (f.values.size() != static_cast<std::size_t>(g.vertex_count()))
        throw std::invalid_argument("labeling size does not match vertex count");
}

// Labels over N[u] \ N[v], sorted; the shared part of the two closed
// neighborhoods cancels in multiset comparisons.
std::vector<Label> side_labels(const Graph& g, const Labeling& f, VertexId u, VertexId v) {
    const auto& a = g.closed_neighborhood(u);
    const auto& b = g.closed_neighborhood(v);
    std::vector<Label> out;
    std::size_t i = 0, j = 0;
    while (i < a.size()) {
        if (j == b.size() || a[i] < b[j]) out.push_back(f.values[a[i++]]);
        else if (a[i] > b[j]) ++j;
        else ++i, ++j;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Label closed_sum(const Graph& g, const Labeling& f, VertexId v) {
    Label s = 0;
    for (VertexId u : g.closed_neighborhood(v)) s = checked_add(s, f.values[u]);
    return s;
}

std::optional<ViolationCertificate> verify_sum(const Graph& g, const Labeling& f) {
    check_total(g, f);
    std::vector<Label> sums(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) sums[v] = closed_sum(g, f, v);
    for (const auto& [u, v] : g.edges()) {
        if (sums[u] != sums[v]) continue;
        if (g.same_closed_neighborhood(u, v)) continue;
        return ViolationCertificate{u, v, sums[u], sums[v], VerifyMode::sum};
    }
    return std::nullopt;
}

std::optional<ViolationCertificate> verify_multiset(const Graph& g, const Labeling& f) {
    check_total(g, f);
    for (const auto& [u, v] : g.edges()) {
        auto a = side_labels(g, f, u, v);
        auto b = side_labels(g, f, v, u);
        if (a.empty() && b.empty()) continue;  // twin exemption
        if (a != b) continue;
        return ViolationCertificate{u, v, closed_sum(g, f, u), closed_sum(g, f, v),
                                    VerifyMode::multiset};
    }
    return std::nullopt;
}

ListCheckResult verify_list(const Graph& g, const Labeling& f, const ListAssignment& lists) {
    check_total(g, f);
    if (lists.lists.size() != static_cast<std::size_t>(g.vertex_count()))
        throw std::invalid_argument("list assignment size does not match vertex count");
    ListCheckResult res;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& l = lists.lists[v];
        if (!std::binary_search(l.begin(), l.end(), f.values[v])) {
            res.list_violation = ListViolation{v, f.values[v]};
            return res;
        }
    }
    res.sum_violation = verify_sum(g, f);
    return res;
}

int distinct_value_count(const Labeling& f) {
    std::set<Label> vals(f.values.begin(), f.values.end());
    return static_cast<int>(vals.size());
}

Labeling power_revaluation(const Graph& g, const Labeling& colors) {
    // Base max_degree+2 exceeds every closed-neighborhood size, so the
    // multiset of colors is recoverable from the encoded sum.
    Label base = g.max_degree() + 2;
    Label max_color = 1;
    for (Label c : colors.values) max_color = std::max(max_color, c);
    std::vector<Label> pow(static_cast<std::size_t>(max_color) + 1, 0);
    Label p = 1;
    for (Label c = 1; c <= max_color; ++c) {
        pow[c] = p;
        if (c < max_color && __builtin_mul_overflow(p, base, &p))
            throw overflow_error("power re-valuation overflows");
    }
    Labeling out;
    out.values.reserve(colors.values.size());
    for (Label c : colors.values) {
        if (c < 1) throw std::invalid_argument("labels must be positive");
        out.values.push_back(pow[c]);
    }
    return out;
}

Labeling read_labeling(std::istream& in, int n) {
    Labeling f;
    f.values.reserve(n);
    std::string line;
    int lineno = 0;
    while (static_cast<int>(f.values.size()) < n && std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        Label v;
        std::string extra;
        if (!(ls >> v) || (ls >> extra))
            throw parse_error("labeling line " + std::to_string(lineno) +
                              ": expected one integer");
        if (v < 1) throw parse_error("labeling line " + std::to_string(lineno) +
                                     ": labels must be positive");
        f.values.push_back(v);
    }
    if (static_cast<int>(f.values.size()) < n)
        throw parse_error("labeling file ended before " + std::to_string(n) + " values");
    return f;
}

Labeling read_labeling_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return read_labeling(in, n);
}

void write_labeling(const Labeling& f, std::ostream& out) {
    for (Label v : f.values) out << v << '\n';
}

void write_labeling_file(const Labeling& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open " + path + " for writing");
    write_labeling(f, out);
}

ListAssignment read_lists(std::istream& in, int n) {
    ListAssignment la;
    la.lists.reserve(n);
    std::string line;
    int lineno = 0;
    while (static_cast<int>(la.lists.size()) < n && std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::vector<Label> vals;
        Label v;
        while (ls >> v) {
            if (v < 1) throw parse_error("list line " + std::to_string(lineno) +
                                         ": values must be positive");
            vals.push_back(v);
        }
        if (vals.empty()) throw parse_error("list line " + std::to_string(lineno) + ": empty list");
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        la.lists.push_back(std::move(vals));
    }
    if (static_cast<int>(la.lists.size()) < n)
        throw parse_error("list file ended before " + std::to_string(n) + " lines");
    return la;
}

ListAssignment read_lists_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return read_lists(in, n);
}

void write_lists(const ListAssignment& lists, std::ostream& out) {
    for (const auto& l : lists.lists) {
        for (std::size_t i = 0; i < l.size(); ++i) out << (i ? " " : "") << l[i];
        out << '\n';
    }
}

void write_lists_file(const ListAssignment& lists, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open " + path + " for writing");
    write_lists(lists, out);
}

}  // namespace cdl
