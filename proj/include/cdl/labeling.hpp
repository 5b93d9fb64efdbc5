#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cdl/graph.hpp"

namespace cdl {

using Label = std::int64_t;

/// Total assignment of positive integers to vertices; values[v] is the
/// label of vertex v.
struct Labeling {
    std::vector<Label> values;
};

/// Per-vertex finite sets of admissible positive integers, each sorted
/// and non-empty.
struct ListAssignment {
    std::vector<std::vector<Label>> lists;
    /// Common list size when all lists agree, absent otherwise.
    std::optional<std::size_t> uniform_size() const;
};

enum class VerifyMode { sum, multiset };

/// Witness for a failed verification: an edge whose endpoints have
/// distinct closed neighborhoods yet indistinguishable label views.
/// Equal multisets force equal sums, so sum_u == sum_v in both modes.
struct ViolationCertificate {
    VertexId u, v;
    Label sum_u, sum_v;
    VerifyMode mode;
};

struct ListViolation {
    VertexId vertex;
    Label value;  // the assigned value missing from the list
};

struct ListCheckResult {
    std::optional<ListViolation> list_violation;
    std::optional<ViolationCertificate> sum_violation;
    bool ok() const { return !list_violation && !sum_violation; }
};

/// Sum of labels over N[v]. Overflow aborts with overflow_error rather
/// than wrapping.
Label closed_sum(const Graph& g, const Labeling& f, VertexId v);

/// nullopt when f is closed distinguishing (sum mode); otherwise the
/// lexicographically first violating edge.
std::optional<ViolationCertificate> verify_sum(const Graph& g, const Labeling& f);

/// Multiset (strong) variant: adjacent non-twin vertices must see
/// different label multisets over their closed neighborhoods.
std::optional<ViolationCertificate> verify_multiset(const Graph& g, const Labeling& f);

ListCheckResult verify_list(const Graph& g, const Labeling& f, const ListAssignment& lists);

int distinct_value_count(const Labeling& f);

/// Injective re-valuation value -> (max_degree+2)^(value-1). Distinct
/// label multisets over closed neighborhoods then produce distinct sums,
/// turning any multiset-valid labeling into a sum-valid one.
Labeling power_revaluation(const Graph& g, const Labeling& colors);

/// Labeling file: n lines, one positive integer per vertex.
Labeling read_labeling(std::istream& in, int n);
Labeling read_labeling_file(const std::string& path, int n);
void write_labeling(const Labeling& f, std::ostream& out);
void write_labeling_file(const Labeling& f, const std::string& path);

/// List file: n lines of space-separated positive integers.
ListAssignment read_lists(std::istream& in, int n);
ListAssignment read_lists_file(const std::string& path, int n);
void write_lists(const ListAssignment& lists, std::ostream& out);
void write_lists_file(const ListAssignment& lists, const std::string& path);

}  // namespace cdl
