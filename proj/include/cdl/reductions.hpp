#pragma once

#include <array>
#include <string>
#include <vector>

#include "cdl/cnf.hpp"
#include "cdl/graph.hpp"
#include "cdl/labeling.hpp"

namespace cdl {

struct Assignment {
    std::vector<bool> value;  // by 0-based variable
};

enum class CycleColor { red, black, blue, white };

/// Output of the planar-3SAT compiler: per variable a colored cycle
/// C_{24*gamma}, per clause an 8-path with two pendants, attachment
/// edges into degree-2 red/blue cycle slots (consumed in ascending
/// cycle-index order), and pendants bringing every red/blue/black vertex
/// to degree exactly 3. The output is subcubic; a labeling from {1,2}
/// exists iff the formula is satisfiable.
struct PlanarSatReduction {
    CnfFormula formula;
    int gamma = 0;
    Graph graph;
    std::vector<std::string> roles;
    std::vector<std::vector<VertexId>> cycle;      // [var][pos0] = vertex of v_{pos0+1}
    std::vector<std::vector<CycleColor>> color;    // parallel to cycle
    std::vector<std::array<VertexId, 8>> path;     // [clause] u_1..u_8
    std::vector<VertexId> u_prime, u_dprime;       // per clause
};

/// Requires exactly-3-literal clauses and at least one clause. Callers
/// promise strong planarity of the formula; it is not checked. Rejects
/// formulas whose per-cycle attachment demand exceeds the 2*gamma
/// red/blue slots.
PlanarSatReduction reduce_planar_3sat(const CnfFormula& phi);

Labeling forward_witness(const PlanarSatReduction& red, const Assignment& gamma);

/// Extracts the assignment from a verified {1,2}-labeling: a variable is
/// true iff the red vertices of its cycle carry 2. Non-uniform red or
/// blue labels mean f was not a valid labeling -> invalid_argument.
Assignment backward_witness(const PlanarSatReduction& red, const Labeling& f);

/// Monotone NAE-3SAT compiler: per variable a colored cycle C_{12*gamma}
/// and per clause two pendant-marked 5-paths, one attached to red slots,
/// one to blue. The output is bipartite and subcubic; a {1,2}-labeling
/// exists iff the formula has a not-all-equal assignment.
struct NaeSatReduction {
    CnfFormula formula;
    int gamma = 0;
    Graph graph;
    std::vector<std::string> roles;
    std::vector<std::vector<VertexId>> cycle;
    std::vector<std::vector<CycleColor>> color;
    std::vector<std::array<VertexId, 5>> path1, path2;  // per clause
    std::vector<VertexId> c_prime, c_dprime;
};

NaeSatReduction reduce_monotone_nae(const CnfFormula& phi);

Labeling forward_witness(const NaeSatReduction& red, const Assignment& gamma);
Assignment backward_witness(const NaeSatReduction& red, const Labeling& f);

/// t-colorability compiler: pads every original vertex to degree D+1
/// with pendants (the last one, z^v, carries the color), then attaches a
/// K_alpha block with pendant fans forcing block sums to occupy a full
/// interval. A labeling from {1..t} exists iff the source graph is
/// t-colorable, with c(v) = f(z^v).
struct ColorabilityReduction {
    Graph original;
    int t = 0;
    int n_prime = 0;
    int alpha = 0;
    Graph graph;
    std::vector<std::string> roles;
    std::vector<VertexId> z_of;                 // per original vertex
    std::vector<std::vector<VertexId>> u_of;    // degree-padding pendants
    std::vector<VertexId> x_ids;                // block, size alpha
    std::vector<std::vector<VertexId>> fan;     // per x_i, i < alpha
};

ColorabilityReduction reduce_t_colorability(const Graph& g, int t);

/// coloring[v] in 1..t, proper. Fan labels are chosen greedily so the
/// alpha-1 fan sums realize each target in {n'+1..(n'+1)t} exactly once.
Labeling forward_witness(const ColorabilityReduction& red, const std::vector<int>& coloring);

/// c(v) = f(z^v); raises invalid_argument if the extraction is improper,
/// which would contradict a verified input labeling.
std::vector<int> backward_coloring(const ColorabilityReduction& red, const Labeling& f);

}  // namespace cdl
