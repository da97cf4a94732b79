#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "semican/multiseg.hpp"
#include "semican/roots.hpp"

namespace semican {

// Undirected graph with loop flags; vertices carry printable labels.
struct ComponentGraph {
    std::vector<std::string> labels;
    std::set<std::pair<int, int>> edges;  // i < j, 0-based
    std::vector<bool> loops;

    int nverts() const { return static_cast<int>(labels.size()); }
    bool has_edge(int i, int j) const {
        if (i == j) return loops[i];
        if (i > j) std::swap(i, j);
        return edges.count({i, j}) != 0;
    }
};

// The indecomposable-component multisegments; counts 4 / 12 / 40 for n = 2, 3, 4.
// The n = 4 list is the canonical numbering m1..m40; smaller n restrict by support.
std::vector<Multisegment> indec_components(int n);

// Indices (0-based, into indec_components) of the n projective components.
std::vector<int> projective_component_indices(int n);

// min over `trials` independently sampled pairs of dim Ext^1.
long long generic_ext(const Multisegment& m1, const Multisegment& m2, int n, int trials, std::uint64_t seed);

// Full matrix of generic_ext over ordered pairs of the given components.
// The parallel kernel and the serial reference compute identical tables.
std::vector<std::vector<long long>> ext_table(const std::vector<Multisegment>& ms, int n, int trials, std::uint64_t seed);
std::vector<std::vector<long long>> ext_table_serial(const std::vector<Multisegment>& ms, int n, int trials, std::uint64_t seed);

// Component graph for n <= 4 from sampled generic ext; labels "m1".."m40".
ComponentGraph build_graph(int n, int trials, std::uint64_t seed, bool parallel = true);

// Same graph with the n projective-component vertices and all loops removed.
ComponentGraph reduced_graph(const ComponentGraph& g, int n);

// Builds the graph across several seeds; on any disagreement rebuilds every
// seed at `escalated_trials` and requires agreement.
ComponentGraph build_graph_stable(int n, int trials, const std::vector<std::uint64_t>& seeds, int escalated_trials = 25);

// Slice of the lattice-theoretic graph: Schur roots within the slope box and
// quasi-length bound, plus the five universal projective vertices C1..C5.
ComponentGraph build_graph_a5(long long slope_bound, long long max_ql, bool relaxed_critical = false, bool parallel = true);

// Pairwise edge matrix over arbitrary root slices (parallel kernel + serial reference).
std::vector<std::vector<char>> edge_table(const std::vector<RootVec>& roots, bool relaxed_critical);
std::vector<std::vector<char>> edge_table_serial(const std::vector<RootVec>& roots, bool relaxed_critical);

// All maximal cliques (loops ignored), each sorted, in deterministic order.
std::vector<std::vector<int>> max_cliques(const ComponentGraph& g);

std::string export_dot(const ComponentGraph& g);
std::string export_json(const ComponentGraph& g);
ComponentGraph import_json(const std::string& text);

}  // namespace semican
