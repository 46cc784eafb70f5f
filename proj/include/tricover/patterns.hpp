#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tricover/simple_graph.hpp"

namespace tricover {

/// A labeled path witness: consecutive vertices are adjacent in the host.
struct PathWitness {
    std::vector<int> vertices; // host labels, all distinct

    bool validates(const SimpleGraph& h) const;
};

enum class ComponentClass { K1, K2, K3, C4Like, Other };

const char* component_class_name(ComponentClass c);

struct Component {
    std::vector<int> vertices; // labels, ascending
    ComponentClass cls = ComponentClass::Other;
    bool has_cycle = false;
    long long edge_count = 0;
    // Exact longest-path length (vertex count); computed only for components
    // with at most kLongestPathCap vertices, -1 otherwise.
    int longest_path = -1;
};

struct ComponentReport {
    std::vector<Component> components; // ordered by smallest vertex label
};

inline constexpr int kLongestPathCap = 16;

// First P5 found by DFS over partial paths, vertices in ascending label
// order; nullopt if the graph is P5-free.
std::optional<PathWitness> find_p5(const SimpleGraph& h);

// Two vertex-disjoint P3's: enumerate candidate first paths in ascending
// order, delete, search again, backtrack. Exhaustive.
std::optional<std::pair<PathWitness, PathWitness>> find_two_disjoint_p3(const SimpleGraph& h);

ComponentReport components(const SimpleGraph& h);

// Minimum vertex degree; empty vertex set -> errc::too_few_vertices.
long long min_degree_2graph(const SimpleGraph& h);

bool is_triangle_free(const SimpleGraph& h);

// e(T_{n,r}): edges of the complete r-partite graph with near-equal parts.
long long turan_edge_count(long long n, long long r);

// Exact maximum edge count over all K_{r+1}-free labeled 2-graphs on n
// vertices, by exhaustive scan of all 2^C(n,2) graphs (Gray-code walk with
// incremental clique counters). Guard: n <= 8.
long long max_edges_clique_free_bruteforce(int n, int r);

// Same scan, all r at once: entry [r] for 1 <= r <= n (index 0 unused).
std::vector<long long> max_edges_clique_free_table(int n);

} // namespace tricover
