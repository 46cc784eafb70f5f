#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "tricover/simple_graph.hpp"

namespace tricover {

// A hyperedge, stored with strictly increasing components.
using Triple = std::array<int, 3>;

/// An n-vertex 3-uniform hypergraph with a canonical edge list (colex order)
/// plus a per-pair adjacency index and per-vertex incidence lists. Immutable
/// after construction; safe to share across threads.
class ThreeGraph {
public:
    ThreeGraph() = default;

    // Validates every triple (range, distinctness), sorts, and rejects
    // duplicates. Same set of triples in any order yields an equal object.
    ThreeGraph(int n, std::vector<Triple> triples);

    int vertex_count() const { return n_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }
    const std::vector<Triple>& edges() const { return edges_; }

    bool has_vertex(int v) const { return v >= 0 && v < n_; }
    bool has_edge(int a, int b, int c) const; // any order, entries must be distinct

    long long degree(int v) const;            // d({v})
    long long codegree(int a, int b) const;   // d({a,b})

    // Third vertices completing the pair {a,b} to an edge, ascending.
    std::span<const int> third_vertices(int a, int b) const;

    // Indices into edges() of the edges containing v, ascending.
    std::span<const int> incident_edges(int v) const;

    // The (n-1)-vertex 2-graph G_v; labels are the host vertices.
    SimpleGraph link_graph(int v) const;

    bool operator==(const ThreeGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Triple> edges_;
    std::vector<std::vector<int>> incident_;
    std::unordered_map<std::uint64_t, std::vector<int>> pair_index_;
};

// d_G(S) for |S| in {1,2}; S is treated as a set (duplicates collapse).
// Other sizes -> errc::unsupported_degree_order.
long long degree(const ThreeGraph& g, std::span<const int> s);

struct DegreeProfile {
    long long min1 = 0;                      // delta_1
    long long min2 = 0;                      // delta_2
    std::vector<long long> vertex_degrees;   // indexed by vertex
    std::vector<long long> pair_codegrees;   // indexed by colex pair rank

    long long codegree(int a, int b) const;
};

// Full degree/codegree profile; requires n >= 2 (codegree needs a pair).
DegreeProfile degree_profile(const ThreeGraph& g);

// Minimum codegree; requires n >= 2.
long long min_codegree(const ThreeGraph& g);

// The 6-vertex loose triangle v1v2v3, v3v4v5, v5v6v1 on vertices 0..5.
ThreeGraph loose_triangle_c63();

// Complete 3-graph on n vertices.
ThreeGraph complete_three_graph(int n);

} // namespace tricover
