#pragma once

#include <vector>

#include "tricover/simple_graph.hpp"
#include "tricover/three_graph.hpp"

namespace tricover {

/// The bookkeeping around a distinguished pair (u, v): component classes of
/// the link of u, the classes that appear after deleting v, and the private
/// vertices of v. All sets hold host vertices, ascending.
struct VertexPartition {
    int u = 0;
    int v = 0;
    std::vector<Pair> m0; // K2 components of G_u
    std::vector<int> i0;  // K1 components of G_u
    std::vector<Pair> mv; // K2 components of G_u - {v} - V(M0)
    std::vector<int> iv;  // K1 components of G_u - {v} - V(I0)
    std::vector<int> xv;  // {w in I0 u I(v) : deg_{G_v - u}(w) >= 2}
    std::vector<int> jv;  // (I0 u I(v)) \ X(v)
    bool good = true;     // |I(v)|^2 < n
};

VertexPartition partition_around(const ThreeGraph& g, int u, int v);

struct ClaimVerdict {
    bool holds = true;
    std::vector<Pair> violations; // offending edges of G_v - u, host labels
};

// Every edge of G_v - u is either the pair of a component in M0 u M(v) or
// has both endpoints in I0 u I(v). Preconditions enforced with the exact
// oracle: u uncovered, and d_{G_u}(v) >= 4.
ClaimVerdict check_claim_4_1(const ThreeGraph& g, int u, int v);

// X(v1) and X(v2) are disjoint for an E3 edge {v1, v2} of the link of an
// uncovered u. Preconditions enforced: u uncovered, {v1,v2} in E3.
bool check_claim_4_2(const ThreeGraph& g, int u, int v1, int v2);

struct EdgeClassification {
    std::vector<int> bad_vertices;    // of G_u, ascending
    std::vector<long long> iv_sizes;  // |I(v)| per host vertex (u slot = 0)
    std::vector<Pair> e1;             // edges with a bad endpoint
    std::vector<Pair> e2;             // good edges with an end of link-degree <= 3
    std::vector<Pair> e3;             // the rest
};

// Good/bad split of the link of u plus the E1/E2/E3 edge classes; bad is
// the exact integer test |I(v)|^2 >= n.
EdgeClassification classify_edges(const ThreeGraph& g, int u);

// The link-pattern implication as a single boolean: v covered, or its link
// has neither P5 nor 2P3. A false verdict is a counterexample worth
// serializing. delta_2 >= 2 required.
bool check_lemma_3_1(const ThreeGraph& g, int v);

// Exact ceiling of (1 - sqrt(2)/2) * n + sqrt(n), by integer radical
// comparison. n >= 1.
long long eq1_lower_bound(long long n);

} // namespace tricover
