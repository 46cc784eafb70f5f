#pragma once

#include <utility>
#include <vector>

#include "tricover/simple_graph.hpp"
#include "tricover/three_graph.hpp"

namespace tricover {

enum class Part { Apex, A1, A2, B1, B2 };

/// Parameters of the degree-extremal construction: an apex u joined to all
/// A1 x A2 pairs, each A_i joined to the pairs of its B_i, and a complete
/// 3-graph on B1 u B2. Vertex layout is deterministic: u = 0, then A1, A2,
/// B1, B2 in consecutive blocks.
struct Construction2Params {
    int n = 0;
    int b = 0;        // |B1| = |B2| = n - ceil(n/sqrt(2)), exact
    int a_floor = 0;  // |A1|
    int a_ceil = 0;   // |A2|
    int apex = 0;

    std::vector<Part> part_of; // per vertex

    // Consecutive index ranges [first, last) per part.
    std::pair<int, int> a1_range() const;
    std::pair<int, int> a2_range() const;
    std::pair<int, int> b1_range() const;
    std::pair<int, int> b2_range() const;
};

// All triples through a single apex vertex 0: delta_2 = 1 (n >= 4) and no
// loose triangle anywhere. n >= 3.
ThreeGraph construction1(int n);

// The degree construction; n >= 7 keeps all five parts nonempty.
std::pair<ThreeGraph, Construction2Params> construction2(int n);

struct Construction2Degrees {
    long long apex = 0;
    long long a1_vertex = 0;
    long long a2_vertex = 0;
    long long b1_vertex = 0;
    long long b2_vertex = 0;
};

// Closed-form degrees per part; must match the measured profile of the
// generated graph.
Construction2Degrees construction2_degree_formulas(const Construction2Params& p);

// Exact decision of delta1 > (3 - 2*sqrt(2))/4 * n^2 - n using integer
// squaring only (doubles could flip verdicts within O(1) of the threshold).
// Requires delta1 >= 0, n >= 1.
bool threshold_exceeded(long long delta1, long long n);

// Complete r-partite 2-graph with near-equal parts, larger parts first.
SimpleGraph turan_graph(int n, int r);

} // namespace tricover
