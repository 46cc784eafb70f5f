#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tricover/three_graph.hpp"

namespace tricover {

/// A labeled embedding of the loose triangle: roles[i] hosts pattern vertex
/// v_{i+1}, edges are the three host triples v1v2v3, v3v4v5, v5v6v1.
/// v1, v3, v5 are the spine (degree 2), v2, v4, v6 the leaves.
struct C6Witness {
    std::array<int, 6> roles{};
    std::array<Triple, 3> edges{};

    // Builds the witness from the six roles; edge triples are derived.
    static C6Witness from_roles(const std::array<int, 6>& roles);

    // All six distinct, all three edges present in g, spine intersections
    // as in the pattern.
    bool validates(const ThreeGraph& g) const;

    bool contains(int v) const;
};

struct CoverReport {
    int n = 0;
    std::vector<std::optional<C6Witness>> witness; // per vertex
    std::vector<int> uncovered;                    // ascending
    bool fully_covered = true;
};

// Exact oracle: a loose-triangle witness through u, or nullopt after an
// exhaustive search of both role classes (u as spine, u as leaf).
// n < 6 always yields nullopt.
std::optional<C6Witness> find_c6_through(const ThreeGraph& g, int u);

// Per-vertex coverage via the exact oracle. n = 0 is vacuously covered.
CoverReport cover_report(const ThreeGraph& g);

// Constructive fast path: if delta_2(g) >= 2 and the link of v contains a
// 2P3 or a P5, assemble a covering witness from the pattern plus one
// codegree edge. Returns nullopt when the link has neither pattern.
// delta_2 < 2 -> errc::precondition_violated.
std::optional<C6Witness> fast_witness_via_link(const ThreeGraph& g, int v);

// Generic covering oracle: an injective map sending every edge of f to an
// edge of g (subgraph embedding, not induced) with u in the image. Result
// indexed by f-vertex. Guard: |V(f)| <= 8 -> errc::f_too_large beyond.
std::optional<std::vector<int>> find_f_cover(const ThreeGraph& g, int u, const ThreeGraph& f);

} // namespace tricover
