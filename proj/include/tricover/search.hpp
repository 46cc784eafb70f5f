#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tricover/simple_graph.hpp"
#include "tricover/three_graph.hpp"

namespace tricover {

enum class EnumMode { all_labeled, canonical_only };

/// A scan over the edge-subset space of n-vertex 3-graphs. Triples are
/// numbered colexicographically, so each graph is a bitmask of width C(n,3);
/// shards split the mask range into contiguous blocks (prefix-bit classes
/// when the shard count is a power of two).
struct EnumerationPlan {
    int n = 0;
    EnumMode mode = EnumMode::all_labeled;
    std::optional<long long> min_codegree;
    std::optional<long long> min_degree;
    int shard_count = 1;
    int shard_index = 0;
};

struct EnumerationStats {
    unsigned long long scanned = 0;
    unsigned long long visited = 0;
    unsigned long long pruned_filter = 0;
    unsigned long long pruned_noncanonical = 0;
};

using GraphVisitor = std::function<void(const ThreeGraph&, std::uint64_t mask)>;

// Visits every labeled 3-graph in the shard exactly once (all_labeled), or
// exactly the graphs whose mask is minimal over all n! relabelings
// (canonical_only). Guard: C(n,3) <= 63 -> errc::too_large beyond.
EnumerationStats enumerate_3graphs(const EnumerationPlan& plan, const GraphVisitor& visit);

enum class ThresholdKind { codegree, degree };

struct ThresholdResult {
    ThresholdKind kind = ThresholdKind::codegree;
    int n = 0;
    long long value = 0;
    std::optional<ThreeGraph> witness; // smallest-mask attainer, non-covering
    unsigned long long graphs_scanned = 0;
    double wall_time_s = 0.0;
    bool exact = true;
};

struct SearchOptions {
    // Default: all-labeled for n <= 6, canonical-only for n in {7, 8},
    // error beyond unless randomized.
    std::optional<EnumMode> mode;
    int shards = 1;
    bool randomized = false;
    long long trials = 1000;
    std::uint64_t seed = 0;
};

// Exact max of delta_2 over all n-vertex 3-graphs with no loose-triangle
// covering (or a flagged randomized lower bound).
ThresholdResult compute_c2(int n, const SearchOptions& opts = {});

// Same for delta_1.
ThresholdResult compute_c1(int n, const SearchOptions& opts = {});

struct StructureCheck {
    bool holds = true;
    std::vector<SimpleGraph> counterexamples;
    unsigned long long graphs_checked = 0; // graphs with min degree >= 2
};

// Does every 2-graph on m vertices with min degree >= 2 contain a P5 or a
// 2P3? Exhaustive over 2^C(m,2); guard m <= 7.
StructureCheck verify_min_deg2_implies_pattern(int m);

// G^3(n, p): each triple included independently with probability p, driven
// by mt19937_64 with a fixed 53-bit threshold test; identical (n, p, seed)
// gives an identical graph on every platform.
ThreeGraph random_3graph(int n, double p, std::uint64_t seed);

// Conditioned host for the claim suites: u = 0 carries a random link on the
// support {1..5} (edge probability q) while every other triple touches the
// support at most once (probability p), the same shape that keeps the apex
// of construction 2 uncovered. Plain G(n, p) essentially never reaches the
// claim preconditions: a link degree of 4 plus an uncovered u. n >= 7.
ThreeGraph random_planted_link_host(int n, double q, double p, std::uint64_t seed);

} // namespace tricover
