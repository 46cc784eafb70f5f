#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace tricover {

using Pair = std::array<int, 2>;

/// A 2-graph whose vertices carry labels: link graphs remember which host
/// vertex each node came from, Turan graphs just use identity labels.
/// Edges are stored positionally; the label view is what the covering and
/// claims machinery works with. Immutable after construction.
class SimpleGraph {
public:
    SimpleGraph() = default;

    // `position_edges` are pairs of positions into `labels`; validated,
    // deduplication is an error. Labels must be pairwise distinct.
    SimpleGraph(std::vector<int> labels, std::vector<Pair> position_edges);

    // Edgeless graph with identity labels 0..k-1.
    static SimpleGraph on_vertices(int k);

    int size() const { return static_cast<int>(labels_.size()); }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }
    const std::vector<int>& labels() const { return labels_; }

    // Position-pair edges, colex sorted.
    const std::vector<Pair>& edges() const { return edges_; }
    std::vector<Pair> labeled_edges() const;

    bool has_position(int i) const { return i >= 0 && i < size(); }
    bool has_label(int label) const;
    int position_of(int label) const; // throws errc::range for unknown labels
    int label_of(int position) const { return labels_.at(position); }

    bool has_edge_positions(int i, int j) const;
    bool has_edge_labels(int a, int b) const;

    // Neighbor positions, sorted by neighbor label (ascending).
    std::span<const int> neighbors(int position) const;
    long long degree_position(int position) const;
    long long degree_label(int label) const;

    // Positions sorted by ascending label; all deterministic searches walk
    // vertices in this order.
    const std::vector<int>& positions_by_label() const { return by_label_; }

    bool operator==(const SimpleGraph& other) const {
        return labels_ == other.labels_ && edges_ == other.edges_;
    }

private:
    std::vector<int> labels_;
    std::vector<Pair> edges_;               // position pairs, i < j, colex sorted
    std::vector<std::vector<int>> adj_;     // neighbor positions, label-sorted
    std::vector<int> by_label_;             // positions in ascending label order
    std::unordered_map<int, int> label_to_pos_;
    std::unordered_set<std::uint64_t> edge_keys_;
};

// Induced subgraph after removing the vertices with the given labels;
// remaining labels keep their relative order. Unknown label -> errc::range.
SimpleGraph delete_vertices(const SimpleGraph& h, std::span<const int> labels_to_remove);

} // namespace tricover
