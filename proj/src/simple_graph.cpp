#include "tricover/simple_graph.hpp"

#include <algorithm>
#include <string>

#include "tricover/errors.hpp"

namespace tricover {

namespace {

std::uint64_t edge_key(int i, int j) {
    if (i > j) std::swap(i, j);
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
}

} // namespace

SimpleGraph::SimpleGraph(std::vector<int> labels, std::vector<Pair> position_edges)
    : labels_(std::move(labels)) {
    const int k = size();
    label_to_pos_.reserve(labels_.size());
    for (int i = 0; i < k; ++i) {
        if (!label_to_pos_.emplace(labels_[i], i).second)
            fail(errc::bad_arguments, "duplicate vertex label " + std::to_string(labels_[i]));
    }

    for (auto& e : position_edges) {
        if (!has_position(e[0]) || !has_position(e[1]))
            fail(errc::range, "edge position out of range");
        if (e[0] == e[1]) fail(errc::malformed_edge, "self-loop");
        if (e[0] > e[1]) std::swap(e[0], e[1]);
    }
    std::sort(position_edges.begin(), position_edges.end(),
              [](const Pair& x, const Pair& y) {
                  return std::pair(x[1], x[0]) < std::pair(y[1], y[0]);
              });
    for (std::size_t i = 1; i < position_edges.size(); ++i)
        if (position_edges[i] == position_edges[i - 1])
            fail(errc::duplicate_edge, "duplicate 2-graph edge");
    edges_ = std::move(position_edges);

    adj_.assign(k, {});
    edge_keys_.reserve(edges_.size());
    for (const auto& e : edges_) {
        adj_[e[0]].push_back(e[1]);
        adj_[e[1]].push_back(e[0]);
        edge_keys_.insert(edge_key(e[0], e[1]));
    }
    for (auto& nb : adj_)
        std::sort(nb.begin(), nb.end(),
                  [this](int a, int b) { return labels_[a] < labels_[b]; });

    by_label_.resize(k);
    for (int i = 0; i < k; ++i) by_label_[i] = i;
    std::sort(by_label_.begin(), by_label_.end(),
              [this](int a, int b) { return labels_[a] < labels_[b]; });
}

SimpleGraph SimpleGraph::on_vertices(int k) {
    if (k < 0) fail(errc::bad_arguments, "negative vertex count");
    std::vector<int> labels(k);
    for (int i = 0; i < k; ++i) labels[i] = i;
    return SimpleGraph(std::move(labels), {});
}

std::vector<Pair> SimpleGraph::labeled_edges() const {
    std::vector<Pair> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) {
        int a = labels_[e[0]], b = labels_[e[1]];
        if (a > b) std::swap(a, b);
        out.push_back({a, b});
    }
    std::sort(out.begin(), out.end(), [](const Pair& x, const Pair& y) {
        return std::pair(x[1], x[0]) < std::pair(y[1], y[0]);
    });
    return out;
}

bool SimpleGraph::has_label(int label) const { return label_to_pos_.count(label) > 0; }

int SimpleGraph::position_of(int label) const {
    auto it = label_to_pos_.find(label);
    if (it == label_to_pos_.end())
        fail(errc::range, "unknown vertex label " + std::to_string(label));
    return it->second;
}

bool SimpleGraph::has_edge_positions(int i, int j) const {
    if (!has_position(i) || !has_position(j) || i == j) return false;
    return edge_keys_.count(edge_key(i, j)) > 0;
}

bool SimpleGraph::has_edge_labels(int a, int b) const {
    auto ia = label_to_pos_.find(a);
    auto ib = label_to_pos_.find(b);
    if (ia == label_to_pos_.end() || ib == label_to_pos_.end()) return false;
    return has_edge_positions(ia->second, ib->second);
}

std::span<const int> SimpleGraph::neighbors(int position) const {
    if (!has_position(position)) fail(errc::range, "position out of range");
    return adj_[position];
}

long long SimpleGraph::degree_position(int position) const {
    return static_cast<long long>(neighbors(position).size());
}

long long SimpleGraph::degree_label(int label) const {
    return degree_position(position_of(label));
}

SimpleGraph delete_vertices(const SimpleGraph& h, std::span<const int> labels_to_remove) {
    std::vector<char> remove(static_cast<std::size_t>(h.size()), 0);
    for (int label : labels_to_remove) remove[static_cast<std::size_t>(h.position_of(label))] = 1;

    std::vector<int> new_pos(static_cast<std::size_t>(h.size()), -1);
    std::vector<int> labels;
    for (int i = 0; i < h.size(); ++i) {
        if (remove[static_cast<std::size_t>(i)]) continue;
        new_pos[static_cast<std::size_t>(i)] = static_cast<int>(labels.size());
        labels.push_back(h.label_of(i));
    }
    std::vector<Pair> edges;
    for (const auto& e : h.edges()) {
        int a = new_pos[static_cast<std::size_t>(e[0])];
        int b = new_pos[static_cast<std::size_t>(e[1])];
        if (a >= 0 && b >= 0) edges.push_back({a, b});
    }
    return SimpleGraph(std::move(labels), std::move(edges));
}

} // namespace tricover
