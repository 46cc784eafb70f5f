#include "tricover/three_graph.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "tricover/errors.hpp"
#include "tricover/numeric.hpp"

namespace tricover {

namespace {

std::uint64_t pair_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

bool colex_less(const Triple& x, const Triple& y) {
    return std::tuple(x[2], x[1], x[0]) < std::tuple(y[2], y[1], y[0]);
}

const std::vector<int> kNoThirds{};

} // namespace

ThreeGraph::ThreeGraph(int n, std::vector<Triple> triples) : n_(n) {
    if (n < 0) fail(errc::bad_arguments, "negative vertex count");
    if (n > 50000000) fail(errc::too_large, "vertex incidence index would exceed memory");
    for (auto& t : triples) {
        for (int v : t)
            if (v < 0 || v >= n)
                fail(errc::range, "vertex " + std::to_string(v) + " out of range [0, " +
                                      std::to_string(n) + ")");
        std::sort(t.begin(), t.end());
        if (t[0] == t[1] || t[1] == t[2])
            fail(errc::malformed_edge, "repeated vertex within a triple");
    }
    std::sort(triples.begin(), triples.end(), colex_less);
    for (std::size_t i = 1; i < triples.size(); ++i)
        if (triples[i] == triples[i - 1])
            fail(errc::duplicate_edge, "duplicate triple");
    edges_ = std::move(triples);

    incident_.assign(static_cast<std::size_t>(n_), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        for (int v : e) incident_[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
        pair_index_[pair_key(e[0], e[1])].push_back(e[2]);
        pair_index_[pair_key(e[0], e[2])].push_back(e[1]);
        pair_index_[pair_key(e[1], e[2])].push_back(e[0]);
    }
    for (auto& [key, thirds] : pair_index_) std::sort(thirds.begin(), thirds.end());
}

bool ThreeGraph::has_edge(int a, int b, int c) const {
    if (!has_vertex(a) || !has_vertex(b) || !has_vertex(c)) return false;
    if (a == b || b == c || a == c) return false;
    auto thirds = third_vertices(std::min({a, b, c}), a + b + c - std::min({a, b, c}) -
                                                          std::max({a, b, c}));
    return std::binary_search(thirds.begin(), thirds.end(), std::max({a, b, c}));
}

long long ThreeGraph::degree(int v) const {
    if (!has_vertex(v)) fail(errc::range, "vertex out of range");
    return static_cast<long long>(incident_[static_cast<std::size_t>(v)].size());
}

long long ThreeGraph::codegree(int a, int b) const {
    return static_cast<long long>(third_vertices(a, b).size());
}

std::span<const int> ThreeGraph::third_vertices(int a, int b) const {
    if (!has_vertex(a) || !has_vertex(b)) fail(errc::range, "vertex out of range");
    if (a == b) fail(errc::bad_arguments, "pair must have distinct vertices");
    auto it = pair_index_.find(pair_key(a, b));
    if (it == pair_index_.end()) return kNoThirds;
    return it->second;
}

std::span<const int> ThreeGraph::incident_edges(int v) const {
    if (!has_vertex(v)) fail(errc::range, "vertex out of range");
    return incident_[static_cast<std::size_t>(v)];
}

SimpleGraph ThreeGraph::link_graph(int v) const {
    if (!has_vertex(v)) fail(errc::range, "vertex out of range");
    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(n_) - 1);
    for (int w = 0; w < n_; ++w)
        if (w != v) labels.push_back(w);
    auto pos = [v](int w) { return w < v ? w : w - 1; };
    std::vector<Pair> edges;
    for (int ei : incident_edges(v)) {
        const auto& e = edges_[static_cast<std::size_t>(ei)];
        int a = -1, b = -1;
        for (int w : e)
            if (w != v) (a < 0 ? a : b) = w;
        edges.push_back({pos(a), pos(b)});
    }
    return SimpleGraph(std::move(labels), std::move(edges));
}

long long degree(const ThreeGraph& g, std::span<const int> s) {
    std::vector<int> set(s.begin(), s.end());
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.size() != 1 && set.size() != 2)
        fail(errc::unsupported_degree_order,
             "degree supports vertex sets of size 1 or 2, got " + std::to_string(set.size()));
    for (int v : set)
        if (!g.has_vertex(v)) fail(errc::range, "vertex out of range");
    if (set.size() == 1) return g.degree(set[0]);
    return g.codegree(set[0], set[1]);
}

long long DegreeProfile::codegree(int a, int b) const {
    if (a > b) std::swap(a, b);
    return pair_codegrees.at(static_cast<std::size_t>(pair_rank_colex(a, b)));
}

DegreeProfile degree_profile(const ThreeGraph& g) {
    const int n = g.vertex_count();
    if (n < 2) fail(errc::too_few_vertices, "degree profile needs n >= 2");
    if (choose2(n) > 50000000LL)
        fail(errc::too_large, "codegree table would exceed 5*10^7 pairs");

    DegreeProfile p;
    p.vertex_degrees.assign(static_cast<std::size_t>(n), 0);
    p.pair_codegrees.assign(static_cast<std::size_t>(choose2(n)), 0);
    for (const auto& e : g.edges()) {
        for (int v : e) ++p.vertex_degrees[static_cast<std::size_t>(v)];
        ++p.pair_codegrees[static_cast<std::size_t>(pair_rank_colex(e[0], e[1]))];
        ++p.pair_codegrees[static_cast<std::size_t>(pair_rank_colex(e[0], e[2]))];
        ++p.pair_codegrees[static_cast<std::size_t>(pair_rank_colex(e[1], e[2]))];
    }
    p.min1 = *std::min_element(p.vertex_degrees.begin(), p.vertex_degrees.end());
    p.min2 = *std::min_element(p.pair_codegrees.begin(), p.pair_codegrees.end());
    return p;
}

long long min_codegree(const ThreeGraph& g) { return degree_profile(g).min2; }

ThreeGraph loose_triangle_c63() {
    return ThreeGraph(6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}});
}

ThreeGraph complete_three_graph(int n) {
    if (n < 0) fail(errc::bad_arguments, "negative vertex count");
    std::vector<Triple> edges;
    for (int c = 2; c < n; ++c)
        for (int b = 1; b < c; ++b)
            for (int a = 0; a < b; ++a) edges.push_back({a, b, c});
    return ThreeGraph(n, std::move(edges));
}

} // namespace tricover
