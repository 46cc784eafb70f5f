#pragma once

#include <functional>
#include <vector>

#include "doctest.h"
#include "tricover/errors.hpp"
#include "tricover/simple_graph.hpp"
#include "tricover/three_graph.hpp"

namespace tricover::test {

inline void expect_error(errc code, const std::function<void()>& fn) {
    try {
        fn();
        FAIL_CHECK("expected ", errc_name(code), ", nothing thrown");
    } catch (const Error& e) {
        CHECK(e.code() == code);
    }
}

// 2-graph on identity labels from an edge list.
inline SimpleGraph graph2(int n, std::vector<Pair> edges) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i;
    return SimpleGraph(std::move(labels), std::move(edges));
}

} // namespace tricover::test
