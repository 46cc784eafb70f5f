#include "tricover/constructions.hpp"

#include <string>

#include "tricover/errors.hpp"
#include "tricover/numeric.hpp"

namespace tricover {

std::pair<int, int> Construction2Params::a1_range() const { return {1, 1 + a_floor}; }
std::pair<int, int> Construction2Params::a2_range() const {
    return {1 + a_floor, 1 + a_floor + a_ceil};
}
std::pair<int, int> Construction2Params::b1_range() const {
    const int s = 1 + a_floor + a_ceil;
    return {s, s + b};
}
std::pair<int, int> Construction2Params::b2_range() const {
    const int s = 1 + a_floor + a_ceil + b;
    return {s, s + b};
}

ThreeGraph construction1(int n) {
    if (n < 3) fail(errc::too_few_vertices, "construction 1 needs n >= 3");
    std::vector<Triple> edges;
    edges.reserve(static_cast<std::size_t>(choose2(n - 1)));
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({0, i, j});
    return ThreeGraph(n, std::move(edges));
}

std::pair<ThreeGraph, Construction2Params> construction2(int n) {
    if (n < 7) fail(errc::too_few_vertices, "construction 2 needs n >= 7");
    Construction2Params p;
    p.n = n;
    p.b = static_cast<int>(n - ceil_n_over_sqrt2(n)); // floor((1 - sqrt(2)/2) n), exact
    const int rest = n - 1 - 2 * p.b;                 // |A1| + |A2|
    p.a_floor = rest / 2;
    p.a_ceil = rest - p.a_floor;
    p.apex = 0;

    p.part_of.assign(static_cast<std::size_t>(n), Part::Apex);
    const auto [a1lo, a1hi] = p.a1_range();
    const auto [a2lo, a2hi] = p.a2_range();
    const auto [b1lo, b1hi] = p.b1_range();
    const auto [b2lo, b2hi] = p.b2_range();
    for (int v = a1lo; v < a1hi; ++v) p.part_of[static_cast<std::size_t>(v)] = Part::A1;
    for (int v = a2lo; v < a2hi; ++v) p.part_of[static_cast<std::size_t>(v)] = Part::A2;
    for (int v = b1lo; v < b1hi; ++v) p.part_of[static_cast<std::size_t>(v)] = Part::B1;
    for (int v = b2lo; v < b2hi; ++v) p.part_of[static_cast<std::size_t>(v)] = Part::B2;

    std::vector<Triple> edges;
    // {u} v A1 v A2
    for (int x = a1lo; x < a1hi; ++x)
        for (int y = a2lo; y < a2hi; ++y) edges.push_back({0, x, y});
    // A1 v (B1 choose 2)
    for (int x = a1lo; x < a1hi; ++x)
        for (int i = b1lo; i < b1hi; ++i)
            for (int j = i + 1; j < b1hi; ++j) edges.push_back({x, i, j});
    // A2 v (B2 choose 2)
    for (int x = a2lo; x < a2hi; ++x)
        for (int i = b2lo; i < b2hi; ++i)
            for (int j = i + 1; j < b2hi; ++j) edges.push_back({x, i, j});
    // (B1 u B2 choose 3); B1 and B2 are consecutive blocks
    for (int i = b1lo; i < b2hi; ++i)
        for (int j = i + 1; j < b2hi; ++j)
            for (int k = j + 1; k < b2hi; ++k) edges.push_back({i, j, k});

    return {ThreeGraph(n, std::move(edges)), std::move(p)};
}

Construction2Degrees construction2_degree_formulas(const Construction2Params& p) {
    if (p.n < 7 || p.b < 1 || p.a_floor < 1 || p.a_ceil < p.a_floor ||
        p.a_ceil - p.a_floor > 1 || 1 + p.a_floor + p.a_ceil + 2 * p.b != p.n)
        fail(errc::bad_arguments, "inconsistent construction 2 parameters");
    Construction2Degrees d;
    d.apex = static_cast<long long>(p.a_floor) * p.a_ceil;
    d.a1_vertex = p.a_ceil + choose2(p.b);
    d.a2_vertex = p.a_floor + choose2(p.b);
    d.b1_vertex = static_cast<long long>(p.a_floor) * (p.b - 1) + choose2(2LL * p.b - 1);
    d.b2_vertex = static_cast<long long>(p.a_ceil) * (p.b - 1) + choose2(2LL * p.b - 1);
    return d;
}

bool threshold_exceeded(long long delta1, long long n) {
    if (delta1 < 0 || n < 1) fail(errc::bad_arguments, "requires delta1 >= 0 and n >= 1");
    if (n > 3000000000LL) fail(errc::too_large, "n beyond exact 128-bit range");
    // delta1 > (3 - 2*sqrt(2))/4 n^2 - n  <=>  2*sqrt(2) n^2 > 3n^2 - 4n - 4*delta1
    const int128 rhs = static_cast<int128>(3) * n * n - 4 * n - 4 * static_cast<int128>(delta1);
    if (rhs <= 0) return true; // left side is positive for n >= 1
    const int128 n2 = static_cast<int128>(n) * n;
    return 8 * n2 * n2 > rhs * rhs;
}

SimpleGraph turan_graph(int n, int r) {
    if (r < 1) fail(errc::range, "r must be >= 1");
    if (n < 0) fail(errc::range, "n must be >= 0");
    // parts of size ceil(n/r) first
    std::vector<int> part_of(static_cast<std::size_t>(n), 0);
    const int q = n / r, s = n % r;
    int v = 0;
    for (int part = 0; part < r && v < n; ++part) {
        const int sz = part < s ? q + 1 : q;
        for (int i = 0; i < sz; ++i) part_of[static_cast<std::size_t>(v++)] = part;
    }
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i;
    std::vector<Pair> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (part_of[static_cast<std::size_t>(i)] != part_of[static_cast<std::size_t>(j)])
                edges.push_back({i, j});
    return SimpleGraph(std::move(labels), std::move(edges));
}

} // namespace tricover
