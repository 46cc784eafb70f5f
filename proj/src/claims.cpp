#include "tricover/claims.hpp"

#include <algorithm>
#include <set>

#include "tricover/covering.hpp"
#include "tricover/errors.hpp"
#include "tricover/numeric.hpp"
#include "tricover/patterns.hpp"

namespace tricover {

VertexPartition partition_around(const ThreeGraph& g, int u, int v) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) fail(errc::range, "vertex out of range");
    if (u == v) fail(errc::bad_arguments, "u and v must differ");

    VertexPartition part;
    part.u = u;
    part.v = v;

    const SimpleGraph gu = g.link_graph(u);
    std::vector<int> m0_vertices;
    for (const auto& comp : components(gu).components) {
        if (comp.cls == ComponentClass::K2) {
            part.m0.push_back({comp.vertices[0], comp.vertices[1]});
            m0_vertices.push_back(comp.vertices[0]);
            m0_vertices.push_back(comp.vertices[1]);
        } else if (comp.cls == ComponentClass::K1) {
            part.i0.push_back(comp.vertices[0]);
        }
    }

    // M(v): K2 components of G_u - {v} - V(M0); vertex deletion throughout
    std::vector<int> del_m = m0_vertices;
    if (std::find(del_m.begin(), del_m.end(), v) == del_m.end()) del_m.push_back(v);
    for (const auto& comp : components(delete_vertices(gu, del_m)).components)
        if (comp.cls == ComponentClass::K2)
            part.mv.push_back({comp.vertices[0], comp.vertices[1]});

    // I(v): K1 components of G_u - {v} - V(I0)
    std::vector<int> del_i = part.i0;
    if (std::find(del_i.begin(), del_i.end(), v) == del_i.end()) del_i.push_back(v);
    for (const auto& comp : components(delete_vertices(gu, del_i)).components)
        if (comp.cls == ComponentClass::K1)
            part.iv.push_back(comp.vertices[0]);

    const SimpleGraph gv_minus_u = delete_vertices(g.link_graph(v), std::vector<int>{u});
    std::vector<int> pool;
    std::set_union(part.i0.begin(), part.i0.end(), part.iv.begin(), part.iv.end(),
                   std::back_inserter(pool));
    for (int w : pool) {
        if (w != v && gv_minus_u.degree_label(w) >= 2)
            part.xv.push_back(w);
        else
            part.jv.push_back(w);
    }
    part.good = static_cast<long long>(part.iv.size()) * static_cast<long long>(part.iv.size()) <
                g.vertex_count();
    return part;
}

ClaimVerdict check_claim_4_1(const ThreeGraph& g, int u, int v) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) fail(errc::range, "vertex out of range");
    if (u == v) fail(errc::bad_arguments, "u and v must differ");
    if (find_c6_through(g, u))
        fail(errc::precondition_violated, "u is covered by a loose triangle");
    if (g.codegree(u, v) < 4)
        fail(errc::precondition_violated, "claim 4.1 requires link degree of v at least 4");

    const VertexPartition part = partition_around(g, u, v);
    std::set<Pair> matching(part.m0.begin(), part.m0.end());
    matching.insert(part.mv.begin(), part.mv.end());
    std::set<int> isolated(part.i0.begin(), part.i0.end());
    isolated.insert(part.iv.begin(), part.iv.end());

    ClaimVerdict verdict;
    const SimpleGraph gv_minus_u = delete_vertices(g.link_graph(v), std::vector<int>{u});
    for (const auto& e : gv_minus_u.labeled_edges()) {
        if (matching.count(e)) continue;
        if (isolated.count(e[0]) && isolated.count(e[1])) continue;
        verdict.violations.push_back(e);
    }
    verdict.holds = verdict.violations.empty();
    return verdict;
}

bool check_claim_4_2(const ThreeGraph& g, int u, int v1, int v2) {
    if (!g.has_vertex(u) || !g.has_vertex(v1) || !g.has_vertex(v2))
        fail(errc::range, "vertex out of range");
    if (u == v1 || u == v2 || v1 == v2) fail(errc::bad_arguments, "vertices must be distinct");
    if (find_c6_through(g, u))
        fail(errc::precondition_violated, "u is covered by a loose triangle");
    Pair e{std::min(v1, v2), std::max(v1, v2)};
    const EdgeClassification ec = classify_edges(g, u);
    if (std::find(ec.e3.begin(), ec.e3.end(), e) == ec.e3.end())
        fail(errc::precondition_violated, "{v1, v2} is not an E3 edge of the link of u");

    const VertexPartition p1 = partition_around(g, u, v1);
    const VertexPartition p2 = partition_around(g, u, v2);
    std::vector<int> common;
    std::set_intersection(p1.xv.begin(), p1.xv.end(), p2.xv.begin(), p2.xv.end(),
                          std::back_inserter(common));
    return common.empty();
}

EdgeClassification classify_edges(const ThreeGraph& g, int u) {
    if (!g.has_vertex(u)) fail(errc::range, "vertex out of range");
    const int n = g.vertex_count();
    const SimpleGraph gu = g.link_graph(u);

    EdgeClassification ec;
    ec.iv_sizes.assign(static_cast<std::size_t>(n), 0);
    // I(v) = vertices whose unique link neighbor is v, so count via the
    // degree-1 vertices of G_u
    for (int pos = 0; pos < gu.size(); ++pos) {
        if (gu.degree_position(pos) == 1)
            ++ec.iv_sizes[static_cast<std::size_t>(gu.label_of(gu.neighbors(pos)[0]))];
    }
    std::vector<char> bad(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        if (v == u || !gu.has_label(v)) continue;
        const long long s = ec.iv_sizes[static_cast<std::size_t>(v)];
        if (s * s >= n) {
            bad[static_cast<std::size_t>(v)] = 1;
            ec.bad_vertices.push_back(v);
        }
    }
    for (const auto& e : gu.labeled_edges()) {
        if (bad[static_cast<std::size_t>(e[0])] || bad[static_cast<std::size_t>(e[1])]) {
            ec.e1.push_back(e);
        } else if (gu.degree_label(e[0]) <= 3 || gu.degree_label(e[1]) <= 3) {
            ec.e2.push_back(e);
        } else {
            ec.e3.push_back(e);
        }
    }
    return ec;
}

bool check_lemma_3_1(const ThreeGraph& g, int v) {
    if (!g.has_vertex(v)) fail(errc::range, "vertex out of range");
    if (g.vertex_count() < 2 || min_codegree(g) < 2)
        fail(errc::precondition_violated, "lemma 3.1 requires delta_2 >= 2");
    if (find_c6_through(g, v)) return true;
    const SimpleGraph link = g.link_graph(v);
    return !find_p5(link) && !find_two_disjoint_p3(link);
}

namespace {

// m >= sqrt(n) - n/sqrt(2), decided exactly: multiply by sqrt(2) and square
// twice, tracking signs.
bool radical_at_least(long long m, long long n) {
    if (m >= 0) {
        // m*sqrt(2) + n >= sqrt(2n): both sides nonnegative
        const int128 c = static_cast<int128>(2) * n - static_cast<int128>(2) * m * m -
                         static_cast<int128>(n) * n;
        if (c <= 0) return true;
        return 8 * static_cast<int128>(m) * m * n * n >= c * c;
    }
    const long long a = -m;
    // need n - a*sqrt(2) >= sqrt(2n) > 0
    if (static_cast<int128>(n) * n <= static_cast<int128>(2) * a * a) return false;
    const int128 d = static_cast<int128>(n) * n + static_cast<int128>(2) * a * a -
                     static_cast<int128>(2) * n;
    if (d < 0) return false;
    return d * d >= 8 * static_cast<int128>(a) * a * n * n;
}

} // namespace

long long eq1_lower_bound(long long n) {
    if (n < 1) fail(errc::bad_arguments, "n must be >= 1");
    if (n > 2000000000LL) fail(errc::too_large, "n beyond exact 128-bit range");
    // ceil((1 - sqrt(2)/2) n + sqrt(n)) = n + min{ m : m >= sqrt(n) - n/sqrt(2) }
    long long lo = -n - 2, hi = 2;
    while (lo < hi) {
        const long long mid = lo + (hi - lo) / 2;
        if (radical_at_least(mid, n))
            hi = mid;
        else
            lo = mid + 1;
    }
    return n + lo;
}

} // namespace tricover
