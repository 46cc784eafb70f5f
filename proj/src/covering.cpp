#include "tricover/covering.hpp"

#include <algorithm>
#include <stdexcept>

#include "tricover/errors.hpp"
#include "tricover/patterns.hpp"

namespace tricover {

C6Witness C6Witness::from_roles(const std::array<int, 6>& roles) {
    auto sorted = [](int a, int b, int c) {
        Triple t{a, b, c};
        std::sort(t.begin(), t.end());
        return t;
    };
    C6Witness w;
    w.roles = roles;
    w.edges = {sorted(roles[0], roles[1], roles[2]), sorted(roles[2], roles[3], roles[4]),
               sorted(roles[4], roles[5], roles[0])};
    return w;
}

bool C6Witness::validates(const ThreeGraph& g) const {
    std::array<int, 6> sorted = roles;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int v : roles)
        if (!g.has_vertex(v)) return false;
    for (const auto& e : edges)
        if (!g.has_edge(e[0], e[1], e[2])) return false;
    // spine structure: consecutive edges intersect exactly in v3, v5, v1
    auto expect = C6Witness::from_roles(roles);
    return expect.edges == edges;
}

bool C6Witness::contains(int v) const {
    return std::find(roles.begin(), roles.end(), v) != roles.end();
}

std::optional<C6Witness> find_c6_through(const ThreeGraph& g, int u) {
    if (!g.has_vertex(u)) fail(errc::range, "vertex out of range");
    if (g.vertex_count() < 6) return std::nullopt;
    const auto& edges = g.edges();
    const auto inc = g.incident_edges(u);

    auto others = [u](const Triple& t) {
        std::array<int, 2> out{};
        int k = 0;
        for (int w : t)
            if (w != u) out[static_cast<std::size_t>(k++)] = w;
        return out;
    };

    // u as a spine vertex: two incident edges meeting exactly in u, plus a
    // third edge joining one endpoint of each.
    for (std::size_t i = 0; i < inc.size(); ++i) {
        const Triple& a = edges[static_cast<std::size_t>(inc[i])];
        const auto ao = others(a);
        for (std::size_t j = i + 1; j < inc.size(); ++j) {
            const Triple& b = edges[static_cast<std::size_t>(inc[j])];
            const auto bo = others(b);
            if (bo[0] == ao[0] || bo[0] == ao[1] || bo[1] == ao[0] || bo[1] == ao[1]) continue;
            for (int ai = 0; ai < 2; ++ai) {
                const int v3 = ao[static_cast<std::size_t>(ai)], v2 = ao[static_cast<std::size_t>(1 - ai)];
                for (int bi = 0; bi < 2; ++bi) {
                    const int v5 = bo[static_cast<std::size_t>(bi)], v6 = bo[static_cast<std::size_t>(1 - bi)];
                    for (int v4 : g.third_vertices(v3, v5)) {
                        if (v4 == u || v4 == v2 || v4 == v6) continue;
                        return C6Witness::from_roles({u, v2, v3, v4, v5, v6});
                    }
                }
            }
        }
    }

    // u as a leaf vertex: one incident edge {v1, u, v3}, the chain closing
    // back to v1 away from u.
    for (int ei : inc) {
        const Triple& a = edges[static_cast<std::size_t>(ei)];
        const auto ao = others(a);
        for (int ai = 0; ai < 2; ++ai) {
            const int v1 = ao[static_cast<std::size_t>(ai)], v3 = ao[static_cast<std::size_t>(1 - ai)];
            for (int fi : g.incident_edges(v3)) {
                const Triple& f = edges[static_cast<std::size_t>(fi)];
                if (fi == ei) continue;
                bool bad = false;
                for (int w : f)
                    if (w == u || w == v1) bad = true;
                if (bad) continue;
                std::array<int, 2> fo{};
                int k = 0;
                for (int w : f)
                    if (w != v3) fo[static_cast<std::size_t>(k++)] = w;
                for (int bi = 0; bi < 2; ++bi) {
                    const int v4 = fo[static_cast<std::size_t>(bi)], v5 = fo[static_cast<std::size_t>(1 - bi)];
                    for (int v6 : g.third_vertices(v5, v1)) {
                        if (v6 == u || v6 == v3 || v6 == v4) continue;
                        return C6Witness::from_roles({v1, u, v3, v4, v5, v6});
                    }
                }
            }
        }
    }
    return std::nullopt;
}

CoverReport cover_report(const ThreeGraph& g) {
    CoverReport rep;
    rep.n = g.vertex_count();
    rep.witness.resize(static_cast<std::size_t>(rep.n));
    for (int v = 0; v < rep.n; ++v) {
        rep.witness[static_cast<std::size_t>(v)] = find_c6_through(g, v);
        if (!rep.witness[static_cast<std::size_t>(v)]) rep.uncovered.push_back(v);
    }
    rep.fully_covered = rep.uncovered.empty();
    return rep;
}

std::optional<C6Witness> fast_witness_via_link(const ThreeGraph& g, int v) {
    if (!g.has_vertex(v)) fail(errc::range, "vertex out of range");
    if (g.vertex_count() < 2 || min_codegree(g) < 2)
        fail(errc::precondition_violated, "fast witness path requires delta_2 >= 2");

    auto pick_x = [&](int u1, int u2) {
        for (int t : g.third_vertices(u1, u2))
            if (t != v) return t;
        throw std::logic_error("codegree >= 2 must provide an edge avoiding v");
    };
    auto checked = [&](const C6Witness& w) {
        if (!w.validates(g))
            throw std::logic_error("assembled witness failed validation");
        return w;
    };

    const SimpleGraph link = g.link_graph(v);
    if (auto two = find_two_disjoint_p3(link)) {
        const auto& p = two->first.vertices;  // w1 u1 w2
        const auto& q = two->second.vertices; // w3 u2 w4
        const int u1 = p[1], u2 = q[1];
        const int x = pick_x(u1, u2);
        const int a = p[2] != x ? p[2] : p[0];
        const int b = q[0] != x ? q[0] : q[2];
        return checked(C6Witness::from_roles({v, a, u1, x, u2, b}));
    }
    if (auto p5 = find_p5(link)) {
        const auto& vs = p5->vertices; // w1 u1 w u2 w2
        const int w1 = vs[0], u1 = vs[1], mid = vs[2], u2 = vs[3], w2 = vs[4];
        const int x = pick_x(u1, u2);
        if (x != w1 && x != w2)
            return checked(C6Witness::from_roles({v, w1, u1, x, u2, w2}));
        if (x == w1)
            return checked(C6Witness::from_roles({v, mid, u1, w1, u2, w2}));
        return checked(C6Witness::from_roles({v, mid, u2, w2, u1, w1}));
    }
    return std::nullopt;
}

std::optional<std::vector<int>> find_f_cover(const ThreeGraph& g, int u, const ThreeGraph& f) {
    if (!g.has_vertex(u)) fail(errc::range, "vertex out of range");
    if (f.vertex_count() > 8)
        fail(errc::f_too_large, "pattern hypergraphs are limited to 8 vertices");
    const int nf = f.vertex_count();
    const int ng = g.vertex_count();
    if (nf == 0 || nf > ng) return std::nullopt;

    std::vector<int> base_order(static_cast<std::size_t>(nf));
    for (int i = 0; i < nf; ++i) base_order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(base_order.begin(), base_order.end(),
                     [&f](int a, int b) { return f.degree(a) > f.degree(b); });

    for (int root = 0; root < nf; ++root) {
        std::vector<int> order{root};
        for (int w : base_order)
            if (w != root) order.push_back(w);
        // f-edges become checkable at the step where their last vertex lands
        std::vector<int> step_of(static_cast<std::size_t>(nf));
        for (int s = 0; s < nf; ++s) step_of[static_cast<std::size_t>(order[static_cast<std::size_t>(s)])] = s;
        std::vector<std::vector<Triple>> checks(static_cast<std::size_t>(nf));
        for (const auto& e : f.edges()) {
            int last = std::max({step_of[static_cast<std::size_t>(e[0])], step_of[static_cast<std::size_t>(e[1])],
                                 step_of[static_cast<std::size_t>(e[2])]});
            checks[static_cast<std::size_t>(last)].push_back(e);
        }

        std::vector<int> map(static_cast<std::size_t>(nf), -1);
        std::vector<char> used(static_cast<std::size_t>(ng), 0);
        std::function<bool(int)> place = [&](int step) -> bool {
            if (step == nf) return true;
            const int fv = order[static_cast<std::size_t>(step)];
            const int lo = step == 0 ? u : 0;
            const int hi = step == 0 ? u + 1 : ng;
            for (int cand = lo; cand < hi; ++cand) {
                if (used[static_cast<std::size_t>(cand)]) continue;
                map[static_cast<std::size_t>(fv)] = cand;
                used[static_cast<std::size_t>(cand)] = 1;
                bool ok = true;
                for (const auto& e : checks[static_cast<std::size_t>(step)]) {
                    if (!g.has_edge(map[static_cast<std::size_t>(e[0])], map[static_cast<std::size_t>(e[1])],
                                    map[static_cast<std::size_t>(e[2])])) {
                        ok = false;
                        break;
                    }
                }
                if (ok && place(step + 1)) return true;
                used[static_cast<std::size_t>(cand)] = 0;
                map[static_cast<std::size_t>(fv)] = -1;
            }
            return false;
        };
        if (place(0)) return map;
    }
    return std::nullopt;
}

} // namespace tricover
