#include "tricover/patterns.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <cstdint>
#include <functional>
#include <thread>

#include "tricover/errors.hpp"
#include "tricover/numeric.hpp"

namespace tricover {

bool PathWitness::validates(const SimpleGraph& h) const {
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int v : vertices)
        if (!h.has_label(v)) return false;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        if (!h.has_edge_labels(vertices[i], vertices[i + 1])) return false;
    return true;
}

const char* component_class_name(ComponentClass c) {
    switch (c) {
    case ComponentClass::K1: return "K1";
    case ComponentClass::K2: return "K2";
    case ComponentClass::K3: return "K3";
    case ComponentClass::C4Like: return "C4-like";
    case ComponentClass::Other: return "other";
    }
    return "other";
}

std::optional<PathWitness> find_p5(const SimpleGraph& h) {
    const int k = h.size();
    if (k < 5) return std::nullopt;
    std::vector<char> used(static_cast<std::size_t>(k), 0);
    std::vector<int> path;
    path.reserve(5);

    std::function<bool()> extend = [&]() -> bool {
        if (path.size() == 5) return true;
        for (int nb : h.neighbors(path.back())) { // label-ascending
            if (used[static_cast<std::size_t>(nb)]) continue;
            used[static_cast<std::size_t>(nb)] = 1;
            path.push_back(nb);
            if (extend()) return true;
            path.pop_back();
            used[static_cast<std::size_t>(nb)] = 0;
        }
        return false;
    };

    for (int start : h.positions_by_label()) {
        std::fill(used.begin(), used.end(), 0);
        path.assign(1, start);
        used[static_cast<std::size_t>(start)] = 1;
        if (extend()) {
            PathWitness w;
            for (int p : path) w.vertices.push_back(h.label_of(p));
            return w;
        }
    }
    return std::nullopt;
}

namespace {

// Enumerates P3's (end, center, end) with ends in ascending label order;
// stops when f returns true.
bool for_each_p3(const SimpleGraph& h,
                 const std::function<bool(int, int, int)>& f) {
    for (int center : h.positions_by_label()) {
        auto nbs = h.neighbors(center);
        for (std::size_t i = 0; i < nbs.size(); ++i)
            for (std::size_t j = i + 1; j < nbs.size(); ++j)
                if (f(nbs[i], center, nbs[j])) return true;
    }
    return false;
}

} // namespace

std::optional<std::pair<PathWitness, PathWitness>> find_two_disjoint_p3(const SimpleGraph& h) {
    if (h.size() < 6) return std::nullopt;
    std::optional<std::pair<PathWitness, PathWitness>> result;
    for_each_p3(h, [&](int a, int c, int b) {
        std::vector<int> first_labels{h.label_of(a), h.label_of(c), h.label_of(b)};
        SimpleGraph rest = delete_vertices(h, first_labels);
        bool found = for_each_p3(rest, [&](int a2, int c2, int b2) {
            PathWitness w1{{first_labels[0], first_labels[1], first_labels[2]}};
            PathWitness w2{{rest.label_of(a2), rest.label_of(c2), rest.label_of(b2)}};
            result = std::pair(std::move(w1), std::move(w2));
            return true;
        });
        return found;
    });
    return result;
}

namespace {

// Exact longest path (vertex count) inside one component, DP over subsets.
int longest_path_dp(const SimpleGraph& h, const std::vector<int>& comp_positions) {
    const int k = static_cast<int>(comp_positions.size());
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && h.has_edge_positions(comp_positions[static_cast<std::size_t>(i)],
                                               comp_positions[static_cast<std::size_t>(j)]))
                adj[static_cast<std::size_t>(i)] |= 1u << j;

    // reach[mask] has bit j set when some simple path visits exactly `mask`
    // and ends at j.
    std::vector<std::uint32_t> reach(static_cast<std::size_t>(1) << k, 0);
    for (int i = 0; i < k; ++i) reach[static_cast<std::size_t>(1u << i)] = 1u << i;
    int best = 1;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        std::uint32_t ends = reach[mask];
        if (!ends) continue;
        best = std::max(best, std::popcount(mask));
        std::uint32_t e = ends;
        while (e) {
            int last = std::countr_zero(e);
            e &= e - 1;
            std::uint32_t nexts = adj[static_cast<std::size_t>(last)] & ~mask;
            while (nexts) {
                int nxt = std::countr_zero(nexts);
                nexts &= nexts - 1;
                reach[mask | (1u << nxt)] |= 1u << nxt;
            }
        }
    }
    return best;
}

bool component_has_c4(const SimpleGraph& h, const std::vector<int>& p) {
    // p holds exactly 4 positions; three distinct pairings into a 4-cycle
    static constexpr int cyc[3][4] = {{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}};
    for (const auto& c : cyc) {
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i)
            ok = h.has_edge_positions(p[static_cast<std::size_t>(c[i])],
                                      p[static_cast<std::size_t>(c[(i + 1) % 4])]);
        if (ok) return true;
    }
    return false;
}

} // namespace

ComponentReport components(const SimpleGraph& h) {
    const int k = h.size();
    std::vector<int> comp_id(static_cast<std::size_t>(k), -1);
    std::vector<std::vector<int>> groups; // positions
    for (int start : h.positions_by_label()) {
        if (comp_id[static_cast<std::size_t>(start)] >= 0) continue;
        int id = static_cast<int>(groups.size());
        groups.emplace_back();
        std::vector<int> stack{start};
        comp_id[static_cast<std::size_t>(start)] = id;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            groups[static_cast<std::size_t>(id)].push_back(cur);
            for (int nb : h.neighbors(cur)) {
                if (comp_id[static_cast<std::size_t>(nb)] < 0) {
                    comp_id[static_cast<std::size_t>(nb)] = id;
                    stack.push_back(nb);
                }
            }
        }
    }

    ComponentReport report;
    for (auto& positions : groups) {
        Component c;
        std::sort(positions.begin(), positions.end(), [&h](int a, int b) {
            return h.label_of(a) < h.label_of(b);
        });
        for (int p : positions) c.vertices.push_back(h.label_of(p));
        const auto sz = static_cast<int>(positions.size());
        long long edges = 0;
        for (std::size_t i = 0; i < positions.size(); ++i)
            edges += static_cast<long long>(h.neighbors(positions[i]).size());
        edges /= 2;
        c.edge_count = edges;
        c.has_cycle = edges >= sz;
        if (sz == 1) c.cls = ComponentClass::K1;
        else if (sz == 2) c.cls = ComponentClass::K2;
        else if (sz == 3 && edges == 3) c.cls = ComponentClass::K3;
        else if (sz == 4 && component_has_c4(h, positions)) c.cls = ComponentClass::C4Like;
        else c.cls = ComponentClass::Other;
        if (sz <= kLongestPathCap) c.longest_path = longest_path_dp(h, positions);
        report.components.push_back(std::move(c));
    }
    // groups were seeded in ascending label order, so they are already
    // ordered by smallest vertex label
    return report;
}

long long min_degree_2graph(const SimpleGraph& h) {
    if (h.size() == 0) fail(errc::too_few_vertices, "min degree of the empty vertex set");
    long long mn = LLONG_MAX;
    for (int i = 0; i < h.size(); ++i)
        mn = std::min(mn, h.degree_position(i));
    return mn;
}

bool is_triangle_free(const SimpleGraph& h) {
    for (const auto& e : h.edges()) {
        for (int nb : h.neighbors(e[0]))
            if (nb != e[1] && h.has_edge_positions(nb, e[1])) return false;
    }
    return true;
}

long long turan_edge_count(long long n, long long r) {
    if (r < 1) fail(errc::range, "r must be >= 1");
    if (n < 0) fail(errc::range, "n must be >= 0");
    if (n > 3000000000LL) fail(errc::too_large, "edge count would overflow");
    const long long q = n / r, s = n % r;
    return choose2(n) - (s * choose2(q + 1) + (r - s) * choose2(q));
}

namespace {

struct CliqueScanTables {
    int n = 0;
    int e_count = 0;
    std::vector<std::uint32_t> sub_edge_mask; // per tracked vertex subset
    std::vector<std::uint8_t> sub_size;
    std::vector<std::vector<std::uint16_t>> subs_by_edge;

    explicit CliqueScanTables(int n_) : n(n_), e_count(static_cast<int>(choose2(n_))) {
        std::vector<std::array<int, 2>> pairs; // colex, bit order
        for (int b = 1; b < n; ++b)
            for (int a = 0; a < b; ++a) pairs.push_back({a, b});
        subs_by_edge.assign(static_cast<std::size_t>(e_count), {});
        for (std::uint32_t vs = 0; vs < (1u << n); ++vs) {
            if (std::popcount(vs) < 3) continue;
            std::uint32_t em = 0;
            for (int e = 0; e < e_count; ++e)
                if ((vs >> pairs[static_cast<std::size_t>(e)][0] & 1u) &&
                    (vs >> pairs[static_cast<std::size_t>(e)][1] & 1u))
                    em |= 1u << e;
            auto id = static_cast<std::uint16_t>(sub_edge_mask.size());
            sub_edge_mask.push_back(em);
            sub_size.push_back(static_cast<std::uint8_t>(std::popcount(vs)));
            for (int e = 0; e < e_count; ++e)
                if (em >> e & 1u) subs_by_edge[static_cast<std::size_t>(e)].push_back(id);
        }
    }
};

// Walks graph masks in Gray-code order over [lo, hi), maintaining for every
// vertex subset the number of missing edges; a zero counter is a complete
// clique on that subset. Records, per clique size k, the max edge count seen
// with no complete k-subset.
void clique_scan_range(const CliqueScanTables& t, std::uint64_t lo, std::uint64_t hi,
                       std::vector<long long>& best_for_k) {
    const std::size_t s_count = t.sub_edge_mask.size();
    std::vector<std::int8_t> missing(s_count);
    std::array<int, 9> complete{};
    auto mask = static_cast<std::uint32_t>(lo ^ (lo >> 1));
    for (std::size_t s = 0; s < s_count; ++s) {
        int total = t.sub_size[s] * (t.sub_size[s] - 1) / 2;
        missing[s] = static_cast<std::int8_t>(total - std::popcount(t.sub_edge_mask[s] & mask));
        if (missing[s] == 0) ++complete[t.sub_size[s]];
    }
    int edges = std::popcount(mask);
    auto eval = [&]() {
        for (int k = 3; k <= t.n; ++k)
            if (complete[static_cast<std::size_t>(k)] == 0 &&
                edges > best_for_k[static_cast<std::size_t>(k)])
                best_for_k[static_cast<std::size_t>(k)] = edges;
    };
    eval();
    for (std::uint64_t i = lo + 1; i < hi; ++i) {
        const int bit = std::countr_zero(i);
        const std::uint32_t b = 1u << bit;
        if (mask & b) {
            mask ^= b;
            --edges;
            for (std::uint16_t s : t.subs_by_edge[static_cast<std::size_t>(bit)])
                if (missing[s]++ == 0) --complete[t.sub_size[s]];
        } else {
            mask ^= b;
            ++edges;
            for (std::uint16_t s : t.subs_by_edge[static_cast<std::size_t>(bit)])
                if (--missing[s] == 0) ++complete[t.sub_size[s]];
        }
        eval();
    }
}

} // namespace

std::vector<long long> max_edges_clique_free_table(int n) {
    if (n < 0) fail(errc::range, "n must be >= 0");
    if (n > 8) fail(errc::too_large, "brute-force clique scan supports n <= 8");
    std::vector<long long> best(static_cast<std::size_t>(n) + 1, -1);
    if (n == 0) return best;
    best[static_cast<std::size_t>(n >= 1 ? 1 : 0)] = 0; // K2-free: edgeless
    for (int r = n; r <= n; ++r) best[static_cast<std::size_t>(r)] = choose2(n);
    if (n <= 2) {
        for (int r = 2; r < n; ++r) best[static_cast<std::size_t>(r)] = 0;
        return best;
    }

    CliqueScanTables tables(n);
    const std::uint64_t total = 1ull << tables.e_count;
    const int shard_count = tables.e_count >= 24 ? 4 : 1;
    std::vector<std::vector<long long>> partial(
        static_cast<std::size_t>(shard_count), std::vector<long long>(static_cast<std::size_t>(n) + 1, -1));
    auto run = [&](int shard) {
        const std::uint64_t lo = total / static_cast<std::uint64_t>(shard_count) * static_cast<std::uint64_t>(shard);
        const std::uint64_t hi = shard + 1 == shard_count
                                     ? total
                                     : total / static_cast<std::uint64_t>(shard_count) * (static_cast<std::uint64_t>(shard) + 1);
        clique_scan_range(tables, lo, hi, partial[static_cast<std::size_t>(shard)]);
    };
    if (shard_count == 1) {
        run(0);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(shard_count));
        for (int s = 0; s < shard_count; ++s) workers.emplace_back(run, s);
        for (auto& w : workers) w.join();
    }
    for (int k = 3; k <= n; ++k) {
        long long mx = -1;
        for (const auto& p : partial) mx = std::max(mx, p[static_cast<std::size_t>(k)]);
        // a complete k-subset requires k vertices, so "K_k-free" best is the
        // max over masks; map k = r+1 back to r
        best[static_cast<std::size_t>(k - 1)] = mx;
    }
    best[static_cast<std::size_t>(n)] = choose2(n); // K_{n+1}-free is vacuous
    return best;
}

long long max_edges_clique_free_bruteforce(int n, int r) {
    if (r < 1) fail(errc::range, "r must be >= 1");
    if (n < 0) fail(errc::range, "n must be >= 0");
    if (n > 8) fail(errc::too_large, "brute-force clique scan supports n <= 8");
    if (r >= n) return choose2(n);
    if (r == 1) return 0;
    return max_edges_clique_free_table(n)[static_cast<std::size_t>(r)];
}

} // namespace tricover
