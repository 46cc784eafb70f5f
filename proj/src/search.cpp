#include "tricover/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <climits>
#include <random>
#include <set>
#include <thread>

#include "tricover/covering.hpp"
#include "tricover/errors.hpp"
#include "tricover/numeric.hpp"
#include "tricover/patterns.hpp"

namespace tricover {

namespace {

// Fixed colexicographic triple numbering for one n: each 3-graph on n
// vertices is a bitmask of width C(n,3). All scans share these tables.
struct TripleTable {
    int n = 0;
    int t_count = 0;
    std::vector<Triple> triples;
    std::vector<std::uint64_t> vertex_masks; // triples through v
    std::vector<std::uint64_t> pair_masks;   // triples through {a,b}, colex pair rank
    std::vector<std::uint64_t> copy_masks;   // loose-triangle copies, 3 bits each
    std::vector<std::vector<int>> copies_through;

    explicit TripleTable(int n_) : n(n_) {
        if (n < 0) fail(errc::bad_arguments, "negative vertex count");
        if (n > 8 || choose3(n) > 63)
            fail(errc::too_large, "edge bitmask limited to 63 triples (n <= 8)");
        t_count = static_cast<int>(choose3(n));
        triples.reserve(static_cast<std::size_t>(t_count));
        for (int c = 2; c < n; ++c)
            for (int b = 1; b < c; ++b)
                for (int a = 0; a < b; ++a) triples.push_back({a, b, c});

        vertex_masks.assign(static_cast<std::size_t>(n), 0);
        pair_masks.assign(static_cast<std::size_t>(choose2(n)), 0);
        for (int t = 0; t < t_count; ++t) {
            const auto& tr = triples[static_cast<std::size_t>(t)];
            for (int v : tr) vertex_masks[static_cast<std::size_t>(v)] |= 1ull << t;
            pair_masks[static_cast<std::size_t>(pair_rank_colex(tr[0], tr[1]))] |= 1ull << t;
            pair_masks[static_cast<std::size_t>(pair_rank_colex(tr[0], tr[2]))] |= 1ull << t;
            pair_masks[static_cast<std::size_t>(pair_rank_colex(tr[1], tr[2]))] |= 1ull << t;
        }
        build_copies();
    }

    void build_copies() {
        if (n < 6) {
            copies_through.assign(static_cast<std::size_t>(n), {});
            return;
        }
        std::vector<int> sel(6);
        std::vector<std::pair<std::uint64_t, std::uint32_t>> all; // mask, vertex set
        std::vector<int> comb{0, 1, 2, 3, 4, 5};
        while (true) {
            std::set<std::uint64_t> seen;
            std::vector<int> perm = comb;
            std::sort(perm.begin(), perm.end());
            do {
                const std::uint64_t m = (1ull << rank(perm[0], perm[1], perm[2])) |
                                        (1ull << rank(perm[2], perm[3], perm[4])) |
                                        (1ull << rank(perm[4], perm[5], perm[0]));
                if (seen.insert(m).second) {
                    std::uint32_t vs = 0;
                    for (int v : comb) vs |= 1u << v;
                    all.emplace_back(m, vs);
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            // next 6-combination of [0, n)
            int i = 5;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - 6 + i) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < 6; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
        std::sort(all.begin(), all.end());
        copies_through.assign(static_cast<std::size_t>(n), {});
        copy_masks.reserve(all.size());
        for (std::size_t i = 0; i < all.size(); ++i) {
            copy_masks.push_back(all[i].first);
            for (int v = 0; v < n; ++v)
                if (all[i].second >> v & 1u)
                    copies_through[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
        }
    }

    int rank(int a, int b, int c) const {
        int lo = std::min({a, b, c}), hi = std::max({a, b, c});
        return static_cast<int>(triple_rank_colex(lo, a + b + c - lo - hi, hi));
    }

    long long delta1(std::uint64_t mask) const {
        long long mn = LLONG_MAX;
        for (const auto vm : vertex_masks) mn = std::min<long long>(mn, std::popcount(mask & vm));
        return n == 0 ? LLONG_MAX : mn;
    }

    long long delta2(std::uint64_t mask) const {
        long long mn = LLONG_MAX;
        for (const auto pm : pair_masks) mn = std::min<long long>(mn, std::popcount(mask & pm));
        return n < 2 ? LLONG_MAX : mn;
    }

    bool vertex_covered(std::uint64_t mask, int v) const {
        for (int id : copies_through[static_cast<std::size_t>(v)])
            if ((mask & copy_masks[static_cast<std::size_t>(id)]) ==
                copy_masks[static_cast<std::size_t>(id)])
                return true;
        return false;
    }

    bool non_covering(std::uint64_t mask) const {
        for (int v = 0; v < n; ++v)
            if (!vertex_covered(mask, v)) return true;
        return false; // n == 0 included: vacuously covered
    }

    ThreeGraph materialize(std::uint64_t mask) const {
        std::vector<Triple> edges;
        std::uint64_t m = mask;
        while (m) {
            edges.push_back(triples[static_cast<std::size_t>(std::countr_zero(m))]);
            m &= m - 1;
        }
        return ThreeGraph(n, std::move(edges));
    }
};

// Memoized action of all n! vertex relabelings on triple indices; canonical
// masks are minimal as unsigned integers over the orbit.
struct PermTable {
    std::vector<std::vector<std::uint8_t>> remap; // [perm][triple], identity excluded

    PermTable(const TripleTable& tt) {
        std::vector<int> perm(static_cast<std::size_t>(tt.n));
        for (int i = 0; i < tt.n; ++i) perm[static_cast<std::size_t>(i)] = i;
        bool identity = true;
        do {
            if (identity) { // skip the first (identity) permutation
                identity = false;
                continue;
            }
            std::vector<std::uint8_t> row(static_cast<std::size_t>(tt.t_count));
            for (int t = 0; t < tt.t_count; ++t) {
                const auto& tr = tt.triples[static_cast<std::size_t>(t)];
                row[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>(tt.rank(
                    perm[static_cast<std::size_t>(tr[0])], perm[static_cast<std::size_t>(tr[1])],
                    perm[static_cast<std::size_t>(tr[2])]));
            }
            remap.push_back(std::move(row));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::uint64_t apply(const std::vector<std::uint8_t>& row, std::uint64_t mask) const {
        std::uint64_t out = 0;
        while (mask) {
            out |= 1ull << row[static_cast<std::size_t>(std::countr_zero(mask))];
            mask &= mask - 1;
        }
        return out;
    }

    bool is_canonical(std::uint64_t mask) const {
        for (const auto& row : remap)
            if (apply(row, mask) < mask) return false;
        return true;
    }
};

std::pair<std::uint64_t, std::uint64_t> shard_range(std::uint64_t total, int count, int index) {
    const std::uint64_t lo = total / static_cast<std::uint64_t>(count) * static_cast<std::uint64_t>(index);
    const std::uint64_t hi = index + 1 == count
                                 ? total
                                 : total / static_cast<std::uint64_t>(count) *
                                       (static_cast<std::uint64_t>(index) + 1);
    return {lo, hi};
}

struct ScanBest {
    bool found = false;
    long long value = -1;
    std::uint64_t mask = 0;
};

void merge_best(ScanBest& into, const ScanBest& other) {
    if (!other.found) return;
    if (!into.found || other.value > into.value ||
        (other.value == into.value && other.mask < into.mask))
        into = other;
}

ThresholdResult randomized_threshold(ThresholdKind kind, int n, const SearchOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    if (opts.trials < 0) fail(errc::bad_arguments, "trials must be >= 0");
    ThresholdResult res;
    res.kind = kind;
    res.n = n;
    res.exact = false;
    // the empty graph is always non-covering for n >= 1, so the lower bound
    // starts at 0 with a witness in hand
    res.value = 0;
    res.witness = ThreeGraph(n, {});
    if (choose3(n) == 0) { // no triples exist; the empty graph is the space
        res.graphs_scanned = 0;
        res.wall_time_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return res;
    }
    res.graphs_scanned = static_cast<unsigned long long>(opts.trials);
    for (long long t = 0; t < opts.trials; ++t) {
        const double p = 0.05 * (1 + static_cast<int>(t % 19));
        const std::uint64_t seed = opts.seed ^ (0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(t) + 1));
        ThreeGraph g = random_3graph(n, p, seed);
        const DegreeProfile prof = degree_profile(g);
        const long long d = kind == ThresholdKind::codegree ? prof.min2 : prof.min1;
        if (d <= res.value) continue;
        if (!cover_report(g).fully_covered) {
            res.value = d;
            res.witness = std::move(g);
        }
    }
    res.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

ThresholdResult exact_threshold(ThresholdKind kind, int n, const SearchOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    const EnumMode mode = opts.mode.value_or(n <= 6 ? EnumMode::all_labeled : EnumMode::canonical_only);
    if (mode == EnumMode::all_labeled && n > 6)
        fail(errc::too_large,
             "all-labeled threshold scans support n <= 6; use canonical or randomized mode");
    if (n > 7)
        fail(errc::too_large, "exact threshold scans support n <= 7; use randomized mode");
    if (opts.shards < 1) fail(errc::bad_arguments, "shard count must be >= 1");

    const TripleTable tt(n);
    const std::optional<PermTable> pt =
        mode == EnumMode::canonical_only ? std::optional<PermTable>(PermTable(tt)) : std::nullopt;
    const std::uint64_t total = tt.t_count >= 64 ? 0 : (1ull << tt.t_count);

    std::vector<ScanBest> partial(static_cast<std::size_t>(opts.shards));
    auto run = [&](int shard) {
        auto [lo, hi] = shard_range(total, opts.shards, shard);
        ScanBest best;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            const long long d = kind == ThresholdKind::codegree ? tt.delta2(mask) : tt.delta1(mask);
            if (best.found && d <= best.value) continue;
            if (!tt.non_covering(mask)) continue;
            if (pt && !pt->is_canonical(mask)) continue;
            best.found = true;
            best.value = d;
            best.mask = mask;
        }
        partial[static_cast<std::size_t>(shard)] = best;
    };
    if (opts.shards == 1) {
        run(0);
    } else {
        unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        std::vector<std::thread> workers;
        for (int s = 0; s < opts.shards; ++s) {
            workers.emplace_back(run, s);
            if (workers.size() == hw || s + 1 == opts.shards) {
                for (auto& w : workers) w.join();
                workers.clear();
            }
        }
    }
    ScanBest best;
    for (const auto& p : partial) merge_best(best, p);

    ThresholdResult res;
    res.kind = kind;
    res.n = n;
    res.graphs_scanned = total;
    res.exact = true;
    if (best.found) {
        res.value = best.value;
        res.witness = tt.materialize(best.mask);
    } else {
        res.value = -1; // no non-covering graph exists (n = 0)
        res.witness = std::nullopt;
    }
    res.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

ThresholdResult compute_threshold(ThresholdKind kind, int n, const SearchOptions& opts) {
    if (kind == ThresholdKind::codegree && n < 2)
        fail(errc::too_few_vertices, "codegree threshold needs n >= 2");
    if (kind == ThresholdKind::degree && n < 1)
        fail(errc::too_few_vertices, "degree threshold needs n >= 1");
    if (opts.randomized) return randomized_threshold(kind, n, opts);
    return exact_threshold(kind, n, opts);
}

} // namespace

EnumerationStats enumerate_3graphs(const EnumerationPlan& plan, const GraphVisitor& visit) {
    if (plan.shard_count < 1 || plan.shard_index < 0 || plan.shard_index >= plan.shard_count)
        fail(errc::bad_arguments, "invalid shard spec");
    const TripleTable tt(plan.n);
    const std::optional<PermTable> pt = plan.mode == EnumMode::canonical_only
                                            ? std::optional<PermTable>(PermTable(tt))
                                            : std::nullopt;
    const std::uint64_t total = 1ull << tt.t_count;
    auto [lo, hi] = shard_range(total, plan.shard_count, plan.shard_index);

    // popcount floors implied by the degree filters: sum of codegrees and of
    // degrees both equal 3|E|
    long long min_pop = 0;
    if (plan.min_codegree && *plan.min_codegree > 0)
        min_pop = std::max(min_pop, (*plan.min_codegree * choose2(plan.n) + 2) / 3);
    if (plan.min_degree && *plan.min_degree > 0)
        min_pop = std::max(min_pop, (*plan.min_degree * plan.n + 2) / 3);

    EnumerationStats stats;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        ++stats.scanned;
        if (std::popcount(mask) < min_pop) {
            ++stats.pruned_filter;
            continue;
        }
        if (plan.min_codegree && tt.delta2(mask) < *plan.min_codegree) {
            ++stats.pruned_filter;
            continue;
        }
        if (plan.min_degree && tt.delta1(mask) < *plan.min_degree) {
            ++stats.pruned_filter;
            continue;
        }
        if (pt && !pt->is_canonical(mask)) {
            ++stats.pruned_noncanonical;
            continue;
        }
        ++stats.visited;
        visit(tt.materialize(mask), mask);
    }
    return stats;
}

ThresholdResult compute_c2(int n, const SearchOptions& opts) {
    return compute_threshold(ThresholdKind::codegree, n, opts);
}

ThresholdResult compute_c1(int n, const SearchOptions& opts) {
    return compute_threshold(ThresholdKind::degree, n, opts);
}

StructureCheck verify_min_deg2_implies_pattern(int m) {
    if (m < 0) fail(errc::bad_arguments, "negative vertex count");
    if (m > 7) fail(errc::too_large, "structure scan supports m <= 7 (2^21 graphs)");

    const int pair_count = static_cast<int>(choose2(m));
    std::vector<std::uint32_t> vertex_pair_masks(static_cast<std::size_t>(m), 0);
    std::vector<Pair> pairs;
    for (int b = 1; b < m; ++b)
        for (int a = 0; a < b; ++a) {
            vertex_pair_masks[static_cast<std::size_t>(a)] |= 1u << pairs.size();
            vertex_pair_masks[static_cast<std::size_t>(b)] |= 1u << pairs.size();
            pairs.push_back({a, b});
        }
    std::vector<int> labels(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) labels[static_cast<std::size_t>(i)] = i;

    StructureCheck out;
    for (std::uint64_t mask = 0; mask < (1ull << pair_count); ++mask) {
        bool min2 = true;
        for (int v = 0; v < m && min2; ++v)
            min2 = std::popcount(static_cast<std::uint32_t>(mask) &
                                 vertex_pair_masks[static_cast<std::size_t>(v)]) >= 2;
        if (!min2) continue;
        ++out.graphs_checked;
        std::vector<Pair> edges;
        for (int e = 0; e < pair_count; ++e)
            if (mask >> e & 1ull) edges.push_back(pairs[static_cast<std::size_t>(e)]);
        SimpleGraph h(labels, std::move(edges));
        if (!find_p5(h) && !find_two_disjoint_p3(h)) {
            out.holds = false;
            out.counterexamples.push_back(std::move(h));
        }
    }
    return out;
}

ThreeGraph random_3graph(int n, double p, std::uint64_t seed) {
    if (n < 0) fail(errc::bad_arguments, "negative vertex count");
    if (!(p >= 0.0 && p <= 1.0)) fail(errc::bad_arguments, "p must lie in [0, 1]");
    if (n > 1000 || choose3(n) > 100000000LL)
        fail(errc::too_large, "too many candidate triples");
    std::mt19937_64 rng(seed);
    const auto threshold = static_cast<std::uint64_t>(p * 9007199254740992.0); // p * 2^53
    std::vector<Triple> edges;
    for (int c = 2; c < n; ++c)
        for (int b = 1; b < c; ++b)
            for (int a = 0; a < b; ++a)
                if ((rng() >> 11) < threshold) edges.push_back({a, b, c});
    return ThreeGraph(n, std::move(edges));
}

ThreeGraph random_planted_link_host(int n, double q, double p, std::uint64_t seed) {
    if (n < 7) fail(errc::too_few_vertices, "planted hosts need n >= 7");
    if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0))
        fail(errc::bad_arguments, "probabilities must lie in [0, 1]");
    if (n > 1000 || choose3(n) > 100000000LL)
        fail(errc::too_large, "too many candidate triples");
    std::mt19937_64 rng(seed);
    const auto thr_q = static_cast<std::uint64_t>(q * 9007199254740992.0);
    const auto thr_p = static_cast<std::uint64_t>(p * 9007199254740992.0);
    std::vector<Triple> edges;
    for (int c = 2; c < n; ++c)
        for (int b = 1; b < c; ++b)
            for (int a = 0; a < b; ++a) {
                const std::uint64_t draw = rng() >> 11;
                if (a == 0) {
                    if (c <= 5 && draw < thr_q) edges.push_back({a, b, c});
                } else {
                    const int support = (a <= 5 ? 1 : 0) + (b <= 5 ? 1 : 0) + (c <= 5 ? 1 : 0);
                    if (support <= 1 && draw < thr_p) edges.push_back({a, b, c});
                }
            }
    return ThreeGraph(n, std::move(edges));
}

} // namespace tricover
