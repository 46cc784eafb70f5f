#include <algorithm>
#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "tricover/numeric.hpp"
#include "tricover/search.hpp"
#include "tricover/three_graph.hpp"

using namespace tricover;
using tricover::test::expect_error;

TEST_CASE("three-graph construction validates and canonicalizes") {
    ThreeGraph c6 = loose_triangle_c63();
    CHECK(c6.vertex_count() == 6);
    CHECK(c6.edge_count() == 3);

    CHECK(ThreeGraph(5, {}).edge_count() == 0);

    expect_error(errc::malformed_edge, [] { ThreeGraph(4, {{0, 1, 1}}); });
    expect_error(errc::range, [] { ThreeGraph(4, {{0, 1, 4}}); });
    expect_error(errc::range, [] { ThreeGraph(4, {{-1, 1, 2}}); });
    expect_error(errc::duplicate_edge, [] { ThreeGraph(5, {{0, 1, 2}, {2, 1, 0}}); });

    // order independence: same set of triples in any order is the same object
    ThreeGraph a(6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}});
    ThreeGraph b(6, {{4, 5, 0}, {2, 3, 4}, {0, 1, 2}});
    ThreeGraph c(6, {{3, 2, 4}, {0, 4, 5}, {1, 0, 2}});
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("degree over subsets of size 1 and 2") {
    ThreeGraph c6 = loose_triangle_c63();
    const int two = 2, one = 1;
    CHECK(degree(c6, std::vector<int>{two}) == 2);
    CHECK(degree(c6, std::vector<int>{one}) == 1);
    ThreeGraph k6 = complete_three_graph(6);
    CHECK(degree(k6, std::vector<int>{0, 1}) == 4);

    expect_error(errc::unsupported_degree_order, [&] { degree(c6, std::vector<int>{0, 1, 2}); });
    expect_error(errc::unsupported_degree_order, [&] { degree(c6, std::vector<int>{}); });
    expect_error(errc::range, [&] { degree(c6, std::vector<int>{9}); });
    // duplicates collapse to the singleton
    CHECK(degree(c6, std::vector<int>{2, 2}) == 2);
}

TEST_CASE("degree profile of the named instances") {
    // direct count over the 15 pairs of the loose triangle: pairs inside an
    // edge have codegree 1, all others 0
    DegreeProfile pc6 = degree_profile(loose_triangle_c63());
    CHECK(pc6.min1 == 1);
    CHECK(pc6.min2 == 0);

    DegreeProfile pk6 = degree_profile(complete_three_graph(6));
    CHECK(pk6.min1 == 10);
    CHECK(pk6.min2 == 4);

    expect_error(errc::too_few_vertices, [] { degree_profile(ThreeGraph(1, {})); });
}

TEST_CASE("handshake identities on random instances") {
    for (std::uint64_t seed = 0; seed < 24; ++seed) {
        ThreeGraph g = random_3graph(7, 0.4, seed);
        DegreeProfile p = degree_profile(g);
        long long sum1 = 0, sum2 = 0;
        for (long long d : p.vertex_degrees) sum1 += d;
        for (long long d : p.pair_codegrees) sum2 += d;
        CHECK(sum1 == 3 * g.edge_count());
        CHECK(sum2 == 3 * g.edge_count());
        CHECK(*std::min_element(p.vertex_degrees.begin(), p.vertex_degrees.end()) == p.min1);
        CHECK(*std::min_element(p.pair_codegrees.begin(), p.pair_codegrees.end()) == p.min2);
    }
}

TEST_CASE("link graphs remember host identities") {
    ThreeGraph c6 = loose_triangle_c63();
    SimpleGraph link0 = c6.link_graph(0); // edges {1,2} and {4,5}
    CHECK(link0.size() == 5);
    CHECK(link0.edge_count() == 2);
    CHECK(link0.has_edge_labels(1, 2));
    CHECK(link0.has_edge_labels(4, 5));

    // construction 1: the link at the apex is complete on the rest
    ThreeGraph g1(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 4}, {0, 3, 4}});
    SimpleGraph lx = g1.link_graph(0);
    CHECK(lx.edge_count() == choose2(4));

    CHECK(ThreeGraph(4, {}).link_graph(2).edge_count() == 0);
    expect_error(errc::range, [&] { c6.link_graph(6); });
}

TEST_CASE("link/codegree consistency on random instances") {
    for (std::uint64_t seed = 100; seed < 112; ++seed) {
        ThreeGraph g = random_3graph(8, 0.3, seed);
        for (int v = 0; v < 8; ++v) {
            SimpleGraph link = g.link_graph(v);
            CHECK(link.edge_count() == g.degree(v));
            for (const auto& e : link.labeled_edges()) {
                CHECK(g.codegree(e[0], e[1]) >= 1);
            }
            for (int w = 0; w < 8; ++w)
                if (w != v) CHECK(g.codegree(v, w) == link.degree_label(w));
        }
    }
}

TEST_CASE("delete_vertices keeps labels") {
    SimpleGraph path = tricover::test::graph2(3, {{0, 1}, {1, 2}});
    SimpleGraph rest = delete_vertices(path, std::vector<int>{1});
    CHECK(rest.size() == 2);
    CHECK(rest.edge_count() == 0);
    CHECK(rest.labels() == std::vector<int>{0, 2});

    SimpleGraph same = delete_vertices(path, std::vector<int>{});
    CHECK(same == path);

    SimpleGraph tri = tricover::test::graph2(3, {{0, 1}, {1, 2}, {0, 2}});
    SimpleGraph edge = delete_vertices(tri, std::vector<int>{0});
    CHECK(edge.edge_count() == 1);
    CHECK(edge.has_edge_labels(1, 2));

    expect_error(errc::range, [&] { delete_vertices(path, std::vector<int>{7}); });
}

TEST_CASE("simple graph validation") {
    expect_error(errc::bad_arguments, [] { SimpleGraph({1, 1}, {}); });
    expect_error(errc::malformed_edge, [] { SimpleGraph({0, 1}, {{1, 1}}); });
    expect_error(errc::duplicate_edge, [] { SimpleGraph({0, 1}, {{0, 1}, {1, 0}}); });
    expect_error(errc::range, [] { SimpleGraph({0, 1}, {{0, 2}}); });
}

TEST_CASE("exact n/sqrt(2) ceiling against an integer-sqrt oracle") {
    // independent route: ceil(n/sqrt2) = floor(isqrt(2 n^2) / 2) + 1 for
    // n >= 1 because sqrt(2 n^2) is irrational
    auto oracle = [](long long n) {
        if (n == 0) return 0LL;
        return isqrt_floor(2 * n * n) / 2 + 1;
    };
    for (long long n = 0; n <= 10000; ++n) CHECK(ceil_n_over_sqrt2(n) == oracle(n));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const long long n = static_cast<long long>(rng() % 1000000ull);
        CHECK(ceil_n_over_sqrt2(n) == oracle(n));
    }
}
