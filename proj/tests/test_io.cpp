#include <string>

#include "doctest.h"
#include "test_util.hpp"
#include "tricover/constructions.hpp"
#include "tricover/io.hpp"
#include "tricover/search.hpp"

using namespace tricover;

namespace {

void expect_parse_code(const std::string& text, const std::string& code) {
    try {
        parse_graph_file(text);
        FAIL_CHECK("expected parse failure with code ", code);
    } catch (const Error& e) {
        CHECK(e.code() == errc::parse);
        CHECK(std::string(e.what()).find("[" + code + "]") != std::string::npos);
    }
}

} // namespace

TEST_CASE("serialize then parse is the identity on random graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        ThreeGraph g = random_3graph(7, 0.3, seed);
        CHECK(parse_three_graph(serialize(g)) == g);
    }
    ThreeGraph empty(5, {});
    CHECK(parse_three_graph(serialize(empty)) == empty);
    ThreeGraph none(0, {});
    CHECK(parse_three_graph(serialize(none)) == none);
}

TEST_CASE("parse then serialize is the identity on canonical files") {
    const std::string canonical = "6 3\n0 1 2\n2 3 4\n0 4 5\n";
    CHECK(serialize(parse_three_graph(canonical)) == canonical);
}

TEST_CASE("comments are ignored") {
    const std::string text = "# loose triangle\n6 3\n0 1 2\n# middle\n2 3 4\n0 4 5\n";
    CHECK(parse_three_graph(text) == loose_triangle_c63());
}

TEST_CASE("two-graph files round trip and infer their kind") {
    SimpleGraph t = turan_graph(5, 2);
    SimpleGraph back = parse_two_graph(serialize(t));
    CHECK(back == t);

    GraphFile f = parse_graph_file(serialize(t));
    CHECK(std::holds_alternative<SimpleGraph>(f));
    GraphFile g = parse_graph_file("4 1\n0 1 2\n");
    CHECK(std::holds_alternative<ThreeGraph>(g));
    // edge-free files default to the 3-graph reading
    GraphFile h = parse_graph_file("4 0\n");
    CHECK(std::holds_alternative<ThreeGraph>(h));
}

TEST_CASE("parser diagnostics carry distinct codes") {
    expect_parse_code("", "bad-header");
    expect_parse_code("5\n", "bad-header");
    expect_parse_code("-2 0\n", "bad-header");
    expect_parse_code("4 1\n0 1 2", "missing-newline");
    expect_parse_code("4 1\n1 1 2\n", "non-increasing");
    expect_parse_code("4 1\n2 1 3\n", "non-increasing");
    expect_parse_code("4 1\n0 1 7\n", "out-of-range");
    expect_parse_code("4 2\n0 1 2\n0 1 2\n", "duplicate-edge");
    expect_parse_code("4 2\n0 1 2\n", "edge-count-mismatch");
    expect_parse_code("4 1\n0 1 2\n0 2 3\n", "edge-count-mismatch");
    expect_parse_code("4 2\n0 1 2\n0 1\n", "mixed-arity");
    expect_parse_code("4 1\n0 x 2\n", "malformed-line");
    expect_parse_code("4 1\n0  1 2\n", "malformed-line"); // double space
    expect_parse_code("4 1\n0 1 2 3\n", "wrong-arity");

    tricover::test::expect_error(errc::parse, [] { parse_two_graph("4 1\n0 1 2\n"); });
    tricover::test::expect_error(errc::parse, [] { parse_three_graph("4 1\n0 1\n"); });
}

TEST_CASE("digest is stable") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("6 3\n") == fnv1a_hex("6 3\n"));
    CHECK(fnv1a_hex("a") != fnv1a_hex("b"));
}
