#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "tricover/simple_graph.hpp"
#include "tricover/three_graph.hpp"

namespace tricover {

// Hypergraph file format: header "n m", then m lines "a b c" with
// 0 <= a < b < c < n, single-space separated, colex sorted on output;
// '#' lines are comments; trailing newline. The 2-graph variant uses pair
// lines "a b"; arity must be uniform per file.

std::string serialize(const ThreeGraph& g);
std::string serialize(const SimpleGraph& h); // positional structure

// Parsers throw Error(errc::parse) with "line L: ... [diagnostic-code]"
// messages; diagnostic codes: bad-header, malformed-line, wrong-arity,
// mixed-arity, out-of-range, non-increasing, duplicate-edge,
// edge-count-mismatch, missing-newline.
ThreeGraph parse_three_graph(std::string_view text);
SimpleGraph parse_two_graph(std::string_view text);

using GraphFile = std::variant<ThreeGraph, SimpleGraph>;
GraphFile parse_graph_file(std::string_view text);

// FNV-1a 64-bit digest, hex encoded; used as the input digest in reports.
std::string fnv1a_hex(std::string_view bytes);

inline constexpr const char* kToolkitVersion = "0.1.0";

} // namespace tricover
