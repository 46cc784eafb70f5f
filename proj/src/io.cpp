#include "tricover/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <string>
#include <vector>

#include "tricover/errors.hpp"

namespace tricover {

std::string serialize(const ThreeGraph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& e : g.edges())
        out += std::to_string(e[0]) + " " + std::to_string(e[1]) + " " + std::to_string(e[2]) + "\n";
    return out;
}

std::string serialize(const SimpleGraph& h) {
    std::string out = std::to_string(h.size()) + " " + std::to_string(h.edge_count()) + "\n";
    for (const auto& e : h.edges())
        out += std::to_string(e[0]) + " " + std::to_string(e[1]) + "\n";
    return out;
}

namespace {

[[noreturn]] void parse_fail(int line, int col, const std::string& message, const char* code) {
    std::string where = "line " + std::to_string(line);
    if (col > 0) where += ", col " + std::to_string(col);
    fail(errc::parse, where + ": " + message + " [" + code + "]");
}

struct Line {
    int number = 0;
    std::vector<long long> values;
    std::vector<int> cols; // 1-based start column per value

    int col(std::size_t index) const {
        return index < cols.size() ? cols[index] : 0;
    }
};

// Splits into non-comment lines of single-space separated decimal integers.
std::vector<Line> tokenize(std::string_view text) {
    if (!text.empty() && text.back() != '\n')
        parse_fail(1 + static_cast<int>(std::count(text.begin(), text.end(), '\n')), 0,
                   "trailing newline required", "missing-newline");
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++number;
        if (!raw.empty() && raw.front() == '#') continue;
        Line line;
        line.number = number;
        std::size_t i = 0;
        while (i < raw.size()) {
            const std::size_t sp = std::min(raw.find(' ', i), raw.size());
            std::string_view tok = raw.substr(i, sp - i);
            long long value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || ptr != tok.data() + tok.size())
                parse_fail(number, static_cast<int>(i) + 1,
                           "expected a decimal integer, got '" + std::string(tok) + "'",
                           "malformed-line");
            line.values.push_back(value);
            line.cols.push_back(static_cast<int>(i) + 1);
            i = sp + 1;
        }
        if (line.values.empty())
            parse_fail(number, 1, "blank line", "malformed-line");
        lines.push_back(std::move(line));
    }
    return lines;
}

struct Parsed {
    long long n = 0;
    int arity = 0;
    std::vector<Line> edge_lines;
};

Parsed parse_common(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) parse_fail(1, 0, "missing header line", "bad-header");
    const Line& header = lines.front();
    if (header.values.size() != 2 || header.values[0] < 0 || header.values[1] < 0)
        parse_fail(header.number, 1, "header must be 'n m' with n, m >= 0", "bad-header");
    Parsed out;
    out.n = header.values[0];
    const long long m = header.values[1];
    out.edge_lines.assign(lines.begin() + 1, lines.end());
    if (static_cast<long long>(out.edge_lines.size()) != m)
        parse_fail(out.edge_lines.empty() ? header.number : out.edge_lines.back().number, 0,
                   "header announces " + std::to_string(m) + " edges, found " +
                       std::to_string(out.edge_lines.size()),
                   "edge-count-mismatch");
    out.arity = out.edge_lines.empty() ? 0 : static_cast<int>(out.edge_lines.front().values.size());
    for (const auto& line : out.edge_lines) {
        if (static_cast<int>(line.values.size()) != out.arity)
            parse_fail(line.number, 1, "edge lines mix arities", "mixed-arity");
        for (std::size_t i = 0; i < line.values.size(); ++i)
            if (line.values[i] < 0 || line.values[i] >= out.n)
                parse_fail(line.number, line.col(i),
                           "vertex " + std::to_string(line.values[i]) + " out of range [0, " +
                               std::to_string(out.n) + ")",
                           "out-of-range");
        for (std::size_t i = 1; i < line.values.size(); ++i)
            if (line.values[i - 1] >= line.values[i])
                parse_fail(line.number, line.col(i), "vertices must be strictly increasing",
                           "non-increasing");
    }
    return out;
}

} // namespace

ThreeGraph parse_three_graph(std::string_view text) {
    Parsed p = parse_common(text);
    if (!p.edge_lines.empty() && p.arity != 3)
        parse_fail(p.edge_lines.front().number, 1, "expected 3 vertices per edge line", "wrong-arity");
    std::set<Triple> seen;
    std::vector<Triple> edges;
    for (const auto& line : p.edge_lines) {
        Triple t{static_cast<int>(line.values[0]), static_cast<int>(line.values[1]),
                 static_cast<int>(line.values[2])};
        if (!seen.insert(t).second) parse_fail(line.number, 1, "duplicate edge", "duplicate-edge");
        edges.push_back(t);
    }
    return ThreeGraph(static_cast<int>(p.n), std::move(edges));
}

SimpleGraph parse_two_graph(std::string_view text) {
    Parsed p = parse_common(text);
    if (!p.edge_lines.empty() && p.arity != 2)
        parse_fail(p.edge_lines.front().number, 1, "expected 2 vertices per edge line", "wrong-arity");
    std::set<Pair> seen;
    std::vector<Pair> edges;
    for (const auto& line : p.edge_lines) {
        Pair e{static_cast<int>(line.values[0]), static_cast<int>(line.values[1])};
        if (!seen.insert(e).second) parse_fail(line.number, 1, "duplicate edge", "duplicate-edge");
        edges.push_back(e);
    }
    std::vector<int> labels(static_cast<std::size_t>(p.n));
    for (int i = 0; i < static_cast<int>(p.n); ++i) labels[static_cast<std::size_t>(i)] = i;
    return SimpleGraph(std::move(labels), std::move(edges));
}

GraphFile parse_graph_file(std::string_view text) {
    Parsed p = parse_common(text);
    if (p.edge_lines.empty() || p.arity == 3) return parse_three_graph(text);
    if (p.arity == 2) return parse_two_graph(text);
    parse_fail(p.edge_lines.front().number, 1, "edge lines must have 2 or 3 vertices", "wrong-arity");
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

} // namespace tricover
