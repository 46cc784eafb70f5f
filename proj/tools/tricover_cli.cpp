// Command-line front end: generate the extremal constructions, check
// loose-triangle coverings, run threshold searches, and drive the
// verification suites. Reports are JSON with a deterministic payload
// section; wall times live outside it.
//
// Exit codes: 0 success / property holds, 1 valid negative answer,
// 2 usage or input errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "tricover/claims.hpp"
#include "tricover/constructions.hpp"
#include "tricover/covering.hpp"
#include "tricover/errors.hpp"
#include "tricover/io.hpp"
#include "tricover/patterns.hpp"
#include "tricover/search.hpp"

using json = nlohmann::ordered_json;
using namespace tricover;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

json report_shell(const std::string& command) {
    json report;
    report["command"] = command;
    report["version"] = kToolkitVersion;
    return report;
}

void emit(json& report, const Timer& timer) {
    report["wall_time_ms"] = timer.ms();
    std::cout << report.dump(2) << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse, "cannot open '" + path + "' [unreadable]");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// "a..b" or a single integer
std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        const int a = std::stoi(text.substr(0, dots));
        const int b = std::stoi(text.substr(dots + 2));
        if (a > b) fail(errc::bad_arguments, "empty range " + text);
        return {a, b};
    } catch (const std::invalid_argument&) {
        fail(errc::bad_arguments, "bad range '" + text + "'");
    } catch (const std::out_of_range&) {
        fail(errc::bad_arguments, "bad range '" + text + "'");
    }
}

json witness_json(const C6Witness& w) {
    json j;
    j["roles"] = w.roles;
    j["edges"] = w.edges;
    return j;
}

json threshold_json(const ThresholdResult& res) {
    json payload;
    payload["kind"] = res.kind == ThresholdKind::codegree ? "codegree" : "degree";
    payload["n"] = res.n;
    payload["exact"] = res.exact;
    payload["value"] = res.value;
    payload["value_display"] =
        (res.exact ? std::to_string(res.value) : ">= " + std::to_string(res.value));
    payload["graphs_scanned"] = res.graphs_scanned;
    if (res.witness) {
        payload["witness"] = serialize(*res.witness);
        payload["witness_min_codegree"] = min_codegree(*res.witness);
        payload["witness_min_degree"] = degree_profile(*res.witness).min1;
    } else {
        payload["witness"] = nullptr;
    }
    return payload;
}

int cmd_gen(const std::string& kind, int n, int r, const std::string& out_path,
            const std::string& echo) {
    Timer timer;
    std::string file_text;
    json params;
    params["kind"] = kind;
    params["n"] = n;
    if (kind == "c1") {
        ThreeGraph g = construction1(n);
        file_text = serialize(g);
        params["edges"] = g.edge_count();
    } else if (kind == "c2") {
        auto [g, p] = construction2(n);
        file_text = serialize(g);
        params["b"] = p.b;
        params["A1"] = p.a_floor;
        params["A2"] = p.a_ceil;
        params["edges"] = g.edge_count();
    } else { // turan
        SimpleGraph t = turan_graph(n, r);
        file_text = serialize(t);
        params["r"] = r;
        params["edges"] = t.edge_count();
    }
    json report = report_shell(echo);
    report["payload"] = params;
    if (out_path.empty()) {
        std::cout << file_text;
        report["wall_time_ms"] = timer.ms();
        std::cerr << report.dump(2) << "\n";
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) fail(errc::parse, "cannot write '" + out_path + "' [unwritable]");
        out << file_text;
        report["payload"]["out"] = out_path;
        emit(report, timer);
    }
    return kExitOk;
}

int cmd_check_cover(const std::string& in_path, int vertex, bool has_vertex, bool fast,
                    const std::string& echo) {
    Timer timer;
    const std::string text = read_file(in_path);
    GraphFile file = parse_graph_file(text);
    if (!std::holds_alternative<ThreeGraph>(file))
        fail(errc::parse, "covering checks need a 3-graph file [wrong-kind]");
    const ThreeGraph& g = std::get<ThreeGraph>(file);

    const bool fast_usable = fast && g.vertex_count() >= 2 && min_codegree(g) >= 2;
    auto probe = [&](int v) -> std::optional<C6Witness> {
        if (fast_usable)
            if (auto w = fast_witness_via_link(g, v)) return w;
        return find_c6_through(g, v);
    };

    json report = report_shell(echo);
    report["input_digest"] = fnv1a_hex(text);
    json payload;
    payload["n"] = g.vertex_count();
    payload["edges"] = g.edge_count();
    payload["fast"] = fast;

    bool positive = false;
    if (has_vertex) {
        if (vertex < 0 || vertex >= g.vertex_count())
            fail(errc::parse, "queried vertex out of range [out-of-range]");
        auto w = probe(vertex);
        payload["vertex"] = vertex;
        payload["covered"] = w.has_value();
        payload["witness"] = w ? witness_json(*w) : json(nullptr);
        positive = w.has_value();
    } else {
        json covered = json::object();
        json uncovered = json::array();
        bool all = true;
        for (int v = 0; v < g.vertex_count(); ++v) {
            auto w = probe(v);
            if (w)
                covered[std::to_string(v)] = witness_json(*w);
            else {
                uncovered.push_back(v);
                all = false;
            }
        }
        payload["fully_covered"] = all;
        payload["uncovered"] = uncovered;
        payload["witnesses"] = covered;
        positive = all;
    }
    report["payload"] = payload;
    emit(report, timer);
    return positive ? kExitOk : kExitNegative;
}

int cmd_thresholds(const std::string& kind, int n, int shards, bool randomized, long long trials,
                   std::uint64_t seed, const std::string& echo) {
    Timer timer;
    SearchOptions opts;
    opts.shards = shards;
    opts.randomized = randomized;
    opts.trials = trials;
    opts.seed = seed;
    const ThresholdResult res = kind == "codegree" ? compute_c2(n, opts) : compute_c1(n, opts);
    json report = report_shell(echo);
    if (randomized) report["seed"] = seed;
    report["payload"] = threshold_json(res);
    emit(report, timer);
    return kExitOk;
}

struct SuiteResult {
    unsigned long long instances = 0;
    unsigned long long violations = 0;
    json counterexamples = json::array();
    json extra = json::object();

    void violation(const std::string& label, const std::string& graph_text) {
        ++violations;
        if (counterexamples.size() < 16) {
            json c;
            c["label"] = label;
            c["graph"] = graph_text;
            counterexamples.push_back(c);
        }
    }
};

void suite_lemma31(int n_lo, int n_hi, long long trials, std::uint64_t seed, SuiteResult& out) {
    for (int n = n_lo; n <= n_hi; ++n) {
        if (n == 6) {
            // exhaustive: every 6-vertex host with delta_2 >= 2
            EnumerationPlan plan;
            plan.n = 6;
            plan.min_codegree = 2;
            enumerate_3graphs(plan, [&](const ThreeGraph& g, std::uint64_t) {
                ++out.instances;
                for (int v = 0; v < 6; ++v)
                    if (!check_lemma_3_1(g, v)) out.violation("lemma31 n=6", serialize(g));
            });
            continue;
        }
        if (n < 6) fail(errc::bad_arguments, "lemma31 suite needs n >= 6");
        long long produced = 0;
        for (std::uint64_t attempt = 0; produced < trials; ++attempt) {
            if (attempt > 300u * static_cast<std::uint64_t>(trials) + 10000u)
                fail(errc::bad_arguments, "sampler failed to reach delta_2 >= 2 instances");
            const double p = 0.70 + 0.05 * static_cast<double>(attempt % 6);
            ThreeGraph g = random_3graph(
                n, p, seed ^ (0x9E3779B97F4A7C15ull * (attempt + 1)) ^ static_cast<std::uint64_t>(n));
            if (min_codegree(g) < 2) continue;
            ++produced;
            ++out.instances;
            for (int v = 0; v < n; ++v) {
                if (!check_lemma_3_1(g, v)) out.violation("lemma31 random", serialize(g));
                // the fast path must validate and imply the oracle
                if (auto w = fast_witness_via_link(g, v)) {
                    if (!w->validates(g) || !w->contains(v) || !find_c6_through(g, v))
                        out.violation("fast-path", serialize(g));
                }
            }
        }
    }
}

void suite_claims(bool claim41, int n_lo, int n_hi, long long trials, std::uint64_t seed,
                  SuiteResult& out) {
    // part 1: construction 2 instances, all qualifying tuples
    for (int n = std::max(7, n_lo); n <= n_hi; ++n) {
        auto [g, p] = construction2(n);
        if (find_c6_through(g, p.apex)) {
            out.violation("construction2 apex covered", serialize(g));
            continue;
        }
        ++out.instances;
        if (claim41) {
            for (int v = 1; v < n; ++v) {
                if (g.codegree(p.apex, v) < 4) continue;
                if (!check_claim_4_1(g, p.apex, v).holds)
                    out.violation("claim41 construction2", serialize(g));
            }
        } else {
            for (const auto& e : classify_edges(g, p.apex).e3)
                if (!check_claim_4_2(g, p.apex, e[0], e[1]))
                    out.violation("claim42 construction2", serialize(g));
        }
    }
    // part 2: planted random hosts at n = 9
    long long produced = 0;
    for (std::uint64_t attempt = 0; produced < trials; ++attempt) {
        if (attempt > 400u * static_cast<std::uint64_t>(trials) + 10000u)
            fail(errc::bad_arguments, "sampler failed to reach qualifying instances");
        ThreeGraph g =
            random_planted_link_host(9, 0.85, 0.10, seed ^ (0xD1B54A32D192ED03ull * (attempt + 1)));
        if (find_c6_through(g, 0)) continue;
        bool qualifying = false;
        if (claim41) {
            for (int v = 1; v < 9; ++v) {
                if (g.codegree(0, v) < 4) continue;
                qualifying = true;
                if (!check_claim_4_1(g, 0, v).holds) out.violation("claim41 random", serialize(g));
            }
        } else {
            for (const auto& e : classify_edges(g, 0).e3) {
                qualifying = true;
                if (!check_claim_4_2(g, 0, e[0], e[1]))
                    out.violation("claim42 random", serialize(g));
            }
        }
        if (qualifying) {
            ++produced;
            ++out.instances;
        }
    }
}

void suite_structure(int m_lo, int m_hi, SuiteResult& out) {
    json per_m = json::object();
    for (int m = m_lo; m <= m_hi; ++m) {
        StructureCheck check = verify_min_deg2_implies_pattern(m);
        out.instances += check.graphs_checked;
        per_m[std::to_string(m)] = check.holds;
        if (!check.holds)
            for (const auto& cx : check.counterexamples) {
                ++out.violations;
                if (out.counterexamples.size() < 16) {
                    json c;
                    c["label"] = "structure m=" + std::to_string(m);
                    c["graph"] = serialize(cx);
                    out.counterexamples.push_back(c);
                }
            }
    }
    out.extra["holds_per_m"] = per_m;
}

void suite_turan(int n_lo, int n_hi, SuiteResult& out) {
    for (int n = n_lo; n <= n_hi; ++n) {
        const auto table = max_edges_clique_free_table(n);
        for (int r = 1; r <= n; ++r) {
            ++out.instances;
            if (table[static_cast<std::size_t>(r)] != turan_edge_count(n, r)) {
                ++out.violations;
                json c;
                c["label"] = "turan n=" + std::to_string(n) + " r=" + std::to_string(r);
                c["brute_force"] = table[static_cast<std::size_t>(r)];
                c["formula"] = turan_edge_count(n, r);
                out.counterexamples.push_back(c);
            }
        }
    }
}

void suite_constructions(int n_lo, int n_hi, SuiteResult& out) {
    for (int n = std::max(3, n_lo); n <= n_hi; ++n) {
        ++out.instances;
        ThreeGraph g1 = construction1(n);
        if (n >= 4 && min_codegree(g1) != 1) out.violation("construction1 codegree", serialize(g1));
        if (static_cast<int>(cover_report(g1).uncovered.size()) != n)
            out.violation("construction1 coverage", serialize(g1));
        if (n < 7) continue;
        auto [g2, p] = construction2(n);
        if (find_c6_through(g2, p.apex)) out.violation("construction2 apex", serialize(g2));
        const DegreeProfile prof = degree_profile(g2);
        if (!threshold_exceeded(prof.min1, n)) out.violation("construction2 threshold", serialize(g2));
        const Construction2Degrees d = construction2_degree_formulas(p);
        for (int v = 0; v < n; ++v) {
            long long expected = 0;
            switch (p.part_of[static_cast<std::size_t>(v)]) {
            case Part::Apex: expected = d.apex; break;
            case Part::A1: expected = d.a1_vertex; break;
            case Part::A2: expected = d.a2_vertex; break;
            case Part::B1: expected = d.b1_vertex; break;
            case Part::B2: expected = d.b2_vertex; break;
            }
            if (prof.vertex_degrees[static_cast<std::size_t>(v)] != expected) {
                out.violation("construction2 formulas", serialize(g2));
                break;
            }
        }
    }
}

int cmd_verify(const std::string& suite, const std::string& n_range, const std::string& m_range,
               long long trials, std::uint64_t seed, const std::string& echo) {
    Timer timer;
    SuiteResult result;
    json report = report_shell(echo);

    if (suite == "lemma31") {
        auto [lo, hi] = parse_range(n_range.empty() ? "6..8" : n_range);
        report["seed"] = seed;
        suite_lemma31(lo, hi, trials, seed, result);
    } else if (suite == "claim41" || suite == "claim42") {
        auto [lo, hi] = parse_range(n_range.empty() ? "7..24" : n_range);
        report["seed"] = seed;
        suite_claims(suite == "claim41", lo, hi, trials, seed, result);
    } else if (suite == "structure") {
        auto [lo, hi] = parse_range(m_range.empty() ? "4..7" : m_range);
        suite_structure(lo, hi, result);
    } else if (suite == "turan") {
        auto [lo, hi] = parse_range(n_range.empty() ? "3..8" : n_range);
        suite_turan(lo, hi, result);
    } else if (suite == "constructions") {
        auto [lo, hi] = parse_range(n_range.empty() ? "3..40" : n_range);
        suite_constructions(lo, hi, result);
    } else {
        fail(errc::bad_arguments, "unknown suite '" + suite + "'");
    }

    json payload;
    payload["suite"] = suite;
    payload["instances"] = result.instances;
    payload["violations"] = result.violations;
    payload["counterexamples"] = result.counterexamples;
    for (auto& [key, value] : result.extra.items()) payload[key] = value;
    report["payload"] = payload;
    emit(report, timer);
    return result.violations == 0 ? kExitOk : kExitNegative;
}

std::string join_args(int argc, char** argv) {
    std::string out;
    for (int i = 0; i < argc; ++i) {
        if (i) out += ' ';
        out += argv[i];
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"loose-triangle covering toolkit for 3-uniform hypergraphs"};
    app.set_version_flag("--version", std::string(kToolkitVersion));
    app.require_subcommand(1);
    const std::string echo = join_args(argc, argv);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a construction or a Turan graph");
    std::string gen_kind;
    int gen_n = 0, gen_r = 2;
    std::string gen_out;
    gen->add_option("kind", gen_kind, "c1, c2, or turan")
        ->required()
        ->check(CLI::IsMember({"c1", "c2", "turan"}));
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--r", gen_r, "part count (turan only)");
    gen->add_option("--out", gen_out, "output path (default: graph to stdout)");

    // check-cover
    auto* check = app.add_subcommand("check-cover", "per-vertex loose-triangle covering check");
    std::string check_in;
    int check_vertex = -1;
    bool check_fast = false;
    check->add_option("input", check_in, "hypergraph file")->required();
    auto* vertex_opt = check->add_option("--vertex", check_vertex, "restrict to one vertex");
    check->add_flag("--fast", check_fast, "try the link-pattern fast path first");

    // thresholds
    auto* thr = app.add_subcommand("thresholds", "covering threshold search");
    std::string thr_kind;
    int thr_n = 0;
    int thr_shards = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    bool thr_randomized = false;
    long long thr_trials = 1000;
    std::uint64_t thr_seed = 0;
    thr->add_option("kind", thr_kind, "codegree or degree")
        ->required()
        ->check(CLI::IsMember({"codegree", "degree"}));
    thr->add_option("--n", thr_n, "vertex count")->required();
    thr->add_option("--shards", thr_shards, "parallel shards");
    thr->add_flag("--randomized", thr_randomized, "randomized lower-bound mode");
    thr->add_option("--trials", thr_trials, "randomized trials");
    thr->add_option("--seed", thr_seed, "randomized seed");

    // verify
    auto* ver = app.add_subcommand("verify", "verification suites");
    std::string ver_suite, ver_n, ver_m;
    long long ver_trials = 300;
    std::uint64_t ver_seed = 0;
    ver->add_option("suite", ver_suite,
                    "lemma31, claim41, claim42, structure, turan, constructions")
        ->required();
    ver->add_option("--n", ver_n, "n range, e.g. 3..8");
    ver->add_option("--m", ver_m, "m range (structure suite)");
    ver->add_option("--trials", ver_trials, "random instances per n");
    ver->add_option("--seed", ver_seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        app.exit(e);
        return kExitError;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_kind, gen_n, gen_r, gen_out, echo);
        if (check->parsed())
            return cmd_check_cover(check_in, check_vertex, vertex_opt->count() > 0, check_fast,
                                   echo);
        if (thr->parsed())
            return cmd_thresholds(thr_kind, thr_n, thr_shards, thr_randomized, thr_trials,
                                  thr_seed, echo);
        if (ver->parsed()) return cmd_verify(ver_suite, ver_n, ver_m, ver_trials, ver_seed, echo);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
