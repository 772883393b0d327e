// percolab: command-line front end for generation, sampling, exploration,
// extremal brackets and Monte Carlo experiments.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "percolab/dfs.hpp"
#include "percolab/extremal.hpp"
#include "percolab/generators.hpp"
#include "percolab/graph.hpp"
#include "percolab/harness.hpp"
#include "percolab/percolation.hpp"
#include "percolab/specs.hpp"
#include "percolab/version.hpp"
#include "verify.hpp"

using nlohmann::json;
using namespace percolab;

namespace {

constexpr int kUsageError = 2;
constexpr int kFailure = 1;

// Bad input from the user: reported and mapped to the usage exit code.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_to(const std::string& path, const std::function<void(std::ostream&)>& body) {
    if (path.empty() || path == "-") {
        body(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UsageError("cannot open '" + path + "' for writing");
    body(out);
    if (!out)
        throw std::runtime_error("failed writing '" + path + "'");
}

// --gen / --input pair shared by the commands that need a base graph.
struct GraphSource {
    std::string gen;
    std::string input;

    void attach(CLI::App* cmd) {
        auto* g = cmd->add_option("--gen", gen, "generator: JSON object or shorthand (complete:N, kbip:A:B, regular:N:K[:SEED], ppinc:Q)");
        auto* i = cmd->add_option("--input", input, "edge-list file");
        g->excludes(i);
        i->excludes(g);
    }

    struct Loaded {
        Graph graph;
        json spec;
    };

    Loaded load() const {
        if (gen.empty() == input.empty())
            throw UsageError("exactly one of --gen or --input is required");
        if (!gen.empty()) {
            const GenSpec spec = parse_gen_spec(gen);
            GenOutcome out = generate(spec);
            if (out.warning)
                std::cerr << "warning: " << *out.warning << '\n';
            return {std::move(out.graph), to_json(spec)};
        }
        std::ifstream in(input, std::ios::binary);
        if (!in)
            throw UsageError("cannot open '" + input + "'");
        return {read_edge_list(in), json{{"input", input}}};
    }
};

json graph_summary(const Graph& g) {
    const Girth gi = girth(g);
    return {{"n", g.order()},
            {"m", g.size()},
            {"min_deg", g.order() ? degree_stats(g).min : 0},
            {"girth", gi.length ? json(*gi.length) : json(nullptr)}};
}

std::string read_text_arg(const std::string& arg) {
    if (arg.empty() || arg[0] != '@')
        return arg;
    std::ifstream in(arg.substr(1), std::ios::binary);
    if (!in)
        throw UsageError("cannot open '" + arg.substr(1) + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// ---- gen -----------------------------------------------------------------

struct GenCmd {
    std::string spec;
    std::string out;

    void attach(CLI::App& app) {
        auto* cmd = app.add_subcommand("gen", "generate a base graph as an edge list");
        cmd->add_option("spec", spec, "generator JSON ({\"kind\": ...}), @file, or shorthand")->required();
        cmd->add_option("-o,--out", out, "output edge-list file (default stdout)");
        cmd->callback([this] { run(); });
    }

    void run() const {
        GenOutcome g = generate(parse_gen_spec(read_text_arg(spec)));
        if (g.warning)
            std::cerr << "warning: " << *g.warning << '\n';
        write_to(out, [&](std::ostream& os) { write_edge_list(os, g.graph); });
    }
};

// ---- percolate -----------------------------------------------------------

struct PercolateCmd {
    GraphSource source;
    std::string p = "0.5";
    std::uint64_t seed = 1;
    std::string out;
    std::string sidecar;

    void attach(CLI::App& app) {
        auto* cmd = app.add_subcommand("percolate", "sample G_p and write it as an edge list");
        source.attach(cmd);
        cmd->add_option("--p", p, "edge probability, or auto(c) for c / min degree")->required();
        cmd->add_option("--seed", seed, "64-bit seed");
        cmd->add_option("-o,--out", out, "output edge-list file (default stdout)");
        cmd->add_option("--sidecar", sidecar, "JSON sidecar path (default <out>.json when --out is a file)");
        cmd->callback([this] { run(); });
    }

    void run() const {
        const auto base = source.load();
        const double prob = parse_probability(p, base.graph);
        const SubgraphSample s = sample(base.graph, prob, seed);
        write_to(out, [&](std::ostream& os) { write_edge_list(os, s.materialize()); });
        std::string meta = sidecar;
        if (meta.empty() && !out.empty() && out != "-")
            meta = out + ".json";
        if (!meta.empty())
            write_to(meta, [&](std::ostream& os) {
                os << json{{"p", prob}, {"seed", seed}, {"kept_count", s.kept_count()}}.dump(2) << '\n';
            });
    }
};

// ---- dfs -----------------------------------------------------------------

struct DfsCmd {
    GraphSource source;
    std::string p = "1";
    std::uint64_t seed = 1;
    std::vector<std::size_t> lengths;
    std::string trace;
    std::string out;

    void attach(CLI::App& app) {
        auto* cmd = app.add_subcommand("dfs", "run the two-phase exploration on one sample");
        source.attach(cmd);
        cmd->add_option("--p", p, "edge probability, or auto(c)");
        cmd->add_option("--seed", seed, "64-bit seed");
        cmd->add_option("--len", lengths, "lengths l for the unqueried-pair counts (default: powers of two)")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--trace", trace, "write the answer sequence as a 0/1 string to this file");
        cmd->add_option("-o,--out", out, "output JSON file (default stdout)");
        cmd->callback([this] { run(); });
    }

    void run() const {
        const auto base = source.load();
        const Graph& g = base.graph;
        const double prob = parse_probability(p, g);
        const SubgraphSample s = sample(g, prob, seed);
        const DfsRun r = percolab::run(g, s);
        const auto cyc = longest_cycle_certificate(r);

        std::vector<std::size_t> ls = lengths;
        if (ls.empty()) {
            std::uint32_t longest = 0;
            for (const TreePair& t : r.unqueried)
                longest = std::max(longest, t.len);
            for (std::size_t l = 1; l <= std::max<std::uint32_t>(longest, 1); l *= 2)
                ls.push_back(l);
        }
        std::sort(ls.begin(), ls.end());
        ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
        json unq = json::object();
        for (std::size_t l : ls)
            unq[std::to_string(l)] = long_unqueried_count(r, l);

        const json report{{"n", g.order()},
                          {"m", g.size()},
                          {"p", prob},
                          {"seed", seed},
                          {"kept_edges", s.kept_count()},
                          {"max_U", r.max_u},
                          {"certified_path_len", r.max_u ? r.max_u - 1 : 0},
                          {"certified_cycle_len", cyc ? cyc->length() : 0},
                          {"excess", r.phase2_positive},
                          {"Q", r.phase1_queries},
                          {"P", r.phase1_positive},
                          {"phase1_positive", r.phase1_positive},
                          {"trees", r.roots.size()},
                          {"largest_tree", r.largest_tree()},
                          {"long_unqueried", unq}};
        write_to(out, [&](std::ostream& os) { os << report.dump(2) << '\n'; });
        if (!trace.empty())
            write_to(trace, [&](std::ostream& os) { os << encode(g, s).to_string() << '\n'; });
    }
};

// ---- extremal ------------------------------------------------------------

struct ExtremalCmd {
    std::string family = "girth:3";
    std::string n_range;
    std::vector<double> nh;
    std::vector<double> path;   // k eps
    std::vector<double> cycle;  // k c
    bool c0 = false;
    BracketConstants constants;
    std::string out;

    void attach(CLI::App& app) {
        auto* cmd = app.add_subcommand("extremal", "Turán-number brackets and derived budgets (CSV)");
        cmd->add_option("--family", family, "family: empty | girth:G | cycles:3,4 | JSON | @file");
        auto* n = cmd->add_option("--n", n_range, "vertex counts: N or A:B (bracket rows n,lower,exact,upper)");
        auto* h = cmd->add_option("--nh", nh, "degrees k for the n_H(k) bracket (rows k,n_lo,n_hi)");
        auto* pa = cmd->add_option("--path", path, "k eps: path-length budget (row k,eps,l_lo,l_hi)")->expected(2);
        auto* cy = cmd->add_option("--cycle", cycle, "k c: cycle-length budget (row k,c,l_lo,l_hi)")->expected(2);
        auto* c = cmd->add_flag("--c0", c0, "print the root of c/2 - 1 + e^-c = 0");
        cmd->add_option("--c-up", constants.upper_scale, "scale of the upper bracket formula")->check(CLI::PositiveNumber);
        cmd->add_option("--c-lo", constants.lower_scale, "scale of the lower bracket formula")->check(CLI::PositiveNumber);
        cmd->add_option("-o,--out", out, "output CSV file (default stdout)");
        for (CLI::Option* a : {n, h, pa, cy, c})
            for (CLI::Option* b : {n, h, pa, cy, c})
                if (a != b)
                    a->excludes(b);
        cmd->callback([this] { run(); });
    }

    static std::string opt(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : ""; }

    void run() const {
        const TuranFamily f = parse_turan_family(read_text_arg(family));
        std::ostringstream os;
        if (!n_range.empty()) {
            const auto colon = n_range.find(':');
            const std::uint64_t a = std::stoull(n_range.substr(0, colon));
            const std::uint64_t b = colon == std::string::npos ? a : std::stoull(n_range.substr(colon + 1));
            if (b < a)
                throw UsageError("--n range must be ascending");
            os << "n,lower,exact,upper\n";
            for (std::uint64_t v = a; v <= b; ++v) {
                const ExBracket br = ex_bracket(v, f, constants);
                os << v << ',' << br.lower << ',' << opt(br.exact) << ',' << br.upper << '\n';
            }
        } else if (!nh.empty()) {
            os << "k,n_lo,n_hi\n";
            for (double k : nh) {
                const NhBracket b = n_h_bracket(k, f, constants);
                os << format_double(k) << ',' << b.lo << ',' << opt(b.hi) << '\n';
            }
        } else if (!path.empty()) {
            const LengthBudget b = path_len_budget(path[0], path[1], f, constants);
            os << "k,eps,l_lo,l_hi\n"
               << format_double(path[0]) << ',' << format_double(path[1]) << ',' << b.lo << ',' << opt(b.hi) << '\n';
        } else if (!cycle.empty()) {
            const LengthBudget b = cycle_len_budget(cycle[0], cycle[1], f, constants);
            os << "k,c,l_lo,l_hi\n"
               << format_double(cycle[0]) << ',' << format_double(cycle[1]) << ',' << b.lo << ',' << opt(b.hi) << '\n';
        } else if (c0) {
            os << "c0\n" << format_double(solve_c0()) << '\n';
        } else {
            throw UsageError("extremal needs one of --n, --nh, --path, --cycle, --c0");
        }
        write_to(out, [&](std::ostream& o) { o << os.str(); });
    }
};

// ---- prob ----------------------------------------------------------------

json estimate_json(const Estimate& e) {
    return {{"trials", e.trials},
            {"successes", e.successes},
            {"estimate", e.point},
            {"wilson_lower", e.lower},
            {"wilson_upper", e.upper}};
}

struct ProbCmd {
    GraphSource source;
    std::string kind;
    std::vector<std::size_t> lengths;
    Vertex vertex = 0;
    std::string p;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::size_t threads = 0;
    std::string out;

    void attach(CLI::App& app) {
        auto* cmd = app.add_subcommand("prob", "Monte Carlo estimates over independent samples (JSON report)");
        source.attach(cmd);
        cmd->add_option("--kind", kind, "path | cycle | component | excess")
            ->required()
            ->check(CLI::IsMember({"path", "cycle", "component", "excess"}));
        cmd->add_option("--len", lengths, "target length (path/cycle) or component size; repeatable");
        cmd->add_option("--vertex", vertex, "vertex whose component is measured (component)");
        cmd->add_option("--p", p, "edge probability, or auto(c)")->required();
        cmd->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", seed, "master seed");
        cmd->add_option("--threads", threads, "worker threads (0: PERCOLAB_THREADS or all cores)");
        cmd->add_option("-o,--out", out, "output JSON file (default stdout)");
        cmd->callback([this] { run(); });
    }

    void run() const {
        const auto base = source.load();
        const Graph& g = base.graph;
        const double prob = parse_probability(p, g);
        const HarnessConfig cfg{threads};
        json results = json::array();
        if (kind == "excess") {
            if (trials < 2)
                throw UsageError("excess needs at least 2 trials");
            const ExcessStats st = excess_stats(g, prob, trials, seed, cfg);
            json devs = json::array();
            for (const DeviationCheck& d : st.deviations)
                devs.push_back({{"beta", d.beta}, {"threshold", d.threshold}, {"fraction", d.fraction}, {"bound", d.bound}});
            results.push_back({{"kind", "excess"},
                               {"p", prob},
                               {"trials", st.trials},
                               {"mean", st.mean},
                               {"stddev", st.stddev},
                               {"min", st.min},
                               {"q25", st.q25},
                               {"median", st.median},
                               {"q75", st.q75},
                               {"max", st.max},
                               {"deviations", devs}});
        } else {
            if (lengths.empty())
                throw UsageError("--len is required for kind " + kind);
            for (std::size_t len : lengths) {
                json r;
                if (kind == "component") {
                    r = estimate_json(component_prob(g, prob, vertex, len, trials, seed, cfg));
                    r["vertex"] = vertex;
                    r["size"] = len;
                } else {
                    const StructureKind sk = kind == "path" ? StructureKind::Path : StructureKind::Cycle;
                    r = estimate_json(structure_prob(g, prob, {sk, len}, trials, seed, cfg));
                    r["length"] = len;
                }
                r["kind"] = kind;
                r["p"] = prob;
                results.push_back(r);
            }
        }
        const json report{{"spec", base.spec},
                          {"graph", graph_summary(g)},
                          {"results", results},
                          {"seed", seed},
                          {"version", kVersion}};
        write_to(out, [&](std::ostream& os) { os << report.dump(2) << '\n'; });
    }
};

// ---- sweep ---------------------------------------------------------------

struct SweepCmd {
    GraphSource source;
    std::string grid;
    std::size_t lstar = 10;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::size_t threads = 0;
    std::string out;

    void attach(CLI::App& app) {
        auto* cmd = app.add_subcommand("sweep", "coupled p-sweep with shared trial seeds (CSV)");
        source.attach(cmd);
        cmd->add_option("--p", grid, "grid a:b:count (endpoints may be auto(c)) or a single p")->required();
        cmd->add_option("--lstar", lstar, "cycle length threshold for frac_cycle_ge_lstar");
        cmd->add_option("--trials", trials, "trials per grid point")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", seed, "master seed");
        cmd->add_option("--threads", threads, "worker threads (0: PERCOLAB_THREADS or all cores)");
        cmd->add_option("-o,--out", out, "output CSV file (default stdout)");
        cmd->callback([this] { run(); });
    }

    void run() const {
        const auto base = source.load();
        const std::vector<double> ps = parse_grid(grid, base.graph);
        const SweepResult res = sweep(base.graph, ps, lstar, trials, seed, HarnessConfig{threads});
        write_to(out, [&](std::ostream& os) {
            os << "p,trials,mean_cycle,max_cycle,frac_cycle_ge_lstar,mean_path,mean_excess,mean_largest_comp_frac\n";
            for (const SweepRow& r : res.rows)
                os << format_double(r.p) << ',' << r.trials << ',' << format_double(r.mean_cycle) << ','
                   << r.max_cycle << ',' << format_double(r.frac_cycle_ge_lstar) << ','
                   << format_double(r.mean_path) << ',' << format_double(r.mean_excess) << ','
                   << format_double(r.mean_largest_comp_frac) << '\n';
        });
    }
};

// ---- verify --------------------------------------------------------------

struct VerifyCmd {
    bool quick = false;
    std::uint64_t seed = 20240601;
    int failures = 0;

    void attach(CLI::App& app) {
        auto* cmd = app.add_subcommand("verify", "run the built-in property suite");
        cmd->add_flag("--quick", quick, "smaller sample counts");
        cmd->add_option("--seed", seed, "seed for the randomized properties");
        cmd->callback([this] { failures = cli::run_verify(quick, seed, std::cout); });
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"percolab: DFS exploration of random subgraphs and desk-scale percolation experiments"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    GenCmd gen;
    PercolateCmd percolate;
    DfsCmd dfs;
    ExtremalCmd extremal;
    ProbCmd prob;
    SweepCmd sweep_cmd;
    VerifyCmd verify;
    gen.attach(app);
    percolate.attach(app);
    dfs.attach(app);
    extremal.attach(app);
    prob.attach(app);
    sweep_cmd.attach(app);
    verify.attach(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return verify.failures ? kFailure : 0;
}
