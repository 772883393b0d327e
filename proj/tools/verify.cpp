#include "verify.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "percolab/containment.hpp"
#include "percolab/dfs.hpp"
#include "percolab/extremal.hpp"
#include "percolab/generators.hpp"
#include "percolab/percolation.hpp"
#include "percolab/rng.hpp"

namespace percolab::cli {

namespace {

// Collects the first failure message of a property.
class Property {
public:
    void expect(bool ok, const std::function<std::string()>& message) {
        ++checks_;
        if (!ok && failure_.empty())
            failure_ = message();
    }
    bool failed() const { return !failure_.empty(); }
    const std::string& failure() const { return failure_; }
    std::size_t checks() const { return checks_; }

private:
    std::size_t checks_ = 0;
    std::string failure_;
};

Graph random_graph(std::size_t n, double density, CounterRng& rng) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.uniform() < density)
                edges.push_back({u, v});
    return Graph::build(n, edges);
}

EdgeMask random_mask(std::size_t m, double density, CounterRng& rng) {
    EdgeMask mask(m);
    for (EdgeId e = 0; e < m; ++e)
        if (rng.uniform() < density)
            mask.set(e);
    return mask;
}

std::string where(std::size_t n, std::size_t it) {
    return "n=" + std::to_string(n) + " run " + std::to_string(it);
}

void dfs_properties(Property& prop, std::size_t runs, CounterRng& rng) {
    for (std::size_t it = 0; it < runs; ++it) {
        const std::size_t n = 1 + rng.below(50);
        const Graph g = random_graph(n, 0.05 + 0.5 * rng.uniform(), rng);
        const double ps[3] = {0.1, 1.0 / std::sqrt(static_cast<double>(n)), 0.9};
        const double p = ps[it % 3];
        const SubgraphSample s = sample(g, p, rng());
        const DfsRun r = run(g, s);
        const auto violations = check_properties(r);
        prop.expect(violations.empty(), [&] { return where(n, it) + ": " + violations.front(); });
        const MaskComponents mc = mask_components(g, s.kept());
        prop.expect(r.rounds.size() == 2 * n, [&] { return where(n, it) + ": phase-1 rounds != 2n"; });
        prop.expect(r.phase1_positive == n - mc.count, [&] { return where(n, it) + ": tree edges != n - r"; });
        prop.expect(r.phase2_positive == mc.excess(n), [&] { return where(n, it) + ": back edges != excess"; });
        const auto cyc = longest_cycle_certificate(r);
        prop.expect(cyc.has_value() == (mc.excess(n) >= 1), [&] { return where(n, it) + ": cycle certificate"; });
    }
}

void bijection(Property& prop, std::size_t runs, CounterRng& rng) {
    const Graph k4 = complete(4);
    for (std::uint32_t bits = 0; bits < 64; ++bits) {
        EdgeMask m(6);
        for (EdgeId e = 0; e < 6; ++e)
            if (bits >> e & 1)
                m.set(e);
        const BitTrace t = encode(k4, m);
        prop.expect(decode(k4, t) == m && t.ones() == m.count(),
                    [&] { return "K4 subgraph " + std::to_string(bits) + " does not round-trip"; });
    }
    for (std::size_t it = 0; it < runs; ++it) {
        const Graph g = random_graph(8, 0.5, rng);
        const EdgeMask m = random_mask(g.size(), 0.5, rng);
        const BitTrace t = encode(g, m);
        prop.expect(decode(g, t) == m && t.ones() == m.count(), [&] { return where(8, it) + ": no round-trip"; });
    }
}

void excess_monotone(Property& prop, std::size_t runs, CounterRng& rng) {
    for (std::size_t it = 0; it < runs; ++it) {
        const std::size_t n = 2 + rng.below(30);
        const Graph g = random_graph(n, 0.3, rng);
        if (g.size() == 0)
            continue;
        EdgeMask m = random_mask(g.size(), 0.5, rng);
        const std::size_t before = mask_components(g, m).excess(n);
        m.set(static_cast<EdgeId>(rng.below(g.size())));
        const std::size_t after = mask_components(g, m).excess(n);
        prop.expect(after == before || after == before + 1, [&] { return where(n, it) + ": excess jumped"; });
    }
}

void coupling(Property& prop, std::size_t runs, CounterRng& rng) {
    const Graph g = complete(40);
    for (std::size_t it = 0; it < runs; ++it) {
        const std::uint64_t seed = rng();
        const double p = rng.uniform(), q = p + (1 - p) * rng.uniform();
        prop.expect(sample(g, p, seed).kept().is_subset_of(sample(g, q, seed).kept()),
                    [&] { return "coupling broken at run " + std::to_string(it); });
    }
}

void girth_vs_containment(Property& prop, std::size_t runs, CounterRng& rng) {
    for (std::size_t it = 0; it < runs; ++it) {
        const std::size_t n = 3 + rng.below(8);
        const Graph g = random_graph(n, 0.35, rng);
        const std::size_t bound = 3 + rng.below(4);
        const auto patterns = TuranFamily::girth_greater(bound).as_patterns();
        prop.expect(is_h_free(g, patterns).free == girth(g).exceeds(bound),
                    [&] { return where(n, it) + ": girth disagrees with cycle containment"; });
    }
}

void generators(Property& prop, bool quick, CounterRng& rng) {
    const std::vector<std::uint64_t> primes = quick ? std::vector<std::uint64_t>{2, 3, 5}
                                                    : std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13};
    for (std::uint64_t q : primes) {
        const Graph g = pp_incidence(q);
        const auto d = degree_stats(g);
        prop.expect(d.min == q + 1 && d.max == q + 1 && is_bipartite(g) && girth(g).length == 6u &&
                        g.order() == 2 * (q * q + q + 1),
                    [&] { return "incidence graph invariants fail at q=" + std::to_string(q); });
    }
    for (int it = 0; it < (quick ? 3 : 10); ++it) {
        const std::size_t n = 10 + 2 * rng.below(40), k = 1 + rng.below(8);
        const Graph g = random_regular(n, k, rng());
        const auto d = degree_stats(g);
        prop.expect(d.min == k && d.max == k, [&] { return "random_regular not regular at n=" + std::to_string(n); });
    }
}

void extremal(Property& prop, bool quick) {
    const std::size_t top = quick ? 6 : 7;
    for (std::size_t n = 1; n <= top; ++n)
        prop.expect(ex_bruteforce(n, TuranFamily::girth_greater(3)) == n * n / 4,
                    [&] { return "Mantel value wrong at n=" + std::to_string(n); });
    const double c = solve_c0();
    prop.expect(std::fabs(c / 2 - 1 + std::exp(-c)) <= 1e-9, [] { return "c0 residual too large"; });
}

}  // namespace

int run_verify(bool quick, std::uint64_t seed, std::ostream& out) {
    CounterRng rng(seed);
    const std::size_t scale = quick ? 1 : 10;
    struct Entry {
        const char* name;
        std::function<void(Property&)> body;
    };
    const std::vector<Entry> suite{
        {"dfs-structure", [&](Property& p) { dfs_properties(p, 100 * scale, rng); }},
        {"trace-bijection", [&](Property& p) { bijection(p, 50 * scale, rng); }},
        {"excess-lipschitz", [&](Property& p) { excess_monotone(p, 100 * scale, rng); }},
        {"sample-coupling", [&](Property& p) { coupling(p, 50 * scale, rng); }},
        {"girth-containment", [&](Property& p) { girth_vs_containment(p, 50 * scale, rng); }},
        {"generators", [&](Property& p) { generators(p, quick, rng); }},
        {"extremal", [&](Property& p) { extremal(p, quick); }},
    };
    int failed = 0;
    for (const Entry& e : suite) {
        Property prop;
        try {
            e.body(prop);
        } catch (const std::exception& ex) {
            prop.expect(false, [&] { return std::string("exception: ") + ex.what(); });
        }
        if (prop.failed()) {
            ++failed;
            out << "FAIL " << e.name << ": " << prop.failure() << '\n';
        } else {
            out << "ok   " << e.name << " (" << prop.checks() << " checks)\n";
        }
    }
    out << (failed ? "verification failed\n" : "all properties hold\n");
    return failed;
}

}  // namespace percolab::cli
