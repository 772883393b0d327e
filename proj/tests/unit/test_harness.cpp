#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "percolab/dfs.hpp"
#include "percolab/generators.hpp"
#include "percolab/harness.hpp"
#include "percolab/rng.hpp"

using namespace percolab;

TEST_CASE("Wilson intervals") {
    const Estimate half = wilson_estimate(50, 100, 1);
    CHECK(half.point == 0.5);
    CHECK(half.lower == doctest::Approx(0.4038).epsilon(1e-3));
    CHECK(half.upper == doctest::Approx(0.5962).epsilon(1e-3));
    for (std::uint64_t trials : {1, 2, 10, 1000})
        for (std::uint64_t s = 0; s <= trials; s += std::max<std::uint64_t>(1, trials / 7)) {
            const Estimate e = wilson_estimate(s, trials, 0);
            CHECK(0.0 <= e.lower);
            CHECK(e.lower <= e.point);
            CHECK(e.point <= e.upper);
            CHECK(e.upper <= 1.0);
        }
    CHECK(wilson_estimate(0, 10, 0).lower == 0.0);
    CHECK(wilson_estimate(10, 10, 0).upper == 1.0);
    CHECK_THROWS_AS(wilson_estimate(0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(wilson_estimate(3, 2, 0), std::invalid_argument);
}

TEST_CASE("structure_prob endpoints") {
    const Graph c = cycle_graph(12);
    const Estimate full = structure_prob(c, 1.0, {StructureKind::Cycle, 12}, 20, 1);
    CHECK(full.point == 1.0);
    CHECK(full.successes == 20);
    CHECK(structure_prob(c, 0.0, {StructureKind::Path, 1}, 20, 1).point == 0.0);
    CHECK(structure_prob(c, 0.0, {StructureKind::Cycle, 3}, 20, 1).point == 0.0);
    CHECK(structure_prob(c, 1.0, {StructureKind::Path, 11}, 5, 1).point == 1.0);
    CHECK_THROWS_AS(structure_prob(c, 0.5, {StructureKind::Path, 0}, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(structure_prob(c, 0.5, {StructureKind::Path, 1}, 0, 1), std::invalid_argument);
}

TEST_CASE("component_prob") {
    const Graph g = disjoint_copies(complete(6), 2);
    CHECK(component_prob(g, 1.0, 0, 6, 10, 3).point == 1.0);
    CHECK(component_prob(g, 1.0, 0, 7, 10, 3).point == 0.0);
    CHECK(component_prob(g, 0.0, 0, 2, 10, 3).point == 0.0);
    CHECK(component_prob(g, 0.0, 0, 1, 10, 3).point == 1.0);
    CHECK_THROWS_AS(component_prob(g, 0.5, 12, 2, 10, 3), std::invalid_argument);

    // Agrees trial-by-trial with components of the sampled graph.
    const Graph k = complete(30);
    for (std::size_t s : {2, 5, 15}) {
        std::uint64_t hits = 0;
        for (std::size_t t = 0; t < 200; ++t) {
            const Graph h = sample(k, 0.06, trial_seed(9, t)).materialize();
            const auto parts = components(h);
            hits += parts.sizes[parts.component_of[4]] >= s;
        }
        CHECK(component_prob(k, 0.06, 4, s, 200, 9).successes == hits);
    }
}

TEST_CASE("excess_stats") {
    const ExcessStats k4 = excess_stats(complete(4), 1.0, 10, 1);
    CHECK(k4.mean == 3.0);
    CHECK(k4.stddev == 0.0);
    CHECK(k4.min == 3.0);
    CHECK(k4.max == 3.0);
    const ExcessStats none = excess_stats(complete(20), 0.0, 10, 1);
    CHECK(none.mean == 0.0);
    CHECK(none.max == 0.0);
    CHECK_THROWS_AS(excess_stats(complete(4), 0.5, 1, 1), std::invalid_argument);

    const ExcessStats st = excess_stats(complete(60), 0.1, 200, 4);
    REQUIRE(st.deviations.size() == 3);
    CHECK(st.deviations[0].beta == 0.05);
    CHECK(st.deviations[1].bound == doctest::Approx(2 * std::exp(-0.01 * 0.1 * 1770 / 3)));
    CHECK(st.min <= st.q25);
    CHECK(st.q25 <= st.median);
    CHECK(st.median <= st.q75);
    CHECK(st.q75 <= st.max);
}

TEST_CASE("quantiles") {
    CHECK(quantile_sorted({1, 2, 3, 4}, 0.5) == 2.5);
    CHECK(quantile_sorted({1, 2, 3, 4}, 0.0) == 1.0);
    CHECK(quantile_sorted({1, 2, 3, 4}, 1.0) == 4.0);
    CHECK(quantile_sorted({7}, 0.25) == 7.0);
}

TEST_CASE("trial metrics against a direct run") {
    const Graph g = random_regular(80, 4, 2);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const TrialMetrics m = trial_metrics(g, 0.4, seed);
        const SubgraphSample s = sample(g, 0.4, seed);
        const DfsRun r = run(g, s);
        CHECK(m.path_length == r.max_u - 1);
        CHECK(m.excess == excess(s.materialize()));
        CHECK(m.largest_component == components(s.materialize()).largest());
        const auto cyc = longest_cycle_certificate(r);
        CHECK(m.cycle_length == (cyc ? cyc->length() : 0));
        if (m.cycle_length > 0)
            CHECK(m.excess >= 1);
    }
}

TEST_CASE("sweep rows and coupled monotonicity") {
    const Graph g = complete(60);
    const SweepResult zero = sweep(g, {0.0}, 3, 10, 1);
    REQUIRE(zero.rows.size() == 1);
    CHECK(zero.rows[0].mean_cycle == 0.0);
    CHECK(zero.rows[0].mean_path == 0.0);
    CHECK(zero.rows[0].mean_excess == 0.0);
    CHECK(zero.rows[0].max_cycle == 0);

    const SweepResult one = sweep(g, {1.0}, 3, 3, 1);
    const DfsRun full = run(g, EdgeMask(g.size(), true));
    CHECK(one.rows[0].max_path == full.max_u - 1);
    CHECK(one.rows[0].max_cycle == longest_cycle_certificate(full)->length());
    CHECK(one.rows[0].frac_cycle_ge_lstar == 1.0);

    const std::vector<double> grid{0.005, 0.01, 0.02, 0.03, 0.05};
    const SweepResult sw = sweep(g, grid, 5, 100, 42);
    REQUIRE(sw.rows.size() == grid.size());
    for (std::size_t i = 1; i < grid.size(); ++i)
        for (std::size_t t = 0; t < 100; ++t) {
            CHECK(sw.per_trial[i][t].excess >= sw.per_trial[i - 1][t].excess);
            CHECK(sw.per_trial[i][t].largest_component >= sw.per_trial[i - 1][t].largest_component);
            CHECK(sw.per_trial[i][t].kept_edges >= sw.per_trial[i - 1][t].kept_edges);
        }
    CHECK_THROWS_AS(sweep(g, {}, 3, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(sweep(g, {0.2, 0.1}, 3, 10, 1), std::invalid_argument);
}

TEST_CASE("results do not depend on the worker count") {
    const Graph g = random_regular(200, 6, 5);
    const Estimate a = structure_prob(g, 0.3, {StructureKind::Cycle, 8}, 64, 11, HarnessConfig{1});
    const Estimate b = structure_prob(g, 0.3, {StructureKind::Cycle, 8}, 64, 11, HarnessConfig{4});
    CHECK(a.successes == b.successes);
    const ExcessStats x = excess_stats(g, 0.3, 64, 11, HarnessConfig{1});
    const ExcessStats y = excess_stats(g, 0.3, 64, 11, HarnessConfig{3});
    CHECK(x.mean == y.mean);
    CHECK(x.stddev == y.stddev);
    const SweepResult s1 = sweep(g, {0.1, 0.3}, 6, 40, 2, HarnessConfig{1});
    const SweepResult s2 = sweep(g, {0.1, 0.3}, 6, 40, 2, HarnessConfig{5});
    CHECK(s1.rows[1].mean_cycle == s2.rows[1].mean_cycle);
    CHECK(s1.rows[0].mean_largest_comp_frac == s2.rows[0].mean_largest_comp_frac);

    CHECK(worker_count(HarnessConfig{3}) == 3);
    setenv("PERCOLAB_THREADS", "1", 1);
    CHECK(worker_count(HarnessConfig{}) == 1);
    unsetenv("PERCOLAB_THREADS");
}

TEST_CASE("coupled sweep across the critical point of K_1001") {
    const Graph g = complete(1001);
    const double k = 1000;
    const SweepResult sw = sweep(g, {0.5 / k, 1.5 / k}, 10, 100, 17);
    std::vector<double> low, high;
    std::size_t shorter = 0;
    for (std::size_t t = 0; t < 100; ++t) {
        shorter += sw.per_trial[1][t].cycle_length < sw.per_trial[0][t].cycle_length;
        low.push_back(static_cast<double>(sw.per_trial[0][t].cycle_length));
        high.push_back(static_cast<double>(sw.per_trial[1][t].cycle_length));
    }
    std::sort(low.begin(), low.end());
    std::sort(high.begin(), high.end());
    CHECK(shorter == 0);
    CHECK(quantile_sorted(high, 0.5) >= 5 * quantile_sorted(low, 0.5));
    CHECK(quantile_sorted(high, 0.5) > 0);
}
