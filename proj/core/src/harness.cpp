#include "percolab/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

#include "percolab/dfs.hpp"
#include "percolab/percolation.hpp"
#include "percolab/rng.hpp"

namespace percolab {

Estimate wilson_estimate(std::uint64_t successes, std::uint64_t trials, std::uint64_t seed) {
    if (trials == 0)
        throw std::invalid_argument("estimate needs at least one trial");
    if (successes > trials)
        throw std::invalid_argument("more successes than trials");
    constexpr double z = 1.959963984540054;
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double denom = 1.0 + z * z / n;
    const double centre = (phat + z * z / (2.0 * n)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n)) / denom;
    Estimate e;
    e.trials = trials;
    e.successes = successes;
    e.point = phat;
    e.lower = std::clamp(centre - half, 0.0, phat);
    e.upper = std::clamp(centre + half, phat, 1.0);
    e.seed = seed;
    return e;
}

std::size_t worker_count(const HarnessConfig& config) {
    std::size_t want = config.threads;
    if (want == 0) {
        want = std::max(1u, std::thread::hardware_concurrency());
        if (const char* env = std::getenv("PERCOLAB_THREADS")) {
            char* end = nullptr;
            const unsigned long cap = std::strtoul(env, &end, 10);
            if (end != env && cap > 0)
                want = std::min<std::size_t>(want, cap);
        }
    }
    return std::max<std::size_t>(1, want);
}

void for_each_trial(std::size_t trials, const HarnessConfig& config, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min(worker_count(config), std::max<std::size_t>(1, trials));
    if (workers <= 1) {
        for (std::size_t t = 0; t < trials; ++t)
            body(t);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t t = w; t < trials; t += workers)
                    body(t);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool)
        th.join();
    for (auto& err : errors)
        if (err)
            std::rethrow_exception(err);
}

TrialMetrics trial_metrics(const Graph& g, double p, std::uint64_t seed) {
    const SubgraphSample s = sample(g, p, seed);
    const DfsRun r = run(g, s, DfsOptions{.record_log = false});
    TrialMetrics m;
    m.path_length = r.max_u == 0 ? 0 : r.max_u - 1;
    if (auto cert = longest_cycle_certificate(r))
        m.cycle_length = cert->length();
    m.excess = r.phase2_positive;
    m.largest_component = r.largest_tree();
    m.kept_edges = s.kept_count();
    return m;
}

namespace {

void check_trials(std::size_t trials, std::size_t minimum) {
    if (trials < minimum)
        throw std::invalid_argument("need at least " + std::to_string(minimum) + " trials");
}

}  // namespace

Estimate structure_prob(const Graph& g, double p, StructureTarget target, std::size_t trials, std::uint64_t seed,
                        HarnessConfig config) {
    check_trials(trials, 1);
    if (target.length < 1)
        throw std::invalid_argument("structure_prob: target length must be at least 1");
    std::vector<std::uint8_t> hit(trials, 0);
    for_each_trial(trials, config, [&](std::size_t t) {
        const TrialMetrics m = trial_metrics(g, p, trial_seed(seed, t));
        const std::size_t got = target.kind == StructureKind::Path ? m.path_length : m.cycle_length;
        hit[t] = got >= target.length;
    });
    const auto successes = static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), std::uint8_t{1}));
    return wilson_estimate(successes, trials, seed);
}

Estimate component_prob(const Graph& g, double p, Vertex v, std::size_t size, std::size_t trials,
                        std::uint64_t seed, HarnessConfig config) {
    check_trials(trials, 1);
    if (v >= g.order())
        throw std::invalid_argument("component_prob: vertex " + std::to_string(v) + " out of range");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("component_prob: p must lie in [0, 1]");
    std::vector<std::uint8_t> hit(trials, 0);
    for_each_trial(trials, config, [&](std::size_t t) {
        const std::uint64_t s = trial_seed(seed, t);
        // Search outward from v, flipping each edge's coin on demand; the coin
        // for an edge is the same one sample() would use.
        std::vector<std::uint8_t> seen(g.order(), 0);
        std::vector<Vertex> stack{v};
        seen[v] = 1;
        std::size_t reached = 1;
        while (!stack.empty() && reached < size) {
            const Vertex x = stack.back();
            stack.pop_back();
            const auto nb = g.neighbors(x);
            const auto ids = g.incident_edges(x);
            for (std::size_t i = 0; i < nb.size(); ++i) {
                if (seen[nb[i]] || !edge_kept(s, ids[i], p))
                    continue;
                seen[nb[i]] = 1;
                ++reached;
                stack.push_back(nb[i]);
            }
        }
        hit[t] = reached >= size;
    });
    const auto successes = static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), std::uint8_t{1}));
    return wilson_estimate(successes, trials, seed);
}

double quantile_sorted(const std::vector<double>& sorted, double q) {
    if (sorted.empty())
        return 0.0;
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

ExcessStats excess_stats(const Graph& g, double p, std::size_t trials, std::uint64_t seed, HarnessConfig config) {
    check_trials(trials, 2);
    std::vector<double> values(trials, 0.0);
    for_each_trial(trials, config, [&](std::size_t t) {
        const SubgraphSample s = sample(g, p, trial_seed(seed, t));
        values[t] = static_cast<double>(mask_components(g, s.kept()).excess(g.order()));
    });

    ExcessStats st;
    st.trials = trials;
    st.seed = seed;
    double sum = 0.0;
    for (double x : values)
        sum += x;
    st.mean = sum / static_cast<double>(trials);
    double ss = 0.0;
    for (double x : values)
        ss += (x - st.mean) * (x - st.mean);
    st.stddev = std::sqrt(ss / static_cast<double>(trials - 1));

    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    st.min = sorted.front();
    st.q25 = quantile_sorted(sorted, 0.25);
    st.median = quantile_sorted(sorted, 0.5);
    st.q75 = quantile_sorted(sorted, 0.75);
    st.max = sorted.back();

    const double pe = p * static_cast<double>(g.size());
    for (double beta : {0.05, 0.1, 0.2}) {
        DeviationCheck d;
        d.beta = beta;
        d.threshold = beta * pe;
        std::size_t count = 0;
        for (double x : values)
            count += std::fabs(x - st.mean) >= d.threshold;
        d.fraction = static_cast<double>(count) / static_cast<double>(trials);
        d.bound = 2.0 * std::exp(-beta * beta * pe / 3.0);
        st.deviations.push_back(d);
    }
    return st;
}

SweepResult sweep(const Graph& g, const std::vector<double>& p_grid, std::size_t lstar, std::size_t trials,
                  std::uint64_t seed, HarnessConfig config) {
    check_trials(trials, 1);
    if (p_grid.empty())
        throw std::invalid_argument("sweep: probability grid is empty");
    if (!std::is_sorted(p_grid.begin(), p_grid.end()))
        throw std::invalid_argument("sweep: probability grid must be ascending");

    SweepResult out;
    out.per_trial.assign(p_grid.size(), std::vector<TrialMetrics>(trials));
    for_each_trial(trials, config, [&](std::size_t t) {
        const std::uint64_t s = trial_seed(seed, t);
        for (std::size_t i = 0; i < p_grid.size(); ++i)
            out.per_trial[i][t] = trial_metrics(g, p_grid[i], s);
    });

    const double n = static_cast<double>(std::max<std::size_t>(1, g.order()));
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
        SweepRow row;
        row.p = p_grid[i];
        row.trials = trials;
        double cyc = 0, path = 0, exc = 0, comp = 0;
        std::size_t reach = 0;
        for (const TrialMetrics& m : out.per_trial[i]) {
            cyc += static_cast<double>(m.cycle_length);
            path += static_cast<double>(m.path_length);
            exc += static_cast<double>(m.excess);
            comp += static_cast<double>(m.largest_component) / n;
            row.max_cycle = std::max(row.max_cycle, m.cycle_length);
            row.max_path = std::max(row.max_path, m.path_length);
            reach += m.cycle_length >= lstar;
        }
        const double tr = static_cast<double>(trials);
        row.mean_cycle = cyc / tr;
        row.mean_path = path / tr;
        row.mean_excess = exc / tr;
        row.mean_largest_comp_frac = comp / tr;
        row.frac_cycle_ge_lstar = static_cast<double>(reach) / tr;
        out.rows.push_back(row);
    }
    return out;
}

}  // namespace percolab
