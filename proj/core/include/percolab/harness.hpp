#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "percolab/graph.hpp"

namespace percolab {

/// Binomial proportion estimate with a 95% Wilson score interval.
struct Estimate {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double point = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    std::uint64_t seed = 0;
};

Estimate wilson_estimate(std::uint64_t successes, std::uint64_t trials, std::uint64_t seed);

/// Everything measured on one sampled subgraph.
struct TrialMetrics {
    std::size_t path_length = 0;   // max |U| - 1 of the exploration
    std::size_t cycle_length = 0;  // certified cycle length, 0 if none
    std::size_t excess = 0;
    std::size_t largest_component = 0;
    std::size_t kept_edges = 0;
};

/// Samples G_p with `trial_seed` and runs the exploration on it.
TrialMetrics trial_metrics(const Graph& g, double p, std::uint64_t trial_seed);

struct HarnessConfig {
    // Worker threads; 0 means PERCOLAB_THREADS if set, else hardware concurrency.
    std::size_t threads = 0;
};

std::size_t worker_count(const HarnessConfig& config);

/// Calls body(t) for t in [0, trials) on the configured workers. Results must
/// be written to per-trial slots; aggregation belongs to the caller.
void for_each_trial(std::size_t trials, const HarnessConfig& config, const std::function<void(std::size_t)>& body);

enum class StructureKind { Path, Cycle };

struct StructureTarget {
    StructureKind kind = StructureKind::Path;
    std::size_t length = 1;
};

/// Fraction of trials whose certified path (max_U - 1) or cycle reaches the
/// target length. Trial t uses seed trial_seed(seed, t).
Estimate structure_prob(const Graph& g, double p, StructureTarget target, std::size_t trials, std::uint64_t seed,
                        HarnessConfig config = {});

/// Fraction of trials in which the component of `v` has at least `size` vertices.
Estimate component_prob(const Graph& g, double p, Vertex v, std::size_t size, std::size_t trials,
                        std::uint64_t seed, HarnessConfig config = {});

struct DeviationCheck {
    double beta = 0.0;
    double threshold = 0.0;  // beta * p * e(G)
    double fraction = 0.0;   // of trials with |exc - mean| >= threshold
    double bound = 0.0;      // 2 exp(-beta^2 p e(G) / 3)
};

struct ExcessStats {
    std::size_t trials = 0;
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation
    double min = 0.0, q25 = 0.0, median = 0.0, q75 = 0.0, max = 0.0;
    std::vector<DeviationCheck> deviations;  // beta = 0.05, 0.1, 0.2
    std::uint64_t seed = 0;
};

/// Distribution of exc(G_p) over trials, with empirical deviation fractions
/// set against the edge-Lipschitz concentration bound.
ExcessStats excess_stats(const Graph& g, double p, std::size_t trials, std::uint64_t seed, HarnessConfig config = {});

struct SweepRow {
    double p = 0.0;
    std::size_t trials = 0;
    double mean_cycle = 0.0;
    std::size_t max_cycle = 0;
    double frac_cycle_ge_lstar = 0.0;
    double mean_path = 0.0;
    std::size_t max_path = 0;
    double mean_excess = 0.0;
    double mean_largest_comp_frac = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    // per_trial[i][t]: grid point i, trial t; every grid point uses the same trial seeds.
    std::vector<std::vector<TrialMetrics>> per_trial;
};

SweepResult sweep(const Graph& g, const std::vector<double>& p_grid, std::size_t lstar, std::size_t trials,
                  std::uint64_t seed, HarnessConfig config = {});

/// Linear-interpolation quantile of sorted data, q in [0, 1].
double quantile_sorted(const std::vector<double>& sorted, double q);

}  // namespace percolab
