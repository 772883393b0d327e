#pragma once

// Slow, obviously-correct reference computations used to check the library.
// Deliberately independent of the library's own algorithms and RNG.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "percolab/graph.hpp"
#include "percolab/percolation.hpp"

namespace oracle {

using percolab::Edge;
using percolab::EdgeMask;
using percolab::Graph;
using percolab::Vertex;

inline Graph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(density);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.push_back({u, v});
    return Graph::build(n, edges);
}

inline EdgeMask random_mask(std::size_t m, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(density);
    EdgeMask mask(m);
    for (percolab::EdgeId e = 0; e < m; ++e)
        if (coin(rng))
            mask.set(e);
    return mask;
}

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
    std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
    for (const Edge& e : g.edges())
        a[e.u][e.v] = a[e.v][e.u] = true;
    return a;
}

// Lengths of all cycles in g (index = length), by subset DP over paths that
// start at the smallest vertex of their vertex set. n <= 16.
inline std::vector<bool> cycle_lengths(const Graph& g) {
    const std::size_t n = g.order();
    const auto adj = adjacency(g);
    std::vector<bool> found(n + 1, false);
    for (std::size_t s = 0; s < n; ++s) {
        // reach[mask][v]: simple path from s to v with vertex set mask (all >= s).
        std::vector<std::vector<bool>> reach(std::size_t{1} << n, std::vector<bool>(n, false));
        reach[std::size_t{1} << s][s] = true;
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            if (!(mask >> s & 1) || (mask & ((std::size_t{1} << s) - 1)))
                continue;
            for (std::size_t v = 0; v < n; ++v) {
                if (!reach[mask][v])
                    continue;
                const auto len = static_cast<std::size_t>(__builtin_popcountll(mask));
                if (len >= 3 && adj[v][s])
                    found[len] = true;
                for (std::size_t w = s + 1; w < n; ++w)
                    if (adj[v][w] && !(mask >> w & 1))
                        reach[mask | (std::size_t{1} << w)][w] = true;
            }
        }
    }
    return found;
}

inline std::size_t circumference(const Graph& g) {
    const auto found = cycle_lengths(g);
    for (std::size_t len = found.size(); len-- > 0;)
        if (found[len])
            return len;
    return 0;
}

inline std::size_t shortest_cycle(const Graph& g) {
    const auto found = cycle_lengths(g);
    for (std::size_t len = 0; len < found.size(); ++len)
        if (found[len])
            return len;
    return 0;
}

// Longest simple path, counted in edges. n <= 16.
inline std::size_t longest_path(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0)
        return 0;
    const auto adj = adjacency(g);
    std::vector<std::vector<bool>> reach(std::size_t{1} << n, std::vector<bool>(n, false));
    for (std::size_t v = 0; v < n; ++v)
        reach[std::size_t{1} << v][v] = true;
    std::size_t best = 0;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        for (std::size_t v = 0; v < n; ++v) {
            if (!reach[mask][v])
                continue;
            best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)) - 1);
            for (std::size_t w = 0; w < n; ++w)
                if (adj[v][w] && !(mask >> w & 1))
                    reach[mask | (std::size_t{1} << w)][w] = true;
        }
    }
    return best;
}

// Whether `pattern` is a (not necessarily induced) subgraph of `host`, by
// trying every injective map of pattern vertices into host vertices.
inline bool contains_subgraph(const Graph& host, const Graph& pattern) {
    const std::size_t k = pattern.order(), n = host.order();
    if (k > n)
        return false;
    const auto adj = adjacency(host);
    std::vector<Vertex> image(k);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> place = [&](std::size_t i) {
        if (i == k) {
            for (const Edge& e : pattern.edges())
                if (!adj[image[e.u]][image[e.v]])
                    return false;
            return true;
        }
        for (Vertex h = 0; h < n; ++h) {
            if (used[h])
                continue;
            used[h] = true;
            image[i] = h;
            const bool ok = place(i + 1);
            used[h] = false;
            if (ok)
                return true;
        }
        return false;
    };
    return place(0);
}

// Maximum edge count of a graph on n vertices avoiding every pattern, by
// enumerating all 2^C(n,2) labeled graphs. n <= 6.
inline std::uint64_t ex_enumerate(std::size_t n, const std::vector<Graph>& patterns) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.push_back({u, v});
    std::uint64_t best = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
        const auto m = static_cast<std::uint64_t>(__builtin_popcountll(bits));
        if (m <= best)
            continue;
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (bits >> i & 1)
                edges.push_back(pairs[i]);
        const Graph g = Graph::build(n, edges);
        bool free = true;
        for (const Graph& p : patterns)
            if (contains_subgraph(g, p)) {
                free = false;
                break;
            }
        if (free)
            best = m;
    }
    return best;
}

// One query of the reference exploration: (asker, asked, answer).
using RefQuery = std::tuple<Vertex, Vertex, bool>;

struct RefExploration {
    std::vector<RefQuery> phase1;
    std::vector<RefQuery> phase2;  // (ancestor, descendant, answer)
    std::size_t max_u = 0;
    std::size_t components = 0;
};

// Direct transcription of the two-phase exploration using ordered sets.
inline RefExploration reference_explore(const Graph& g, const EdgeMask& kept) {
    const std::size_t n = g.order();
    auto present = [&](Vertex a, Vertex b) { return kept.test(*g.edge_id(a, b)); };
    std::set<Vertex> T;
    for (Vertex v = 0; v < n; ++v)
        T.insert(v);
    std::vector<Vertex> U;
    std::set<std::pair<Vertex, Vertex>> asked;
    std::vector<Vertex> parent(n), depth(n, 0);
    RefExploration out;
    for (std::size_t round = 0; round < 2 * n; ++round) {
        if (U.empty()) {
            const Vertex r = *T.begin();
            T.erase(T.begin());
            U.push_back(r);
            parent[r] = r;
            ++out.components;
        } else {
            const Vertex v = U.back();
            bool pushed = false;
            for (Vertex w : std::vector<Vertex>(T.begin(), T.end())) {
                if (!g.has_edge(v, w) || asked.count({std::min(v, w), std::max(v, w)}))
                    continue;
                const bool ans = present(v, w);
                out.phase1.emplace_back(v, w, ans);
                asked.insert({std::min(v, w), std::max(v, w)});
                if (ans) {
                    T.erase(w);
                    U.push_back(w);
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    pushed = true;
                    break;
                }
            }
            if (!pushed)
                U.pop_back();
        }
        out.max_u = std::max(out.max_u, U.size());
    }
    std::vector<std::tuple<std::size_t, Vertex, Vertex, Vertex, Vertex>> rest;
    for (const Edge& e : g.edges()) {
        if (asked.count({e.u, e.v}))
            continue;
        Vertex anc = depth[e.u] < depth[e.v] ? e.u : e.v;
        Vertex des = anc == e.u ? e.v : e.u;
        rest.emplace_back(depth[des] - depth[anc], e.u, e.v, anc, des);
    }
    std::sort(rest.begin(), rest.end());
    for (const auto& [len, a, b, anc, des] : rest)
        out.phase2.emplace_back(anc, des, present(a, b));
    return out;
}

// log of C(n, k)
inline double log_choose(std::uint64_t n, std::uint64_t k) {
    return std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
           std::lgamma(static_cast<double>(n - k) + 1);
}

inline double binom_pmf(std::uint64_t n, double p, std::uint64_t k) {
    if (p <= 0.0)
        return k == 0 ? 1.0 : 0.0;
    if (p >= 1.0)
        return k == n ? 1.0 : 0.0;
    return std::exp(log_choose(n, k) + static_cast<double>(k) * std::log(p) +
                    static_cast<double>(n - k) * std::log1p(-p));
}

// P(|X - np| > a) for X ~ Bin(n, p), summed exactly.
inline double binom_two_sided_tail(std::uint64_t n, double p, double a) {
    const double mu = static_cast<double>(n) * p;
    double total = 0.0;
    for (std::uint64_t k = 0; k <= n; ++k)
        if (std::fabs(static_cast<double>(k) - mu) > a)
            total += binom_pmf(n, p, k);
    return total;
}

// P(X > t) for X ~ Bin(n, p).
inline double binom_upper_tail(std::uint64_t n, double p, double t) {
    double total = 0.0;
    for (std::uint64_t k = 0; k <= n; ++k)
        if (static_cast<double>(k) > t)
            total += binom_pmf(n, p, k);
    return total;
}

}  // namespace oracle
