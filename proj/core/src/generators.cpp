#include "percolab/generators.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <queue>
#include <vector>

#include "percolab/rng.hpp"

namespace percolab {

Graph complete(std::size_t n) {
    if (n == 0)
        throw GeneratorError("complete: n must be at least 1");
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph::build(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    if (a == 0 || b == 0)
        throw GeneratorError("complete_bipartite: both sides must be nonempty");
    std::vector<Edge> edges;
    edges.reserve(a * b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v)
            edges.push_back({u, static_cast<Vertex>(a + v)});
    return Graph::build(a + b, edges);
}

namespace {

// One pairing attempt. Returns false when it gets stuck.
bool try_pairing(std::size_t n, std::size_t k, CounterRng& rng, std::vector<std::vector<Vertex>>& adj) {
    for (auto& row : adj)
        row.clear();
    std::vector<Vertex> points;
    points.reserve(n * k);
    for (Vertex v = 0; v < n; ++v)
        for (std::size_t j = 0; j < k; ++j)
            points.push_back(v);

    auto admissible = [&](Vertex a, Vertex b) {
        if (a == b)
            return false;
        const auto& row = adj[a].size() <= adj[b].size() ? adj[a] : adj[b];
        const Vertex other = adj[a].size() <= adj[b].size() ? b : a;
        return std::find(row.begin(), row.end(), other) == row.end();
    };
    auto take = [&](std::size_t i) {
        const Vertex v = points[i];
        points[i] = points.back();
        points.pop_back();
        return v;
    };

    constexpr int kRandomTries = 64;
    while (!points.empty()) {
        bool paired = false;
        for (int attempt = 0; attempt < kRandomTries && !paired; ++attempt) {
            std::size_t i = rng.below(points.size());
            std::size_t j = rng.below(points.size() - 1);
            if (j >= i)
                ++j;
            if (admissible(points[i], points[j])) {
                if (i < j)
                    std::swap(i, j);
                const Vertex a = take(i);
                const Vertex b = take(j);
                adj[a].push_back(b);
                adj[b].push_back(a);
                paired = true;
            }
        }
        if (paired)
            continue;
        // Random draws keep failing: enumerate the admissible pairs left.
        std::vector<std::pair<std::size_t, std::size_t>> options;
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (admissible(points[i], points[j]))
                    options.emplace_back(i, j);
        if (options.empty())
            return false;
        auto [i, j] = options[rng.below(options.size())];
        const Vertex a = take(j);
        const Vertex b = take(i);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return true;
}

}  // namespace

Graph random_regular(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k >= n)
        throw GeneratorError("random_regular: degree k=" + std::to_string(k) + " must be below n=" + std::to_string(n));
    if ((n * k) % 2 != 0)
        throw GeneratorError("random_regular: n*k=" + std::to_string(n * k) + " is odd");

    CounterRng rng(seed);
    std::vector<std::vector<Vertex>> adj(n);
    const std::size_t budget = std::max<std::size_t>(1, 100 * n * k);
    for (std::size_t restart = 0; restart < budget; ++restart) {
        if (!try_pairing(n, k, rng, adj))
            continue;
        std::vector<Edge> edges;
        edges.reserve(n * k / 2);
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b : adj[a])
                if (a < b)
                    edges.push_back({a, b});
        return Graph::build(n, edges);
    }
    throw GeneratorError("random_regular: retry budget exhausted");
}

bool is_prime(std::uint64_t q) {
    if (q < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

Graph pp_incidence(std::uint64_t q) {
    if (!is_prime(q))
        throw GeneratorError("pp_incidence: q=" + std::to_string(q) + " is not prime");
    if (q > 1000)
        throw GeneratorError("pp_incidence: q too large");

    // Normalized representatives of the 1-dimensional subspaces of F_q^3:
    // (1, a, b), (0, 1, a), (0, 0, 1). Lines use the same coordinates, and
    // point x lies on line y iff x . y = 0 (mod q).
    std::vector<std::array<std::uint64_t, 3>> reps;
    for (std::uint64_t a = 0; a < q; ++a)
        for (std::uint64_t b = 0; b < q; ++b)
            reps.push_back({1, a, b});
    for (std::uint64_t a = 0; a < q; ++a)
        reps.push_back({0, 1, a});
    reps.push_back({0, 0, 1});

    const auto count = static_cast<Vertex>(reps.size());
    std::vector<Edge> edges;
    edges.reserve(reps.size() * (q + 1));
    for (Vertex p = 0; p < count; ++p) {
        for (Vertex l = 0; l < count; ++l) {
            const auto& x = reps[p];
            const auto& y = reps[l];
            if ((x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % q == 0)
                edges.push_back({p, count + l});
        }
    }
    return Graph::build(2 * reps.size(), edges);
}

Graph disjoint_copies(const Graph& g, std::size_t t) {
    if (t == 0)
        throw GeneratorError("disjoint_copies: t must be at least 1");
    const std::size_t n = g.order();
    std::vector<Edge> edges;
    edges.reserve(g.size() * t);
    for (std::size_t c = 0; c < t; ++c) {
        const auto shift = static_cast<Vertex>(c * n);
        for (const Edge& e : g.edges())
            edges.push_back({e.u + shift, e.v + shift});
    }
    return Graph::build(n * t, edges);
}

namespace {

// Mutable adjacency for swap-based rewiring.
class Rewirer {
public:
    explicit Rewirer(const Graph& g) : adj_(g.order()), dist_(g.order(), kFar) {
        for (const Edge& e : g.edges()) {
            adj_[e.u].push_back(e.v);
            adj_[e.v].push_back(e.u);
            edges_.push_back(e);
        }
    }

    bool adjacent(Vertex a, Vertex b) const {
        const auto& row = adj_[a];
        return std::find(row.begin(), row.end(), b) != row.end();
    }

    // Replaces edges i and j by {a,c} and {b,d}, where edges_[i] = {a,b}, edges_[j] = {c,d}.
    void swap_edges(std::size_t i, std::size_t j, Edge first, Edge second) {
        remove(edges_[i]);
        remove(edges_[j]);
        add(first);
        add(second);
        edges_[i] = first;
        edges_[j] = second;
    }

    // Length of a shortest a-b path avoiding the edge {a, b} itself,
    // or kFar if it exceeds `limit`.
    std::size_t distance_avoiding_edge(Vertex a, Vertex b, std::size_t limit) {
        for (Vertex t : touched_)
            dist_[t] = kFar;
        touched_.clear();
        std::queue<Vertex> queue;
        dist_[a] = 0;
        touched_.push_back(a);
        queue.push(a);
        while (!queue.empty()) {
            const Vertex x = queue.front();
            queue.pop();
            if (dist_[x] >= limit)
                break;
            for (Vertex y : adj_[x]) {
                if (x == a && y == b)
                    continue;
                if (dist_[y] != kFar)
                    continue;
                dist_[y] = dist_[x] + 1;
                touched_.push_back(y);
                if (y == b)
                    return dist_[y];
                queue.push(y);
            }
        }
        return kFar;
    }

    Graph graph() const { return Graph::build(adj_.size(), edges_); }
    const std::vector<Edge>& edges() const { return edges_; }

    static constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max();

private:
    void remove(Edge e) {
        auto drop = [](std::vector<Vertex>& row, Vertex x) {
            auto it = std::find(row.begin(), row.end(), x);
            *it = row.back();
            row.pop_back();
        };
        drop(adj_[e.u], e.v);
        drop(adj_[e.v], e.u);
    }
    void add(Edge e) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }

    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> dist_;
    std::vector<Vertex> touched_;
};

Edge ordered(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

RepairResult girth_repair(const Graph& g, std::size_t target, std::uint64_t seed, std::size_t max_iters) {
    if (target < 3)
        throw GeneratorError("girth_repair: target girth must be at least 3");

    RepairResult result;
    result.girth = girth(g);
    if (result.girth.exceeds(target) || g.size() < 2) {
        result.graph = g;
        result.success = result.girth.exceeds(target);
        return result;
    }

    Rewirer rw(g);
    CounterRng rng(seed);
    auto edge_index = [&](Edge e) {
        const auto& es = rw.edges();
        return static_cast<std::size_t>(std::find(es.begin(), es.end(), e) - es.begin());
    };

    Girth current = result.girth;
    while (result.iterations < max_iters) {
        ++result.iterations;
        // An edge on the witnessed shortest cycle.
        const auto& cyc = current.cycle;
        const std::size_t pos = rng.below(cyc.size());
        const Edge e1 = ordered(cyc[pos], cyc[(pos + 1) % cyc.size()]);
        const std::size_t i = edge_index(e1);
        std::size_t j = rng.below(rw.edges().size() - 1);
        if (j >= i)
            ++j;
        const Edge e2 = rw.edges()[j];

        Vertex a = e1.u, b = e1.v, c = e2.u, d = e2.v;
        if (rng.below(2) == 1)
            std::swap(c, d);
        if (a == c || a == d || b == c || b == d)
            continue;
        if (rw.adjacent(a, c) || rw.adjacent(b, d))
            continue;

        const Edge n1 = ordered(a, c), n2 = ordered(b, d);
        rw.swap_edges(i, j, n1, n2);
        // A new edge {x, y} lies on a cycle of length <= target iff x and y
        // are joined by another path of length <= target - 1.
        const bool short1 = rw.distance_avoiding_edge(n1.u, n1.v, target - 1) != Rewirer::kFar;
        const bool short2 = !short1 && rw.distance_avoiding_edge(n2.u, n2.v, target - 1) != Rewirer::kFar;
        if (short1 || short2) {
            rw.swap_edges(i, j, e1, e2);
            continue;
        }
        ++result.accepted;
        Graph now = rw.graph();
        current = girth(now);
        if (current.exceeds(target)) {
            result.graph = std::move(now);
            result.girth = std::move(current);
            result.success = true;
            return result;
        }
    }
    result.graph = rw.graph();
    result.girth = std::move(current);
    result.success = false;
    return result;
}

}  // namespace percolab
