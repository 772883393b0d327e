#include "percolab/percolation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace percolab {

std::size_t EdgeMask::count() const noexcept {
    std::size_t total = 0;
    for (std::uint64_t w : words_)
        total += static_cast<std::size_t>(__builtin_popcountll(w));
    return total;
}

bool EdgeMask::is_subset_of(const EdgeMask& other) const noexcept {
    if (size_ != other.size_)
        return false;
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

EdgeMask& EdgeMask::operator|=(const EdgeMask& other) noexcept {
    for (std::size_t i = 0; i < std::min(words_.size(), other.words_.size()); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

Graph subgraph_from_mask(const Graph& base, const EdgeMask& mask) {
    if (mask.size() != base.size())
        throw std::invalid_argument("edge mask does not match base graph");
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < base.size(); ++e)
        if (mask.test(e))
            edges.push_back(base.edge(e));
    return Graph::build(base.order(), edges);
}

Graph SubgraphSample::materialize() const { return subgraph_from_mask(*base_, kept_); }

namespace {

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
}

// Seed of the second-round stream, distinct from the first round's.
std::uint64_t round_two_seed(std::uint64_t seed) { return hash_key(seed, 0x5eed2u) ^ 0xa5a5a5a5a5a5a5a5ULL; }

}  // namespace

SubgraphSample sample(const Graph& g, double p, std::uint64_t seed) {
    check_probability(p, "sample: p");
    EdgeMask kept(g.size());
    if (p > 0.0) {
        for (EdgeId e = 0; e < g.size(); ++e)
            if (edge_kept(seed, e, p))
                kept.set(e);
    }
    return SubgraphSample(g, std::move(kept), p, seed);
}

double two_round_split(double p, double p1) {
    check_probability(p, "two_round_split: p");
    check_probability(p1, "two_round_split: p1");
    if (p1 > p)
        throw std::invalid_argument("two_round_split: p1 exceeds p");
    if (p == 1.0) {
        if (p1 < 1.0)
            throw std::invalid_argument("two_round_split: p = 1 requires p1 = 1");
        return 0.0;
    }
    return std::max(0.0, 1.0 - (1.0 - p) / (1.0 - p1));
}

SprinklePair sample_sprinkled(const Graph& g, double p, double p1, std::uint64_t seed) {
    SprinklePair out;
    out.p1 = p1;
    out.p2 = two_round_split(p, p1);
    out.round1 = sample(g, p1, seed).kept();
    out.combined = out.round1;
    const std::uint64_t seed2 = round_two_seed(seed);
    if (out.p2 > 0.0) {
        for (EdgeId e = 0; e < g.size(); ++e)
            if (!out.round1.test(e) && edge_kept(seed2, e, out.p2))
                out.combined.set(e);
    }
    return out;
}

MaskComponents mask_components(const Graph& base, const EdgeMask& mask) {
    const std::size_t n = base.order();
    std::vector<Vertex> parent(n);
    std::vector<std::size_t> size(n, 1);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    MaskComponents out;
    out.count = n;
    for (EdgeId e = 0; e < base.size(); ++e) {
        if (!mask.test(e))
            continue;
        ++out.edges;
        Vertex a = find(base.edge(e).u), b = find(base.edge(e).v);
        if (a == b)
            continue;
        if (size[a] < size[b])
            std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        --out.count;
    }
    for (Vertex v = 0; v < n; ++v)
        if (parent[v] == v)
            out.largest = std::max(out.largest, size[v]);
    return out;
}

}  // namespace percolab
