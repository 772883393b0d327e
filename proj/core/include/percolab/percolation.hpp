#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "percolab/graph.hpp"
#include "percolab/rng.hpp"

namespace percolab {

/// Bitmask over the canonical edge indices of a base graph.
class EdgeMask {
public:
    EdgeMask() = default;
    explicit EdgeMask(std::size_t edges, bool value = false)
        : size_(edges), words_((edges + 63) / 64, value ? ~std::uint64_t{0} : 0) {
        trim();
    }

    std::size_t size() const noexcept { return size_; }
    bool test(EdgeId e) const noexcept { return (words_[e >> 6] >> (e & 63)) & 1u; }
    void set(EdgeId e, bool value = true) noexcept {
        const std::uint64_t bit = std::uint64_t{1} << (e & 63);
        if (value)
            words_[e >> 6] |= bit;
        else
            words_[e >> 6] &= ~bit;
    }
    std::size_t count() const noexcept;
    bool is_subset_of(const EdgeMask& other) const noexcept;
    EdgeMask& operator|=(const EdgeMask& other) noexcept;

    friend bool operator==(const EdgeMask&, const EdgeMask&) = default;

private:
    void trim() noexcept {
        if (size_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Whether edge `e` survives at probability p under `seed`: one uniform per
// (seed, edge) compared against p, so survival is monotone in p.
inline bool edge_kept(std::uint64_t seed, EdgeId e, double p) noexcept {
    return unit_double(hash_key(seed, e)) < p;
}

/// A p-random subgraph of a base graph. Holds a pointer to the base, which
/// must outlive the sample.
class SubgraphSample {
public:
    SubgraphSample(const Graph& base, EdgeMask kept, double p, std::uint64_t seed)
        : base_(&base), kept_(std::move(kept)), p_(p), seed_(seed) {}

    const Graph& base() const noexcept { return *base_; }
    const EdgeMask& kept() const noexcept { return kept_; }
    bool contains(EdgeId e) const noexcept { return kept_.test(e); }
    double p() const noexcept { return p_; }
    std::uint64_t seed() const noexcept { return seed_; }
    std::size_t kept_count() const noexcept { return kept_.count(); }

    // The sampled subgraph on the base's vertex set.
    Graph materialize() const;

private:
    const Graph* base_;
    EdgeMask kept_;
    double p_;
    std::uint64_t seed_;
};

/// Keeps each edge of `g` independently with probability p. Reproducible
/// from (g, p, seed); requires 0 <= p <= 1.
SubgraphSample sample(const Graph& g, double p, std::uint64_t seed);

/// p2 with (1 - p1)(1 - p2) = 1 - p. Requires 0 <= p1 <= p <= 1; p = 1 is
/// only accepted together with p1 = 1 (and then yields 0).
double two_round_split(double p, double p1);

struct SprinklePair {
    double p1 = 0.0;
    double p2 = 0.0;
    EdgeMask round1;
    EdgeMask combined;
};

/// Two-round exposure: round 1 is sample(g, p1, seed); every edge missing
/// from it is then added with probability p2 = two_round_split(p, p1) using
/// an independent stream. The union is distributed as sample(g, p, .).
SprinklePair sample_sprinkled(const Graph& g, double p, double p1, std::uint64_t seed);

Graph subgraph_from_mask(const Graph& base, const EdgeMask& mask);

/// Components of the subgraph of `base` given by `mask`, without
/// materializing it.
struct MaskComponents {
    std::size_t count = 0;
    std::size_t largest = 0;
    std::size_t edges = 0;

    // exc = e - n + r
    std::size_t excess(std::size_t n) const noexcept { return edges + count - n; }
};

MaskComponents mask_components(const Graph& base, const EdgeMask& mask);

}  // namespace percolab
