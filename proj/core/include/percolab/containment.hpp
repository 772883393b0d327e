#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "percolab/graph.hpp"

namespace percolab {

inline constexpr std::size_t kMaxPatternOrder = 10;

/// Result of an H-freeness test. On failure `pattern` names the member of the
/// family that was found and `embedding[i]` is the host vertex for pattern vertex i.
struct ContainmentResult {
    bool free = true;
    std::optional<std::size_t> pattern;
    std::vector<Vertex> embedding;

    explicit operator bool() const noexcept { return free; }
};

/// True iff no graph in `patterns` occurs in `host` as a (not necessarily
/// induced) subgraph. Patterns are limited to kMaxPatternOrder vertices;
/// larger ones raise std::invalid_argument.
ContainmentResult is_h_free(const Graph& host, std::span<const Graph> patterns);

/// Host view over adjacency bitmasks, used for graphs on at most 32 vertices.
struct BitHost {
    std::vector<std::uint32_t> rows;

    std::size_t order() const noexcept { return rows.size(); }
    bool adjacent(Vertex a, Vertex b) const noexcept { return (rows[a] >> b) & 1u; }
    std::size_t degree(Vertex a) const noexcept { return static_cast<std::size_t>(__builtin_popcount(rows[a])); }
    template <class F>
    void for_each_neighbor(Vertex a, F&& f) const {
        for (std::uint32_t bits = rows[a]; bits; bits &= bits - 1)
            f(static_cast<Vertex>(__builtin_ctz(bits)));
    }
};

/// Host view over a Graph.
struct GraphHost {
    const Graph* graph;

    std::size_t order() const noexcept { return graph->order(); }
    bool adjacent(Vertex a, Vertex b) const { return graph->has_edge(a, b); }
    std::size_t degree(Vertex a) const { return graph->degree(a); }
    template <class F>
    void for_each_neighbor(Vertex a, F&& f) const {
        for (Vertex b : graph->neighbors(a))
            f(b);
    }
};

namespace detail {

// Pattern preprocessed into a matching order: every vertex after the first of
// its component has an earlier-matched neighbor (its anchor).
struct PatternPlan {
    std::size_t order = 0;
    std::vector<Vertex> sequence;                 // pattern vertices in matching order
    std::vector<int> anchor;                      // position of an earlier neighbor, -1 if none
    std::vector<std::vector<std::size_t>> back;   // positions of all earlier neighbors
    std::vector<std::size_t> degree;              // pattern degree, by position
    std::vector<Edge> edges;
};

PatternPlan plan_pattern(const Graph& pattern, std::optional<Edge> first_edge = std::nullopt);

template <class Host>
class Matcher {
public:
    Matcher(const Host& host, const PatternPlan& plan)
        : host_(host), plan_(plan), image_(plan.order), used_(host.order(), 0) {}

    // Full search; on success `image()` maps positions to host vertices.
    bool find() { return extend(0); }

    // Search with the first two positions fixed to host vertices a, b.
    bool find_seeded(Vertex a, Vertex b) {
        if (plan_.order < 2 || a == b || !host_.adjacent(a, b))
            return false;
        if (host_.degree(a) < plan_.degree[0] || host_.degree(b) < plan_.degree[1])
            return false;
        image_[0] = a;
        image_[1] = b;
        used_[a] = used_[b] = 1;
        const bool ok = extend(2);
        if (!ok)
            used_[a] = used_[b] = 0;
        return ok;
    }

    std::vector<Vertex> embedding() const {
        std::vector<Vertex> out(plan_.order);
        for (std::size_t i = 0; i < plan_.order; ++i)
            out[plan_.sequence[i]] = image_[i];
        return out;
    }

private:
    bool fits(std::size_t pos, Vertex x) const {
        if (used_[x] || host_.degree(x) < plan_.degree[pos])
            return false;
        for (std::size_t b : plan_.back[pos]) {
            if (!host_.adjacent(image_[b], x))
                return false;
        }
        return true;
    }

    bool try_at(std::size_t pos, Vertex x) {
        if (!fits(pos, x))
            return false;
        image_[pos] = x;
        used_[x] = 1;
        if (extend(pos + 1))
            return true;
        used_[x] = 0;
        return false;
    }

    bool extend(std::size_t pos) {
        if (pos == plan_.order)
            return true;
        const int anchor = plan_.anchor[pos];
        if (anchor >= 0) {
            bool found = false;
            host_.for_each_neighbor(image_[static_cast<std::size_t>(anchor)], [&](Vertex x) {
                if (!found && try_at(pos, x))
                    found = true;
            });
            return found;
        }
        for (Vertex x = 0; x < host_.order(); ++x) {
            if (try_at(pos, x))
                return true;
        }
        return false;
    }

    const Host& host_;
    const PatternPlan& plan_;
    std::vector<Vertex> image_;
    std::vector<std::uint8_t> used_;
};

}  // namespace detail

/// True iff some copy of the planned pattern in `host` uses the host edge {a, b}.
/// The plan must have been built with plan_pattern(pattern, some edge) so that
/// positions 0 and 1 are the endpoints of a pattern edge; every pattern edge
/// is tried by the caller through separate plans.
template <class Host>
bool contains_through_edge(const Host& host, std::span<const detail::PatternPlan> edge_plans, Vertex a, Vertex b) {
    for (const auto& plan : edge_plans) {
        detail::Matcher<Host> m1(host, plan);
        if (m1.find_seeded(a, b))
            return true;
        detail::Matcher<Host> m2(host, plan);
        if (m2.find_seeded(b, a))
            return true;
    }
    return false;
}

/// One plan per pattern edge, each starting from that edge.
std::vector<detail::PatternPlan> edge_rooted_plans(const Graph& pattern);

}  // namespace percolab
