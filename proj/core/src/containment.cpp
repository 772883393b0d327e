#include "percolab/containment.hpp"

#include <string>

namespace percolab {

namespace detail {

PatternPlan plan_pattern(const Graph& pattern, std::optional<Edge> first_edge) {
    const std::size_t n = pattern.order();
    if (n > kMaxPatternOrder)
        throw std::invalid_argument("pattern has " + std::to_string(n) + " vertices; at most " +
                                    std::to_string(kMaxPatternOrder) + " supported");
    PatternPlan plan;
    plan.order = n;
    plan.edges = pattern.edges();

    std::vector<int> position(n, -1);
    auto place = [&](Vertex v) {
        position[v] = static_cast<int>(plan.sequence.size());
        plan.sequence.push_back(v);
    };
    if (first_edge) {
        place(first_edge->u);
        place(first_edge->v);
    }
    while (plan.sequence.size() < n) {
        // Most constrained next: most placed neighbors, then highest degree.
        Vertex pick = 0;
        long best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (position[v] >= 0)
                continue;
            long placed = 0;
            for (Vertex w : pattern.neighbors(v))
                placed += position[w] >= 0;
            const long score = placed * 64 + static_cast<long>(pattern.degree(v));
            if (score > best) {
                best = score;
                pick = v;
            }
        }
        place(pick);
    }

    plan.anchor.assign(n, -1);
    plan.back.assign(n, {});
    plan.degree.assign(n, 0);
    for (std::size_t pos = 0; pos < n; ++pos) {
        const Vertex v = plan.sequence[pos];
        plan.degree[pos] = pattern.degree(v);
        for (Vertex w : pattern.neighbors(v)) {
            const int pw = position[w];
            if (pw >= 0 && static_cast<std::size_t>(pw) < pos) {
                plan.back[pos].push_back(static_cast<std::size_t>(pw));
                if (plan.anchor[pos] < 0)
                    plan.anchor[pos] = pw;
            }
        }
    }
    return plan;
}

}  // namespace detail

std::vector<detail::PatternPlan> edge_rooted_plans(const Graph& pattern) {
    std::vector<detail::PatternPlan> plans;
    for (const Edge& e : pattern.edges())
        plans.push_back(detail::plan_pattern(pattern, e));
    return plans;
}

ContainmentResult is_h_free(const Graph& host, std::span<const Graph> patterns) {
    std::vector<detail::PatternPlan> plans;
    plans.reserve(patterns.size());
    for (const Graph& p : patterns)
        plans.push_back(detail::plan_pattern(p));

    ContainmentResult result;
    const GraphHost view{&host};
    for (std::size_t i = 0; i < plans.size(); ++i) {
        if (plans[i].order > host.order() || patterns[i].size() > host.size())
            continue;
        detail::Matcher<GraphHost> matcher(view, plans[i]);
        if (matcher.find()) {
            result.free = false;
            result.pattern = i;
            result.embedding = matcher.embedding();
            return result;
        }
    }
    return result;
}

}  // namespace percolab
