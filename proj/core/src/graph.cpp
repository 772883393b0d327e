#include "percolab/graph.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>

namespace percolab {

namespace {

std::string pair_text(Edge e) {
    return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

}  // namespace

Graph Graph::build(std::size_t n, std::span<const Edge> edges) {
    if (n > std::numeric_limits<Vertex>::max())
        throw std::length_error("Graph::build: too many vertices");
    if (edges.size() > std::numeric_limits<EdgeId>::max())
        throw std::length_error("Graph::build: too many edges");

    std::vector<Edge> canon;
    canon.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n)
            throw GraphError(GraphError::Kind::VertexOutOfRange, e,
                             "vertex out of range in pair " + pair_text(e) + " for n=" + std::to_string(n));
        if (e.u == e.v)
            throw GraphError(GraphError::Kind::SelfLoop, e, "self-loop " + pair_text(e));
        canon.push_back(e.u < e.v ? e : Edge{e.v, e.u});
    }

    // Report the first duplicate in input order, not in sorted order.
    std::vector<std::size_t> order(canon.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return canon[a] < canon[b]; });
    std::optional<std::size_t> first_dup;
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (canon[order[i]] == canon[order[i - 1]])
            first_dup = std::min(first_dup.value_or(order[i]), order[i]);
    }
    if (first_dup)
        throw GraphError(GraphError::Kind::DuplicateEdge, edges[*first_dup],
                         "duplicate edge " + pair_text(edges[*first_dup]));

    Graph g;
    g.edges_.resize(canon.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        g.edges_[i] = canon[order[i]];

    g.offsets_.assign(n + 1, 0);
    for (const Edge& e : g.edges_) {
        ++g.offsets_[e.u + 1];
        ++g.offsets_[e.v + 1];
    }
    for (std::size_t v = 0; v < n; ++v)
        g.offsets_[v + 1] += g.offsets_[v];

    g.neighbors_.resize(2 * g.edges_.size());
    g.edge_ids_.resize(2 * g.edges_.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    // Scanning edges in (u, v) order hands each vertex its smaller neighbors
    // first (from earlier u-blocks) and then its larger ones, both ascending.
    for (EdgeId id = 0; id < g.edges_.size(); ++id) {
        const Edge& e = g.edges_[id];
        g.neighbors_[cursor[e.u]] = e.v;
        g.edge_ids_[cursor[e.u]++] = id;
        g.neighbors_[cursor[e.v]] = e.u;
        g.edge_ids_[cursor[e.v]++] = id;
    }
    return g;
}

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const {
    if (u >= order() || v >= order() || u == v)
        return std::nullopt;
    if (degree(u) > degree(v))
        std::swap(u, v);
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v)
        return std::nullopt;
    return incident_edges(u)[static_cast<std::size_t>(it - nb.begin())];
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    const std::size_t n = g.order();
    if (n == 0)
        return s;
    s.min = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < n; ++v) {
        s.min = std::min(s.min, g.degree(v));
        s.max = std::max(s.max, g.degree(v));
    }
    s.avg = 2.0 * static_cast<double>(g.size()) / static_cast<double>(n);
    return s;
}

std::size_t ComponentPartition::largest() const noexcept {
    return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

ComponentPartition components(const Graph& g) {
    const std::size_t n = g.order();
    constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
    ComponentPartition cp;
    cp.component_of.assign(n, unset);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (cp.component_of[s] != unset)
            continue;
        const auto id = static_cast<std::uint32_t>(cp.sizes.size());
        std::size_t size = 0;
        cp.component_of[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            ++size;
            for (Vertex y : g.neighbors(x)) {
                if (cp.component_of[y] == unset) {
                    cp.component_of[y] = id;
                    stack.push_back(y);
                }
            }
        }
        cp.sizes.push_back(size);
    }
    return cp;
}

std::size_t excess(const Graph& g) {
    return g.size() + components(g).count() - g.order();
}

InducedSubgraph induced(const Graph& g, std::span<const Vertex> vertices) {
    InducedSubgraph out;
    out.to_parent.assign(vertices.begin(), vertices.end());
    for (Vertex v : out.to_parent) {
        if (v >= g.order())
            throw GraphError(GraphError::Kind::VertexOutOfRange, Edge{v, v},
                             "induced: vertex " + std::to_string(v) + " out of range");
    }
    std::sort(out.to_parent.begin(), out.to_parent.end());
    out.to_parent.erase(std::unique(out.to_parent.begin(), out.to_parent.end()), out.to_parent.end());

    constexpr auto absent = std::numeric_limits<Vertex>::max();
    std::vector<Vertex> to_child(g.order(), absent);
    for (std::size_t i = 0; i < out.to_parent.size(); ++i)
        to_child[out.to_parent[i]] = static_cast<Vertex>(i);

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
        for (Vertex y : g.neighbors(out.to_parent[i])) {
            if (to_child[y] != absent && to_child[y] > i)
                edges.push_back({static_cast<Vertex>(i), to_child[y]});
        }
    }
    out.graph = Graph::build(out.to_parent.size(), edges);
    return out;
}

Girth girth(const Graph& g) {
    const std::size_t n = g.order();
    constexpr auto unseen = std::numeric_limits<std::size_t>::max();
    Girth best;
    std::size_t best_len = unseen;
    std::vector<std::size_t> dist(n, unseen);
    std::vector<Vertex> parent(n, 0);
    std::vector<Vertex> touched;
    std::queue<Vertex> queue;

    for (Vertex root = 0; root < n && best_len > 3; ++root) {
        if (g.degree(root) < 2)
            continue;
        for (Vertex t : touched)
            dist[t] = unseen;
        touched.clear();
        queue = {};

        dist[root] = 0;
        parent[root] = root;
        touched.push_back(root);
        queue.push(root);
        bool done = false;
        while (!queue.empty() && !done) {
            const Vertex x = queue.front();
            queue.pop();
            // Any cycle found from here on has length >= 2*dist[x] + 1.
            if (best_len != unseen && 2 * dist[x] + 1 >= best_len)
                break;
            for (Vertex y : g.neighbors(x)) {
                if (dist[y] == unseen) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    touched.push_back(y);
                    queue.push(y);
                } else if (parent[x] != y && dist[y] >= dist[x]) {
                    const std::size_t len = dist[x] + dist[y] + 1;
                    if (len < best_len) {
                        best_len = len;
                        // root ~> x, then y ~> root reversed.
                        std::vector<Vertex> left, right;
                        for (Vertex a = x; a != root; a = parent[a])
                            left.push_back(a);
                        left.push_back(root);
                        for (Vertex b = y; b != root; b = parent[b])
                            right.push_back(b);
                        std::reverse(left.begin(), left.end());
                        left.insert(left.end(), right.begin(), right.end());
                        best.cycle = std::move(left);
                        if (best_len == 3) {
                            done = true;
                            break;
                        }
                    }
                }
            }
        }
    }
    if (best_len != unseen)
        best.length = best_len;
    return best;
}

Graph cycle_graph(std::size_t len) {
    if (len < 3)
        throw std::invalid_argument("cycle_graph: length must be at least 3");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < len; ++i)
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % len)});
    return Graph::build(len, edges);
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
    return Graph::build(n, edges);
}

Graph petersen_graph() {
    // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5..9.
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, i + 5});
        edges.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return Graph::build(10, edges);
}

bool is_bipartite(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<int> side(n, -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x)) {
                if (side[y] < 0) {
                    side[y] = 1 - side[x];
                    stack.push_back(y);
                } else if (side[y] == side[x]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

[[noreturn]] void format_error(std::size_t line, const std::string& msg) {
    throw GraphError(GraphError::Kind::Format, Edge{},
                     "edge list line " + std::to_string(line) + ": " + msg);
}

// Parses exactly two unsigned decimal fields; anything else is a format error.
std::pair<std::uint64_t, std::uint64_t> parse_pair(const std::string& text, std::size_t line) {
    std::istringstream ls(text);
    std::string a, b, extra;
    if (!(ls >> a >> b) || (ls >> extra))
        format_error(line, "expected two fields, got \"" + text + "\"");
    auto to_u64 = [&](const std::string& s) {
        if (s.empty() || s.size() > 19 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
            format_error(line, "not a decimal count: \"" + s + "\"");
        return std::stoull(s);
    };
    return {to_u64(a), to_u64(b)};
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string text;
    std::size_t line = 1;
    if (!std::getline(in, text))
        format_error(line, "missing header");
    const auto [n, m] = parse_pair(text, line);
    if (n > std::numeric_limits<Vertex>::max())
        format_error(line, "vertex count too large");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1u << 24)));
    for (std::uint64_t i = 0; i < m; ++i) {
        ++line;
        if (!std::getline(in, text))
            format_error(line, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        const auto [u, v] = parse_pair(text, line);
        const Edge e{static_cast<Vertex>(std::min<std::uint64_t>(u, std::numeric_limits<Vertex>::max())),
                     static_cast<Vertex>(std::min<std::uint64_t>(v, std::numeric_limits<Vertex>::max()))};
        if (u >= n || v >= n)
            throw GraphError(GraphError::Kind::VertexOutOfRange, e,
                             "vertex out of range in pair " + pair_text(e) + " for n=" + std::to_string(n));
        if (u == v)
            throw GraphError(GraphError::Kind::SelfLoop, e, "self-loop " + pair_text(e));
        if (u > v)
            format_error(line, "pair " + pair_text(e) + " is not ordered u < v");
        edges.push_back(e);
    }
    while (std::getline(in, text)) {
        ++line;
        if (text.find_first_not_of(" \t\r") != std::string::npos)
            format_error(line, "trailing content after " + std::to_string(m) + " edges");
    }
    return Graph::build(static_cast<std::size_t>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
}

}  // namespace percolab
