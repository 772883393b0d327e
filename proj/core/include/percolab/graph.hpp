#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace percolab {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised by Graph::build and the edge-list reader.
class GraphError : public std::invalid_argument {
public:
    enum class Kind { SelfLoop, DuplicateEdge, VertexOutOfRange, Format };

    GraphError(Kind kind, Edge offending, const std::string& what)
        : std::invalid_argument(what), kind_(kind), offending_(offending) {}

    Kind kind() const noexcept { return kind_; }
    // The pair that triggered the error, as given by the caller.
    Edge offending() const noexcept { return offending_; }

private:
    Kind kind_;
    Edge offending_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored in CSR form with neighbor lists sorted ascending.
/// Edges carry a canonical index: edge i is the i-th pair (u, v), u < v,
/// in lexicographic order. Every adjacency slot records the index of its
/// edge, so percolation masks and DFS queries can refer to edges by index.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list; pairs may be given in either
    /// orientation. Rejects self-loops, duplicate edges and out-of-range
    /// endpoints, reporting the first offending pair.
    static Graph build(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t size() const noexcept { return edges_.size(); }

    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {neighbors_.data() + offsets_[v], degree(v)};
    }
    // Edge indices aligned with neighbors(v).
    std::span<const EdgeId> incident_edges(Vertex v) const {
        return {edge_ids_.data() + offsets_[v], degree(v)};
    }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_[id]; }

    std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const { return edge_id(u, v).has_value(); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.order() == b.order() && a.edges_ == b.edges_;
    }

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> neighbors_;
    std::vector<EdgeId> edge_ids_;
    std::vector<Edge> edges_;
};

struct DegreeStats {
    std::size_t min = 0;
    double avg = 0.0;
    std::size_t max = 0;
};

DegreeStats degree_stats(const Graph& g);

struct ComponentPartition {
    std::vector<std::uint32_t> component_of;  // ids contiguous from 0, in order of smallest vertex
    std::vector<std::size_t> sizes;

    std::size_t count() const noexcept { return sizes.size(); }
    std::size_t largest() const noexcept;
};

ComponentPartition components(const Graph& g);

// exc(G) = e(G) - |V(G)| + #components
std::size_t excess(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;  // new vertex i is to_parent[i] in the original
};

/// Subgraph induced by `vertices` (treated as a set), relabeled 0..|A|-1
/// preserving ascending order. Throws GraphError on out-of-range vertices.
InducedSubgraph induced(const Graph& g, std::span<const Vertex> vertices);

/// Shortest cycle length, or infinite for forests. A finite value carries
/// one shortest cycle as witness (vertex sequence, closing edge implicit).
struct Girth {
    std::optional<std::size_t> length;
    std::vector<Vertex> cycle;

    bool infinite() const noexcept { return !length.has_value(); }
    bool exceeds(std::size_t g) const noexcept { return infinite() || *length > g; }
};

Girth girth(const Graph& g);

// Cycle C_len on vertices 0..len-1; len >= 3.
Graph cycle_graph(std::size_t len);
Graph path_graph(std::size_t n);
Graph petersen_graph();

bool is_bipartite(const Graph& g);

// Edge-list text format: "n m" header then m lines "u v" with u < v.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace percolab
