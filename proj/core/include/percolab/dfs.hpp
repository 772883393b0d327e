#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "percolab/graph.hpp"
#include "percolab/percolation.hpp"

namespace percolab {

/// Two-phase depth-first exploration of a subgraph G' of a known base graph G.
///
/// Vertices move T (unvisited) -> U (stack) -> S (done). Phase 1 runs exactly
/// 2n rounds; each round moves one vertex:
///   - U empty: the smallest vertex of T becomes a new root on U.
///   - otherwise the top v of U asks about its G-neighbors w in T in
///     ascending order; the first positive answer pushes w and ends the
///     round, and if every answer is negative v moves to S.
/// Phase 2 asks about every G-edge that phase 1 never queried. Each such pair
/// is ancestor/descendant in the spanning forest; they are asked in
/// ascending (len, smaller endpoint, larger endpoint) order, where len is the
/// tree distance. Every G-edge is asked exactly once overall, so the answer
/// sequence determines G' and vice versa.

enum class Phase : std::uint8_t { One = 1, Two = 2 };

struct Query {
    Vertex from = 0;  // phase 1: top of U; phase 2: the ancestor
    Vertex to = 0;    // phase 1: the T-vertex asked about; phase 2: the descendant
    EdgeId edge = 0;
    bool answer = false;
    Phase phase = Phase::One;
};

enum class Move : std::uint8_t {
    Root,  // T -> U with U empty
    Push,  // T -> U after a positive answer
    Pop,   // U -> S
};

/// One phase-1 round: the vertex that moved, the set sizes after the move,
/// and the end of the round's queries in the query log.
struct Round {
    Move move = Move::Root;
    Vertex vertex = 0;
    std::uint32_t s = 0, u = 0, t = 0;
    std::size_t query_end = 0;
};

/// An ancestor/descendant pair of the forest that phase 1 left unqueried.
struct TreePair {
    Vertex ancestor = 0;
    Vertex descendant = 0;
    EdgeId edge = 0;
    std::uint32_t len = 0;
};

struct DfsOptions {
    // Keep the query log and the per-round timeline. Needed by
    // check_properties and encode; Monte Carlo trials switch it off.
    bool record_log = true;
};

struct DfsRun {
    const Graph* base = nullptr;  // not owned; must outlive the run

    std::vector<Vertex> parent;       // roots are their own parent
    std::vector<std::uint32_t> depth;
    std::vector<Vertex> roots;
    std::vector<std::size_t> tree_sizes;  // aligned with roots

    std::vector<Query> query_log;     // empty unless record_log
    std::vector<Round> rounds;        // empty unless record_log

    std::size_t max_u = 0;
    std::vector<Vertex> max_u_path;   // U at the first time |U| reached max_u, bottom to top

    std::vector<TreePair> unqueried;  // in phase-2 order
    std::vector<TreePair> back_edges; // positively answered phase-2 pairs, in query order

    std::size_t phase1_queries = 0;   // Q
    std::size_t phase1_positive = 0;  // P
    std::size_t phase2_positive = 0;

    std::size_t order() const noexcept { return parent.size(); }
    std::size_t largest_tree() const noexcept;
};

/// Runs the exploration with answers read from the sample. Throws
/// std::invalid_argument if the sample was not drawn from `g`.
DfsRun run(const Graph& g, const SubgraphSample& sample, DfsOptions options = {});

/// Same, with G' given directly as a mask over g's edges.
DfsRun run(const Graph& g, const EdgeMask& subgraph, DfsOptions options = {});

/// Answer sequence of the exploration: the image of G' under the
/// query-order bijection between subgraphs of G and 0/1 strings of length e(G).
struct BitTrace {
    std::vector<std::uint8_t> bits;

    std::size_t size() const noexcept { return bits.size(); }
    std::size_t ones() const noexcept;
    std::string to_string() const;
    static BitTrace from_string(const std::string& text);

    friend bool operator==(const BitTrace&, const BitTrace&) = default;
};

BitTrace encode(const Graph& g, const SubgraphSample& sample);
BitTrace encode(const Graph& g, const EdgeMask& subgraph);

/// Inverse of encode: answers query i with bits[i]. Throws
/// std::invalid_argument unless bits.size() == e(g).
EdgeMask decode(const Graph& g, const BitTrace& bits);

/// The U stack when it first reached its maximum size: a path of length
/// max_u - 1 in G'. A single vertex when G' has no edges; empty if n = 0.
std::vector<Vertex> longest_path_certificate(const DfsRun& run);

struct CycleCertificate {
    std::vector<Vertex> cycle;  // closed: front() == back()
    TreePair closing;

    std::size_t length() const noexcept { return cycle.empty() ? 0 : cycle.size() - 1; }
};

/// Cycle closed by the back edge of largest len (first in query order on
/// ties): the tree path from ancestor to descendant plus the back edge.
std::optional<CycleCertificate> longest_cycle_certificate(const DfsRun& run);

/// Number of pairs left unqueried after phase 1 whose tree distance is >= len.
std::size_t long_unqueried_count(const DfsRun& run, std::size_t len);

/// Replays the recorded run and reports every violated structural property
/// of the exploration; an empty list means the run is consistent.
std::vector<std::string> check_properties(const DfsRun& run);

}  // namespace percolab
