#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "percolab/graph.hpp"

namespace percolab {

/// Raised when a generator's parameters are infeasible or its retry budget runs out.
class GeneratorError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);

/// Uniform-ish simple k-regular graph on n vertices from the configuration
/// model. Half-edges are paired one at a time; a pair that would form a loop
/// or a multi-edge is rejected and redrawn, and the whole pairing restarts
/// when no admissible pair remains. At most 100*n*k restarts are attempted.
Graph random_regular(std::size_t n, std::size_t k, std::uint64_t seed);

/// Point-line incidence graph of PG(2, q) for prime q: points are vertices
/// 0..N-1 and lines N..2N-1, with N = q^2 + q + 1.
Graph pp_incidence(std::uint64_t q);

Graph disjoint_copies(const Graph& g, std::size_t t);

struct RepairResult {
    Graph graph;
    bool success = false;
    Girth girth;
    std::size_t iterations = 0;  // swap attempts used
    std::size_t accepted = 0;
};

/// Degree-preserving 2-edge swaps until girth exceeds `g`. Each attempt
/// removes an edge of a current shortest cycle plus a random second edge and
/// reconnects their endpoints crosswise; the swap is kept only if neither new
/// edge lies on a cycle of length <= g. On budget exhaustion the current (best
/// so far) graph is returned with success = false.
RepairResult girth_repair(const Graph& g, std::size_t target, std::uint64_t seed, std::size_t max_iters);

bool is_prime(std::uint64_t q);

}  // namespace percolab
