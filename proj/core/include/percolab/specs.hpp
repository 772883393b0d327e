#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "percolab/extremal.hpp"
#include "percolab/graph.hpp"

namespace percolab {

/// Description of a base-graph construction, serialized as a flat JSON object
/// {"kind": ..., <params>, "seed": ...}. Nested bases (disjoint_copies,
/// girth_repair) are themselves GenSpec objects under "base".
struct GenSpec {
    std::string kind;
    nlohmann::json params = nlohmann::json::object();
    std::uint64_t seed = 0;
};

/// Throws std::invalid_argument on an unknown kind or a missing/ill-typed parameter.
GenSpec gen_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GenSpec& spec);

/// Short command-line forms: complete:N, kbip:A:B, regular:N:K[:SEED],
/// ppinc:Q, petersen, cycle:N. Anything starting with '{' is parsed as JSON.
GenSpec parse_gen_spec(const std::string& text);

struct GenOutcome {
    Graph graph;
    // Set when a girth_repair step ran out of budget; the graph is then the
    // best intermediate.
    std::optional<std::string> warning;
};

GenOutcome generate(const GenSpec& spec);

/// {"variant": "empty" | "girth_greater" | "explicit", "g": ..., "patterns": [[[u, v], ...], ...]}
TuranFamily turan_family_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TuranFamily& family);

/// Short forms: empty, girth:G, cycles:3,4 (explicit cycle patterns). '{' → JSON.
TuranFamily parse_turan_family(const std::string& text);

/// A probability literal, or auto(c) meaning c / (minimum degree of g).
double parse_probability(const std::string& text, const Graph& g);

/// "a:b:count" → count evenly spaced values from a to b inclusive; a single
/// value gives a one-point grid. Endpoints follow parse_probability.
std::vector<double> parse_grid(const std::string& text, const Graph& g);

/// Shortest round-trip decimal form of x; used in every textual output.
std::string format_double(double x);

}  // namespace percolab
