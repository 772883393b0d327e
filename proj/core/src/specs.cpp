#include "percolab/specs.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "percolab/generators.hpp"

namespace percolab {

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep))
        out.push_back(cur);
    if (!text.empty() && text.back() == sep)
        out.emplace_back();
    return out;
}

std::uint64_t parse_count(const std::string& s, const std::string& what) {
    std::uint64_t v = 0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc() || ptr != end)
        throw std::invalid_argument("bad " + what + ": '" + s + "'");
    return v;
}

double parse_real(const std::string& s, const std::string& what) {
    double v = 0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc() || ptr != end || !std::isfinite(v))
        throw std::invalid_argument("bad " + what + ": '" + s + "'");
    return v;
}

std::uint64_t count_param(const GenSpec& spec, const char* key) {
    const auto it = spec.params.find(key);
    if (it == spec.params.end() || !it->is_number_unsigned())
        throw std::invalid_argument(spec.kind + ": parameter '" + key + "' must be a non-negative integer");
    return it->get<std::uint64_t>();
}

GenSpec base_param(const GenSpec& spec) {
    const auto it = spec.params.find("base");
    if (it == spec.params.end() || !it->is_object())
        throw std::invalid_argument(spec.kind + ": parameter 'base' must be a generator object");
    return gen_spec_from_json(*it);
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& kinds() {
    static const std::vector<std::pair<std::string, std::vector<std::string>>> table = {
        {"complete", {"n"}},
        {"complete_bipartite", {"a", "b"}},
        {"random_regular", {"n", "k"}},
        {"pp_incidence", {"q"}},
        {"disjoint_copies", {"base", "t"}},
        {"girth_repair", {"base", "g", "max_iters"}},
        {"petersen", {}},
        {"cycle", {"n"}},
    };
    return table;
}

}  // namespace

GenSpec gen_spec_from_json(const json& j) {
    if (!j.is_object())
        throw std::invalid_argument("generator spec must be a JSON object");
    const auto kind = j.find("kind");
    if (kind == j.end() || !kind->is_string())
        throw std::invalid_argument("generator spec needs a string 'kind'");
    GenSpec spec;
    spec.kind = kind->get<std::string>();
    const auto* entry = [&]() -> const std::vector<std::string>* {
        for (const auto& [name, keys] : kinds())
            if (name == spec.kind)
                return &keys;
        return nullptr;
    }();
    if (!entry)
        throw std::invalid_argument("unknown generator kind '" + spec.kind + "'");
    for (const auto& [key, value] : j.items()) {
        if (key == "kind")
            continue;
        if (key == "seed") {
            if (!value.is_number_unsigned())
                throw std::invalid_argument("'seed' must be a non-negative integer");
            spec.seed = value.get<std::uint64_t>();
            continue;
        }
        if (std::find(entry->begin(), entry->end(), key) == entry->end())
            throw std::invalid_argument(spec.kind + ": unknown parameter '" + key + "'");
        spec.params[key] = value;
    }
    for (const std::string& key : *entry)
        if (!spec.params.contains(key))
            throw std::invalid_argument(spec.kind + ": missing parameter '" + key + "'");
    return spec;
}

json to_json(const GenSpec& spec) {
    json j = spec.params;
    j["kind"] = spec.kind;
    j["seed"] = spec.seed;
    return j;
}

GenSpec parse_gen_spec(const std::string& text) {
    if (!text.empty() && text.front() == '{')
        return gen_spec_from_json(json::parse(text));
    const auto parts = split(text, ':');
    const std::string& head = parts.empty() ? text : parts[0];
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (parts.size() < lo || parts.size() > hi)
            throw std::invalid_argument("malformed generator shorthand '" + text + "'");
    };
    GenSpec spec;
    if (head == "complete") {
        need(2, 2);
        spec.kind = "complete";
        spec.params["n"] = parse_count(parts[1], "vertex count");
    } else if (head == "kbip") {
        need(3, 3);
        spec.kind = "complete_bipartite";
        spec.params["a"] = parse_count(parts[1], "side size");
        spec.params["b"] = parse_count(parts[2], "side size");
    } else if (head == "regular") {
        need(3, 4);
        spec.kind = "random_regular";
        spec.params["n"] = parse_count(parts[1], "vertex count");
        spec.params["k"] = parse_count(parts[2], "degree");
        if (parts.size() == 4)
            spec.seed = parse_count(parts[3], "seed");
    } else if (head == "ppinc") {
        need(2, 2);
        spec.kind = "pp_incidence";
        spec.params["q"] = parse_count(parts[1], "field order");
    } else if (head == "petersen") {
        need(1, 1);
        spec.kind = "petersen";
    } else if (head == "cycle") {
        need(2, 2);
        spec.kind = "cycle";
        spec.params["n"] = parse_count(parts[1], "cycle length");
    } else {
        throw std::invalid_argument("unknown generator shorthand '" + text + "'");
    }
    return spec;
}

GenOutcome generate(const GenSpec& spec) {
    const std::string& k = spec.kind;
    if (k == "complete")
        return {complete(count_param(spec, "n")), std::nullopt};
    if (k == "complete_bipartite")
        return {complete_bipartite(count_param(spec, "a"), count_param(spec, "b")), std::nullopt};
    if (k == "random_regular")
        return {random_regular(count_param(spec, "n"), count_param(spec, "k"), spec.seed), std::nullopt};
    if (k == "pp_incidence")
        return {pp_incidence(count_param(spec, "q")), std::nullopt};
    if (k == "petersen")
        return {petersen_graph(), std::nullopt};
    if (k == "cycle")
        return {cycle_graph(count_param(spec, "n")), std::nullopt};
    if (k == "disjoint_copies") {
        GenOutcome base = generate(base_param(spec));
        base.graph = disjoint_copies(base.graph, count_param(spec, "t"));
        return base;
    }
    if (k == "girth_repair") {
        GenOutcome base = generate(base_param(spec));
        const std::uint64_t target = count_param(spec, "g");
        RepairResult r = girth_repair(base.graph, target, spec.seed, count_param(spec, "max_iters"));
        GenOutcome out{std::move(r.graph), base.warning};
        if (!r.success)
            out.warning = "girth_repair: budget exhausted after " + std::to_string(r.iterations) +
                          " attempts; girth is " +
                          (r.girth.length ? std::to_string(*r.girth.length) : std::string("infinite")) +
                          ", target > " + std::to_string(target);
        return out;
    }
    throw std::invalid_argument("unknown generator kind '" + k + "'");
}

TuranFamily turan_family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("variant") || !j["variant"].is_string())
        throw std::invalid_argument("family spec needs a string 'variant'");
    const std::string v = j["variant"].get<std::string>();
    if (v == "empty")
        return TuranFamily::empty();
    if (v == "girth_greater") {
        if (!j.contains("g") || !j["g"].is_number_unsigned())
            throw std::invalid_argument("girth_greater family needs a non-negative integer 'g'");
        return TuranFamily::girth_greater(j["g"].get<std::size_t>());
    }
    if (v == "explicit") {
        if (!j.contains("patterns") || !j["patterns"].is_array())
            throw std::invalid_argument("explicit family needs a 'patterns' array");
        std::vector<Graph> patterns;
        for (const json& p : j["patterns"]) {
            if (!p.is_array())
                throw std::invalid_argument("each pattern must be an array of [u, v] edges");
            std::vector<Edge> edges;
            Vertex n = 0;
            for (const json& e : p) {
                if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
                    throw std::invalid_argument("pattern edges must be [u, v] pairs of vertex ids");
                const auto u = e[0].get<Vertex>(), w = e[1].get<Vertex>();
                edges.push_back({u, w});
                n = std::max({n, u + 1, w + 1});
            }
            patterns.push_back(Graph::build(n, edges));
        }
        return TuranFamily::explicit_patterns(std::move(patterns));
    }
    throw std::invalid_argument("unknown family variant '" + v + "'");
}

json to_json(const TuranFamily& family) {
    switch (family.variant()) {
    case TuranFamily::Variant::Empty:
        return {{"variant", "empty"}};
    case TuranFamily::Variant::GirthGreater:
        return {{"variant", "girth_greater"}, {"g", family.girth_bound()}};
    case TuranFamily::Variant::Explicit: {
        json patterns = json::array();
        for (const Graph& p : family.patterns()) {
            json edges = json::array();
            for (const Edge& e : p.edges())
                edges.push_back({e.u, e.v});
            patterns.push_back(edges);
        }
        return {{"variant", "explicit"}, {"patterns", patterns}};
    }
    }
    return {};
}

TuranFamily parse_turan_family(const std::string& text) {
    if (!text.empty() && text.front() == '{')
        return turan_family_from_json(json::parse(text));
    if (text == "empty")
        return TuranFamily::empty();
    if (text.rfind("girth:", 0) == 0)
        return TuranFamily::girth_greater(parse_count(text.substr(6), "girth bound"));
    if (text.rfind("cycles:", 0) == 0) {
        std::vector<Graph> patterns;
        for (const std::string& len : split(text.substr(7), ','))
            patterns.push_back(cycle_graph(parse_count(len, "cycle length")));
        return TuranFamily::explicit_patterns(std::move(patterns));
    }
    throw std::invalid_argument("unknown family '" + text + "'");
}

double parse_probability(const std::string& text, const Graph& g) {
    double p = 0.0;
    if (text.rfind("auto(", 0) == 0 && text.size() > 6 && text.back() == ')') {
        const double c = parse_real(text.substr(5, text.size() - 6), "auto() constant");
        const std::size_t k = degree_stats(g).min;
        if (k == 0)
            throw std::invalid_argument("auto(c) needs a graph with positive minimum degree");
        p = c / static_cast<double>(k);
    } else {
        p = parse_real(text, "probability");
    }
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("probability " + format_double(p) + " outside [0, 1]");
    return p;
}

std::vector<double> parse_grid(const std::string& text, const Graph& g) {
    const auto parts = split(text, ':');
    if (parts.size() == 1)
        return {parse_probability(parts[0], g)};
    if (parts.size() != 3)
        throw std::invalid_argument("grid must be 'a:b:count' or a single value");
    const double a = parse_probability(parts[0], g);
    const double b = parse_probability(parts[1], g);
    const std::uint64_t count = parse_count(parts[2], "grid size");
    if (count == 0)
        throw std::invalid_argument("grid size must be positive");
    if (b < a)
        throw std::invalid_argument("grid must be ascending");
    if (count == 1)
        return {a};
    std::vector<double> out;
    for (std::uint64_t i = 0; i < count; ++i)
        out.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
    out.back() = b;
    return out;
}

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

}  // namespace percolab
