#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "percolab/containment.hpp"
#include "percolab/generators.hpp"
#include "percolab/graph.hpp"

using namespace percolab;

namespace {

Graph triangle() {
    const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}};
    return Graph::build(3, e);
}

GraphError::Kind build_error(std::size_t n, std::vector<Edge> edges, Edge* offending = nullptr) {
    try {
        Graph::build(n, edges);
    } catch (const GraphError& err) {
        if (offending)
            *offending = err.offending();
        return err.kind();
    }
    FAIL("build accepted an invalid edge list");
    return GraphError::Kind::Format;
}

}  // namespace

TEST_CASE("build: valid inputs and canonical layout") {
    const Graph t = triangle();
    CHECK(t.order() == 3);
    CHECK(t.size() == 3);
    CHECK(t.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});

    const Graph empty = Graph::build(4, {});
    CHECK(empty.order() == 4);
    CHECK(empty.size() == 0);

    const std::vector<Edge> mixed{{3, 1}, {0, 2}, {2, 1}, {0, 3}};
    const Graph g = Graph::build(4, mixed);
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto nb = g.neighbors(v);
        CHECK(std::is_sorted(nb.begin(), nb.end()));
        for (std::size_t i = 0; i < nb.size(); ++i) {
            CHECK(g.has_edge(nb[i], v));
            const Edge& e = g.edge(g.incident_edges(v)[i]);
            CHECK(e == Edge{std::min(v, nb[i]), std::max(v, nb[i])});
        }
    }
    CHECK(g.edge_id(1, 3) == g.edge_id(3, 1));
    CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("build: rejects malformed edge lists with the offending pair") {
    Edge bad;
    CHECK(build_error(3, {{0, 1}, {0, 1}}, &bad) == GraphError::Kind::DuplicateEdge);
    CHECK(bad == Edge{0, 1});
    CHECK(build_error(3, {{0, 1}, {2, 1}, {1, 2}}, &bad) == GraphError::Kind::DuplicateEdge);
    CHECK(bad == Edge{1, 2});
    CHECK(build_error(3, {{1, 1}}, &bad) == GraphError::Kind::SelfLoop);
    CHECK(build_error(3, {{0, 3}}, &bad) == GraphError::Kind::VertexOutOfRange);
    CHECK(bad == Edge{0, 3});
}

TEST_CASE("degree_stats") {
    const auto t = degree_stats(triangle());
    CHECK(t.min == 2);
    CHECK(t.avg == doctest::Approx(2.0));
    CHECK(t.max == 2);

    const auto p = degree_stats(path_graph(3));
    CHECK(p.min == 1);
    CHECK(p.avg == doctest::Approx(4.0 / 3.0));
    CHECK(p.max == 2);

    const auto pet = degree_stats(petersen_graph());
    CHECK(pet.min == 3);
    CHECK(pet.max == 3);
    CHECK(petersen_graph().size() == 15);
}

TEST_CASE("components and excess") {
    const std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
    const auto c = components(Graph::build(4, e));
    CHECK(c.count() == 2);
    CHECK(c.sizes == std::vector<std::size_t>{3, 1});
    CHECK(c.component_of == std::vector<std::uint32_t>{0, 0, 0, 1});

    CHECK(components(Graph::build(4, {})).count() == 4);
    CHECK(components(complete(5)).count() == 1);

    CHECK(excess(path_graph(7)) == 0);
    CHECK(excess(triangle()) == 1);
    CHECK(excess(petersen_graph()) == 6);
    CHECK(excess(Graph::build(0, {})) == 0);
}

TEST_CASE("induced subgraphs") {
    const std::vector<Vertex> a{0, 1, 2};
    CHECK(induced(complete(4), a).graph == complete(3));

    const auto none = induced(petersen_graph(), {});
    CHECK(none.graph.order() == 0);
    CHECK(excess(none.graph) == 0);

    const std::vector<Vertex> outer{4, 3, 2, 1, 0, 3};
    const auto sub = induced(petersen_graph(), outer);
    CHECK(sub.graph == cycle_graph(5));
    CHECK(sub.to_parent == std::vector<Vertex>{0, 1, 2, 3, 4});

    const std::vector<Vertex> bad{0, 10};
    CHECK_THROWS_AS(induced(petersen_graph(), bad), GraphError);
}

TEST_CASE("girth with witnesses") {
    CHECK(girth(complete(4)).length == 3u);
    CHECK(girth(path_graph(6)).infinite());
    CHECK(girth(Graph::build(5, {})).infinite());

    const Girth pg = girth(petersen_graph());
    REQUIRE(pg.length == 5u);
    REQUIRE(pg.cycle.size() == 5);
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(petersen_graph().has_edge(pg.cycle[i], pg.cycle[(i + 1) % 5]));

    const Graph heawood = pp_incidence(2);
    CHECK(girth(heawood).length == 6u);
    CHECK(oracle::shortest_cycle(heawood) == 6);
    CHECK(oracle::shortest_cycle(petersen_graph()) == 5);
}

TEST_CASE("girth agrees with exhaustive cycle search on random graphs") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 300; ++it) {
        const std::size_t n = 3 + it % 9;
        const Graph g = oracle::random_graph(n, 0.15 + 0.05 * (it % 8), rng);
        const Girth gi = girth(g);
        const std::size_t want = oracle::shortest_cycle(g);
        if (want == 0) {
            CHECK(gi.infinite());
            CHECK(excess(g) == 0);
        } else {
            REQUIRE(gi.length == want);
            CHECK(excess(g) >= 1);
            const std::set<Vertex> distinct(gi.cycle.begin(), gi.cycle.end());
            CHECK(distinct.size() == want);
            for (std::size_t i = 0; i < want; ++i)
                CHECK(g.has_edge(gi.cycle[i], gi.cycle[(i + 1) % want]));
        }
    }
}

TEST_CASE("is_h_free: examples and witnesses") {
    const std::vector<Graph> c3{cycle_graph(3)};
    const auto k4 = is_h_free(complete(4), c3);
    CHECK_FALSE(k4.free);
    REQUIRE(k4.embedding.size() == 3);
    CHECK(complete(4).has_edge(k4.embedding[0], k4.embedding[1]));

    const std::vector<Graph> c34{cycle_graph(3), cycle_graph(4)};
    CHECK(is_h_free(cycle_graph(5), c34).free);

    const std::vector<Graph> c5{cycle_graph(5)};
    const auto pet = is_h_free(petersen_graph(), c5);
    CHECK_FALSE(pet.free);
    CHECK(pet.pattern == 0u);
    for (const Edge& e : c5[0].edges())
        CHECK(petersen_graph().has_edge(pet.embedding[e.u], pet.embedding[e.v]));

    const std::vector<Graph> big{complete(11)};
    CHECK_THROWS_AS(is_h_free(complete(12), big), std::invalid_argument);
}

TEST_CASE("is_h_free over cycles matches girth on every graph with at most 6 vertices") {
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<Edge> pairs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                pairs.push_back({u, v});
        for (std::uint32_t bits = 0; bits < (1u << pairs.size()); ++bits) {
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (bits >> i & 1)
                    edges.push_back(pairs[i]);
            const Graph g = Graph::build(n, edges);
            const Girth gi = girth(g);
            for (std::size_t gmax = 3; gmax <= 6; ++gmax) {
                std::vector<Graph> cycles;
                for (std::size_t len = 3; len <= gmax; ++len)
                    cycles.push_back(cycle_graph(len));
                if (is_h_free(g, cycles).free != gi.exceeds(gmax)) {
                    FAIL_CHECK("mismatch at n=" << n << " mask=" << bits << " g=" << gmax);
                }
            }
        }
    }
}

TEST_CASE("is_h_free agrees with brute-force embedding on random small patterns") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 400; ++it) {
        const Graph host = oracle::random_graph(4 + it % 4, 0.5, rng);
        Graph pattern = oracle::random_graph(3 + it % 3, 0.6, rng);
        const std::vector<Graph> one{pattern};
        const auto res = is_h_free(host, one);
        CHECK(res.free == !oracle::contains_subgraph(host, pattern));
        if (!res.free)
            for (const Edge& e : pattern.edges())
                CHECK(host.has_edge(res.embedding[e.u], res.embedding[e.v]));
    }
}

TEST_CASE("excess: subgraph monotonicity and edge-Lipschitz") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 1000; ++it) {
        const std::size_t n = 2 + it % 30;
        const Graph g = oracle::random_graph(n, 0.3, rng);
        std::vector<Edge> kept;
        for (const Edge& e : g.edges())
            if (rng() & 1)
                kept.push_back(e);
        const Graph u = Graph::build(n, kept);
        CHECK(excess(u) <= excess(g));

        if (kept.size() < g.size()) {
            std::vector<Edge> missing;
            for (const Edge& e : g.edges())
                if (!u.has_edge(e.u, e.v))
                    missing.push_back(e);
            kept.push_back(missing[rng() % missing.size()]);
            const auto grown = excess(Graph::build(n, kept));
            CHECK((grown == excess(u) || grown == excess(u) + 1));
        }
    }
}

TEST_CASE("edge-list round trip and reader errors") {
    std::ostringstream out;
    write_edge_list(out, petersen_graph());
    std::istringstream in(out.str());
    CHECK(read_edge_list(in) == petersen_graph());

    auto parse = [](const std::string& text) {
        std::istringstream s(text);
        return read_edge_list(s);
    };
    CHECK(parse("3 0\n").size() == 0);
    auto kind_of = [&](const std::string& text) {
        try {
            parse(text);
        } catch (const GraphError& e) {
            return e.kind();
        }
        FAIL("reader accepted '" << text << "'");
        return GraphError::Kind::SelfLoop;
    };
    CHECK(kind_of("3 2\n0 1\n0 1\n") == GraphError::Kind::DuplicateEdge);
    CHECK(kind_of("3 1\n1 1\n") == GraphError::Kind::SelfLoop);
    CHECK(kind_of("3 1\n0 3\n") == GraphError::Kind::VertexOutOfRange);
    CHECK(kind_of("3 1\n2 1\n") == GraphError::Kind::Format);
    CHECK(kind_of("3 2\n0 1\n") == GraphError::Kind::Format);
    CHECK(kind_of("3 1\n0 1\n1 2\n") == GraphError::Kind::Format);
    CHECK(kind_of("x\n") == GraphError::Kind::Format);
}

TEST_CASE("bipartiteness") {
    CHECK(is_bipartite(cycle_graph(6)));
    CHECK_FALSE(is_bipartite(cycle_graph(5)));
    CHECK(is_bipartite(pp_incidence(3)));
    CHECK(is_bipartite(Graph::build(3, {})));
}
