#include "percolab/dfs.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace percolab {

namespace {

enum class Where : std::uint8_t { T, U, S };

template <class Answer>
DfsRun explore(const Graph& g, Answer&& answer, DfsOptions options) {
    const std::size_t n = g.order();
    DfsRun run;
    run.base = &g;
    run.parent.assign(n, 0);
    run.depth.assign(n, 0);

    std::vector<Where> where(n, Where::T);
    std::vector<std::size_t> cursor(n, 0);
    std::vector<std::uint8_t> queried(g.size(), 0);
    std::vector<Vertex> stack;
    std::size_t query_index = 0;
    std::size_t in_s = 0;
    Vertex next_root = 0;
    Vertex max_top = 0;

    if (options.record_log) {
        run.rounds.reserve(2 * n);
        run.query_log.reserve(g.size());
    }

    auto record_round = [&](Move move, Vertex v) {
        if (!options.record_log)
            return;
        const auto u = static_cast<std::uint32_t>(stack.size());
        const auto s = static_cast<std::uint32_t>(in_s);
        run.rounds.push_back({move, v, s, u, static_cast<std::uint32_t>(n - in_s - u), run.query_log.size()});
    };
    auto note_push = [&](Vertex v) {
        stack.push_back(v);
        where[v] = Where::U;
        if (stack.size() > run.max_u) {
            run.max_u = stack.size();
            max_top = v;
        }
    };

    for (std::size_t round = 0; round < 2 * n; ++round) {
        if (stack.empty()) {
            while (where[next_root] != Where::T)
                ++next_root;
            const Vertex r = next_root;
            run.parent[r] = r;
            run.depth[r] = 0;
            run.roots.push_back(r);
            run.tree_sizes.push_back(1);
            note_push(r);
            record_round(Move::Root, r);
            continue;
        }
        const Vertex v = stack.back();
        const auto nbrs = g.neighbors(v);
        const auto eids = g.incident_edges(v);
        bool pushed = false;
        while (cursor[v] < nbrs.size()) {
            const std::size_t i = cursor[v]++;
            const Vertex w = nbrs[i];
            if (where[w] != Where::T)
                continue;
            const EdgeId e = eids[i];
            const bool yes = answer(e, query_index++);
            queried[e] = 1;
            ++run.phase1_queries;
            if (options.record_log)
                run.query_log.push_back({v, w, e, yes, Phase::One});
            if (yes) {
                ++run.phase1_positive;
                run.parent[w] = v;
                run.depth[w] = run.depth[v] + 1;
                ++run.tree_sizes.back();
                note_push(w);
                record_round(Move::Push, w);
                pushed = true;
                break;
            }
        }
        if (!pushed) {
            stack.pop_back();
            where[v] = Where::S;
            ++in_s;
            record_round(Move::Pop, v);
        }
    }

    for (Vertex x = max_top; run.max_u > 0; x = run.parent[x]) {
        run.max_u_path.push_back(x);
        if (run.parent[x] == x)
            break;
    }
    std::reverse(run.max_u_path.begin(), run.max_u_path.end());

    for (EdgeId e = 0; e < g.size(); ++e) {
        if (queried[e])
            continue;
        const Edge& ed = g.edge(e);
        const bool u_above = run.depth[ed.u] <= run.depth[ed.v];
        const Vertex anc = u_above ? ed.u : ed.v;
        const Vertex desc = u_above ? ed.v : ed.u;
        run.unqueried.push_back({anc, desc, e, run.depth[desc] - run.depth[anc]});
    }
    std::stable_sort(run.unqueried.begin(), run.unqueried.end(),
                     [](const TreePair& a, const TreePair& b) { return a.len < b.len; });

    for (const TreePair& pair : run.unqueried) {
        const bool yes = answer(pair.edge, query_index++);
        if (options.record_log)
            run.query_log.push_back({pair.ancestor, pair.descendant, pair.edge, yes, Phase::Two});
        if (yes) {
            ++run.phase2_positive;
            run.back_edges.push_back(pair);
        }
    }
    return run;
}

}  // namespace

std::size_t DfsRun::largest_tree() const noexcept {
    return tree_sizes.empty() ? 0 : *std::max_element(tree_sizes.begin(), tree_sizes.end());
}

DfsRun run(const Graph& g, const EdgeMask& subgraph, DfsOptions options) {
    if (subgraph.size() != g.size())
        throw std::invalid_argument("dfs run: subgraph mask does not match base graph");
    return explore(g, [&](EdgeId e, std::size_t) { return subgraph.test(e); }, options);
}

DfsRun run(const Graph& g, const SubgraphSample& sample, DfsOptions options) {
    if (&sample.base() != &g)
        throw std::invalid_argument("dfs run: sample was drawn from a different base graph");
    return run(g, sample.kept(), options);
}

std::size_t BitTrace::ones() const noexcept {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

std::string BitTrace::to_string() const {
    std::string s(bits.size(), '0');
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i])
            s[i] = '1';
    return s;
}

BitTrace BitTrace::from_string(const std::string& text) {
    BitTrace t;
    t.bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("bit trace may only contain '0' and '1'");
        t.bits.push_back(c == '1');
    }
    return t;
}

BitTrace encode(const Graph& g, const EdgeMask& subgraph) {
    if (subgraph.size() != g.size())
        throw std::invalid_argument("encode: subgraph mask does not match base graph");
    BitTrace trace;
    trace.bits.reserve(g.size());
    explore(
        g,
        [&](EdgeId e, std::size_t) {
            const bool yes = subgraph.test(e);
            trace.bits.push_back(yes);
            return yes;
        },
        DfsOptions{.record_log = false});
    return trace;
}

BitTrace encode(const Graph& g, const SubgraphSample& sample) {
    if (&sample.base() != &g)
        throw std::invalid_argument("encode: sample was drawn from a different base graph");
    return encode(g, sample.kept());
}

EdgeMask decode(const Graph& g, const BitTrace& bits) {
    if (bits.size() != g.size())
        throw std::invalid_argument("decode: trace has length " + std::to_string(bits.size()) + ", expected " +
                                    std::to_string(g.size()));
    EdgeMask mask(g.size());
    explore(
        g,
        [&](EdgeId e, std::size_t i) {
            const bool yes = bits.bits[i] != 0;
            if (yes)
                mask.set(e);
            return yes;
        },
        DfsOptions{.record_log = false});
    return mask;
}

std::vector<Vertex> longest_path_certificate(const DfsRun& run) { return run.max_u_path; }

std::optional<CycleCertificate> longest_cycle_certificate(const DfsRun& run) {
    if (run.back_edges.empty())
        return std::nullopt;
    const TreePair* best = &run.back_edges.front();
    for (const TreePair& p : run.back_edges)
        if (p.len > best->len)
            best = &p;
    CycleCertificate cert;
    cert.closing = *best;
    for (Vertex x = best->descendant;; x = run.parent[x]) {
        cert.cycle.push_back(x);
        if (x == best->ancestor)
            break;
    }
    std::reverse(cert.cycle.begin(), cert.cycle.end());
    cert.cycle.push_back(best->ancestor);
    return cert;
}

std::size_t long_unqueried_count(const DfsRun& run, std::size_t len) {
    return static_cast<std::size_t>(std::count_if(run.unqueried.begin(), run.unqueried.end(),
                                                  [&](const TreePair& p) { return p.len >= len; }));
}

namespace {

class Violations {
public:
    template <class... Parts>
    void add(const Parts&... parts) {
        if (list_.size() >= kCap)
            return;
        std::ostringstream os;
        (os << ... << parts);
        list_.push_back(os.str());
    }
    std::vector<std::string> take() { return std::move(list_); }

private:
    static constexpr std::size_t kCap = 64;
    std::vector<std::string> list_;
};

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Vertex{0}); }
    Vertex find(Vertex x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(Vertex a, Vertex b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[b] = a;
        return true;
    }
    std::vector<Vertex> parent;
};

}  // namespace

std::vector<std::string> check_properties(const DfsRun& run) {
    Violations bad;
    if (run.base == nullptr) {
        bad.add("run has no base graph");
        return bad.take();
    }
    const Graph& g = *run.base;
    const std::size_t n = g.order();
    if (run.order() != n)
        bad.add("forest arrays sized ", run.order(), " for n=", n);
    if (run.rounds.size() != 2 * n) {
        bad.add("phase 1 has ", run.rounds.size(), " rounds, expected 2n=", 2 * n);
        return bad.take();
    }
    if (run.query_log.size() != g.size()) {
        bad.add("query log has ", run.query_log.size(), " entries, expected e(G)=", g.size());
        return bad.take();
    }

    // Every G-edge exactly once, and logged endpoints match the edge.
    std::vector<std::uint8_t> seen(g.size(), 0);
    std::vector<std::int8_t> said(g.size(), -1);  // answer per edge
    for (const Query& q : run.query_log) {
        if (q.edge >= g.size()) {
            bad.add("query about unknown edge ", q.edge);
            return bad.take();
        }
        const Edge& e = g.edge(q.edge);
        if (!((e.u == q.from && e.v == q.to) || (e.v == q.from && e.u == q.to)))
            bad.add("query ", q.from, "-", q.to, " logged with edge ", q.edge);
        if (seen[q.edge]++)
            bad.add("edge ", e.u, "-", e.v, " queried more than once");
        said[q.edge] = q.answer ? 1 : 0;
    }

    // G' as revealed by the answers, and its components.
    UnionFind uf(n);
    std::size_t components = n, positives = 0;
    for (const Query& q : run.query_log) {
        if (q.answer) {
            ++positives;
            components -= uf.unite(q.from, q.to);
        }
    }
    std::vector<std::vector<Vertex>> members(n);
    for (Vertex v = 0; v < n; ++v)
        members[uf.find(v)].push_back(v);

    // Replay phase 1.
    std::vector<Where> where(n, Where::T);
    std::vector<std::uint8_t> asked(g.size(), 0);
    std::vector<Vertex> stack;
    std::size_t qi = 0, in_s = 0, phase1_positive = 0;
    Vertex next_root = 0;
    for (std::size_t r = 0; r < run.rounds.size(); ++r) {
        const Round& round = run.rounds[r];
        if (round.query_end < qi || round.query_end > run.query_log.size()) {
            bad.add("round ", r, ": query range out of order");
            return bad.take();
        }
        if (stack.empty()) {
            while (next_root < n && where[next_root] != Where::T)
                ++next_root;
            if (round.move != Move::Root || round.vertex != next_root)
                bad.add("round ", r, ": U empty, expected smallest T vertex ", next_root, " as new root");
            if (round.query_end != qi)
                bad.add("round ", r, ": queries asked while U was empty");
            if (round.vertex >= n || where[round.vertex] != Where::T) {
                bad.add("round ", r, ": root is not in T");
                return bad.take();
            }
            where[round.vertex] = Where::U;
            stack.push_back(round.vertex);
        } else {
            const Vertex v = stack.back();
            std::optional<Vertex> positive;
            Vertex last_w = 0;
            bool first = true;
            for (; qi < round.query_end; ++qi) {
                const Query& q = run.query_log[qi];
                if (q.phase != Phase::One || q.from != v)
                    bad.add("round ", r, ": query ", qi, " not asked by top of U ", v);
                if (q.to >= n || where[q.to] != Where::T)
                    bad.add("round ", r, ": queried vertex ", q.to, " is not in T");
                if (!first && q.to <= last_w)
                    bad.add("round ", r, ": T vertices not examined in ascending order");
                if (positive)
                    bad.add("round ", r, ": query after a positive answer");
                if (q.answer)
                    positive = q.to;
                asked[q.edge] = 1;
                last_w = q.to;
                first = false;
            }
            // Every T-neighbor of v below the stopping point must have been asked.
            for (std::size_t i = 0; i < g.degree(v); ++i) {
                const Vertex w = g.neighbors(v)[i];
                const EdgeId e = g.incident_edges(v)[i];
                if (w >= n || where[w] != Where::T)
                    continue;
                if (positive && w >= *positive)
                    break;
                if (!asked[e] || said[e] != 0)
                    bad.add("round ", r, ": pair ", v, "-", w, " with w in T skipped or not negative");
            }
            if (positive) {
                ++phase1_positive;
                const std::size_t before = stack.size();
                if (round.move != Move::Push || round.vertex != *positive)
                    bad.add("round ", r, ": positive answer for ", *positive, " did not push it");
                where[*positive] = Where::U;
                stack.push_back(*positive);
                if (stack.size() != before + 1 || round.u != before + 1)
                    bad.add("round ", r, ": positive answer did not grow U by one");
                if (run.parent[*positive] != v || run.depth[*positive] != run.depth[v] + 1)
                    bad.add("round ", r, ": forest does not record ", v, " as parent of ", *positive);
            } else {
                if (round.move != Move::Pop || round.vertex != v)
                    bad.add("round ", r, ": top ", v, " had no T-neighbor but was not moved to S");
                // All S-T pairs are queried and negative: check the new S vertex.
                for (std::size_t i = 0; i < g.degree(v); ++i) {
                    const Vertex w = g.neighbors(v)[i];
                    const EdgeId e = g.incident_edges(v)[i];
                    if (where[w] == Where::T && (!asked[e] || said[e] != 0))
                        bad.add("round ", r, ": S vertex ", v, " and T vertex ", w, " not queried negative");
                }
                stack.pop_back();
                where[v] = Where::S;
                ++in_s;
                if (stack.empty()) {
                    // The finished tree must be a whole component of G', now in S.
                    for (Vertex x : members[uf.find(v)])
                        if (where[x] != Where::S) {
                            bad.add("round ", r, ": component of ", v, " not entirely in S when U emptied");
                            break;
                        }
                }
            }
        }
        // U spans a path of G'.
        if (stack.size() >= 2) {
            const auto e = g.edge_id(stack[stack.size() - 2], stack.back());
            if (!e || said[*e] != 1)
                bad.add("round ", r, ": consecutive U vertices ", stack[stack.size() - 2], "-", stack.back(),
                        " not adjacent in G'");
        }
        if (round.s != in_s || round.u != stack.size() || round.t != n - in_s - stack.size())
            bad.add("round ", r, ": recorded |S|,|U|,|T| disagree with replay");
    }
    if (in_s != n)
        bad.add("phase 1 ended with ", in_s, " of ", n, " vertices in S");
    if (qi != run.phase1_queries)
        bad.add("phase 1 query count ", run.phase1_queries, " but rounds cover ", qi);
    if (phase1_positive != run.phase1_positive || phase1_positive != n - run.roots.size())
        bad.add("phase 1 positives ", run.phase1_positive, " differ from n - #trees = ", n - run.roots.size());

    // Phase 2: remaining pairs are ancestor/descendant, in ascending len order.
    std::size_t phase2_positive = 0;
    std::optional<Query> prev;
    std::uint32_t prev_len = 0;
    for (std::size_t i = qi; i < run.query_log.size(); ++i) {
        const Query& q = run.query_log[i];
        if (q.phase != Phase::Two)
            bad.add("query ", i, " after phase 1 is not tagged phase 2");
        if (q.from >= n || q.to >= n)
            continue;
        std::uint32_t len = 0;
        Vertex x = q.to;
        while (x != q.from && run.parent[x] != x && len <= n) {
            x = run.parent[x];
            ++len;
        }
        if (x != q.from) {
            bad.add("phase 2 pair ", q.from, "-", q.to, " is not ancestor/descendant");
            continue;
        }
        const Edge& e = g.edge(q.edge);
        if (prev && (len < prev_len || (len == prev_len && g.edge(prev->edge) > e)))
            bad.add("phase 2 pair ", e.u, "-", e.v, " out of (len, endpoints) order");
        prev = q;
        prev_len = len;
        phase2_positive += q.answer;
    }
    if (phase2_positive != run.phase2_positive || phase2_positive != run.back_edges.size())
        bad.add("phase 2 positives ", phase2_positive, " disagree with recorded back edges ", run.back_edges.size());
    // exc(G') = e(G') - n + r; the forest carries no excess edges.
    if (phase2_positive != positives + components - n)
        bad.add("phase 2 positives ", phase2_positive, " differ from exc(G') = ", positives + components - n);
    if (run.unqueried.size() != run.query_log.size() - qi)
        bad.add("unqueried list has ", run.unqueried.size(), " pairs, phase 2 asked ", run.query_log.size() - qi);
    return bad.take();
}

}  // namespace percolab
