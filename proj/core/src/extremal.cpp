#include "percolab/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "percolab/containment.hpp"

namespace percolab {

TuranFamily TuranFamily::girth_greater(std::size_t g) {
    if (g < 3)
        throw std::invalid_argument("girth bound must be at least 3");
    return TuranFamily(Variant::GirthGreater, g, {});
}

TuranFamily TuranFamily::explicit_patterns(std::vector<Graph> patterns) {
    for (const Graph& p : patterns) {
        if (p.order() > kMaxPatternOrder)
            throw std::invalid_argument("pattern exceeds " + std::to_string(kMaxPatternOrder) + " vertices");
        if (p.order() == 0 || components(p).count() != 1)
            throw std::invalid_argument("family patterns must be connected");
        if (excess(p) == 0)
            throw std::invalid_argument("family patterns must contain a cycle");
    }
    return TuranFamily(Variant::Explicit, 0, std::move(patterns));
}

std::vector<Graph> TuranFamily::as_patterns() const {
    switch (variant_) {
    case Variant::Empty:
        return {};
    case Variant::GirthGreater: {
        std::vector<Graph> out;
        for (std::size_t len = 3; len <= g_; ++len)
            out.push_back(cycle_graph(len));
        return out;
    }
    case Variant::Explicit:
        return patterns_;
    }
    return {};
}

bool TuranFamily::contains_no_bipartite() const {
    switch (variant_) {
    case Variant::Empty:
        return true;
    case Variant::GirthGreater:
        return g_ == 3;
    case Variant::Explicit:
        return std::none_of(patterns_.begin(), patterns_.end(), [](const Graph& p) { return is_bipartite(p); });
    }
    return false;
}

std::string TuranFamily::describe() const {
    switch (variant_) {
    case Variant::Empty:
        return "empty";
    case Variant::GirthGreater:
        return "girth>" + std::to_string(g_);
    case Variant::Explicit:
        return "explicit[" + std::to_string(patterns_.size()) + "]";
    }
    return "?";
}

namespace {

std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// Branch and bound over the C(n,2) pairs in lexicographic order.
class ExSearch {
public:
    ExSearch(std::size_t n, const TuranFamily& family) : family_(family) {
        host_.rows.assign(n, 0);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                pairs_.push_back({u, v});
        if (family.variant() == TuranFamily::Variant::Explicit) {
            for (const Graph& p : family.patterns())
                plans_.push_back(edge_rooted_plans(p));
        }
    }

    std::uint64_t run() {
        best_ = 0;
        descend(0, 0);
        return best_;
    }

private:
    // Shortest a-b distance in the current host, capped at `limit + 1`.
    std::size_t distance(Vertex a, Vertex b, std::size_t limit) const {
        std::uint32_t frontier = 1u << a, seen = frontier;
        for (std::size_t d = 1; d <= limit; ++d) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f; f &= f - 1)
                next |= host_.rows[static_cast<std::size_t>(__builtin_ctz(f))];
            next &= ~seen;
            if ((next >> b) & 1u)
                return d;
            if (!next)
                break;
            seen |= next;
            frontier = next;
        }
        return limit + 1;
    }

    // Whether the host, which already contains {a, b}, now holds a forbidden pattern.
    bool completes_pattern(Vertex a, Vertex b) {
        switch (family_.variant()) {
        case TuranFamily::Variant::Empty:
            return false;
        case TuranFamily::Variant::GirthGreater: {
            // A cycle through {a,b} of length <= g is a path of length <= g-1
            // avoiding that edge.
            const std::uint32_t ra = host_.rows[a], rb = host_.rows[b];
            host_.rows[a] &= ~(1u << b);
            host_.rows[b] &= ~(1u << a);
            const std::size_t g = family_.girth_bound();
            const bool closes = distance(a, b, g - 1) <= g - 1;
            host_.rows[a] = ra;
            host_.rows[b] = rb;
            return closes;
        }
        case TuranFamily::Variant::Explicit:
            for (const auto& plans : plans_) {
                if (contains_through_edge(host_, std::span<const detail::PatternPlan>(plans), a, b))
                    return true;
            }
            return false;
        }
        return false;
    }

    void descend(std::size_t idx, std::uint64_t count) {
        if (count + (pairs_.size() - idx) <= best_)
            return;
        if (idx == pairs_.size()) {
            best_ = count;
            return;
        }
        const auto [a, b] = pairs_[idx];
        host_.rows[a] |= 1u << b;
        host_.rows[b] |= 1u << a;
        if (!completes_pattern(a, b))
            descend(idx + 1, count + 1);
        host_.rows[a] &= ~(1u << b);
        host_.rows[b] &= ~(1u << a);
        descend(idx + 1, count);
    }

    const TuranFamily& family_;
    BitHost host_;
    std::vector<Edge> pairs_;
    std::vector<std::vector<detail::PatternPlan>> plans_;
    std::uint64_t best_ = 0;
};

}  // namespace

std::uint64_t ex_bruteforce(std::size_t n, const TuranFamily& family) {
    if (n > kMaxBruteForceOrder)
        throw std::invalid_argument("ex_bruteforce: n=" + std::to_string(n) + " exceeds " +
                                    std::to_string(kMaxBruteForceOrder));
    if (family.variant() == TuranFamily::Variant::Empty)
        return choose2(n);
    return ExSearch(n, family).run();
}

ExBracket ex_bracket(std::uint64_t n, const TuranFamily& family, BracketConstants constants) {
    ExBracket b;
    b.n = n;
    const std::uint64_t all = choose2(n);
    auto set_exact = [&](std::uint64_t value) {
        b.lower = b.upper = value;
        b.exact = value;
    };
    switch (family.variant()) {
    case TuranFamily::Variant::Empty:
        set_exact(all);
        break;
    case TuranFamily::Variant::GirthGreater: {
        const std::size_t g = family.girth_bound();
        if (g == 3) {
            set_exact(n * n / 4);
            break;
        }
        const double nd = static_cast<double>(n);
        const double t = static_cast<double>(g / 2);
        const double up = constants.upper_scale * 0.5 * (std::pow(nd, 1.0 + 1.0 / t) + nd);
        const double lo = std::floor(constants.lower_scale * 0.25 * std::pow(nd, 1.0 + 1.0 / static_cast<double>(g - 1)));
        b.upper = std::min<std::uint64_t>(all, static_cast<std::uint64_t>(std::floor(std::max(0.0, up) + 1e-9)));
        b.lower = std::min<std::uint64_t>(b.upper, static_cast<std::uint64_t>(std::max(0.0, lo)));
        b.heuristic = true;
        break;
    }
    case TuranFamily::Variant::Explicit:
        if (n <= kMaxBruteForceOrder) {
            set_exact(ex_bruteforce(static_cast<std::size_t>(n), family));
        } else {
            b.lower = 0;
            b.upper = all;
            b.available = false;
        }
        break;
    }
    return b;
}

namespace {

// Brute-force results are reused across the scans below.
class BracketCache {
public:
    BracketCache(const TuranFamily& family, BracketConstants constants) : family_(family), constants_(constants) {}

    ExBracket at(std::uint64_t n) {
        if (family_.variant() != TuranFamily::Variant::Explicit || n > kMaxBruteForceOrder)
            return ex_bracket(n, family_, constants_);
        auto it = cache_.find(n);
        if (it == cache_.end())
            it = cache_.emplace(n, ex_bracket(n, family_, constants_)).first;
        return it->second;
    }

private:
    const TuranFamily& family_;
    BracketConstants constants_;
    std::map<std::uint64_t, ExBracket> cache_;
};

// Largest vertex count any scan evaluates; keeps C(n,2) within 64 bits.
constexpr std::uint64_t kScanLimit = std::uint64_t{1} << 31;
constexpr std::uint64_t kLinearScan = 4096;

// a <= b with a relative slack for floating-point ties.
bool within(long double a, long double b) {
    return a <= b + 1e-12L * std::max<long double>(1.0L, std::fabs(b));
}

// Smallest x in [1, limit] with pred(x). Checks every x up to kLinearScan,
// then gallops and bisects. Past the brute-force range every bracket side is
// either a closed formula or identically zero, and the predicates used here
// stay true once they turn true (up to the rounding in ceil(6l/eps)).
template <class Pred>
std::optional<std::uint64_t> first_where(Pred&& pred, std::uint64_t limit) {
    const std::uint64_t linear = std::min(limit, kLinearScan);
    for (std::uint64_t x = 1; x <= linear; ++x)
        if (pred(x))
            return x;
    std::uint64_t lo = linear;  // pred(lo) is false
    std::uint64_t step = linear;
    while (lo < limit) {
        std::uint64_t hi = std::min(limit, lo + step);
        if (pred(hi)) {
            while (hi - lo > 1) {
                const std::uint64_t mid = lo + (hi - lo) / 2;
                (pred(mid) ? hi : lo) = mid;
            }
            return hi;
        }
        lo = hi;
        step *= 2;
    }
    return std::nullopt;
}

}  // namespace
NhBracket n_h_bracket(double k, const TuranFamily& family, BracketConstants constants) {
    if (!(k > 0))
        throw std::invalid_argument("n_h_bracket: k must be positive");
    BracketCache cache(family, constants);
    auto qualifies = [&](std::uint64_t n, bool upper) {
        const ExBracket b = cache.at(n);
        return within(static_cast<long double>(n) * k, 2.0L * (upper ? b.upper : b.lower));
    };
    const auto lo = first_where([&](std::uint64_t n) { return qualifies(n, true); }, kScanLimit);
    if (!lo)
        throw std::runtime_error("n_h_bracket: scan limit reached");
    NhBracket out;
    out.lo = *lo;
    out.hi = first_where([&](std::uint64_t n) { return qualifies(n, false); }, kScanLimit);
    return out;
}

namespace {

// Largest lengths l >= 1 for which the budget holds, scanning from l = 1 and
// stopping at the first failure. `fits(l, upper)` tests one bracket side.
template <class Fits>
LengthBudget scan_budget(Fits&& fits, std::uint64_t limit) {
    LengthBudget out;
    const auto lo_fail = first_where([&](std::uint64_t len) { return !fits(len, true); }, limit);
    if (!lo_fail)
        throw std::runtime_error("length budget: scan limit reached");
    out.lo = *lo_fail - 1;
    if (const auto hi_fail = first_where([&](std::uint64_t len) { return !fits(len, false); }, limit))
        out.hi = *hi_fail - 1;
    return out;
}

}  // namespace

LengthBudget path_len_budget(double k, double eps, const TuranFamily& family, BracketConstants constants) {
    if (!(k >= 1))
        throw std::invalid_argument("path_len_budget: k must be at least 1");
    if (!(eps > 0 && eps < 1))
        throw std::invalid_argument("path_len_budget: eps must lie in (0, 1)");
    BracketCache cache(family, constants);
    auto fits = [&](std::uint64_t len, bool upper) {
        const auto m = static_cast<std::uint64_t>(std::ceil(6.0L * len / eps - 1e-9L));
        const ExBracket b = cache.at(m);
        // ex(m)/l <= k/2  <=>  2 ex(m) <= k l
        return within(2.0L * (upper ? b.upper : b.lower), static_cast<long double>(k) * len);
    };
    const auto limit = static_cast<std::uint64_t>(std::floor(static_cast<long double>(kScanLimit) * eps / 6.0L));
    return scan_budget(fits, limit);
}

LengthBudget cycle_len_budget(double k, double c, const TuranFamily& family, BracketConstants constants) {
    if (!(c > 0))
        throw std::invalid_argument("cycle_len_budget: c must be positive");
    if (!(k > 0))
        throw std::invalid_argument("cycle_len_budget: k must be positive");
    BracketCache cache(family, constants);
    auto fits = [&](std::uint64_t len, bool upper) {
        const ExBracket b = cache.at(len);
        // ex(l) <= ckl/20  <=>  20 ex(l) <= ckl
        return within(20.0L * (upper ? b.upper : b.lower), static_cast<long double>(c) * k * len);
    };
    return scan_budget(fits, kScanLimit);
}

double binom_tail_bound(std::uint64_t n, double p, TailMode mode) {
    if (!(p >= 0 && p <= 1))
        throw std::invalid_argument("binom_tail_bound: p must lie in [0, 1]");
    const double mean = static_cast<double>(n) * p;
    if (const auto* ch = std::get_if<ChernoffTail>(&mode)) {
        if (!(ch->a > 0 && ch->a <= mean / 2))
            throw std::invalid_argument("binom_tail_bound: Chernoff needs 0 < a <= np/2");
        return 2.0 * std::exp(-ch->a * ch->a / (4.0 * mean));
    }
    const double kappa = std::get<MultiplicativeTail>(mode).kappa;
    if (!(kappa > 0))
        throw std::invalid_argument("binom_tail_bound: kappa must be positive");
    return std::exp(kappa * mean * (1.0 - std::log(kappa)));
}

double solve_c0() {
    auto f = [](double c) { return c / 2.0 - 1.0 + std::exp(-c); };
    double lo = 1.0, hi = 2.0;  // f(1) < 0 < f(2)
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace percolab
