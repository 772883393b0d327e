#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "percolab/graph.hpp"

namespace percolab {

/// A forbidden family H for Turán-type bounds.
///
///  - Empty: no constraint.
///  - GirthGreater(g): all cycles of length 3..g are forbidden (girth > g).
///  - Explicit: a finite list of connected graphs, each containing a cycle.
class TuranFamily {
public:
    enum class Variant { Empty, GirthGreater, Explicit };

    static TuranFamily empty() { return TuranFamily(Variant::Empty, 0, {}); }
    static TuranFamily girth_greater(std::size_t g);
    // Throws std::invalid_argument unless every pattern is connected, has a
    // cycle, and has at most kMaxPatternOrder vertices.
    static TuranFamily explicit_patterns(std::vector<Graph> patterns);

    Variant variant() const noexcept { return variant_; }
    std::size_t girth_bound() const noexcept { return g_; }
    const std::vector<Graph>& patterns() const noexcept { return patterns_; }

    // Forbidden subgraphs as explicit graphs; GirthGreater(g) gives C_3..C_g.
    std::vector<Graph> as_patterns() const;
    bool contains_no_bipartite() const;
    std::string describe() const;

private:
    TuranFamily(Variant v, std::size_t g, std::vector<Graph> p) : variant_(v), g_(g), patterns_(std::move(p)) {}

    Variant variant_;
    std::size_t g_;
    std::vector<Graph> patterns_;
};

/// Exact ex(n, H) by exhaustive search over labeled graphs on n <= 8
/// vertices: edges are added in canonical order, a branch dies as soon as it
/// completes a forbidden pattern or cannot beat the best count found.
std::uint64_t ex_bruteforce(std::size_t n, const TuranFamily& family);

inline constexpr std::size_t kMaxBruteForceOrder = 8;

struct BracketConstants {
    double upper_scale = 1.0;  // C_up
    double lower_scale = 1.0;  // C_lo
};

struct ExBracket {
    std::uint64_t n = 0;
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    std::optional<std::uint64_t> exact;
    bool available = true;  // false for explicit families beyond brute-force range
    bool heuristic = false; // lower side rests on a formula without a proven constant
};

/// Edge-count bracket for ex(n, H):
///  - Empty: exact C(n,2).
///  - GirthGreater(3): exact floor(n^2/4).
///  - GirthGreater(g >= 4), t = floor(g/2): upper = C_up * (n^{1+1/t} + n)/2,
///    lower = floor(C_lo * n^{1+1/(g-1)} / 4), both clipped to [0, C(n,2)].
///  - Explicit: exact for n <= 8, otherwise the unavailable bracket [0, C(n,2)].
ExBracket ex_bracket(std::uint64_t n, const TuranFamily& family, BracketConstants constants = {});

/// n_lo is the smallest n with n*k <= 2*upper(n), n_hi the smallest with
/// n*k <= 2*lower(n); n_hi is empty if the lower side never qualifies.
struct NhBracket {
    std::uint64_t lo = 0;
    std::optional<std::uint64_t> hi;
};

NhBracket n_h_bracket(double k, const TuranFamily& family, BracketConstants constants = {});

/// Largest lengths meeting a Turán-type budget, using the upper side of the
/// bracket (lo, always valid) and the lower side (hi). Zero means no length
/// qualifies; an empty hi means the scan never failed within its range.
struct LengthBudget {
    std::uint64_t lo = 0;
    std::optional<std::uint64_t> hi;
};

/// Largest l with ex(ceil(6l/eps), H) / l <= k/2.
LengthBudget path_len_budget(double k, double eps, const TuranFamily& family, BracketConstants constants = {});

/// Largest l with ex(l, H) <= c*k*l/20.
LengthBudget cycle_len_budget(double k, double c, const TuranFamily& family, BracketConstants constants = {});

struct ChernoffTail {
    double a;  // bounds P(|X - np| > a), needs 0 < a <= np/2
};
struct MultiplicativeTail {
    double kappa;  // bounds P(X > kappa*np), needs kappa > 0
};
using TailMode = std::variant<ChernoffTail, MultiplicativeTail>;

/// Closed-form binomial tail bounds for X ~ Bin(n, p):
/// 2 exp(-a^2 / (4np)) and (e/kappa)^{kappa np}.
double binom_tail_bound(std::uint64_t n, double p, TailMode mode);

/// Positive root of c/2 - 1 + e^{-c} = 0, by bisection on [1, 2].
double solve_c0();

}  // namespace percolab
