#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "satgame/canonical.hpp"
#include "satgame/graph.hpp"

namespace satgame {

// Exact fraction on 64-bit terms, always normalized with positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw DomainError("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double as_double() const { return double(num) / double(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    bool operator==(const Rational&) const = default;
    friend Rational operator+(Rational a, Rational b) {
        long long g = std::gcd(a.den, b.den);
        return Rational(a.num * (b.den / g) + b.num * (a.den / g), a.den / g * b.den);
    }
    friend bool operator<(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }
};

// Edge density of the layered pentagon packing on a fraction 1/k of the
// vertices per block: (k^2 - 2k + 5) / (4 k^2) of n^2 edges.
inline Rational density_bound(long long k) {
    if (k < 5) throw DomainError("block ratio below 5 leaves no room for the outside part");
    return Rational(k * k - 2 * k + 5, 4 * k * k);
}

// The same value split into its three sources: pentagon-to-pentagon pairs,
// pentagon-to-outside pairs, and the bipartite outside.
struct DensityParts {
    Rational between_pentagons;
    Rational pentagon_to_outside;
    Rational outside;

    Rational total() const { return between_pentagons + pentagon_to_outside + outside; }
};

inline DensityParts density_parts(long long k) {
    if (k < 5) throw DomainError("block ratio below 5 leaves no room for the outside part");
    return DensityParts{Rational(20, 4 * k * k), Rational(8 * (k - 5), 4 * k * k),
                        Rational((k - 5) * (k - 5), 4 * k * k)};
}

// Bounds every maximal triangle-free graph obeys: spanning-connectivity below,
// the bipartite extreme above.
struct TrivialBounds {
    long long lower;  // n - 1
    long long upper;  // floor(n^2 / 4)
};

inline TrivialBounds trivial_score_bounds(long long n) {
    if (n < 2) throw DomainError("need at least 2 vertices");
    return TrivialBounds{n - 1, n * n / 4};
}

// Known asymptotic lower bound for the one-builder game value, for display
// next to measured scores. Natural logarithms.
inline double random_strategy_lower_bound(double n) {
    return n * std::log(n) / 2.0 - 2.0 * n * std::log(std::log(n));
}

namespace detail {

// Vertex subsets of a pentagon that are independent: the empty set, the five
// singletons, and the five non-adjacent pairs.
inline const std::vector<std::uint32_t>& pentagon_independent_masks() {
    static const std::vector<std::uint32_t> masks = [] {
        std::vector<std::uint32_t> out;
        for (std::uint32_t m = 0; m < 32; ++m) {
            bool ok = true;
            for (int i = 0; i < 5 && ok; ++i)
                if ((m >> i & 1) && (m >> ((i + 1) % 5) & 1)) ok = false;
            if (ok) out.push_back(m);
        }
        return out;
    }();
    return masks;
}

inline Graph assemble_two_pentagons(const std::array<std::uint32_t, 5>& cross) {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge_unchecked(i, (i + 1) % 5);
        g.add_edge_unchecked(5 + i, 5 + (i + 1) % 5);
    }
    for (int x = 0; x < 5; ++x)
        for (int a = 0; a < 5; ++a)
            if (cross[x] >> a & 1) g.add_edge_unchecked(a, 5 + x);
    return g;
}

}  // namespace detail

// Exhaustive answer to: how many edges can run between two disjoint pentagons
// while the union stays triangle-free?
struct CrossPentagonReport {
    int max_edges = 0;
    long long subsets_checked = 0;
    long long triangle_free_subsets = 0;
    long long labeled_at_max = 0;
    int iso_classes_at_max = 0;
    std::vector<Edge> witness;  // lexicographically least maximum set, as (a, 5+x)
};

// Pruned enumeration: per right-pentagon vertex, the left neighborhood must be
// independent, leaving 11 choices each; a final pass checks the left side.
inline CrossPentagonReport cross_pentagon_max_edges() {
    const auto& masks = detail::pentagon_independent_masks();
    CrossPentagonReport rep;
    std::vector<std::array<std::uint32_t, 5>> best_sets;
    std::array<std::uint32_t, 5> cross{};
    auto rec = [&](auto&& self, int x) -> void {
        if (x == 5) {
            ++rep.subsets_checked;
            for (int a = 0; a < 5; ++a) {
                std::uint32_t right = 0;
                for (int y = 0; y < 5; ++y)
                    if (cross[y] >> a & 1) right |= 1u << y;
                for (int i = 0; i < 5; ++i)
                    if ((right >> i & 1) && (right >> ((i + 1) % 5) & 1)) return;
            }
            ++rep.triangle_free_subsets;
            int total = 0;
            for (int y = 0; y < 5; ++y) total += __builtin_popcount(cross[y]);
            if (total > rep.max_edges) {
                rep.max_edges = total;
                best_sets.clear();
            }
            if (total == rep.max_edges) best_sets.push_back(cross);
            return;
        }
        for (std::uint32_t m : masks) {
            cross[x] = m;
            self(self, x + 1);
        }
        cross[x] = 0;
    };
    rec(rec, 0);

    rep.labeled_at_max = (long long)best_sets.size();
    std::set<std::string> keys;
    for (const auto& s : best_sets) keys.insert(canonical_key(detail::assemble_two_pentagons(s)));
    rep.iso_classes_at_max = int(keys.size());

    auto edge_list = [](const std::array<std::uint32_t, 5>& s) {
        std::vector<Edge> es;
        for (int a = 0; a < 5; ++a)
            for (int x = 0; x < 5; ++x)
                if (s[x] >> a & 1) es.push_back(Edge(a, 5 + x));
        return es;
    };
    for (const auto& s : best_sets) {
        auto es = edge_list(s);
        if (rep.witness.empty() || es < rep.witness) rep.witness = es;
    }
    return rep;
}

// Same question answered with no pruning at all: every one of the 2^25
// bipartite subsets tested directly. Slow path, kept as a cross-check.
inline CrossPentagonReport cross_pentagon_max_edges_unpruned() {
    CrossPentagonReport rep;
    std::vector<std::uint32_t> best;
    auto indep = [](std::uint32_t m) {
        for (int i = 0; i < 5; ++i)
            if ((m >> i & 1) && (m >> ((i + 1) % 5) & 1)) return false;
        return true;
    };
    for (std::uint32_t s = 0; s < (1u << 25); ++s) {
        ++rep.subsets_checked;
        bool ok = true;
        for (int x = 0; x < 5 && ok; ++x)
            if (!indep((s >> (5 * x)) & 31u)) ok = false;
        for (int a = 0; a < 5 && ok; ++a) {
            std::uint32_t right = 0;
            for (int x = 0; x < 5; ++x)
                if (s >> (5 * x + a) & 1) right |= 1u << x;
            ok = indep(right);
        }
        if (!ok) continue;
        ++rep.triangle_free_subsets;
        int total = __builtin_popcount(s);
        if (total > rep.max_edges) {
            rep.max_edges = total;
            best.clear();
        }
        if (total == rep.max_edges) best.push_back(s);
    }
    rep.labeled_at_max = (long long)best.size();
    std::set<std::string> keys;
    for (std::uint32_t s : best) {
        std::array<std::uint32_t, 5> cross{};
        for (int x = 0; x < 5; ++x) cross[x] = (s >> (5 * x)) & 31u;
        keys.insert(canonical_key(detail::assemble_two_pentagons(cross)));
    }
    rep.iso_classes_at_max = int(keys.size());
    for (std::uint32_t s : best) {
        std::vector<Edge> es;
        for (int a = 0; a < 5; ++a)
            for (int x = 0; x < 5; ++x)
                if (s >> (5 * x + a) & 1) es.push_back(Edge(a, 5 + x));
        if (rep.witness.empty() || es < rep.witness) rep.witness = es;
    }
    return rep;
}

// One outside vertex against a single pentagon: its neighborhood there must be
// independent, capping it at two edges, in five ways.
struct VertexPentagonReport {
    int max_edges = 0;
    int subsets_at_max = 0;
    long long triangle_free_subsets = 0;
    std::vector<std::uint32_t> masks_at_max;
};

inline VertexPentagonReport vertex_pentagon_max_edges() {
    VertexPentagonReport rep;
    for (std::uint32_t m = 0; m < 32; ++m) {
        Graph g(6);
        for (int i = 0; i < 5; ++i) g.add_edge_unchecked(i, (i + 1) % 5);
        for (int i = 0; i < 5; ++i)
            if (m >> i & 1) g.add_edge_unchecked(i, 5);
        if (!g.triangle_free()) continue;
        ++rep.triangle_free_subsets;
        int total = __builtin_popcount(m);
        if (total > rep.max_edges) {
            rep.max_edges = total;
            rep.masks_at_max.clear();
        }
        if (total == rep.max_edges) rep.masks_at_max.push_back(m);
    }
    rep.subsets_at_max = int(rep.masks_at_max.size());
    return rep;
}

// Smallest cross set between two pentagons that cannot be extended: every
// absent cross pair must close a triangle.
struct MinMaximalCrossReport {
    int min_edges = 0;
    long long maximal_sets = 0;
    std::vector<Edge> witness;
};

inline MinMaximalCrossReport min_maximal_cross_pentagon() {
    const auto& masks = detail::pentagon_independent_masks();
    MinMaximalCrossReport rep;
    rep.min_edges = 26;
    std::array<std::uint32_t, 5> cross{};
    auto rec = [&](auto&& self, int x) -> void {
        if (x == 5) {
            for (int a = 0; a < 5; ++a) {
                std::uint32_t right = 0;
                for (int y = 0; y < 5; ++y)
                    if (cross[y] >> a & 1) right |= 1u << y;
                for (int i = 0; i < 5; ++i)
                    if ((right >> i & 1) && (right >> ((i + 1) % 5) & 1)) return;
            }
            Graph g = detail::assemble_two_pentagons(cross);
            for (int a = 0; a < 5; ++a)
                for (int y = 0; y < 5; ++y)
                    if (!g.has_edge(a, 5 + y) && g.is_legal_pair(a, 5 + y)) return;
            ++rep.maximal_sets;
            int total = 0;
            for (int y = 0; y < 5; ++y) total += __builtin_popcount(cross[y]);
            if (total < rep.min_edges) {
                rep.min_edges = total;
                rep.witness.clear();
                for (int a = 0; a < 5; ++a)
                    for (int y = 0; y < 5; ++y)
                        if (cross[y] >> a & 1) rep.witness.push_back(Edge(a, 5 + y));
            }
            return;
        }
        for (std::uint32_t m : masks) {
            cross[x] = m;
            self(self, x + 1);
        }
        cross[x] = 0;
    };
    rec(rec, 0);
    return rep;
}

}  // namespace satgame
