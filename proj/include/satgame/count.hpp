#pragma once

#include <optional>

#include "satgame/structures.hpp"

namespace satgame {

// Progress measure over the vertices not yet absorbed into finished pentagons.
// Value = number of components holding an allowed vertex, plus the largest
// applicable bonus:
//   5  path on 3 allowed vertices + allowed vertex in the same component at
//      distance >= 3 from an endpoint of that path
//   4  path on 3 allowed vertices
//   3  allowed edge + such a distance witness
//   2  allowed edge
//   1  two allowed vertices of one component at distance >= 3
//   0  none of the above
struct CountBreakdown {
    int components_with_u = 0;
    int bonus_level = 0;
    std::optional<std::array<Vertex, 3>> p3;  // bonus 5/4 witness
    std::optional<std::array<Vertex, 2>> p2;  // bonus 3/2 witness
    std::optional<Vertex> far_vertex;         // distance witness (levels 5, 3, 1 partner)
    std::optional<Vertex> far_partner;        // level 1 only: the other end of the pair

    int count() const { return components_with_u + bonus_level; }
};

inline CountBreakdown compute_count(const Graph& g, const VSet& allowed, CountOptions opts = {}) {
    CountBreakdown out;

    std::vector<int> comp = g.components();
    std::vector<std::uint8_t> seen;
    allowed.for_each([&](Vertex v) {
        if (std::size_t(comp[v]) >= seen.size()) seen.resize(comp[v] + 1, 0);
        if (!seen[comp[v]]) {
            seen[comp[v]] = 1;
            ++out.components_with_u;
        }
    });

    // Cheap existence scans first, then distance witnesses only when needed.
    std::optional<std::array<Vertex, 3>> p3;
    for (Vertex b = 0; b < g.order() && !p3; ++b) {
        if (!allowed.test(b)) continue;
        Vertex n1 = -1, n2 = -1;
        g.for_each_neighbor_in(b, allowed.w, [&](Vertex v) {
            if (n1 == -1) n1 = v;
            else if (n2 == -1) n2 = v;
        });
        if (n2 != -1) p3 = {n1, b, n2};
    }

    if (p3) {
        out.p3 = p3;
        out.bonus_level = 4;
        // Upgrade to 5 if some allowed path-of-3 has a distance witness.
        for (Vertex x = 0; x < g.order() && out.bonus_level == 4; ++x) {
            if (!allowed.test(x)) continue;
            std::optional<Vertex> w0;
            if (!opts.witness_both_endpoints) {
                w0 = detail::far_witness(g, allowed, comp, x);
                if (!w0) continue;
            }
            g.for_each_neighbor_in(x, allowed.w, [&](Vertex b) {
                if (out.bonus_level == 5) return;
                g.for_each_neighbor_in(b, allowed.w, [&](Vertex c) {
                    if (out.bonus_level == 5 || c == x) return;
                    std::optional<Vertex> w =
                        opts.witness_both_endpoints
                            ? detail::far_witness_both(g, allowed, comp, x, c)
                            : w0;
                    if (w) {
                        out.bonus_level = 5;
                        out.p3 = {x, b, c};
                        out.far_vertex = *w;
                    }
                });
            });
        }
        return out;
    }

    std::optional<std::array<Vertex, 2>> p2;
    for (Vertex u = 0; u < g.order() && !p2; ++u) {
        if (!allowed.test(u)) continue;
        g.for_each_neighbor_in(u, allowed.w, [&](Vertex v) {
            if (v > u && !p2) p2 = {u, v};
        });
    }

    if (p2) {
        out.p2 = p2;
        out.bonus_level = 2;
        for (Vertex x = 0; x < g.order() && out.bonus_level == 2; ++x) {
            if (!allowed.test(x)) continue;
            std::optional<Vertex> w0;
            if (!opts.witness_both_endpoints) {
                w0 = detail::far_witness(g, allowed, comp, x);
                if (!w0) continue;
            }
            g.for_each_neighbor_in(x, allowed.w, [&](Vertex b) {
                if (out.bonus_level == 3) return;
                std::optional<Vertex> w = opts.witness_both_endpoints
                                              ? detail::far_witness_both(g, allowed, comp, x, b)
                                              : w0;
                if (w) {
                    out.bonus_level = 3;
                    out.p2 = {x, b};
                    out.far_vertex = *w;
                }
            });
        }
        return out;
    }

    for (Vertex x = 0; x < g.order(); ++x) {
        if (!allowed.test(x)) continue;
        if (auto y = detail::far_witness(g, allowed, comp, x)) {
            out.bonus_level = 1;
            out.far_partner = x;
            out.far_vertex = *y;
            return out;
        }
    }
    return out;
}

// Count drop caused by moving from one position to another under the same
// allowed set. Negative values mean the count rose.
inline int count_delta(const Graph& before, const Graph& after, const VSet& allowed,
                       CountOptions opts = {}) {
    return compute_count(before, allowed, opts).count() - compute_count(after, allowed, opts).count();
}

}  // namespace satgame
