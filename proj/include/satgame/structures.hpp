#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "satgame/graph.hpp"

namespace satgame {

// Distance-witness reading. The default accepts a witness at distance >= 3
// from at least one endpoint of the structure; `witness_both_endpoints`
// requires distance >= 3 from both.
struct CountOptions {
    bool witness_both_endpoints = false;
};

// Small subgraphs inside an allowed vertex set, each reported with a
// deterministic low-lexicographic witness (or absent).
//  - p3_with_far / p2_with_far orient the structure with the far endpoint first.
//  - far_pair is two allowed vertices of one component at distance >= 3.
struct StructureReport {
    std::optional<std::array<Vertex, 4>> p4;
    std::optional<std::array<Vertex, 3>> p3;
    std::optional<std::array<Vertex, 2>> p2;
    std::optional<std::pair<Vertex, Vertex>> far_pair;
    std::optional<std::pair<std::array<Vertex, 3>, Vertex>> p3_with_far;
    std::optional<std::pair<std::array<Vertex, 2>, Vertex>> p2_with_far;
};

namespace detail {

// {v} + N(v) + N(N(v)) as a word mask.
inline std::vector<std::uint64_t> ball2(const Graph& g, Vertex v) {
    std::vector<std::uint64_t> m(g.words(), 0);
    m[v >> 6] |= 1ULL << (v & 63);
    const std::uint64_t* rv = g.row(v);
    for (int w = 0; w < g.words(); ++w) m[w] |= rv[w];
    g.for_each_neighbor(v, [&](Vertex u) {
        const std::uint64_t* ru = g.row(u);
        for (int w = 0; w < g.words(); ++w) m[w] |= ru[w];
    });
    return m;
}

// Lowest allowed vertex in v's component outside ball2(v), if any.
inline std::optional<Vertex> far_witness(const Graph& g, const VSet& allowed,
                                         const std::vector<int>& comp, Vertex v) {
    std::vector<std::uint64_t> b2 = ball2(g, v);
    for (std::size_t i = 0; i < allowed.w.size(); ++i) {
        std::uint64_t x = allowed.w[i] & ~b2[i];
        while (x) {
            Vertex y = Vertex(i * 64 + __builtin_ctzll(x));
            if (comp[y] == comp[v]) return y;
            x &= x - 1;
        }
    }
    return std::nullopt;
}

// Lowest allowed vertex in v's component outside ball2(v) and ball2(v2).
inline std::optional<Vertex> far_witness_both(const Graph& g, const VSet& allowed,
                                              const std::vector<int>& comp, Vertex v, Vertex v2) {
    std::vector<std::uint64_t> b2 = ball2(g, v);
    std::vector<std::uint64_t> c2 = ball2(g, v2);
    for (std::size_t i = 0; i < allowed.w.size(); ++i) {
        std::uint64_t x = allowed.w[i] & ~b2[i] & ~c2[i];
        while (x) {
            Vertex y = Vertex(i * 64 + __builtin_ctzll(x));
            if (comp[y] == comp[v]) return y;
            x &= x - 1;
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Searches the allowed set for the structures the building procedure feeds on.
// Deterministic: scans ascend by vertex index, so repeated calls on equal
// graphs report identical witnesses.
inline StructureReport find_structures(const Graph& g, const VSet& allowed,
                                       CountOptions opts = {}) {
    StructureReport rep;
    std::vector<int> comp = g.components();

    // P2: lowest edge with both ends allowed.
    for (Vertex u = 0; u < g.order() && !rep.p2; ++u) {
        if (!allowed.test(u)) continue;
        g.for_each_neighbor_in(u, allowed.w, [&](Vertex v) {
            if (v > u && !rep.p2) rep.p2 = {u, v};
        });
    }

    // P3: for each middle, the two lowest allowed neighbors.
    std::optional<std::array<Vertex, 3>> best3;
    for (Vertex b = 0; b < g.order(); ++b) {
        if (!allowed.test(b)) continue;
        Vertex n1 = -1, n2 = -1;
        g.for_each_neighbor_in(b, allowed.w, [&](Vertex v) {
            if (n1 == -1) n1 = v;
            else if (n2 == -1) n2 = v;
        });
        if (n2 == -1) continue;
        std::array<Vertex, 3> cand{n1, b, n2};
        if (!best3 || cand < *best3) best3 = cand;
    }
    rep.p3 = best3;

    // P4: around each middle edge, low-index end extensions (both roles, with
    // a second choice to dodge the shared-endpoint collision).
    std::optional<std::array<Vertex, 4>> best4;
    auto consider_p4 = [&](Vertex a, Vertex b, Vertex c, Vertex d) {
        std::array<Vertex, 4> t{a, b, c, d};
        std::array<Vertex, 4> r{d, c, b, a};
        if (r < t) t = r;
        if (!best4 || t < *best4) best4 = t;
    };
    for (Vertex b = 0; b < g.order(); ++b) {
        if (!allowed.test(b)) continue;
        g.for_each_neighbor_in(b, allowed.w, [&](Vertex c) {
            if (c < b) return;
            std::array<Vertex, 2> as{-1, -1}, ds{-1, -1};
            g.for_each_neighbor_in(b, allowed.w, [&](Vertex x) {
                if (x == c) return;
                if (as[0] == -1) as[0] = x;
                else if (as[1] == -1) as[1] = x;
            });
            g.for_each_neighbor_in(c, allowed.w, [&](Vertex x) {
                if (x == b) return;
                if (ds[0] == -1) ds[0] = x;
                else if (ds[1] == -1) ds[1] = x;
            });
            for (Vertex a : as)
                for (Vertex d : ds)
                    if (a != -1 && d != -1 && a != d) consider_p4(a, b, c, d);
        });
    }
    rep.p4 = best4;

    // Distance-3 pair.
    for (Vertex x = 0; x < g.order() && !rep.far_pair; ++x) {
        if (!allowed.test(x)) continue;
        if (auto y = detail::far_witness(g, allowed, comp, x)) rep.far_pair = {x, *y};
    }

    // P3 with a far witness, far endpoint listed first.
    for (Vertex x = 0; x < g.order() && !rep.p3_with_far; ++x) {
        if (!allowed.test(x)) continue;
        g.for_each_neighbor_in(x, allowed.w, [&](Vertex b) {
            if (rep.p3_with_far) return;
            g.for_each_neighbor_in(b, allowed.w, [&](Vertex c) {
                if (rep.p3_with_far || c == x) return;
                std::optional<Vertex> w =
                    opts.witness_both_endpoints
                        ? detail::far_witness_both(g, allowed, comp, x, c)
                        : detail::far_witness(g, allowed, comp, x);
                if (w && *w != c) rep.p3_with_far = {std::array<Vertex, 3>{x, b, c}, *w};
            });
        });
    }

    // P2 with a far witness, far endpoint listed first.
    for (Vertex x = 0; x < g.order() && !rep.p2_with_far; ++x) {
        if (!allowed.test(x)) continue;
        g.for_each_neighbor_in(x, allowed.w, [&](Vertex b) {
            if (rep.p2_with_far) return;
            std::optional<Vertex> w = opts.witness_both_endpoints
                                          ? detail::far_witness_both(g, allowed, comp, x, b)
                                          : detail::far_witness(g, allowed, comp, x);
            if (w) rep.p2_with_far = {std::array<Vertex, 2>{x, b}, *w};
        });
    }

    return rep;
}

}  // namespace satgame
