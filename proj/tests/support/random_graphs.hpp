#pragma once

// Seeded random graphs and vertex sets for property tests.

#include <vector>

#include "satgame/graph.hpp"
#include "satgame/util.hpp"

namespace testsupport {

// Random graph on n vertices: each pair kept with probability num/den.
// Not triangle-free in general.
inline satgame::Graph random_graph(satgame::SplitMix64& rng, int n, int num, int den) {
    satgame::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(den) < std::uint64_t(num)) g.add_edge_unchecked(u, v);
    return g;
}

// Random triangle-free graph grown by rejection: tries m random pairs,
// keeping the legal ones.
inline satgame::Graph random_triangle_free(satgame::SplitMix64& rng, int n, int tries) {
    satgame::Graph g(n);
    for (int t = 0; t < tries; ++t) {
        int u = int(rng.below(n));
        int v = int(rng.below(n));
        if (u == v) continue;
        if (g.has_edge(u, v)) continue;
        if (g.is_legal_pair(std::min(u, v), std::max(u, v))) g.add_edge_unchecked(u, v);
    }
    return g;
}

inline satgame::VSet random_vset(satgame::SplitMix64& rng, int n, int num, int den) {
    satgame::VSet s(n);
    for (int v = 0; v < n; ++v)
        if (rng.below(den) < std::uint64_t(num)) s.set(v);
    return s;
}

inline std::vector<int> random_permutation(satgame::SplitMix64& rng, int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[int(rng.below(i + 1))]);
    return p;
}

inline satgame::Graph permuted(const satgame::Graph& g, const std::vector<int>& p) {
    satgame::Graph h(g.order());
    for (const auto& e : g.edges()) h.add_edge_unchecked(p[e.u], p[e.v]);
    return h;
}

}  // namespace testsupport
