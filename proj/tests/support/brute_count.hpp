#pragma once

// Straight-from-the-definition evaluator of the progress count, written
// against its own adjacency lists and BFS so it shares no scanning logic with
// the fast implementation. Used only as a reference in tests.

#include <queue>
#include <vector>

#include "satgame/count.hpp"

namespace testsupport {

struct BruteGraph {
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<int> comp;
    std::vector<std::vector<int>> dist;

    explicit BruteGraph(const satgame::Graph& g) : n(g.order()), adj(n), comp(n, -1), dist(n) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && g.has_edge(u, v)) adj[u].push_back(v);
        int c = 0;
        for (int s = 0; s < n; ++s) {
            if (comp[s] != -1) continue;
            comp[s] = c;
            std::queue<int> q;
            q.push(s);
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int y : adj[x])
                    if (comp[y] == -1) {
                        comp[y] = c;
                        q.push(y);
                    }
            }
            ++c;
        }
        for (int s = 0; s < n; ++s) {
            dist[s].assign(n, -1);
            dist[s][s] = 0;
            std::queue<int> q;
            q.push(s);
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int y : adj[x])
                    if (dist[s][y] == -1) {
                        dist[s][y] = dist[s][x] + 1;
                        q.push(y);
                    }
            }
        }
    }

    bool far(int a, int b) const { return comp[a] == comp[b] && dist[a][b] >= 3; }
};

inline int brute_count(const satgame::Graph& g, const satgame::VSet& allowed,
                       bool witness_both_endpoints = false) {
    BruteGraph bg(g);
    int n = bg.n;
    std::vector<char> in(n, 0);
    allowed.for_each([&](int v) { in[v] = 1; });

    int base = 0;
    std::vector<char> seen(n, 0);
    for (int v = 0; v < n; ++v)
        if (in[v] && !seen[bg.comp[v]]) {
            seen[bg.comp[v]] = 1;
            ++base;
        }

    bool p2 = false, p3 = false, p2w = false, p3w = false, pair_far = false;
    for (int a = 0; a < n; ++a) {
        if (!in[a]) continue;
        for (int b : bg.adj[a])
            if (in[b]) p2 = true;
        for (int b = 0; b < n; ++b)
            if (in[b] && bg.far(a, b)) pair_far = true;
    }
    for (int b = 0; b < n; ++b) {
        if (!in[b]) continue;
        for (int a : bg.adj[b]) {
            if (!in[a]) continue;
            for (int c : bg.adj[b])
                if (c != a && in[c]) p3 = true;
        }
    }
    // Witness checks per structure instance.
    for (int a = 0; a < n && !p2w; ++a) {
        if (!in[a]) continue;
        for (int b : bg.adj[a]) {
            if (!in[b]) continue;
            for (int w = 0; w < n; ++w) {
                if (!in[w] || w == a || w == b) continue;
                bool ok = witness_both_endpoints ? (bg.far(a, w) && bg.far(b, w))
                                                 : (bg.far(a, w) || bg.far(b, w));
                if (ok) {
                    p2w = true;
                    break;
                }
            }
        }
    }
    for (int b = 0; b < n && !p3w; ++b) {
        if (!in[b]) continue;
        for (int a : bg.adj[b]) {
            if (!in[a]) continue;
            for (int c : bg.adj[b]) {
                if (c == a || !in[c]) continue;
                for (int w = 0; w < n; ++w) {
                    if (!in[w] || w == a || w == b || w == c) continue;
                    bool ok = witness_both_endpoints ? (bg.far(a, w) && bg.far(c, w))
                                                     : (bg.far(a, w) || bg.far(c, w));
                    if (ok) {
                        p3w = true;
                        break;
                    }
                }
            }
        }
    }

    int bonus = 0;
    if (p3w) bonus = 5;
    else if (p3) bonus = 4;
    else if (p2w) bonus = 3;
    else if (p2) bonus = 2;
    else if (pair_far) bonus = 1;
    return base + bonus;
}

}  // namespace testsupport
