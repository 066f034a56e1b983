#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "satgame/graph.hpp"

namespace satgame {

// Exact canonical labeling is a permutation search; past this order the cost is
// not worth it and callers get an isomorphism-invariant but incomplete key.
inline constexpr int canonical_exact_limit = 10;

namespace detail {

// Searches for the permutation whose upper-triangular adjacency bit string is
// lexicographically minimal. Sound prunes only: strict-prefix cuts, and
// skipping all but one unused member of each twin class (identical rows imply
// an automorphism swapping the two vertices).
class CanonicalSearch {
  public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
        twin_.resize(n_);
        for (int v = 0; v < n_; ++v) {
            twin_[v] = v;
            for (int u = 0; u < v; ++u) {
                bool same = true;
                for (int w = 0; w < g_.words() && same; ++w)
                    same = g_.row(u)[w] == g_.row(v)[w];
                if (same) {
                    twin_[v] = twin_[u];
                    break;
                }
            }
        }
        perm_.assign(n_, -1);
        bits_.assign(std::size_t(n_) * (n_ - 1) / 2, 0);
        best_ = bits_;
        found_ = false;
        dfs(0, 0, true);
    }

    const std::vector<std::uint8_t>& best_bits() const { return best_; }
    const std::vector<Vertex>& best_perm() const { return best_perm_; }

  private:
    void dfs(int depth, std::size_t offset, bool tight) {
        if (depth == n_) {
            if (!found_ || bits_ < best_) {
                best_ = bits_;
                best_perm_ = perm_;
                best_perm_.resize(n_);
                found_ = true;
            }
            return;
        }
        // Candidates ordered by the bit pattern they would emit, smallest first.
        struct Cand {
            std::uint32_t nb;
            Vertex v;
        };
        std::array<Cand, 32> cands;
        int k = 0;
        std::uint32_t used_twins = 0;
        for (Vertex c = 0; c < n_; ++c) {
            if (used_mask_ & (1u << c)) continue;
            if (used_twins & (1u << twin_[c])) continue;
            used_twins |= 1u << twin_[c];
            std::uint32_t nb = 0;
            for (int j = 0; j < depth; ++j)
                nb = (nb << 1) | std::uint32_t(g_.has_edge(c, perm_[j]) ? 1 : 0);
            cands[k++] = {nb, c};
        }
        std::sort(cands.begin(), cands.begin() + k,
                  [](const Cand& a, const Cand& b) { return a.nb < b.nb || (a.nb == b.nb && a.v < b.v); });
        for (int i = 0; i < k; ++i) {
            Vertex c = cands[i].v;
            bool child_tight = tight;
            if (tight && found_) {
                std::uint32_t seg = 0;
                for (int j = 0; j < depth; ++j) seg = (seg << 1) | best_[offset + j];
                if (cands[i].nb > seg) break;  // candidates sorted, the rest are worse
                if (cands[i].nb < seg) child_tight = false;
            }
            for (int j = 0; j < depth; ++j)
                bits_[offset + j] = std::uint8_t((cands[i].nb >> (depth - 1 - j)) & 1);
            perm_[depth] = c;
            used_mask_ |= 1u << c;
            dfs(depth + 1, offset + depth, child_tight);
            used_mask_ &= ~(1u << c);
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> twin_;
    std::vector<Vertex> perm_;
    std::vector<Vertex> best_perm_;
    std::vector<std::uint8_t> bits_, best_;
    std::uint32_t used_mask_ = 0;
    bool found_;
};

inline std::string pack_key(char tag, int n, const std::vector<std::uint8_t>& bits) {
    std::string key;
    key.push_back(tag);
    key.push_back(char(n & 0xff));
    key.push_back(char((n >> 8) & 0xff));
    std::uint8_t acc = 0;
    int fill = 0;
    for (std::uint8_t b : bits) {
        acc = std::uint8_t((acc << 1) | b);
        if (++fill == 8) {
            key.push_back(char(acc));
            acc = 0;
            fill = 0;
        }
    }
    if (fill) key.push_back(char(acc << (8 - fill)));
    return key;
}

}  // namespace detail

inline bool is_exact_key(const std::string& key) { return !key.empty() && key[0] == 'E'; }

// Permutation achieving the canonical (lexicographically minimal) labeling.
// Only defined within the exact limit.
inline std::vector<Vertex> canonical_labeling(const Graph& g) {
    if (g.order() > canonical_exact_limit)
        throw DomainError("canonical labeling limited to order " + std::to_string(canonical_exact_limit));
    detail::CanonicalSearch s(g);
    return s.best_perm();
}

// Key equal across isomorphic graphs. Exact (complete invariant) up to
// canonical_exact_limit; beyond that an 'H'-marked heuristic key that exact
// search must never rely on.
inline std::string canonical_key(const Graph& g) {
    int n = g.order();
    if (n <= canonical_exact_limit) {
        if (n <= 1) return detail::pack_key('E', n, {});
        detail::CanonicalSearch s(g);
        return detail::pack_key('E', n, s.best_bits());
    }
    // Degree profile rows, sorted: isomorphism-invariant, not complete.
    std::vector<std::string> rows(n);
    for (Vertex v = 0; v < n; ++v) {
        std::vector<int> nd;
        g.for_each_neighbor(v, [&](Vertex u) { nd.push_back(g.degree(u)); });
        std::sort(nd.begin(), nd.end());
        std::string r;
        r.push_back(char(g.degree(v)));
        for (int d : nd) r.push_back(char(d & 0xff));
        rows[v] = std::move(r);
    }
    std::sort(rows.begin(), rows.end());
    std::string key = "H";
    key.push_back(char(n & 0xff));
    key.push_back(char((n >> 8) & 0xff));
    for (const std::string& r : rows) {
        key.push_back('|');
        key += r;
    }
    return key;
}

// Relabeled copy under the canonical labeling (exact range only).
inline Graph canonical_graph(const Graph& g) {
    std::vector<Vertex> perm = canonical_labeling(g);
    std::vector<Vertex> inv(g.order());
    for (int i = 0; i < g.order(); ++i) inv[perm[i]] = i;
    Graph out(g.order());
    for (const Edge& e : g.edges()) out.add_edge_unchecked(inv[e.u], inv[e.v]);
    return out;
}

}  // namespace satgame
