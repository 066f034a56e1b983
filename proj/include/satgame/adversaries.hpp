#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "satgame/game.hpp"
#include "satgame/solver.hpp"
#include "satgame/util.hpp"

namespace satgame {

// Scripted opponents for batch play. Each is deterministic given its seed and
// the move history.
class Adversary {
   public:
    virtual ~Adversary() = default;
    virtual std::string name() const = 0;
    virtual Edge choose(const GameState& st) = 0;
};

enum class AdversaryKind { Random, C4Closer, Interferer, Star, Passive, Minimax };

inline const char* adversary_kind_name(AdversaryKind k) {
    switch (k) {
        case AdversaryKind::Random: return "random";
        case AdversaryKind::C4Closer: return "c4_closer";
        case AdversaryKind::Interferer: return "interferer";
        case AdversaryKind::Star: return "star";
        case AdversaryKind::Passive: return "passive";
        case AdversaryKind::Minimax: return "minimax";
    }
    return "?";
}

inline AdversaryKind adversary_kind_from_name(const std::string& s) {
    for (AdversaryKind k : {AdversaryKind::Random, AdversaryKind::C4Closer,
                            AdversaryKind::Interferer, AdversaryKind::Star, AdversaryKind::Passive,
                            AdversaryKind::Minimax})
        if (s == adversary_kind_name(k)) return k;
    throw DomainError("unknown adversary: " + s);
}

namespace detail {

// Lowest remaining legal pair under a cursor. Legality only ever decays, so
// pairs skipped once never need another look.
class LexCursor {
   public:
    Edge next(const GameState& st) {
        int n = st.graph().order();
        while (u_ < n) {
            if (v_ <= u_) v_ = u_ + 1;
            while (v_ < n) {
                if (st.is_legal(Edge(u_, v_))) return Edge(u_, v_++);
                ++v_;
            }
            ++u_;
            v_ = u_ + 1;
        }
        throw StateError("no legal pair left for cursor");
    }

   private:
    Vertex u_ = 0;
    Vertex v_ = 1;
};

}  // namespace detail

// Uniform choice over the legal pairs.
class RandomAdversary : public Adversary {
   public:
    explicit RandomAdversary(std::uint64_t seed) : rng_(seed) {}
    std::string name() const override { return "random"; }
    Edge choose(const GameState& st) override {
        const auto& legal = st.legal_pairs();
        if (legal.empty()) throw StateError("no legal move");
        return legal[rng_.below(legal.size())];
    }

   private:
    SplitMix64 rng_;
};

// Tries to close a four-vertex path through the opponent's recent edges into a
// four-cycle; otherwise plays at random.
class C4CloserAdversary : public Adversary {
   public:
    explicit C4CloserAdversary(std::uint64_t seed) : rng_(seed) {}
    std::string name() const override { return "c4_closer"; }

    Edge choose(const GameState& st) override {
        Role me = st.to_move();
        const Graph& g = st.graph();
        const auto& hist = st.history();
        int scanned = 0;
        Edge best{-1, -1};
        bool found = false;
        auto offer = [&](Vertex a, Vertex b) {
            if (a == b) return;
            Edge e(a, b);
            if (!st.is_legal(e)) return;
            if (!found || e < best) {
                best = e;
                found = true;
            }
        };
        for (auto it = hist.rbegin(); it != hist.rend() && scanned < 8; ++it) {
            if (it->first == me) continue;
            ++scanned;
            Vertex u = it->second.u, v = it->second.v;
            // (u,v) as the middle edge: close x-u-v-y.
            g.for_each_neighbor(u, [&](Vertex x) {
                if (x == v) return;
                g.for_each_neighbor(v, [&](Vertex y) {
                    if (y != u) offer(x, y);
                });
            });
            // (u,v) as an end edge: close w-x-u-v and w-x-v-u.
            for (auto [p, q] : {std::pair{u, v}, std::pair{v, u}}) {
                g.for_each_neighbor(p, [&](Vertex x) {
                    if (x == q) return;
                    g.for_each_neighbor(x, [&](Vertex w) {
                        if (w != p && w != q) offer(w, q);
                    });
                });
            }
        }
        if (found) return best;
        const auto& legal = st.legal_pairs();
        return legal[rng_.below(legal.size())];
    }

   private:
    SplitMix64 rng_;
};

// Looks for pairs four apart inside the small fragments under assembly and
// plays the edge that poisons the most of them; ties go to the smallest edge.
// In positions without such pairs it plays at random.
class InterfererAdversary : public Adversary {
   public:
    explicit InterfererAdversary(std::uint64_t seed) : rng_(seed) {}
    std::string name() const override { return "interferer"; }

    Edge choose(const GameState& st) override {
        const Graph& g = st.graph();
        int n = g.order();
        std::vector<int> comp = g.components();
        std::vector<int> comp_size(n, 0);
        for (int v = 0; v < n; ++v) ++comp_size[comp[v]];

        // Pairs at distance exactly 4 (always legal) found by bounded search
        // from vertices in fragments of working size.
        std::vector<Edge> completions;
        for (Vertex s = 0; s < n; ++s) {
            if (g.degree(s) == 0 || comp_size[comp[s]] > 64) continue;
            std::vector<int> dist = g.distances_from(s);
            for (Vertex t = s + 1; t < n; ++t)
                if (dist[t] == 4) completions.push_back(Edge(s, t));
        }
        if (!completions.empty()) {
            std::map<Edge, int> kills;
            for (Edge c : completions) {
                g.for_each_neighbor(c.v, [&](Vertex z) {
                    Edge k(c.u, z);
                    if (st.is_legal(k)) ++kills[k];
                });
                g.for_each_neighbor(c.u, [&](Vertex z) {
                    Edge k(c.v, z);
                    if (st.is_legal(k)) ++kills[k];
                });
            }
            Edge best{-1, -1};
            int best_kills = 0;
            for (const auto& [e, cnt] : kills)
                if (cnt > best_kills) {
                    best_kills = cnt;
                    best = e;
                }
            if (best_kills > 0) return best;
        }
        const auto& legal = st.legal_pairs();
        return legal[rng_.below(legal.size())];
    }

   private:
    SplitMix64 rng_;
};

// Grows a star from vertex 0 as long as the center admits legal edges, then
// falls back to the smallest legal pair.
class StarAdversary : public Adversary {
   public:
    explicit StarAdversary(std::uint64_t) {}
    std::string name() const override { return "star"; }

    Edge choose(const GameState& st) override {
        int n = st.graph().order();
        while (spoke_ < n) {
            Edge e(0, spoke_);
            if (st.is_legal(e)) {
                ++spoke_;
                return e;
            }
            ++spoke_;
        }
        return cursor_.next(st);
    }

   private:
    Vertex spoke_ = 1;
    detail::LexCursor cursor_;
};

// Stays out of the way: prefers pairs of still-untouched vertices, and only
// once none remain does it take the smallest legal pair.
class PassiveAdversary : public Adversary {
   public:
    explicit PassiveAdversary(std::uint64_t) {}
    std::string name() const override { return "passive"; }

    Edge choose(const GameState& st) override {
        const Graph& g = st.graph();
        int n = g.order();
        if (!fresh_done_) {
            while (fu_ < n) {
                if (g.degree(fu_) > 0) {
                    ++fu_;
                    fv_ = fu_ + 1;
                    continue;
                }
                if (fv_ <= fu_) fv_ = fu_ + 1;
                while (fv_ < n) {
                    if (g.degree(fv_) == 0 && st.is_legal(Edge(fu_, fv_))) return Edge(fu_, fv_++);
                    ++fv_;
                }
                ++fu_;
                fv_ = fu_ + 1;
            }
            fresh_done_ = true;
        }
        return cursor_.next(st);
    }

   private:
    bool fresh_done_ = false;
    Vertex fu_ = 0, fv_ = 1;
    detail::LexCursor cursor_;
};

// Plays the exact best reply by full search; only for boards the solver can
// finish. Shares one transposition table across the whole game.
class MinimaxAdversary : public Adversary {
   public:
    explicit MinimaxAdversary(std::uint64_t) {}
    std::string name() const override { return "minimax"; }

    Edge choose(const GameState& st) override {
        int n = st.graph().order();
        if (n > canonical_exact_limit)
            throw DomainError("minimax adversary is limited to " +
                              std::to_string(canonical_exact_limit) + " vertices");
        if (!solver_) solver_ = std::make_unique<detail::ScoreSolver>(n, st.config().convention);
        bool minimizing = st.to_move() == Role::Minimizer;
        const Graph& g = st.graph();
        Edge best{-1, -1};
        int best_val = 0;
        bool any = false;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (g.is_legal_pair(u, v)) {
                    Graph h = g;
                    h.add_edge_unchecked(u, v);
                    int val = solver_->value(h);
                    if (!any || (minimizing ? val < best_val : val > best_val)) {
                        any = true;
                        best_val = val;
                        best = Edge(u, v);
                    }
                }
        if (!any) throw StateError("no legal move");
        return best;
    }

   private:
    std::unique_ptr<detail::ScoreSolver> solver_;
};

inline std::unique_ptr<Adversary> make_adversary(AdversaryKind kind, std::uint64_t seed) {
    switch (kind) {
        case AdversaryKind::Random: return std::make_unique<RandomAdversary>(seed);
        case AdversaryKind::C4Closer: return std::make_unique<C4CloserAdversary>(seed);
        case AdversaryKind::Interferer: return std::make_unique<InterfererAdversary>(seed);
        case AdversaryKind::Star: return std::make_unique<StarAdversary>(seed);
        case AdversaryKind::Passive: return std::make_unique<PassiveAdversary>(seed);
        case AdversaryKind::Minimax: return std::make_unique<MinimaxAdversary>(seed);
    }
    throw DomainError("unknown adversary kind");
}

}  // namespace satgame
