#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "satgame/graph.hpp"

namespace satgame {

enum class Role { Minimizer, Maximizer };

inline Role other(Role r) { return r == Role::Minimizer ? Role::Maximizer : Role::Minimizer; }

inline const char* role_name(Role r) { return r == Role::Minimizer ? "minimizer" : "maximizer"; }

// Which player moves first. Scores under both conventions bracket the
// optimal-play value of the position.
enum class Convention { MinimizerFirst, MaximizerFirst };

inline const char* convention_name(Convention c) {
    return c == Convention::MinimizerFirst ? "minimizer_first" : "maximizer_first";
}

struct GameConfig {
    int n = 0;
    Convention convention = Convention::MinimizerFirst;

    Role first_mover() const {
        return convention == Convention::MinimizerFirst ? Role::Minimizer : Role::Maximizer;
    }
};

// Alternating-move state over a growing triangle-free graph. Keeps the set of
// still-legal pairs incrementally: adding (u,v) retires (u,v) itself plus every
// pair of the form (u,w) with w adjacent to v and (v,w) with w adjacent to u.
// The game is over exactly when that set is empty.
class GameState {
   public:
    explicit GameState(GameConfig cfg) : cfg_(cfg), g_(cfg.n), to_move_(cfg.first_mover()) {
        if (cfg.n < 2) throw DomainError("game needs at least 2 vertices");
        pos_.assign(std::size_t(cfg.n) * cfg.n, -1);
        legal_.reserve(std::size_t(cfg.n) * (cfg.n - 1) / 2);
        for (Vertex u = 0; u < cfg.n; ++u)
            for (Vertex v = u + 1; v < cfg.n; ++v) {
                pos_[pack(u, v)] = int(legal_.size());
                legal_.push_back(Edge{u, v});
            }
    }

    const GameConfig& config() const { return cfg_; }
    const Graph& graph() const { return g_; }
    Role to_move() const { return to_move_; }
    int ply() const { return int(history_.size()); }
    bool is_terminal() const { return legal_.empty(); }

    // Final score: total edges once no legal pair remains.
    int score() const {
        if (!is_terminal()) throw StateError("score requested before the game ended");
        return g_.edge_count();
    }

    const std::vector<Edge>& legal_pairs() const { return legal_; }
    const std::vector<std::pair<Role, Edge>>& history() const { return history_; }

    bool is_legal(Edge e) const {
        return e.u >= 0 && e.v < g_.order() && e.u < e.v && pos_[pack(e.u, e.v)] >= 0;
    }

    void apply(Edge e) {
        if (is_terminal()) throw StateError("move after the game ended");
        if (e.u < 0 || e.v >= g_.order() || e.u >= e.v)
            throw IllegalMoveError(e, std::nullopt, "bad vertex pair");
        if (g_.has_edge(e.u, e.v)) throw IllegalMoveError(e, std::nullopt, "edge already present");
        if (auto w = g_.common_neighbor(e.u, e.v))
            throw IllegalMoveError(e, w,
                                   "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                       " closes a triangle through " + std::to_string(*w));
        g_.add_edge_unchecked(e.u, e.v);
        retire(e.u, e.v);
        g_.for_each_neighbor(e.v, [&](Vertex w) {
            if (w != e.u) retire(e.u, w);
        });
        g_.for_each_neighbor(e.u, [&](Vertex w) {
            if (w != e.v) retire(e.v, w);
        });
        history_.emplace_back(to_move_, e);
        to_move_ = other(to_move_);
    }

   private:
    std::size_t pack(Vertex a, Vertex b) const {
        if (a > b) std::swap(a, b);
        return std::size_t(a) * g_.order() + b;
    }

    void retire(Vertex a, Vertex b) {
        int& p = pos_[pack(a, b)];
        if (p < 0) return;
        Edge last = legal_.back();
        legal_[p] = last;
        pos_[pack(last.u, last.v)] = p;
        legal_.pop_back();
        p = -1;
    }

    GameConfig cfg_;
    Graph g_;
    Role to_move_;
    std::vector<Edge> legal_;
    std::vector<int> pos_;
    std::vector<std::pair<Role, Edge>> history_;
};

inline GameState new_game(GameConfig cfg) { return GameState(cfg); }

}  // namespace satgame
