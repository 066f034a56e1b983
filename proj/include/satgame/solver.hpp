#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "satgame/canonical.hpp"
#include "satgame/game.hpp"

namespace satgame {

struct SolveStats {
    long long nodes = 0;
    long long table_hits = 0;
};

struct SolveResult {
    int value = 0;
    SolveStats stats;
    std::vector<Edge> principal_line;
};

namespace detail {

// The mover at a position is determined by the parity of edges played, so the
// transposition table can key on the canonical graph alone.
class ScoreSolver {
   public:
    ScoreSolver(int n, Convention conv) : n_(n), conv_(conv) {}

    int value(const Graph& g) {
        ++stats.nodes;
        std::string key = canonical_key(g);
        if (auto it = memo_.find(key); it != memo_.end()) {
            ++stats.table_hits;
            return it->second;
        }
        bool minimizing = to_move_minimizes(g);
        int best = 0;
        bool moved = false;
        // Children that are isomorphic lead to the same value; visit one per class.
        std::map<std::string, Graph> classes;
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = u + 1; v < n_; ++v)
                if (g.is_legal_pair(u, v)) {
                    Graph h = g;
                    h.add_edge_unchecked(u, v);
                    classes.emplace(canonical_key(h), std::move(h));
                }
        for (auto& kv : classes) {
            int val = value(kv.second);
            best = moved ? (minimizing ? std::min(best, val) : std::max(best, val)) : val;
            moved = true;
        }
        int result = moved ? best : g.edge_count();
        memo_.emplace(std::move(key), result);
        return result;
    }

    bool to_move_minimizes(const Graph& g) const {
        bool first_to_move = g.edge_count() % 2 == 0;
        bool first_is_min = conv_ == Convention::MinimizerFirst;
        return first_to_move == first_is_min;
    }

    SolveStats stats;

   private:
    int n_;
    Convention conv_;
    std::unordered_map<std::string, int> memo_;
};

}  // namespace detail

// Optimal-play edge total for the alternating saturation game, exact search
// with transposition on canonical forms. Practical through n = 10.
inline SolveResult solve_score(int n, Convention conv) {
    if (n < 2) throw DomainError("solver needs at least 2 vertices");
    if (n > canonical_exact_limit)
        throw DomainError("exact solving is limited to " + std::to_string(canonical_exact_limit) +
                          " vertices");
    detail::ScoreSolver solver(n, conv);
    Graph g(n);
    SolveResult out;
    out.value = solver.value(g);

    // Recover one optimal line, lowest edge first among optimal children.
    Graph cur = g;
    while (true) {
        bool minimizing = solver.to_move_minimizes(cur);
        Edge pick{-1, -1};
        int pick_val = 0;
        bool any = false;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (cur.is_legal_pair(u, v)) {
                    Graph h = cur;
                    h.add_edge_unchecked(u, v);
                    int val = solver.value(h);
                    if (!any || (minimizing ? val < pick_val : val > pick_val)) {
                        any = true;
                        pick_val = val;
                        pick = Edge(u, v);
                    }
                }
        if (!any) break;
        out.principal_line.push_back(pick);
        cur.add_edge_unchecked(pick.u, pick.v);
    }
    out.stats = solver.stats;
    return out;
}

// Reference solver: plain recursion over labeled positions, no transposition
// table, no symmetry use. Exponential; intended for n <= 5 cross-checks.
inline SolveResult solve_score_naive(int n, Convention conv) {
    if (n < 2) throw DomainError("solver needs at least 2 vertices");
    if (n > 5) throw DomainError("reference solver is limited to 5 vertices");
    SolveStats stats;
    auto rec = [&](auto&& self, Graph& g) -> int {
        ++stats.nodes;
        bool first_to_move = g.edge_count() % 2 == 0;
        bool minimizing = first_to_move == (conv == Convention::MinimizerFirst);
        bool moved = false;
        int best = 0;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (g.is_legal_pair(u, v)) {
                    Graph h = g;
                    h.add_edge_unchecked(u, v);
                    int val = self(self, h);
                    best = moved ? (minimizing ? std::min(best, val) : std::max(best, val)) : val;
                    moved = true;
                }
        return moved ? best : g.edge_count();
    };
    Graph g(n);
    SolveResult out;
    out.value = rec(rec, g);
    out.stats = stats;
    return out;
}

enum class Winner { First, Second };

inline const char* winner_name(Winner w) { return w == Winner::First ? "first" : "second"; }

struct WinnerResult {
    Winner winner = Winner::First;
    SolveStats stats;
};

// Normal-play variant: the player who cannot move loses. Equivalently the
// winner is fixed by the parity pattern of completed play; solved by the same
// canonical-form search.
inline WinnerResult solve_normal_play(int n) {
    if (n < 2) throw DomainError("solver needs at least 2 vertices");
    if (n > canonical_exact_limit)
        throw DomainError("exact solving is limited to " + std::to_string(canonical_exact_limit) +
                          " vertices");
    SolveStats stats;
    std::unordered_map<std::string, bool> memo;  // true: player to move wins
    auto rec = [&](auto&& self, const Graph& g) -> bool {
        ++stats.nodes;
        std::string key = canonical_key(g);
        if (auto it = memo.find(key); it != memo.end()) {
            ++stats.table_hits;
            return it->second;
        }
        bool win = false;
        std::map<std::string, Graph> classes;
        for (Vertex u = 0; u < n && !win; ++u)
            for (Vertex v = u + 1; v < n && !win; ++v)
                if (g.is_legal_pair(u, v)) {
                    Graph h = g;
                    h.add_edge_unchecked(u, v);
                    std::string ck = canonical_key(h);
                    if (classes.count(ck)) continue;
                    if (!self(self, h)) win = true;
                    classes.emplace(std::move(ck), std::move(h));
                }
        memo.emplace(std::move(key), win);
        return win;
    };
    Graph g(n);
    WinnerResult out;
    out.winner = rec(rec, g) ? Winner::First : Winner::Second;
    out.stats = stats;
    return out;
}

}  // namespace satgame
