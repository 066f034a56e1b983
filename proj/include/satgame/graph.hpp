#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "satgame/util.hpp"

namespace satgame {

using Vertex = int;

// Undirected edge, stored normalized with u < v.
struct Edge {
    Vertex u = -1;
    Vertex v = -1;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

// Raised by checked mutation when an edge would close a triangle or already exists.
// `witness` is the shared neighbor that would complete the triangle, if any.
struct IllegalMoveError : DomainError {
    Edge edge;
    std::optional<Vertex> witness;

    IllegalMoveError(Edge e, std::optional<Vertex> w, const std::string& msg)
        : DomainError(msg), edge(e), witness(w) {}
};

// Simple undirected graph with per-vertex adjacency bit rows.
// One row intersection answers the triangle question for a candidate edge,
// which is the innermost operation of every simulation loop.
class Graph {
  public:
    Graph() = default;

    explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(std::size_t(n) * words_, 0) {
        if (n < 0) throw DomainError("vertex count must be nonnegative");
    }

    int order() const { return n_; }
    int words() const { return words_; }
    int edge_count() const { return edges_; }

    const std::uint64_t* row(Vertex v) const { return bits_.data() + std::size_t(v) * words_; }

    bool has_edge(Vertex u, Vertex v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1ULL;
    }

    // Some vertex adjacent to both u and v, if one exists.
    std::optional<Vertex> common_neighbor(Vertex u, Vertex v) const {
        const std::uint64_t* ru = row(u);
        const std::uint64_t* rv = row(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t x = ru[w] & rv[w];
            if (x) return Vertex(w * 64 + __builtin_ctzll(x));
        }
        return std::nullopt;
    }

    // A pair may be played iff it is a non-edge of distinct vertices whose
    // addition closes no triangle.
    bool is_legal_pair(Vertex u, Vertex v) const {
        if (u == v || has_edge(u, v)) return false;
        const std::uint64_t* ru = row(u);
        const std::uint64_t* rv = row(v);
        for (int w = 0; w < words_; ++w)
            if (ru[w] & rv[w]) return false;
        return true;
    }

    // Checked insertion: rejects loops, duplicates, and triangle-closing edges.
    void add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw IllegalMoveError(Edge(u, v), std::nullopt, "loop edge");
        if (has_edge(u, v)) throw IllegalMoveError(Edge(u, v), std::nullopt, "edge already present");
        if (auto w = common_neighbor(u, v))
            throw IllegalMoveError(Edge(u, v), w,
                                   "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                       " closes a triangle through " + std::to_string(*w));
        set_bit(u, v);
        set_bit(v, u);
        ++edges_;
    }

    // Unchecked insertion for enumeration loops that validate separately.
    void add_edge_unchecked(Vertex u, Vertex v) {
        set_bit(u, v);
        set_bit(v, u);
        ++edges_;
    }

    int degree(Vertex v) const {
        const std::uint64_t* r = row(v);
        int d = 0;
        for (int w = 0; w < words_; ++w) d += __builtin_popcountll(r[w]);
        return d;
    }

    template <typename F>
    void for_each_neighbor(Vertex v, F&& f) const {
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t x = r[w];
            while (x) {
                f(Vertex(w * 64 + __builtin_ctzll(x)));
                x &= x - 1;
            }
        }
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edges_);
        for (Vertex u = 0; u < n_; ++u)
            for_each_neighbor(u, [&](Vertex v) {
                if (u < v) out.push_back(Edge(u, v));
            });
        return out;
    }

    bool triangle_free() const {
        for (Vertex u = 0; u < n_; ++u) {
            bool bad = false;
            for_each_neighbor(u, [&](Vertex v) {
                if (v <= u || bad) return;
                const std::uint64_t* ru = row(u);
                const std::uint64_t* rv = row(v);
                for (int w = 0; w < words_; ++w)
                    if (ru[w] & rv[w]) {
                        bad = true;
                        return;
                    }
            });
            if (bad) return false;
        }
        return true;
    }

    // Maximal triangle-free: triangle-free and no legal pair remains.
    bool is_maximal_triangle_free() const {
        if (!triangle_free()) return false;
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = u + 1; v < n_; ++v)
                if (is_legal_pair(u, v)) return false;
        return true;
    }

    // Component labels, assigned in discovery order scanning vertices ascending.
    std::vector<int> components() const {
        std::vector<int> comp(n_, -1);
        int next = 0;
        std::vector<Vertex> stack;
        for (Vertex s = 0; s < n_; ++s) {
            if (comp[s] != -1) continue;
            comp[s] = next;
            stack.push_back(s);
            while (!stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                for_each_neighbor(x, [&](Vertex y) {
                    if (comp[y] == -1) {
                        comp[y] = next;
                        stack.push_back(y);
                    }
                });
            }
            ++next;
        }
        return comp;
    }

    // BFS distances from s; -1 marks unreachable vertices.
    std::vector<int> distances_from(Vertex s) const {
        std::vector<int> dist(n_, -1);
        dist[s] = 0;
        std::vector<Vertex> frontier{s}, next;
        int d = 0;
        while (!frontier.empty()) {
            ++d;
            next.clear();
            for (Vertex x : frontier)
                for_each_neighbor(x, [&](Vertex y) {
                    if (dist[y] == -1) {
                        dist[y] = d;
                        next.push_back(y);
                    }
                });
            frontier.swap(next);
        }
        return dist;
    }

    int distance(Vertex u, Vertex v) const {
        if (u == v) return 0;
        std::vector<int> dist = distances_from(u);
        return dist[v];
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

    // Text form "n:<count>;edges:u-v,u-v,...", edges normalized and sorted.
    std::string to_text() const {
        std::ostringstream os;
        os << "n:" << n_ << ";edges:";
        std::vector<Edge> es = edges();
        std::sort(es.begin(), es.end());
        for (std::size_t i = 0; i < es.size(); ++i) {
            if (i) os << ",";
            os << es[i].u << "-" << es[i].v;
        }
        return os.str();
    }

    static Graph from_text(const std::string& text) {
        auto fail = [&](const std::string& why) -> Graph {
            throw DomainError("bad graph text (" + why + "): " + text);
        };
        if (text.rfind("n:", 0) != 0) return fail("missing n:");
        std::size_t semi = text.find(';');
        if (semi == std::string::npos) return fail("missing ;");
        int n = 0;
        try {
            n = std::stoi(text.substr(2, semi - 2));
        } catch (...) {
            return fail("vertex count not a number");
        }
        const std::string tag = "edges:";
        if (text.compare(semi + 1, tag.size(), tag) != 0) return fail("missing edges:");
        Graph g(n);
        std::string rest = text.substr(semi + 1 + tag.size());
        std::istringstream is(rest);
        std::string item;
        while (std::getline(is, item, ',')) {
            if (item.empty()) continue;
            std::size_t dash = item.find('-');
            if (dash == std::string::npos) return fail("edge without dash: " + item);
            int u = 0, v = 0;
            try {
                u = std::stoi(item.substr(0, dash));
                v = std::stoi(item.substr(dash + 1));
            } catch (...) {
                return fail("edge endpoints not numbers: " + item);
            }
            if (u < 0 || v < 0 || u >= n || v >= n) return fail("endpoint out of range: " + item);
            if (g.has_edge(u, v)) return fail("duplicate edge: " + item);
            g.add_edge_unchecked(u, v);
        }
        return g;
    }

    // Neighbors of v restricted to a word-parallel vertex set.
    template <typename F>
    void for_each_neighbor_in(Vertex v, const std::vector<std::uint64_t>& mask, F&& f) const {
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t x = r[w] & mask[w];
            while (x) {
                f(Vertex(w * 64 + __builtin_ctzll(x)));
                x &= x - 1;
            }
        }
    }

  private:
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_) throw DomainError("vertex " + std::to_string(v) + " out of range");
    }

    void set_bit(Vertex u, Vertex v) { bits_[std::size_t(u) * words_ + (v >> 6)] |= 1ULL << (v & 63); }

    int n_ = 0;
    int words_ = 0;
    int edges_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Word-parallel vertex set, sized to match a graph's bit rows.
struct VSet {
    int n = 0;
    std::vector<std::uint64_t> w;

    VSet() = default;
    explicit VSet(int order) : n(order), w((order + 63) / 64, 0) {}

    static VSet all(int order) {
        VSet s(order);
        for (int v = 0; v < order; ++v) s.set(v);
        return s;
    }

    bool test(Vertex v) const { return (w[v >> 6] >> (v & 63)) & 1ULL; }
    void set(Vertex v) { w[v >> 6] |= 1ULL << (v & 63); }
    void reset(Vertex v) { w[v >> 6] &= ~(1ULL << (v & 63)); }

    int count() const {
        int c = 0;
        for (std::uint64_t x : w) c += __builtin_popcountll(x);
        return c;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::uint64_t x = w[i];
            while (x) {
                f(Vertex(i * 64 + __builtin_ctzll(x)));
                x &= x - 1;
            }
        }
    }

    bool operator==(const VSet&) const = default;
};

}  // namespace satgame
