#include <catch2/catch_amalgamated.hpp>

#include "satgame/adversaries.hpp"

using namespace satgame;

namespace {

GameState played(int n, std::initializer_list<Edge> moves,
                 Convention conv = Convention::MinimizerFirst) {
    GameState st(GameConfig{n, conv});
    for (Edge e : moves) st.apply(e);
    return st;
}

}  // namespace

TEST_CASE("names round trip") {
    for (AdversaryKind k : {AdversaryKind::Random, AdversaryKind::C4Closer,
                            AdversaryKind::Interferer, AdversaryKind::Star, AdversaryKind::Passive,
                            AdversaryKind::Minimax}) {
        CHECK(adversary_kind_from_name(adversary_kind_name(k)) == k);
        CHECK(make_adversary(k, 1)->name() == adversary_kind_name(k));
    }
    CHECK_THROWS_AS(adversary_kind_from_name("nope"), DomainError);
}

TEST_CASE("every adversary plays legal moves to the end") {
    for (AdversaryKind k : {AdversaryKind::Random, AdversaryKind::C4Closer,
                            AdversaryKind::Interferer, AdversaryKind::Star,
                            AdversaryKind::Passive}) {
        for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
            auto adv = make_adversary(k, seed);
            GameState st(GameConfig{12, Convention::MaximizerFirst});
            while (!st.is_terminal()) st.apply(adv->choose(st));
            CHECK(st.graph().is_maximal_triangle_free());
        }
    }
}

TEST_CASE("adversaries are deterministic per seed") {
    for (AdversaryKind k : {AdversaryKind::Random, AdversaryKind::C4Closer,
                            AdversaryKind::Interferer, AdversaryKind::Star,
                            AdversaryKind::Passive}) {
        auto run = [&](std::uint64_t seed) {
            auto adv = make_adversary(k, seed);
            GameState st(GameConfig{10, Convention::MinimizerFirst});
            while (!st.is_terminal()) st.apply(adv->choose(st));
            return st.graph().to_text();
        };
        CHECK(run(7) == run(7));
    }
    CHECK(RandomAdversary(5).choose(played(8, {})) == RandomAdversary(5).choose(played(8, {})));
}

TEST_CASE("the path closer caps a fresh four-vertex path") {
    // Minimizer built 0-1-2-3 over two turns against maximizer replies far away.
    GameState st = played(12, {Edge(0, 1), Edge(8, 9), Edge(1, 2), Edge(9, 10), Edge(2, 3)});
    C4CloserAdversary adv(1);
    CHECK(st.to_move() == Role::Maximizer);
    Edge e = adv.choose(st);
    CHECK(e == Edge(0, 3));
}

TEST_CASE("the path closer closes through the middle of a new edge") {
    // Path 4-0-1-5 assembled so the last minimizer edge (0,1) is the middle.
    GameState st = played(12, {Edge(0, 4), Edge(8, 9), Edge(1, 5), Edge(9, 10), Edge(0, 1)});
    C4CloserAdversary adv(1);
    Edge e = adv.choose(st);
    CHECK(e == Edge(4, 5));
}

TEST_CASE("the interferer poisons the pair that blocks the most closings") {
    // Path 0-1-2-3-4: vertices 0 and 4 sit four apart; its killers are edges
    // from 0 or 4 to a neighbor of the other end.
    GameState st = played(12, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4)});
    InterfererAdversary adv(1);
    Edge e = adv.choose(st);
    bool expected = (e == Edge(0, 3)) || (e == Edge(1, 4));
    CHECK(expected);
    CHECK(st.is_legal(e));
}

TEST_CASE("the star adversary persists with its center") {
    StarAdversary adv(1);
    GameState st(GameConfig{6, Convention::MaximizerFirst});
    st.apply(adv.choose(st));
    CHECK(st.graph().has_edge(0, 1));
    st.apply(Edge(3, 4));
    st.apply(adv.choose(st));
    CHECK(st.graph().has_edge(0, 2));
    st.apply(Edge(4, 5));
    Edge e = adv.choose(st);
    CHECK(e.u == 0);
}

TEST_CASE("the passive adversary prefers untouched ground") {
    PassiveAdversary adv(1);
    GameState st = played(8, {Edge(0, 1), Edge(2, 3), Edge(1, 2)},
                          Convention::MinimizerFirst);
    Edge e = adv.choose(st);
    CHECK(e == Edge(4, 5));
    // Once no untouched pair remains it falls back to the smallest legal pair.
    GameState st2 = played(4, {Edge(0, 1), Edge(2, 3)});
    PassiveAdversary adv2(1);
    Edge e2 = adv2.choose(st2);
    CHECK(e2 == Edge(0, 2));
}

TEST_CASE("the minimax adversary achieves the game value from the start") {
    for (int n = 4; n <= 6; ++n) {
        for (auto conv : {Convention::MinimizerFirst, Convention::MaximizerFirst}) {
            int value = solve_score(n, conv).value;
            // Optimal against optimal: play it against itself.
            MinimaxAdversary a(1), b(2);
            GameState st(GameConfig{n, conv});
            while (!st.is_terminal())
                st.apply((st.ply() % 2 == 0 ? a : b).choose(st));
            CHECK(st.score() == value);
        }
    }
}

TEST_CASE("minimax rejects big boards") {
    MinimaxAdversary adv(1);
    GameState st(GameConfig{40, Convention::MinimizerFirst});
    CHECK_THROWS_AS(adv.choose(st), DomainError);
}
