#include <catch2/catch_amalgamated.hpp>

#include "satgame/solver.hpp"

using namespace satgame;

TEST_CASE("memoized and reference solvers agree on small boards") {
    for (int n = 2; n <= 5; ++n) {
        for (auto conv : {Convention::MinimizerFirst, Convention::MaximizerFirst}) {
            SolveResult a = solve_score(n, conv);
            SolveResult b = solve_score_naive(n, conv);
            INFO("n=" << n << " conv=" << convention_name(conv));
            CHECK(a.value == b.value);
        }
    }
}

TEST_CASE("small-board optimal scores") {
    // Values cross-checked by the reference solver above; frozen here so a
    // regression in either search is caught directly. Who moves first turns
    // out not to matter on boards this small.
    auto val = [](int n, Convention c) { return solve_score(n, c).value; };
    int expect[9] = {0, 0, 1, 2, 4, 6, 8, 10, 13};
    for (int n = 2; n <= 8; ++n) {
        INFO("n=" << n);
        CHECK(val(n, Convention::MinimizerFirst) == expect[n]);
        CHECK(val(n, Convention::MaximizerFirst) == expect[n]);
    }
}

TEST_CASE("scores fall between the extremal bounds") {
    for (int n = 2; n <= 8; ++n) {
        for (auto conv : {Convention::MinimizerFirst, Convention::MaximizerFirst}) {
            int v = solve_score(n, conv).value;
            CHECK(v >= n - 1);       // maximal triangle-free graphs are connected at these sizes
            CHECK(v <= n * n / 4);
        }
    }
}

TEST_CASE("maximizer moving first never scores worse") {
    for (int n = 2; n <= 8; ++n) {
        CHECK(solve_score(n, Convention::MaximizerFirst).value >=
              solve_score(n, Convention::MinimizerFirst).value);
    }
}

TEST_CASE("principal line is playable and achieves the value") {
    for (int n = 3; n <= 7; ++n) {
        for (auto conv : {Convention::MinimizerFirst, Convention::MaximizerFirst}) {
            SolveResult r = solve_score(n, conv);
            GameState st(GameConfig{n, conv});
            for (Edge e : r.principal_line) st.apply(e);
            CHECK(st.is_terminal());
            CHECK(st.score() == r.value);
        }
    }
}

TEST_CASE("normal play winners on small boards") {
    // The parity game: whoever faces a saturated graph with no move loses.
    auto w = [](int n) { return solve_normal_play(n).winner; };
    CHECK(w(3) == Winner::Second);
    CHECK(w(4) == Winner::Second);
    CHECK(w(5) == Winner::Second);
    CHECK(w(6) == Winner::First);
    CHECK(w(7) == Winner::Second);
    CHECK(w(8) == Winner::Second);
}

TEST_CASE("transposition table works") {
    SolveResult r = solve_score(6, Convention::MinimizerFirst);
    CHECK(r.stats.table_hits > 0);
    CHECK(r.stats.nodes > 0);
    CHECK_THROWS_AS(solve_score(1, Convention::MinimizerFirst), DomainError);
    CHECK_THROWS_AS(solve_score(11, Convention::MinimizerFirst), DomainError);
    CHECK_THROWS_AS(solve_score_naive(6, Convention::MinimizerFirst), DomainError);
}
