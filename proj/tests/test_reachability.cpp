#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "syncwin/reachability.hpp"
#include "test_helpers.hpp"

using namespace syncwin;
using namespace syncwin::testing;

TEST_CASE("analyze computes exact distances on the fixtures") {
    CHECK(analyze(g2()).dist == std::vector<uint32_t>{0, 1});
    CHECK(analyze(g3_line()).dist == std::vector<uint32_t>{0, 1, 2});
    CHECK(analyze(g4_hardlock()).dist == std::vector<uint32_t>{0, 1, kInfDist});

    // Same values from the word-enumeration oracle.
    CHECK(analyze(g3_line()).dist == brute_force_dists(g3_line(), 3));
    CHECK(analyze(g4_hardlock()).dist == brute_force_dists(g4_hardlock(), 3));
}

TEST_CASE("is_win_reducible") {
    CHECK(is_win_reducible(analyze(g3_line())));
    CHECK(!is_win_reducible(analyze(g4_hardlock())));
    CHECK(is_win_reducible(analyze(g1())));
}

TEST_CASE("winning_word reconstruction") {
    Game g = g3_line();
    auto table = analyze(g);
    CHECK(winning_word(table, g, 2) == Word{{0, 0}});
    CHECK(winning_word(table, g, 0) == Word{});

    auto bad = analyze(g4_hardlock());
    CHECK_THROWS_AS(winning_word(bad, g4_hardlock(), 2), Unreachable);
}

TEST_CASE("BFS distances match the brute-force oracle on small games") {
    std::mt19937_64 rng(0x5EED);
    for (int iter = 0; iter < 60; ++iter) {
        uint32_t n = 1 + rng() % 8, b = 1 + rng() % 3;
        Game g = random_sink_game(rng, n, b);
        auto table = analyze(g);
        auto oracle = brute_force_dists(g, n);  // shortest words never exceed n-1
        CHECK(table.dist == oracle);
        for (uint32_t v = 0; v < n; ++v) {
            if (table.dist[v] == kInfDist) continue;
            Word w = winning_word(table, g, v);
            CHECK(w.size() == table.dist[v]);
            CHECK(w.size() <= n - 1);
            CHECK(apply_word(g, v, w) == g.win);
        }
    }
}

TEST_CASE("tie-break picks the smallest letter") {
    // Both letters of state 1 step to win; letter 0 must be recorded.
    Game g;
    g.n = 2;
    g.b = 2;
    g.win = 0;
    g.delta = {0, 0, 0, 0};
    auto table = analyze(g);
    CHECK(table.step[1].letter == 0);
    CHECK(winning_word(table, g, 1) == Word{{0}});
}

TEST_CASE("winning word lengths are bounded by n-1 on larger random games") {
    std::mt19937_64 rng(0xF00D);
    for (int iter = 0; iter < 40; ++iter) {
        uint32_t n = 2 + rng() % 49, b = 1 + rng() % 4;
        Game g = random_win_reducible_game(rng, n, b);
        auto table = analyze(g);
        CHECK(is_win_reducible(table));
        for (uint32_t v = 0; v < n; ++v) CHECK(table.dist[v] <= n - 1);
    }
}
