#include "syncwin/reachability.hpp"

#include <queue>

namespace syncwin {

WinningWordTable analyze(const Game& game) {
    WinningWordTable table;
    table.win = game.win;
    table.dist.assign(game.n, kInfDist);
    table.step.assign(game.n, {});

    // Reverse adjacency, materialized per call.
    std::vector<std::vector<uint32_t>> rev(game.n);
    for (uint32_t v = 0; v < game.n; ++v)
        for (uint32_t l = 0; l < game.b; ++l) rev[game.at(v, l)].push_back(v);

    std::queue<uint32_t> frontier;
    table.dist[game.win] = 0;
    frontier.push(game.win);
    while (!frontier.empty()) {
        uint32_t u = frontier.front();
        frontier.pop();
        for (uint32_t v : rev[u]) {
            if (table.dist[v] != kInfDist) continue;
            table.dist[v] = table.dist[u] + 1;
            frontier.push(v);
        }
    }

    // Smallest letter realizing dist(v)-1; one successor per letter, so the
    // letter alone fixes the tie-break.
    for (uint32_t v = 0; v < game.n; ++v) {
        if (v == game.win || table.dist[v] == kInfDist) continue;
        for (uint32_t l = 0; l < game.b; ++l) {
            uint32_t succ = game.at(v, l);
            if (table.dist[succ] == table.dist[v] - 1) {
                table.step[v] = {l, succ};
                break;
            }
        }
    }
    return table;
}

bool is_win_reducible(const WinningWordTable& table) {
    for (uint32_t d : table.dist)
        if (d == kInfDist) return false;
    return true;
}

Word winning_word(const WinningWordTable& table, const Game& game, uint32_t v) {
    (void)game;
    if (v >= table.dist.size() || table.dist[v] == kInfDist)
        throw Unreachable("state " + std::to_string(v) + " cannot reach win");
    Word w;
    w.letters.reserve(table.dist[v]);
    uint32_t cur = v;
    while (cur != table.win) {
        w.append(table.step[cur].letter);
        cur = table.step[cur].successor;
    }
    return w;
}

}  // namespace syncwin
