#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "syncwin/game.hpp"

namespace syncwin {

inline constexpr uint32_t kInfDist = std::numeric_limits<uint32_t>::max();

// Per-state shortest winning words, as distances plus one (letter, successor)
// step each. dist == kInfDist marks states that cannot reach win.
struct WinningWordTable {
    struct Step {
        uint32_t letter = 0;
        uint32_t successor = 0;
    };
    uint32_t win = 0;
    std::vector<uint32_t> dist;
    std::vector<Step> step;  // undefined for win and for unreachable states
};

// Reverse BFS from the win state. Tie-break on equal-distance steps:
// smallest letter first (a deterministic table has one successor per letter,
// so the letter decides).
WinningWordTable analyze(const Game& game);

// True iff every state can reach win.
bool is_win_reducible(const WinningWordTable& table);

// Shortest word taking v to win, length exactly dist(v) <= n-1.
// Throws Unreachable when dist(v) is infinite.
Word winning_word(const WinningWordTable& table, const Game& game, uint32_t v);

}  // namespace syncwin
