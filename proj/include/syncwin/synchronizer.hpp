#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "syncwin/game.hpp"
#include "syncwin/reachability.hpp"
#include "syncwin/streams.hpp"

namespace syncwin {

// Power-set oracle cap: 2^24 subsets is the honest desk-scale limit.
inline constexpr uint32_t kMaxOracleStates = 24;

enum class PickOrder {
    Greedy,  // largest remaining win-distance first, ties to smallest index
    Paper,   // fixed enumeration order 0, 1, ..., n-1
};

enum class SyncTarget {
    SinkOnly,      // accept only the image {win}
    AnySingleton,  // accept any singleton image (sink-free automata allowed)
};

struct SyncResult {
    struct Round {
        uint32_t picked = 0;          // state whose winning word was appended
        uint32_t appended_length = 0;
        uint32_t image_size = 0;      // surviving image size after the append
    };
    Word word;
    uint32_t rounds = 0;
    std::vector<Round> per_round;
};

// Inductive construction: repeatedly append the shortest winning word of one
// surviving image state until the image of all states collapses to {win}.
// Resulting length is at most n*(n-1). Throws NotWinReducible.
SyncResult synthesize_greedy(const Game& game, const WinningWordTable& table,
                             PickOrder order = PickOrder::Greedy);

// Exact shortest synchronizing word via BFS on the power-set automaton from
// the full state set. Returns the lexicographically smallest minimum-length
// witness, or nullopt when no word reaches the target. Throws TooLarge for
// n > 24.
std::optional<Word> shortest_sync_word_exact(const Game& game, SyncTarget target);

// All b^L words of length L concatenated lexicographically, lazily.
UniversalStream universal_sequence(uint32_t b, uint32_t block_length);

// Magnitude of n^2 * b^(n^2) in log form, with the exact decimal digit count
// when it is small enough to evaluate with big integers.
struct BoundReport {
    uint64_t n = 0;
    uint64_t b = 0;
    long double log2_bound = 0;
    long double log10_bound = 0;
    uint64_t decimal_digits = 0;
    bool digits_exact = false;  // true when counted from the big integer
};

BoundReport concatenation_bound(uint64_t n, uint64_t b);

}  // namespace syncwin
