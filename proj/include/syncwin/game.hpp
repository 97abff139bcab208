#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "syncwin/errors.hpp"

namespace syncwin {

// State count cap for the dense core. The power-set oracle has its own,
// much smaller cap (see synchronizer.hpp).
inline constexpr uint32_t kMaxStates = 1u << 20;

// A finite word over the letter alphabet {0, ..., b-1}.
struct Word {
    std::vector<uint32_t> letters;

    Word() = default;
    explicit Word(std::vector<uint32_t> ls) : letters(std::move(ls)) {}

    size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    void append(uint32_t letter) { letters.push_back(letter); }
    void append(const Word& w) {
        letters.insert(letters.end(), w.letters.begin(), w.letters.end());
    }
    bool operator==(const Word&) const = default;

    // Contiguous digit string for b <= 10, comma-separated decimal otherwise.
    std::string to_string(uint32_t b) const;
};

// Deterministic finite-state game: total transition table over n states and
// b letters, with a designated win state. The table is row-major:
// delta[v * b + letter]. Whether win is actually a sink is checked by
// validate(), not enforced by the type; the exact-synchronization oracle
// accepts sink-free automata too.
struct Game {
    uint32_t n = 0;
    uint32_t b = 0;
    uint32_t win = 0;
    std::vector<uint32_t> delta;  // n * b entries, each < n

    uint32_t at(uint32_t state, uint32_t letter) const {
        return delta[static_cast<size_t>(state) * b + letter];
    }
};

// Subset of [0, n), fixed-width bit blocks.
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(uint32_t n) : n_(n), blocks_((n + 63) / 64, 0) {}

    static StateSet full(uint32_t n);
    static StateSet singleton(uint32_t n, uint32_t v);

    uint32_t universe_size() const { return n_; }
    bool test(uint32_t v) const { return (blocks_[v >> 6] >> (v & 63)) & 1; }
    void set(uint32_t v) { blocks_[v >> 6] |= uint64_t{1} << (v & 63); }
    void reset(uint32_t v) { blocks_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }
    uint32_t count() const;
    bool empty() const;

    // States in increasing index order.
    std::vector<uint32_t> to_vector() const;

    bool operator==(const StateSet&) const = default;

private:
    uint32_t n_ = 0;
    std::vector<uint64_t> blocks_;
};

struct ValidationReport {
    bool ok = false;              // table total, entries in range, win in range
    bool win_is_sink = false;
    std::vector<uint32_t> sinks;  // all sink states, increasing order
    std::string message;          // diagnostic when !ok
};

// Checks totality/determinism of the table, whether win is a sink, and
// collects every sink state (hard-lock candidates).
ValidationReport validate(const Game& game);

uint32_t apply_letter(const Game& game, uint32_t state, uint32_t letter);

// Left-to-right fold of apply_letter; the empty word is the identity.
// Throws LetterOutOfRange on a letter >= b.
uint32_t apply_word(const Game& game, uint32_t state, const Word& word);

// Elementwise apply_word over a state set.
StateSet image_set(const Game& game, const StateSet& states, const Word& word);

// Text format: `game <n> <b> <win>` then n rows of b successors.
// '#' starts a comment; blank lines are skipped; anything else is an error.
Game parse_game(std::istream& in);
Game load_game(const std::string& path);
void write_game(std::ostream& out, const Game& game);

}  // namespace syncwin
