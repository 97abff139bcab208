#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "syncwin/game.hpp"
#include "syncwin/reachability.hpp"

namespace syncwin::testing {

// Two states, letter 0 wins from everywhere, letter 1 fixes state 1.
inline Game g2() {
    Game g;
    g.n = 2;
    g.b = 2;
    g.win = 0;
    g.delta = {0, 0, 0, 1};
    return g;
}

// Three-state line: letter 0 walks 2 -> 1 -> 0, letter 1 is the identity.
inline Game g3_line() {
    Game g;
    g.n = 3;
    g.b = 2;
    g.win = 0;
    g.delta = {0, 0, 0, 1, 1, 2};
    return g;
}

// Hard-lock fixture: state 2 is a second sink, win unreachable from it.
inline Game g4_hardlock() {
    Game g;
    g.n = 3;
    g.b = 1;
    g.win = 0;
    g.delta = {0, 0, 2};
    return g;
}

inline Game g1() {
    Game g;
    g.n = 1;
    g.b = 1;
    g.win = 0;
    g.delta = {0};
    return g;
}

// Cerny automaton C_n: letter 0 rotates i -> i+1 mod n, letter 1 maps 0 -> 1
// and fixes all other states. No sink; shortest reset word length (n-1)^2.
inline Game cerny(uint32_t n) {
    Game g;
    g.n = n;
    g.b = 2;
    g.win = 0;
    g.delta.resize(static_cast<size_t>(n) * 2);
    for (uint32_t v = 0; v < n; ++v) {
        g.delta[v * 2 + 0] = (v + 1) % n;
        g.delta[v * 2 + 1] = (v == 0) ? 1 : v;
    }
    return g;
}

// Random game where every state is guaranteed a path to win: states are laid
// out in a random order starting at win and each later state gets one edge
// back into the earlier prefix; all other entries are uniform.
inline Game random_win_reducible_game(std::mt19937_64& rng, uint32_t n, uint32_t b) {
    Game g;
    g.n = n;
    g.b = b;
    g.win = static_cast<uint32_t>(rng() % n);
    g.delta.resize(static_cast<size_t>(n) * b);
    for (auto& e : g.delta) e = static_cast<uint32_t>(rng() % n);

    std::vector<uint32_t> order;
    for (uint32_t v = 0; v < n; ++v)
        if (v != g.win) order.push_back(v);
    std::shuffle(order.begin(), order.end(), rng);
    order.insert(order.begin(), g.win);
    for (size_t i = 1; i < order.size(); ++i) {
        uint32_t v = order[i];
        uint32_t letter = static_cast<uint32_t>(rng() % b);
        g.delta[static_cast<size_t>(v) * b + letter] = order[rng() % i];
    }
    for (uint32_t l = 0; l < b; ++l) g.delta[static_cast<size_t>(g.win) * b + l] = g.win;
    return g;
}

// Fully random table with win forced to be a sink; may hard-lock.
inline Game random_sink_game(std::mt19937_64& rng, uint32_t n, uint32_t b) {
    Game g;
    g.n = n;
    g.b = b;
    g.win = static_cast<uint32_t>(rng() % n);
    g.delta.resize(static_cast<size_t>(n) * b);
    for (auto& e : g.delta) e = static_cast<uint32_t>(rng() % n);
    for (uint32_t l = 0; l < b; ++l) g.delta[static_cast<size_t>(g.win) * b + l] = g.win;
    return g;
}

inline Word random_word(std::mt19937_64& rng, uint32_t b, size_t len) {
    Word w;
    for (size_t i = 0; i < len; ++i) w.append(static_cast<uint32_t>(rng() % b));
    return w;
}

// Independent oracle: shortest winning word lengths by breadth-first
// enumeration of all words, kInfDist where no word of length <= max_len wins.
inline std::vector<uint32_t> brute_force_dists(const Game& g, uint32_t max_len) {
    std::vector<uint32_t> dist(g.n, kInfDist);
    std::vector<std::vector<uint32_t>> words = {{}};
    for (uint32_t len = 0; len <= max_len; ++len) {
        for (const auto& letters : words) {
            for (uint32_t v = 0; v < g.n; ++v) {
                if (dist[v] != kInfDist) continue;
                uint32_t cur = v;
                for (uint32_t l : letters) cur = g.at(cur, l);
                if (cur == g.win) dist[v] = len;
            }
        }
        if (len == max_len) break;
        std::vector<std::vector<uint32_t>> next;
        for (const auto& letters : words)
            for (uint32_t l = 0; l < g.b; ++l) {
                auto ext = letters;
                ext.push_back(l);
                next.push_back(std::move(ext));
            }
        words = std::move(next);
    }
    return dist;
}

// Independent oracle: exhaustive enumeration of words in length order,
// returning the first that maps every state into the target.
inline std::optional<Word> brute_force_sync_word(const Game& g, bool sink_only,
                                                 uint32_t max_len) {
    std::vector<std::vector<uint32_t>> words = {{}};
    for (uint32_t len = 0; len <= max_len; ++len) {
        for (const auto& letters : words) {
            uint32_t common = kInfDist;
            bool sync = true;
            for (uint32_t v = 0; v < g.n && sync; ++v) {
                uint32_t cur = v;
                for (uint32_t l : letters) cur = g.at(cur, l);
                if (common == kInfDist)
                    common = cur;
                else if (cur != common)
                    sync = false;
            }
            if (sync && (!sink_only || common == g.win))
                return Word{std::vector<uint32_t>(letters)};
        }
        if (len == max_len) break;
        std::vector<std::vector<uint32_t>> next;
        for (const auto& letters : words)
            for (uint32_t l = 0; l < g.b; ++l) {
                auto ext = letters;
                ext.push_back(l);
                next.push_back(std::move(ext));
            }
        words = std::move(next);
    }
    return std::nullopt;
}

}  // namespace syncwin::testing
