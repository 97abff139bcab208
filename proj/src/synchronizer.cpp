#include "syncwin/synchronizer.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include <gmp.h>

namespace syncwin {

SyncResult synthesize_greedy(const Game& game, const WinningWordTable& table,
                             PickOrder order) {
    if (!is_win_reducible(table))
        throw NotWinReducible("game has states that cannot reach win");

    SyncResult result;
    if (order == PickOrder::Paper) {
        // Fixed enumeration: for each state in index order, map its current
        // image under W so far to win.
        for (uint32_t v = 0; v < game.n; ++v) {
            uint32_t cur = apply_word(game, v, result.word);
            if (cur == game.win) continue;
            Word w = winning_word(table, game, cur);
            result.word.append(w);
            ++result.rounds;
            StateSet image = image_set(game, StateSet::full(game.n), result.word);
            result.per_round.push_back(
                {v, static_cast<uint32_t>(w.size()), image.count()});
        }
        return result;
    }

    StateSet image = image_set(game, StateSet::full(game.n), result.word);
    while (!(image.count() == 1 && image.test(game.win))) {
        // Largest remaining win-distance; to_vector order breaks ties toward
        // the smallest index.
        uint32_t picked = game.win;
        uint32_t best_dist = 0;
        for (uint32_t v : image.to_vector()) {
            if (v == game.win) continue;
            if (picked == game.win || table.dist[v] > best_dist) {
                picked = v;
                best_dist = table.dist[v];
            }
        }
        Word w = winning_word(table, game, picked);
        result.word.append(w);
        ++result.rounds;
        image = image_set(game, image, w);
        result.per_round.push_back(
            {picked, static_cast<uint32_t>(w.size()), image.count()});
    }
    return result;
}

std::optional<Word> shortest_sync_word_exact(const Game& game, SyncTarget target) {
    if (game.n > kMaxOracleStates)
        throw TooLarge("power-set oracle limited to " +
                       std::to_string(kMaxOracleStates) + " states");

    const uint32_t n = game.n;
    const uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    auto is_target = [&](uint32_t mask) {
        if (target == SyncTarget::SinkOnly) return mask == (1u << game.win);
        return std::popcount(mask) == 1;
    };

    if (is_target(full)) return Word{};

    const size_t space = size_t{1} << n;
    std::vector<uint8_t> visited((space + 7) / 8, 0);
    std::vector<uint32_t> parent(space);
    std::vector<uint8_t> via_letter(space);
    auto mark = [&](size_t m) { visited[m >> 3] |= uint8_t(1u << (m & 7)); };
    auto seen = [&](size_t m) { return (visited[m >> 3] >> (m & 7)) & 1; };

    // FIFO BFS with letters in increasing order yields the lexicographically
    // smallest minimum-length witness.
    std::deque<uint32_t> frontier;
    mark(full);
    frontier.push_back(full);
    while (!frontier.empty()) {
        uint32_t mask = frontier.front();
        frontier.pop_front();
        for (uint32_t l = 0; l < game.b; ++l) {
            uint32_t next = 0;
            for (uint32_t rest = mask; rest;) {
                uint32_t v = static_cast<uint32_t>(std::countr_zero(rest));
                rest &= rest - 1;
                next |= 1u << game.at(v, l);
            }
            if (seen(next)) continue;
            mark(next);
            parent[next] = mask;
            via_letter[next] = static_cast<uint8_t>(l);
            if (is_target(next)) {
                Word w;
                for (uint32_t m = next; m != full; m = parent[m])
                    w.append(via_letter[m]);
                std::reverse(w.letters.begin(), w.letters.end());
                return w;
            }
            frontier.push_back(next);
        }
    }
    return std::nullopt;
}

UniversalStream universal_sequence(uint32_t b, uint32_t block_length) {
    return UniversalStream(b, block_length);
}

BoundReport concatenation_bound(uint64_t n, uint64_t b) {
    BoundReport rep;
    rep.n = n;
    rep.b = b;
    const long double n2 = static_cast<long double>(n) * static_cast<long double>(n);
    rep.log2_bound = 2.0L * std::log2(static_cast<long double>(n)) +
                     n2 * std::log2(static_cast<long double>(b));
    rep.log10_bound = rep.log2_bound * 0.30102999566398119521L;  // log10(2)

    if (rep.log10_bound < 1e6L) {
        // Small enough for exact big-integer evaluation of n^2 * b^(n^2).
        mpz_t value, n2z;
        mpz_init(value);
        mpz_init(n2z);
        mpz_set_ui(n2z, static_cast<unsigned long>(n));
        mpz_mul_ui(n2z, n2z, static_cast<unsigned long>(n));
        mpz_ui_pow_ui(value, static_cast<unsigned long>(b),
                      static_cast<unsigned long>(n * n));
        mpz_mul(value, value, n2z);
        // sizeinbase can overestimate by one; confirm against 10^(d-1).
        size_t digits = mpz_sizeinbase(value, 10);
        if (digits > 1) {
            mpz_t pow10;
            mpz_init(pow10);
            mpz_ui_pow_ui(pow10, 10, digits - 1);
            if (mpz_cmp(value, pow10) < 0) --digits;
            mpz_clear(pow10);
        }
        rep.decimal_digits = digits;
        rep.digits_exact = true;
        mpz_clear(n2z);
        mpz_clear(value);
    } else {
        rep.decimal_digits = static_cast<uint64_t>(std::floor(rep.log10_bound)) + 1;
        rep.digits_exact = false;
    }
    return rep;
}

}  // namespace syncwin
