#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <vector>

#include "syncwin/game.hpp"
#include "syncwin/streams.hpp"

namespace syncwin {

// Game whose transitions depend on an RNG output symbol: delta is total over
// (state, letter, output) triples, indexed (v * b + letter) * r + output.
struct RngGame {
    uint32_t n = 0;
    uint32_t b = 0;
    uint32_t r = 0;  // RNG output alphabet size
    uint32_t win = 0;
    std::vector<uint32_t> delta;  // n * b * r entries

    uint32_t at(uint32_t state, uint32_t letter, uint32_t output) const {
        return delta[(static_cast<size_t>(state) * b + letter) * r + output];
    }
};

// Text format: `rnggame <n> <b> <r> <win>` then n*b rows of r successors,
// row (v*b + letter).
RngGame parse_rng_game(std::istream& in);
RngGame load_rng_game(const std::string& path);
void write_rng_game(std::ostream& out, const RngGame& rg);

// delta(win, letter, output) == win for all pairs, entries in range.
bool validate_rng_game(const RngGame& rg, std::string* message = nullptr);

// s -> (a*s + c) mod m, output = s mod r (low bits).
struct Lcg {
    uint64_t m = 2;
    uint64_t a = 1;
    uint64_t c = 0;
    uint64_t s0 = 0;

    uint64_t step(uint64_t s) const { return (a * s + c) % m; }
    uint32_t output(uint64_t s, uint32_t r) const {
        return static_cast<uint32_t>(s % r);
    }
};

// Hull-Dobell full-period conditions for s -> (a*s + c) mod m.
bool hull_dobell(uint64_t m, uint64_t a, uint64_t c);

// Deterministic product of an RngGame with an explicit LCG. Non-win pairs
// (v, s) become dense states; every (win, s) pair is merged into one fresh
// absorbing win state (index (n-1)*m, the last state).
struct ProductGame {
    Game game;
    uint32_t n_in = 0;
    uint32_t win_in = 0;
    uint64_t m = 0;

    // Product index of (v, s); all (v == win, s) map to the merged win.
    uint32_t encode(uint32_t v, uint64_t s) const;
    // Game-component of a product state; the merged win decodes to win_in.
    uint32_t decode_state(uint32_t product_state) const;
};

ProductGame product(const RngGame& rg, const Lcg& lcg);

// One RNG draw per consumed stream letter, drawn uniformly over [0, r) from
// a seeded splitmix64 generator (high 32 bits, rejection-reduced mod r).
SimulationReport simulate_true_rng(const RngGame& rg, uint32_t start,
                                   DigitStream& stream, uint64_t horizon,
                                   uint64_t seed);

struct MonteCarloReport {
    uint64_t trials = 0;
    uint64_t horizon = 0;
    uint64_t wins = 0;
    double win_fraction = 0;
    double mean_hitting_index = 0;  // over winning trials; 0 when none won
    uint64_t base_seed = 0;
};

using StreamFactory = std::function<std::unique_ptr<DigitStream>()>;

// Independent trials with per-trial seeds derived from (base_seed, index);
// trial i uses seed mix64(base_seed ^ (0x9E3779B97F4A7C15 * (i+1))).
// threads = 0 picks hardware concurrency; the report is identical for any
// thread count.
MonteCarloReport monte_carlo(const RngGame& rg, uint32_t start,
                             const StreamFactory& make_stream, uint64_t horizon,
                             uint64_t trials, uint64_t base_seed,
                             unsigned threads = 0);

// splitmix64 finalizer, the mix function behind seed derivation and draws.
uint64_t mix64(uint64_t x);

}  // namespace syncwin
