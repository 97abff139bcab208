#include "syncwin/rng_game.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

namespace syncwin {

namespace {

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 stream: state advances by the golden-ratio increment, outputs
// are the mixed state.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += kGolden;
        return mix64(state);
    }
};

// Uniform draw over [0, r): high 32 bits of one output, rejection to kill
// modulo bias.
uint32_t draw_uniform(SplitMix64& gen, uint32_t r) {
    const uint64_t range = uint64_t{1} << 32;
    const uint64_t bound = range - range % r;
    for (;;) {
        uint64_t hi = gen.next() >> 32;
        if (hi < bound) return static_cast<uint32_t>(hi % r);
    }
}

std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        lines.push_back(line);
    }
    return lines;
}

uint32_t parse_u32(const std::string& tok, const char* what) {
    size_t used = 0;
    unsigned long val = 0;
    try {
        val = std::stoul(tok, &used);
    } catch (const std::exception&) {
        throw MalformedTable(std::string("bad ") + what + ": '" + tok + "'");
    }
    if (used != tok.size() || val > 0xFFFFFFFFul)
        throw MalformedTable(std::string("bad ") + what + ": '" + tok + "'");
    return static_cast<uint32_t>(val);
}

}  // namespace

uint64_t mix64(uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

RngGame parse_rng_game(std::istream& in) {
    auto lines = content_lines(in);
    if (lines.empty()) throw MalformedTable("empty input");
    std::istringstream hs(lines[0]);
    std::vector<std::string> header;
    for (std::string t; hs >> t;) header.push_back(t);
    if (header.size() != 5 || header[0] != "rnggame")
        throw MalformedTable("expected header 'rnggame <n> <b> <r> <win>'");
    RngGame rg;
    rg.n = parse_u32(header[1], "state count");
    rg.b = parse_u32(header[2], "alphabet size");
    rg.r = parse_u32(header[3], "rng alphabet size");
    rg.win = parse_u32(header[4], "win state");
    if (rg.n == 0 || rg.b == 0 || rg.r == 0)
        throw MalformedTable("n, b, r must be positive");
    if (rg.win >= rg.n) throw MalformedTable("win state out of range");
    const size_t rows = static_cast<size_t>(rg.n) * rg.b;
    if (lines.size() != 1 + rows)
        throw MalformedTable("expected " + std::to_string(rows) + " table rows, got " +
                             std::to_string(lines.size() - 1));
    for (size_t row = 0; row < rows; ++row) {
        std::istringstream rs(lines[1 + row]);
        std::vector<std::string> toks;
        for (std::string t; rs >> t;) toks.push_back(t);
        if (toks.size() != rg.r)
            throw MalformedTable("row " + std::to_string(row) + " has " +
                                 std::to_string(toks.size()) + " entries, expected " +
                                 std::to_string(rg.r));
        for (const auto& tok : toks) {
            uint32_t succ = parse_u32(tok, "transition entry");
            if (succ >= rg.n)
                throw MalformedTable("transition entry " + tok + " out of range");
            rg.delta.push_back(succ);
        }
    }
    return rg;
}

RngGame load_rng_game(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedTable("cannot open file: " + path);
    return parse_rng_game(in);
}

void write_rng_game(std::ostream& out, const RngGame& rg) {
    out << "rnggame " << rg.n << ' ' << rg.b << ' ' << rg.r << ' ' << rg.win << '\n';
    for (uint32_t v = 0; v < rg.n; ++v)
        for (uint32_t l = 0; l < rg.b; ++l) {
            for (uint32_t o = 0; o < rg.r; ++o) {
                if (o) out << ' ';
                out << rg.at(v, l, o);
            }
            out << '\n';
        }
}

bool validate_rng_game(const RngGame& rg, std::string* message) {
    auto fail = [&](const std::string& msg) {
        if (message) *message = msg;
        return false;
    };
    if (rg.n == 0 || rg.b == 0 || rg.r == 0) return fail("n, b, r must be positive");
    if (rg.win >= rg.n) return fail("win state out of range");
    if (rg.delta.size() != static_cast<size_t>(rg.n) * rg.b * rg.r)
        return fail("transition table has wrong size");
    for (uint32_t entry : rg.delta)
        if (entry >= rg.n) return fail("transition entry out of range");
    for (uint32_t l = 0; l < rg.b; ++l)
        for (uint32_t o = 0; o < rg.r; ++o)
            if (rg.at(rg.win, l, o) != rg.win)
                return fail("win state is not absorbing");
    return true;
}

bool hull_dobell(uint64_t m, uint64_t a, uint64_t c) {
    if (m < 2) return false;
    if (std::gcd(c, m) != 1) return false;
    // a-1 divisible by every prime factor of m.
    uint64_t rest = m;
    for (uint64_t p = 2; p * p <= rest; ++p) {
        if (rest % p) continue;
        if ((a - 1) % p) return false;
        while (rest % p == 0) rest /= p;
    }
    if (rest > 1 && (a - 1) % rest) return false;
    if (m % 4 == 0 && (a - 1) % 4) return false;
    return true;
}

uint32_t ProductGame::encode(uint32_t v, uint64_t s) const {
    const uint32_t merged_win = static_cast<uint32_t>((uint64_t{n_in} - 1) * m);
    if (v == win_in) return merged_win;
    uint32_t rank = v < win_in ? v : v - 1;
    return static_cast<uint32_t>(rank * m + s);
}

uint32_t ProductGame::decode_state(uint32_t product_state) const {
    const uint32_t merged_win = static_cast<uint32_t>((uint64_t{n_in} - 1) * m);
    if (product_state == merged_win) return win_in;
    uint32_t rank = static_cast<uint32_t>(product_state / m);
    return rank < win_in ? rank : rank + 1;
}

ProductGame product(const RngGame& rg, const Lcg& lcg) {
    std::string msg;
    if (!validate_rng_game(rg, &msg)) throw MalformedTable("invalid rng game: " + msg);
    if (lcg.m < 1) throw RangeMismatch("lcg modulus must be >= 1");
    // Output map `low` lands in [0, min(m, r)) which never exceeds r.
    const uint64_t n_out64 = (uint64_t{rg.n} - 1) * lcg.m + 1;
    if (n_out64 > kMaxStates) throw TooLarge("product exceeds core state limit");

    ProductGame pg;
    pg.n_in = rg.n;
    pg.win_in = rg.win;
    pg.m = lcg.m;
    pg.game.n = static_cast<uint32_t>(n_out64);
    pg.game.b = rg.b;
    pg.game.win = pg.game.n - 1;
    pg.game.delta.assign(static_cast<size_t>(pg.game.n) * rg.b, pg.game.win);
    for (uint32_t v = 0; v < rg.n; ++v) {
        if (v == rg.win) continue;  // merged win row stays constant-win
        for (uint64_t s = 0; s < lcg.m; ++s) {
            uint32_t from = pg.encode(v, s);
            uint32_t out = lcg.output(s, rg.r);
            uint64_t s_next = lcg.step(s);
            for (uint32_t l = 0; l < rg.b; ++l)
                pg.game.delta[static_cast<size_t>(from) * rg.b + l] =
                    pg.encode(rg.at(v, l, out), s_next);
        }
    }
    return pg;
}

SimulationReport simulate_true_rng(const RngGame& rg, uint32_t start,
                                   DigitStream& stream, uint64_t horizon,
                                   uint64_t seed) {
    if (stream.base() != rg.b)
        throw BaseMismatch("stream base " + std::to_string(stream.base()) +
                           " != game alphabet " + std::to_string(rg.b));
    SimulationReport rep;
    rep.start = start;
    rep.horizon = horizon;
    SplitMix64 gen(seed);
    uint32_t state = start;
    for (uint64_t consumed = 0;; ++consumed) {
        if (state == rg.win) {
            rep.hit = true;
            rep.hitting_index = consumed;
            return rep;
        }
        if (consumed == horizon) return rep;
        auto l = stream.next();
        if (!l) return rep;
        if (*l >= rg.b) throw LetterOutOfRange("stream letter out of range");
        uint32_t out = draw_uniform(gen, rg.r);
        state = rg.at(state, *l, out);
    }
}

MonteCarloReport monte_carlo(const RngGame& rg, uint32_t start,
                             const StreamFactory& make_stream, uint64_t horizon,
                             uint64_t trials, uint64_t base_seed, unsigned threads) {
    MonteCarloReport rep;
    rep.trials = trials;
    rep.horizon = horizon;
    rep.base_seed = base_seed;

    if (threads == 0) {
        if (const char* env = std::getenv("SYNCWIN_THREADS"))
            threads = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    }
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    if (threads > trials) threads = static_cast<unsigned>(trials);

    std::vector<uint64_t> wins(threads, 0), index_sum(threads, 0);
    auto run_range = [&](unsigned t, uint64_t lo, uint64_t hi) {
        for (uint64_t i = lo; i < hi; ++i) {
            uint64_t seed = mix64(base_seed ^ (kGolden * (i + 1)));
            auto stream = make_stream();
            auto r = simulate_true_rng(rg, start, *stream, horizon, seed);
            if (r.hit) {
                ++wins[t];
                index_sum[t] += r.hitting_index;
            }
        }
    };
    if (threads == 1) {
        run_range(0, 0, trials);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            uint64_t lo = trials * t / threads;
            uint64_t hi = trials * (t + 1) / threads;
            pool.emplace_back(run_range, t, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    uint64_t total_wins = 0, total_sum = 0;
    for (unsigned t = 0; t < threads; ++t) {
        total_wins += wins[t];
        total_sum += index_sum[t];
    }
    rep.wins = total_wins;
    rep.win_fraction = trials ? static_cast<double>(total_wins) / trials : 0.0;
    rep.mean_hitting_index =
        total_wins ? static_cast<double>(total_sum) / total_wins : 0.0;
    return rep;
}

}  // namespace syncwin
