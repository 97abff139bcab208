#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "syncwin/game.hpp"
#include "syncwin/reachability.hpp"
#include "syncwin/rng_game.hpp"
#include "syncwin/streams.hpp"
#include "syncwin/synchronizer.hpp"

namespace {

using namespace syncwin;

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 2;
constexpr int kExitNotWinReducible = 3;
constexpr int kExitNoHit = 4;
constexpr int kExitOracleTooLarge = 5;

constexpr const char* kVersion = "syncwin 1.0.0";

std::string real6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string log4(long double x) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.4Lf", x);
    return buf;
}

// --stream champernowne:<base> | file:<path>:<base> | periodic:<pattern>
// Periodic patterns take their base from the consuming game's alphabet.
std::unique_ptr<DigitStream> make_stream(const std::string& spec, uint32_t game_b,
                                         const std::string& map_path) {
    std::unique_ptr<DigitStream> stream;
    if (spec.rfind("champernowne:", 0) == 0) {
        stream = std::make_unique<ChampernowneStream>(
            static_cast<uint32_t>(std::stoul(spec.substr(13))));
    } else if (spec.rfind("file:", 0) == 0) {
        std::string rest = spec.substr(5);
        auto colon = rest.rfind(':');
        if (colon == std::string::npos)
            throw MalformedTable("file stream spec needs file:<path>:<base>");
        stream = std::make_unique<FileStream>(
            rest.substr(0, colon),
            static_cast<uint32_t>(std::stoul(rest.substr(colon + 1))));
    } else if (spec.rfind("periodic:", 0) == 0) {
        std::string pat = spec.substr(9);
        std::vector<uint32_t> letters;
        for (char c : pat) {
            if (c < '0' || c > '9') throw MalformedTable("periodic pattern must be digits");
            letters.push_back(static_cast<uint32_t>(c - '0'));
        }
        stream = std::make_unique<PeriodicStream>(std::move(letters), game_b);
    } else {
        throw MalformedTable("unknown stream spec: " + spec);
    }
    if (!map_path.empty()) {
        auto map = load_digit_map(map_path, stream->base(), game_b);
        stream = std::make_unique<MappedStream>(std::move(stream), std::move(map), game_b);
    }
    return stream;
}

Game load_validated(const std::string& path) {
    Game g = load_game(path);
    auto rep = validate(g);
    if (!rep.ok) throw MalformedTable(rep.message);
    if (!rep.win_is_sink) throw MalformedTable("win state is not a sink");
    return g;
}

int cmd_check(const std::string& path) {
    Game g = load_game(path);
    auto vrep = validate(g);
    if (!vrep.ok) throw MalformedTable(vrep.message);
    auto table = analyze(g);
    bool reducible = is_win_reducible(table);
    std::cout << "win_reducible=" << (reducible ? "true" : "false") << '\n';
    std::cout << "dist=";
    for (uint32_t v = 0; v < g.n; ++v) {
        if (v) std::cout << ' ';
        if (table.dist[v] == kInfDist)
            std::cout << "inf";
        else
            std::cout << table.dist[v];
    }
    std::cout << '\n';
    std::cout << "sinks=";
    for (size_t i = 0; i < vrep.sinks.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << vrep.sinks[i];
    }
    std::cout << '\n';
    std::cout << "win_is_sink=" << (vrep.win_is_sink ? "true" : "false") << '\n';
    return reducible ? kExitOk : kExitNotWinReducible;
}

int cmd_synth(const std::string& path, const std::string& order, bool exact) {
    Game g = load_validated(path);
    auto table = analyze(g);
    if (!is_win_reducible(table)) {
        std::cout << "error=not_win_reducible\n";
        return kExitNotWinReducible;
    }
    PickOrder pick = order == "paper" ? PickOrder::Paper : PickOrder::Greedy;
    auto result = synthesize_greedy(g, table, pick);
    std::cout << "word=" << result.word.to_string(g.b) << '\n';
    std::cout << "length=" << result.word.size() << '\n';
    std::cout << "rounds=" << result.rounds << '\n';
    std::cout << "bound_n2=" << static_cast<uint64_t>(g.n) * g.n << '\n';
    if (exact) {
        if (g.n > kMaxOracleStates) {
            std::cout << "exact=too-large\n";
            return kExitOracleTooLarge;
        }
        auto w = shortest_sync_word_exact(g, SyncTarget::SinkOnly);
        // Win-reducible with a sink win always synchronizes to {win}.
        std::cout << "exact_word=" << w->to_string(g.b) << '\n';
        std::cout << "exact_length=" << w->size() << '\n';
    }
    return kExitOk;
}

int cmd_simulate(const std::string& path, const std::string& stream_spec,
                 const std::string& map_path, const std::string& start_spec,
                 uint64_t horizon) {
    Game g = load_validated(path);
    std::vector<uint32_t> starts;
    if (start_spec == "all") {
        for (uint32_t v = 0; v < g.n; ++v) starts.push_back(v);
    } else {
        uint32_t v = static_cast<uint32_t>(std::stoul(start_spec));
        if (v >= g.n) throw MalformedTable("start state out of range");
        starts.push_back(v);
    }
    bool all_hit = true;
    for (uint32_t v : starts) {
        auto stream = make_stream(stream_spec, g.b, map_path);
        auto rep = simulate_on_stream(g, v, *stream, horizon);
        std::cout << "start=" << v << " hit=" << (rep.hit ? "true" : "false")
                  << " index=";
        if (rep.hit)
            std::cout << rep.hitting_index;
        else
            std::cout << '-';
        std::cout << '\n';
        all_hit = all_hit && rep.hit;
    }
    return all_hit ? kExitOk : kExitNoHit;
}

int cmd_product(const std::string& path, const std::string& lcg_spec,
                const std::string& out_mode, const std::string& out_path) {
    if (out_mode != "low") throw MalformedTable("unknown output map mode: " + out_mode);
    RngGame rg = load_rng_game(path);
    Lcg lcg;
    if (std::sscanf(lcg_spec.c_str(), "%" SCNu64 ",%" SCNu64 ",%" SCNu64 ",%" SCNu64,
                    &lcg.m, &lcg.a, &lcg.c, &lcg.s0) != 4)
        throw MalformedTable("--lcg expects m,a,c,s0");
    if (lcg.m < 1 || lcg.a >= lcg.m || lcg.c >= lcg.m || lcg.s0 >= lcg.m)
        throw MalformedTable("lcg parameters must satisfy 0 <= a,c,s0 < m");
    auto pg = product(rg, lcg);
    std::ofstream out(out_path);
    if (!out) throw MalformedTable("cannot open output file: " + out_path);
    write_game(out, pg.game);
    std::cout << "states=" << pg.game.n << '\n';
    std::cout << "win=" << pg.game.win << '\n';
    std::cout << "start=" << pg.encode(0, lcg.s0) << '\n';
    std::cout << "output=" << out_path << '\n';
    return kExitOk;
}

int cmd_montecarlo(const std::string& path, const std::string& stream_spec,
                   const std::string& map_path, uint32_t start, uint64_t horizon,
                   uint64_t trials, uint64_t seed) {
    RngGame rg = load_rng_game(path);
    std::string msg;
    if (!validate_rng_game(rg, &msg)) throw MalformedTable(msg);
    if (start >= rg.n) throw MalformedTable("start state out of range");
    StreamFactory factory = [&] { return make_stream(stream_spec, rg.b, map_path); };
    auto rep = monte_carlo(rg, start, factory, horizon, trials, seed);
    std::cout << "trials=" << rep.trials << '\n';
    std::cout << "horizon=" << rep.horizon << '\n';
    std::cout << "wins=" << rep.wins << '\n';
    std::cout << "win_fraction=" << real6(rep.win_fraction) << '\n';
    std::cout << "mean_hitting_index=" << real6(rep.mean_hitting_index) << '\n';
    std::cout << "base_seed=" << rep.base_seed << '\n';
    return kExitOk;
}

int cmd_bound(uint64_t n, uint64_t b) {
    auto rep = concatenation_bound(n, b);
    std::cout << "log2_bound=" << log4(rep.log2_bound) << '\n';
    std::cout << "log10_bound=" << log4(rep.log10_bound) << '\n';
    std::cout << "decimal_digits=" << rep.decimal_digits << '\n';
    std::cout << "digits_exact=" << (rep.digits_exact ? "true" : "false") << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sink-synchronizing word toolkit for finite-state games"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string file, stream_spec, map_path, start_spec = "all", order = "greedy";
    std::string lcg_spec, out_mode = "low", out_path;
    uint64_t horizon = 0, trials = 1, seed = 0, bound_n = 1, bound_b = 1;
    uint32_t mc_start = 0;
    bool exact = false;

    auto* check = app.add_subcommand("check", "Win-reducibility and distance report");
    check->add_option("file", file)->required();

    auto* synth = app.add_subcommand("synth", "Synthesize a sink-synchronizing word");
    synth->add_option("file", file)->required();
    synth->add_option("--order", order)->check(CLI::IsMember({"paper", "greedy"}));
    synth->add_flag("--exact", exact, "Also run the power-set shortest-word oracle");

    auto* simulate = app.add_subcommand("simulate", "Drive a game from a letter stream");
    simulate->add_option("file", file)->required();
    simulate->add_option("--stream", stream_spec)->required();
    simulate->add_option("--map", map_path);
    simulate->add_option("--start", start_spec);
    simulate->add_option("--horizon", horizon)->required();

    auto* prod = app.add_subcommand("product", "Determinize an rng game with an LCG");
    prod->add_option("file", file)->required();
    prod->add_option("--lcg", lcg_spec, "m,a,c,s0")->required();
    prod->add_option("--out", out_mode, "Output map mode (low)");
    prod->add_option("-o,--output", out_path, "Game file to write")->required();

    auto* mc = app.add_subcommand("montecarlo", "Monte Carlo true-RNG simulation");
    mc->add_option("file", file)->required();
    mc->add_option("--stream", stream_spec)->required();
    mc->add_option("--map", map_path);
    mc->add_option("--start", mc_start)->required();
    mc->add_option("--horizon", horizon)->required();
    mc->add_option("--trials", trials)->required();
    mc->add_option("--seed", seed)->required();

    auto* bound = app.add_subcommand("bound", "Magnitude of n^2 * b^(n^2)");
    bound->add_option("--n", bound_n)->required();
    bound->add_option("--b", bound_b)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitMalformed;
    }

    try {
        if (*check) return cmd_check(file);
        if (*synth) return cmd_synth(file, order, exact);
        if (*simulate) return cmd_simulate(file, stream_spec, map_path, start_spec, horizon);
        if (*prod) return cmd_product(file, lcg_spec, out_mode, out_path);
        if (*mc) return cmd_montecarlo(file, stream_spec, map_path, mc_start, horizon,
                                       trials, seed);
        if (*bound) return cmd_bound(bound_n, bound_b);
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitOracleTooLarge;
    } catch (const NotWinReducible& e) {
        std::cout << "error=not_win_reducible\n";
        return kExitNotWinReducible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMalformed;
    }
    return kExitMalformed;
}
