#include "syncwin/game.hpp"

#include <bit>
#include <fstream>
#include <sstream>

namespace syncwin {

std::string Word::to_string(uint32_t b) const {
    std::string out;
    if (b <= 10) {
        out.reserve(letters.size());
        for (uint32_t l : letters) out.push_back(static_cast<char>('0' + l));
    } else {
        for (size_t i = 0; i < letters.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(letters[i]);
        }
    }
    return out;
}

StateSet StateSet::full(uint32_t n) {
    StateSet s(n);
    for (uint32_t i = 0; i + 64 <= n; i += 64) s.blocks_[i >> 6] = ~uint64_t{0};
    for (uint32_t v = n & ~63u; v < n; ++v) s.set(v);
    return s;
}

StateSet StateSet::singleton(uint32_t n, uint32_t v) {
    StateSet s(n);
    s.set(v);
    return s;
}

uint32_t StateSet::count() const {
    uint32_t c = 0;
    for (uint64_t blk : blocks_) c += static_cast<uint32_t>(std::popcount(blk));
    return c;
}

bool StateSet::empty() const {
    for (uint64_t blk : blocks_)
        if (blk) return false;
    return true;
}

std::vector<uint32_t> StateSet::to_vector() const {
    std::vector<uint32_t> out;
    for (size_t i = 0; i < blocks_.size(); ++i) {
        uint64_t blk = blocks_[i];
        while (blk) {
            uint32_t bit = static_cast<uint32_t>(std::countr_zero(blk));
            out.push_back(static_cast<uint32_t>(i * 64) + bit);
            blk &= blk - 1;
        }
    }
    return out;
}

ValidationReport validate(const Game& game) {
    ValidationReport rep;
    if (game.n == 0 || game.b == 0) {
        rep.message = "state count and alphabet size must be positive";
        return rep;
    }
    if (game.n > kMaxStates) {
        rep.message = "state count exceeds core limit";
        return rep;
    }
    if (game.win >= game.n) {
        rep.message = "win state out of range";
        return rep;
    }
    if (game.delta.size() != static_cast<size_t>(game.n) * game.b) {
        rep.message = "transition table has wrong size";
        return rep;
    }
    for (size_t i = 0; i < game.delta.size(); ++i) {
        if (game.delta[i] >= game.n) {
            rep.message = "transition entry out of range at row " +
                          std::to_string(i / game.b) + " letter " +
                          std::to_string(i % game.b);
            return rep;
        }
    }
    rep.ok = true;
    for (uint32_t v = 0; v < game.n; ++v) {
        bool sink = true;
        for (uint32_t l = 0; l < game.b; ++l) {
            if (game.at(v, l) != v) {
                sink = false;
                break;
            }
        }
        if (sink) rep.sinks.push_back(v);
    }
    for (uint32_t s : rep.sinks)
        if (s == game.win) rep.win_is_sink = true;
    return rep;
}

uint32_t apply_letter(const Game& game, uint32_t state, uint32_t letter) {
    return game.at(state, letter);
}

uint32_t apply_word(const Game& game, uint32_t state, const Word& word) {
    uint32_t v = state;
    for (uint32_t l : word.letters) {
        if (l >= game.b)
            throw LetterOutOfRange("letter " + std::to_string(l) +
                                   " not below alphabet size " + std::to_string(game.b));
        v = game.at(v, l);
    }
    return v;
}

StateSet image_set(const Game& game, const StateSet& states, const Word& word) {
    StateSet out(game.n);
    for (uint32_t v : states.to_vector()) out.set(apply_word(game, v, word));
    return out;
}

namespace {

// Strips comments / blank lines and yields the remaining lines in order.
std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
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

Game parse_game(std::istream& in) {
    auto lines = content_lines(in);
    if (lines.empty()) throw MalformedTable("empty input");
    auto header = tokens_of(lines[0]);
    if (header.size() != 4 || header[0] != "game")
        throw MalformedTable("expected header 'game <n> <b> <win>'");
    Game g;
    g.n = parse_u32(header[1], "state count");
    g.b = parse_u32(header[2], "alphabet size");
    g.win = parse_u32(header[3], "win state");
    if (g.n == 0 || g.b == 0) throw MalformedTable("n and b must be positive");
    if (g.n > kMaxStates) throw MalformedTable("state count exceeds core limit");
    if (g.win >= g.n) throw MalformedTable("win state out of range");
    if (lines.size() != 1 + g.n)
        throw MalformedTable("expected " + std::to_string(g.n) + " table rows, got " +
                             std::to_string(lines.size() - 1));
    g.delta.reserve(static_cast<size_t>(g.n) * g.b);
    for (uint32_t v = 0; v < g.n; ++v) {
        auto row = tokens_of(lines[1 + v]);
        if (row.size() != g.b)
            throw MalformedTable("row " + std::to_string(v) + " has " +
                                 std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(g.b));
        for (const auto& tok : row) {
            uint32_t succ = parse_u32(tok, "transition entry");
            if (succ >= g.n)
                throw MalformedTable("transition entry " + tok + " out of range in row " +
                                     std::to_string(v));
            g.delta.push_back(succ);
        }
    }
    return g;
}

Game load_game(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedTable("cannot open file: " + path);
    return parse_game(in);
}

void write_game(std::ostream& out, const Game& game) {
    out << "game " << game.n << ' ' << game.b << ' ' << game.win << '\n';
    for (uint32_t v = 0; v < game.n; ++v) {
        for (uint32_t l = 0; l < game.b; ++l) {
            if (l) out << ' ';
            out << game.at(v, l);
        }
        out << '\n';
    }
}

}  // namespace syncwin
