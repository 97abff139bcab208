#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <string>

#include "syncwin/reachability.hpp"
#include "syncwin/streams.hpp"
#include "syncwin/synchronizer.hpp"
#include "test_helpers.hpp"

using namespace syncwin;
using namespace syncwin::testing;

namespace {

std::string take(DigitStream& s, size_t count) {
    std::string out;
    for (size_t i = 0; i < count; ++i) {
        auto l = s.next();
        if (!l) break;
        out.push_back(static_cast<char>('0' + *l));
    }
    return out;
}

// Reference scan independent of find_factor's ring buffer.
std::optional<uint64_t> naive_find(const std::string& text, const Word& w) {
    if (w.empty()) return 0;
    if (text.size() < w.size()) return std::nullopt;
    for (size_t i = 0; i + w.size() <= text.size(); ++i) {
        bool match = true;
        for (size_t j = 0; j < w.size(); ++j)
            if (static_cast<uint32_t>(text[i + j] - '0') != w.letters[j]) {
                match = false;
                break;
            }
        if (match) return i;
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("champernowne prefixes") {
    auto c10 = champernowne(10);
    CHECK(take(c10, 13) == "1234567891011");

    auto c2 = champernowne(2);
    CHECK(take(c2, 10) == "1101110010");

    // First letter 0 in base 10 is the 0 of "10".
    auto scan = champernowne(10);
    uint64_t index = 0;
    while (scan.next() != 0u) ++index;
    CHECK(index == 10);
}

TEST_CASE("find_factor on champernowne base 2 matches an independent scan") {
    auto prefix_stream = champernowne(2);
    std::string prefix = take(prefix_stream, 50);
    Word zz{{0, 0}};
    auto expected = naive_find(prefix, zz);
    REQUIRE(expected.has_value());
    CHECK(*expected == 6);

    auto stream = champernowne(2);
    auto found = find_factor(stream, zz, 50);
    REQUIRE(found.has_value());
    CHECK(*found == 6);
}

TEST_CASE("find_factor misses and empty-word edge") {
    PeriodicStream alt({0, 1}, 2);
    CHECK(!find_factor(alt, Word{{1, 1}}, 10000).has_value());

    auto c = champernowne(2);
    CHECK(find_factor(c, Word{}, 10) == 0);
}

TEST_CASE("find_factor agrees with the reference scan on random streams") {
    std::mt19937_64 rng(0xFEED);
    for (int iter = 0; iter < 100; ++iter) {
        uint32_t base = 2 + rng() % 3;
        size_t len = 20 + rng() % 200;
        std::vector<uint32_t> data;
        std::string text;
        for (size_t i = 0; i < len; ++i) {
            data.push_back(static_cast<uint32_t>(rng() % base));
            text.push_back(static_cast<char>('0' + data.back()));
        }
        Word w = random_word(rng, base, 1 + rng() % 5);
        PeriodicStream stream(data, base);
        CHECK(find_factor(stream, w, len) == naive_find(text, w));
    }
}

TEST_CASE("simulate_on_stream fixtures") {
    auto c = champernowne(2);
    auto rep = simulate_on_stream(g2(), 0, c, 100);
    CHECK(rep.hit);
    CHECK(rep.hitting_index == 0);

    auto probe = champernowne(2);
    auto ff = find_factor(probe, Word{{0, 0}}, 100);
    REQUIRE(ff.has_value());
    auto run = champernowne(2);
    auto rep3 = simulate_on_stream(g3_line(), 2, run, 100);
    CHECK(rep3.hit);
    CHECK(rep3.hitting_index <= *ff + 2);

    PeriodicStream inert({1}, 2);
    auto stuck = simulate_on_stream(g3_line(), 2, inert, 10000);
    CHECK(!stuck.hit);
}

TEST_CASE("simulate_on_stream rejects base mismatch without a map") {
    auto c = champernowne(10);
    CHECK_THROWS_AS(simulate_on_stream(g3_line(), 2, c, 10), BaseMismatch);
}

TEST_CASE("mapped stream bridges bases and skips") {
    // Base-10 champernowne into the 2-letter line game: even digits -> 0,
    // odd digits -> skip except 1 -> 1.
    std::vector<int32_t> map = {0, 1, 0, MappedStream::kSkip, 0,
                                MappedStream::kSkip, 0, MappedStream::kSkip,
                                0, MappedStream::kSkip};
    MappedStream mapped(std::make_unique<ChampernowneStream>(10), map, 2);
    CHECK(mapped.base() == 2);
    // digits 1 2 3 4 5 6 7 8 9 1 0 1 -> 1 0 . 0 . 0 . 0 . 1 0 1
    CHECK(take(mapped, 8) == "10000101");
}

TEST_CASE("file stream is newline-agnostic and strict") {
    const char* path = "stream_digits.tmp";
    {
        std::ofstream out(path);
        out << "31 4\n15\n92\t6\n";
    }
    FileStream fs(path, 10);
    CHECK(take(fs, 100) == "31415926");

    {
        std::ofstream out(path);
        out << "12x";
    }
    FileStream bad(path, 10);
    CHECK(take(bad, 2) == "12");
    CHECK_THROWS_AS(bad.next(), MalformedTable);
    std::remove(path);
}

TEST_CASE("coverage_audit fixtures") {
    auto c = champernowne(2);
    auto rows = coverage_audit(c, 3, 10000);
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) CHECK(row.full);

    PeriodicStream alt({0, 1}, 2);
    auto alt_rows = coverage_audit(alt, 2, 10000);
    CHECK(alt_rows[1].distinct == 2);
    CHECK(alt_rows[1].possible == 4);
    CHECK(!alt_rows[1].full);

    auto c2 = champernowne(2);
    auto zero = coverage_audit(c2, 1, 0);
    CHECK(zero[0].distinct == 0);
}

TEST_CASE("champernowne reaches full coverage for small k in small bases") {
    for (uint32_t b : {2u, 3u}) {
        auto s = champernowne(b);
        auto rows = coverage_audit(s, 4, 200000);
        for (const auto& row : rows) CHECK(row.full);
    }
}

TEST_CASE("streams are deterministic across instances") {
    auto a = champernowne(3);
    auto b = champernowne(3);
    CHECK(take(a, 500) == take(b, 500));
}

TEST_CASE("a stream embedding the greedy word wins from every start") {
    std::mt19937_64 rng(0xAB);
    for (int iter = 0; iter < 40; ++iter) {
        uint32_t n = 2 + rng() % 8, b = 2 + rng() % 2;
        Game g = random_win_reducible_game(rng, n, b);
        Word w = synthesize_greedy(g, analyze(g)).word;
        // Adversarial prefix, then W once, then noise.
        std::vector<uint32_t> data;
        size_t prefix = rng() % 30;
        for (size_t i = 0; i < prefix; ++i)
            data.push_back(static_cast<uint32_t>(rng() % b));
        data.insert(data.end(), w.letters.begin(), w.letters.end());
        for (size_t i = 0; i < 5; ++i) data.push_back(static_cast<uint32_t>(rng() % b));
        if (data.empty()) data.push_back(0);
        for (uint32_t v = 0; v < n; ++v) {
            PeriodicStream stream(data, b);
            auto rep = simulate_on_stream(g, v, stream, prefix + w.size());
            CHECK(rep.hit);
            CHECK(rep.hitting_index <= prefix + w.size());
        }
    }
}
