#include "syncwin/streams.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

namespace syncwin {

ChampernowneStream::ChampernowneStream(uint32_t base) : base_(base) {
    if (base < 2) throw RangeMismatch("champernowne base must be >= 2");
}

std::optional<uint32_t> ChampernowneStream::emit() {
    if (cursor_ == digits_.size()) {
        ++number_;
        digits_.clear();
        for (uint64_t k = number_; k > 0; k /= base_)
            digits_.push_back(static_cast<uint32_t>(k % base_));
        std::reverse(digits_.begin(), digits_.end());
        cursor_ = 0;
    }
    return digits_[cursor_++];
}

PeriodicStream::PeriodicStream(std::vector<uint32_t> pattern, uint32_t base)
    : pattern_(std::move(pattern)), base_(base) {
    if (pattern_.empty()) throw RangeMismatch("periodic pattern must be nonempty");
    for (uint32_t l : pattern_)
        if (l >= base_) throw RangeMismatch("periodic pattern letter out of base range");
}

std::optional<uint32_t> PeriodicStream::emit() {
    uint32_t l = pattern_[cursor_];
    cursor_ = (cursor_ + 1) % pattern_.size();
    return l;
}

FileStream::FileStream(const std::string& path, uint32_t base) : base_(base) {
    if (base < 2 || base > 10) throw RangeMismatch("file stream base must be in [2, 10]");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedTable("cannot open digit file: " + path);
    content_.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::optional<uint32_t> FileStream::emit() {
    while (cursor_ < content_.size()) {
        char c = content_[cursor_++];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c < '0' || c > '9')
            throw MalformedTable(std::string("non-digit character in digit file: '") + c + "'");
        uint32_t d = static_cast<uint32_t>(c - '0');
        if (d >= base_)
            throw MalformedTable("digit " + std::to_string(d) + " out of base " +
                                 std::to_string(base_));
        return d;
    }
    return std::nullopt;
}

MappedStream::MappedStream(std::unique_ptr<DigitStream> inner, std::vector<int32_t> map,
                           uint32_t target_base)
    : inner_(std::move(inner)), map_(std::move(map)), base_(target_base) {
    if (map_.size() != inner_->base())
        throw RangeMismatch("digit map must have one entry per inner symbol");
    for (int32_t m : map_)
        if (m != kSkip && (m < 0 || static_cast<uint32_t>(m) >= base_))
            throw RangeMismatch("digit map letter out of target base range");
}

std::optional<uint32_t> MappedStream::emit() {
    for (;;) {
        auto d = inner_->next();
        if (!d) return std::nullopt;
        int32_t m = map_[*d];
        if (m != kSkip) return static_cast<uint32_t>(m);
    }
}

UniversalStream::UniversalStream(uint32_t base, uint32_t block_length)
    : base_(base), word_(block_length, 0), done_(block_length == 0) {
    if (base < 1) throw RangeMismatch("alphabet size must be >= 1");
}

std::optional<uint32_t> UniversalStream::emit() {
    if (done_) return std::nullopt;
    uint32_t l = word_[cursor_++];
    if (cursor_ == word_.size()) {
        cursor_ = 0;
        // Odometer increment; overflow past the last word ends the stream.
        size_t i = word_.size();
        for (;;) {
            if (i == 0) {
                done_ = true;
                break;
            }
            --i;
            if (++word_[i] < base_) break;
            word_[i] = 0;
        }
    }
    return l;
}

ChampernowneStream champernowne(uint32_t base) { return ChampernowneStream(base); }

std::vector<int32_t> load_digit_map(const std::string& path, uint32_t inner_base,
                                    uint32_t target_base) {
    std::ifstream in(path);
    if (!in) throw MalformedTable("cannot open map file: " + path);
    std::vector<int32_t> map;
    std::string line;
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        size_t end = line.find_last_not_of(" \t\r");
        std::string tok = line.substr(begin, end - begin + 1);
        if (tok == "skip") {
            map.push_back(MappedStream::kSkip);
        } else {
            try {
                unsigned long v = std::stoul(tok);
                if (v >= target_base) throw std::out_of_range("letter");
                map.push_back(static_cast<int32_t>(v));
            } catch (const std::exception&) {
                throw MalformedTable("bad map entry: '" + tok + "'");
            }
        }
    }
    if (map.size() != inner_base)
        throw MalformedTable("map file has " + std::to_string(map.size()) +
                             " entries, expected " + std::to_string(inner_base));
    return map;
}

std::optional<uint64_t> find_factor(DigitStream& stream, const Word& w, uint64_t limit) {
    if (w.empty()) return 0;
    if (w.size() > limit) return std::nullopt;
    const size_t len = w.size();
    std::vector<uint32_t> window(len);
    uint64_t consumed = 0;
    while (consumed < limit) {
        auto l = stream.next();
        if (!l) return std::nullopt;
        window[consumed % len] = *l;
        ++consumed;
        if (consumed < len) continue;
        uint64_t start = consumed - len;
        bool match = true;
        for (size_t j = 0; j < len; ++j) {
            if (window[(start + j) % len] != w.letters[j]) {
                match = false;
                break;
            }
        }
        if (match) return start;
    }
    return std::nullopt;
}

SimulationReport simulate_on_stream(const Game& game, uint32_t start, DigitStream& stream,
                                    uint64_t horizon) {
    if (stream.base() != game.b)
        throw BaseMismatch("stream base " + std::to_string(stream.base()) +
                           " != game alphabet " + std::to_string(game.b) +
                           " (supply a digit map)");
    SimulationReport rep;
    rep.start = start;
    rep.horizon = horizon;
    uint32_t state = start;
    for (uint64_t consumed = 0;; ++consumed) {
        if (state == game.win) {
            rep.hit = true;
            rep.hitting_index = consumed;
            return rep;
        }
        if (consumed == horizon) return rep;
        auto l = stream.next();
        if (!l) return rep;
        state = game.at(state, *l);
    }
}

std::vector<CoverageRow> coverage_audit(DigitStream& stream, uint32_t k, uint64_t limit) {
    const uint32_t base = stream.base();
    // Factor codes are packed base-`base` integers; cap k so they fit 64 bits.
    {
        long double width = 1;
        for (uint32_t j = 0; j < k; ++j) {
            width *= base;
            if (width > 9.2e18L) throw TooLarge("coverage_audit: base^k exceeds 64 bits");
        }
    }
    std::vector<std::unordered_set<uint64_t>> seen(k);
    std::vector<uint32_t> window(k, 0);
    uint64_t consumed = 0;
    while (consumed < limit) {
        auto l = stream.next();
        if (!l) break;
        if (k > 0) window[consumed % k] = *l;
        ++consumed;
        for (uint32_t j = 1; j <= k && j <= consumed; ++j) {
            uint64_t code = 0;
            for (uint32_t t = 0; t < j; ++t)
                code = code * base + window[(consumed - j + t) % k];
            seen[j - 1].insert(code);
        }
    }
    std::vector<CoverageRow> rows;
    for (uint32_t j = 1; j <= k; ++j) {
        CoverageRow row;
        row.length = j;
        row.distinct = seen[j - 1].size();
        row.possible = 1;
        for (uint32_t t = 0; t < j; ++t) row.possible *= base;
        row.full = row.distinct == row.possible;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace syncwin
