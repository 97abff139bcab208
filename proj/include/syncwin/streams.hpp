#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "syncwin/game.hpp"

namespace syncwin {

// Single-consumer lazy letter source over {0, ..., base-1}. Finite streams
// signal exhaustion with nullopt; position() counts letters emitted so far.
class DigitStream {
public:
    virtual ~DigitStream() = default;

    std::optional<uint32_t> next() {
        auto l = emit();
        if (l) ++position_;
        return l;
    }

    virtual uint32_t base() const = 0;
    uint64_t position() const { return position_; }

protected:
    virtual std::optional<uint32_t> emit() = 0;

private:
    uint64_t position_ = 0;
};

// Concatenated base-`base` numerals of 1, 2, 3, ...; disjunctive in that base.
class ChampernowneStream final : public DigitStream {
public:
    explicit ChampernowneStream(uint32_t base);
    uint32_t base() const override { return base_; }

protected:
    std::optional<uint32_t> emit() override;

private:
    uint32_t base_;
    uint64_t number_ = 0;
    std::vector<uint32_t> digits_;  // digits of number_, most significant first
    size_t cursor_ = 0;
};

// Infinite repetition of a fixed pattern; eventually periodic, hence not
// disjunctive.
class PeriodicStream final : public DigitStream {
public:
    PeriodicStream(std::vector<uint32_t> pattern, uint32_t base);
    uint32_t base() const override { return base_; }

protected:
    std::optional<uint32_t> emit() override;

private:
    std::vector<uint32_t> pattern_;
    uint32_t base_;
    size_t cursor_ = 0;
};

// ASCII digit file, whitespace/newline-agnostic. Base capped at 10.
class FileStream final : public DigitStream {
public:
    FileStream(const std::string& path, uint32_t base);
    uint32_t base() const override { return base_; }

protected:
    std::optional<uint32_t> emit() override;

private:
    std::string content_;
    uint32_t base_;
    size_t cursor_ = 0;
};

// Applies a digit -> letter map to an inner stream; kSkip entries drop the
// digit without emitting anything.
class MappedStream final : public DigitStream {
public:
    static constexpr int32_t kSkip = -1;

    // map has one entry per inner-stream symbol; non-skip entries must be
    // < target_base.
    MappedStream(std::unique_ptr<DigitStream> inner, std::vector<int32_t> map,
                 uint32_t target_base);
    uint32_t base() const override { return base_; }

protected:
    std::optional<uint32_t> emit() override;

private:
    std::unique_ptr<DigitStream> inner_;
    std::vector<int32_t> map_;
    uint32_t base_;
};

// All b^L words of length L concatenated in lexicographic order; finite,
// total length L * b^L.
class UniversalStream final : public DigitStream {
public:
    UniversalStream(uint32_t base, uint32_t block_length);
    uint32_t base() const override { return base_; }

protected:
    std::optional<uint32_t> emit() override;

private:
    uint32_t base_;
    std::vector<uint32_t> word_;  // current block, most significant first
    size_t cursor_ = 0;
    bool done_;
};

ChampernowneStream champernowne(uint32_t base);

// Mapping file: one line per inner symbol, each a letter or `skip`;
// '#' comments allowed.
std::vector<int32_t> load_digit_map(const std::string& path, uint32_t inner_base,
                                    uint32_t target_base);

// Smallest start index i with stream[i .. i+|w|) == w and i + |w| <= limit,
// nullopt when no occurrence fits. The empty word matches at the origin.
std::optional<uint64_t> find_factor(DigitStream& stream, const Word& w, uint64_t limit);

struct SimulationReport {
    uint32_t start = 0;
    bool hit = false;
    uint64_t hitting_index = 0;  // letters consumed until first arrival at win
    uint64_t horizon = 0;
};

// Feeds stream letters to the game until win or horizon letters consumed.
// Throws BaseMismatch when stream.base() != game.b (wrap in MappedStream to
// bridge bases).
SimulationReport simulate_on_stream(const Game& game, uint32_t start,
                                    DigitStream& stream, uint64_t horizon);

struct CoverageRow {
    uint32_t length = 0;
    uint64_t distinct = 0;
    uint64_t possible = 0;  // base^length
    bool full = false;
};

// Distinct factors of each length 1..k seen within the first `limit` letters.
std::vector<CoverageRow> coverage_audit(DigitStream& stream, uint32_t k, uint64_t limit);

}  // namespace syncwin
