#pragma once

#include <stdexcept>
#include <string>

namespace syncwin {

struct MalformedTable : std::runtime_error {
    explicit MalformedTable(const std::string& what) : std::runtime_error(what) {}
};

struct LetterOutOfRange : std::runtime_error {
    explicit LetterOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct NotWinReducible : std::runtime_error {
    explicit NotWinReducible(const std::string& what) : std::runtime_error(what) {}
};

struct Unreachable : std::runtime_error {
    explicit Unreachable(const std::string& what) : std::runtime_error(what) {}
};

struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct BaseMismatch : std::runtime_error {
    explicit BaseMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct RangeMismatch : std::runtime_error {
    explicit RangeMismatch(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace syncwin
