#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pac {

struct PacError : std::runtime_error {
    explicit PacError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file; `line` is 1-based, 0 when not tied to a line.
struct FormatError : PacError {
    int line;
    FormatError(int line_, const std::string& reason)
        : PacError(line_ > 0 ? "line " + std::to_string(line_) + ": " + reason : reason),
          line(line_) {}
};

struct OverflowError : PacError {
    OverflowError() : PacError("cost arithmetic overflow") {}
};

struct MissingOutArcError : PacError {
    std::int32_t vertex;
    explicit MissingOutArcError(std::int32_t v)
        : PacError("vertex " + std::to_string(v + 1) + " has no outgoing arc in the arc set"),
          vertex(v) {}
};

struct CapExceededError : PacError {
    std::uint64_t value;  // offending quantity: component count, combination count or bytes
    CapExceededError(const std::string& msg, std::uint64_t value_)
        : PacError(msg), value(value_) {}
};

struct InfeasibleError : PacError {
    explicit InfeasibleError(const std::string& msg) : PacError(msg) {}
};

struct InvalidCoverError : PacError {
    explicit InvalidCoverError(const std::string& msg) : PacError(msg) {}
};

struct InvalidKernelSolutionError : PacError {
    explicit InvalidKernelSolutionError(const std::string& msg) : PacError(msg) {}
};

struct UncoverableElementError : PacError {
    std::int32_t element;
    explicit UncoverableElementError(std::int32_t e)
        : PacError("element " + std::to_string(e) + " is not contained in any set"), element(e) {}
};

}  // namespace pac
