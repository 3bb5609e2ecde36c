#pragma once

#include <stdexcept>
#include <string>

namespace anodyne {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed argument (bad sizes, unknown names, invalid horn indices, ...).
struct argument_error : error {
    using error::error;
};

/// A documented operation precondition does not hold (non-commuting square,
/// non-mono pushout leg, mismatched endpoints, ...).
struct precondition_error : error {
    using error::error;
};

/// A bounded computation detected that it cannot terminate within its cap.
struct unbounded_error : error {
    std::string witness;
    unbounded_error(const std::string& msg, std::string witness_word)
        : error(msg), witness(std::move(witness_word)) {}
};

/// An explicit resource budget (cell count, step cap) was exhausted.
struct resource_error : error {
    using error::error;
};

/// Textual input rejected by the parser; positions are 1-based.
struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& msg, int line_, int column_)
        : error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

}  // namespace anodyne
