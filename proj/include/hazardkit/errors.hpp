#pragma once

#include <stdexcept>
#include <string>

namespace hazardkit {

/// Thrown when an exhaustive scan would exceed the configured variable bound.
struct BoundExceeded : std::runtime_error {
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by the text front end; carries a 1-based source position.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line(line),
          column(column) {}

    int line;
    int column;
};

}  // namespace hazardkit
