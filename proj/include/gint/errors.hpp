#pragma once

#include <stdexcept>
#include <string>

namespace gint {

// Raised when an instance exceeds a configured resource budget (e.g. the
// conflict-graph vertex budget). Callers may catch this and fall back to
// bounds-only reporting.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed graph/hypergraph text input.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gint
