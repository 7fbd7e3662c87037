#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modkit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6, edge list, JSON witness).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    explicit ParseError(const std::string& what) : Error(what) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_ = 0;
};

/// A precondition on the arguments does not hold.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// An exhaustive routine was asked to run above its default size guard.
class GuardError : public Error {
public:
    using Error::Error;
};

}  // namespace modkit
