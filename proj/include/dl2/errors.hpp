#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dl2 {

// Input text rejected; `position` is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A configured cap (ball radius, enumeration size) would be exceeded.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Value outside an operation's stated domain (not a parse problem).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Position/height arithmetic left the machine integer range.
class OverflowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dl2
