#pragma once

#include <stdexcept>
#include <string>

namespace fwe {

// Mixing values from incompatible quadratic fields (different square-free d).
class FieldMismatchError : public std::domain_error {
public:
    explicit FieldMismatchError(const std::string& what) : std::domain_error(what) {}
};

// Malformed exact-literal input; position is a 0-based offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A verification step that must never fail for correct inputs did fail.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fwe
