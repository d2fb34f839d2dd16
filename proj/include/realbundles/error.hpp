#pragma once

#include <stdexcept>
#include <string>

namespace rb {

/// Raised when an input violates a documented precondition or invariant.
/// `code` is a short machine-readable tag ("parity", "bound", "char2", ...)
/// that the CLI forwards in its error object.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string code, const std::string& message)
        : std::invalid_argument(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace rb
