#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace wittrank {

/// Base class for every error raised by the library.
///
/// Errors fall into two families that the command line maps to distinct exit
/// codes: input errors (malformed text, bad JSON, unknown references) and
/// mathematical precondition violations (non-hermitian or singular forms,
/// step functions outside the realizable class).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message, std::optional<std::string> location = {})
        : std::runtime_error(message), code_(std::move(code)), location_(std::move(location)) {}

    const std::string& code() const noexcept { return code_; }
    const std::optional<std::string>& location() const noexcept { return location_; }

private:
    std::string code_;
    std::optional<std::string> location_;
};

/// Malformed input: syntax errors, schema violations, unknown names.
class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& message, std::size_t position)
        : InputError("parse_error", message, "offset " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A well-formed input that violates a mathematical precondition.
class MathError : public Error {
public:
    using Error::Error;
};

}  // namespace wittrank
