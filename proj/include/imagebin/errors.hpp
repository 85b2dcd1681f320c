#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace imagebin {

/// Base of every error the library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. Carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
    explicit ParseError(const std::string& message) : Error(message) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_ = 0;
};

/// Well-formed input that violates a structural invariant (row sums, index ranges, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Arguments that do not fit an operation's precondition (alphabet mismatch, unknown letter, ...).
class InputError : public Error {
public:
    using Error::Error;
};

/// The input is well-formed but lacks a semantic property the operation needs,
/// e.g. an automaton that is not image-binary. May carry a witness word.
class SemanticError : public Error {
public:
    explicit SemanticError(const std::string& message, std::optional<std::string> witness = std::nullopt)
        : Error(message), witness_(std::move(witness)) {}

    const std::optional<std::string>& witness() const { return witness_; }

private:
    std::optional<std::string> witness_;
};

/// An internal consistency check failed. Either the input broke an unchecked
/// precondition or there is a bug.
class InvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace imagebin
