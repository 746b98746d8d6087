// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 primrrt authors
//
// Exception types shared by every module.

#pragma once

#include <stdexcept>
#include <string>

namespace primrrt {

/// Argument outside an operation's domain (non-finite angle, bad resolution).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Lookup of a named entity (primitive set) that does not exist.
class NotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text document. Carries the 1-based line that failed.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Well-formed input that violates a domain invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation called on an object in the wrong state (empty tree, bad index).
class StateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace primrrt
