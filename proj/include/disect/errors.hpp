#pragma once

#include <stdexcept>
#include <string>

namespace disect {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed arc-list input. `kind` identifies the failure, `line` the
/// 1-based line number in the input document (0 if not line-specific).
class ParseError : public Error {
public:
    enum class Kind {
        MalformedHeader,
        MalformedLine,
        SelfLoop,
        DuplicateArc,
        VertexOutOfRange,
        ArcCountMismatch,
    };

    ParseError(Kind kind, int line, const std::string& what)
        : Error(what), kind_(kind), line_(line) {}

    Kind kind() const { return kind_; }
    int line() const { return line_; }

private:
    Kind kind_;
    int line_;
};

/// Violated precondition (bad arguments, enumeration guard exceeded, ...).
class GuardError : public Error {
public:
    explicit GuardError(const std::string& what) : Error(what) {}
};

/// A star decomposition failed its postcondition checks. Carries the
/// offending quantities so callers can report or retry.
class DecompositionError : public Error {
public:
    DecompositionError(const std::string& what, long long uSize, long long uBound)
        : Error(what), u_size_(uSize), u_bound_(uBound) {}

    long long independent_size() const { return u_size_; }
    long long independent_bound() const { return u_bound_; }

private:
    long long u_size_;
    long long u_bound_;
};

} // namespace disect
